"""Command line front end: spectra, projector expansion and export,
combinatorics queries, verification suites and the report renderer."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import demos, young
from .bracelets import (
    BraceletMonomial,
    a_action_normalized,
    delta_op,
    monomials_of_degree,
    star,
    stability_index,
)
from .brauer import (
    AlgebraElement,
    d_elem,
    d_pair,
    jucys_murphy,
    multiply_elements,
    s_elem,
)
from .exactnum import PoleError, Polynomial, RationalFunction
from .projector import (
    ProjectorForm,
    ZeroEigenvalueError,
    quasi_additive,
    reduced_form,
    spectrum_universal,
    splitting_idempotent,
    to_algebra_element,
    universal_form,
)
from .tensor import DenseTensor, apply_element, make_metric


class UsageError(ValueError):
    """Bad flag combination; maps to exit status 2."""


@dataclass
class CommandRequest:
    subcommand: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "text"


def worker_count() -> int:
    raw = os.environ.get("TRACELESS_THREADS", "1")
    try:
        return max(1, min(int(raw), 16))
    except ValueError:
        return 1


def parse_partition(text: str):
    text = text.strip()
    if text in ("", "-", "0"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if not young.is_partition(parts):
        raise UsageError(f"{parts} is not weakly decreasing positive")
    return parts


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# golden reference tables used by `verify --suite golden`


def _poly(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def _prod(*polys) -> Polynomial:
    acc = Polynomial.const(1)
    for p in polys:
        acc = acc * p
    return acc


def golden_splitting_4() -> dict:
    m2, p2, p4, p1, p0 = _poly(-2, 1), _poly(2, 1), _poly(4, 1), _poly(-1, 1), _poly(0, 1)
    return {
        "[ns][p]^2": RationalFunction(-_poly(-4, 0, 4, 1), _prod(m2, p0, p2, p4)),
        "[ns][pp]": RationalFunction(_poly(4), _prod(m2, p0, p2, p4)),
        "[nsp][p]": RationalFunction(_poly(3, 1), _prod(m2, p2, p4)),
        "[nspp]": RationalFunction(_poly(-1), _prod(m2, p2, p4)),
        "[npsp]": RationalFunction(_poly(-2), _prod(m2, p0, p4)),
        "[ns]^2": RationalFunction(_poly(6, 3, 1), _prod(m2, p1, p2, p4)),
        "[nsns]": RationalFunction(-_poly(2, 3), _prod(m2, p1, p2, p4)),
        "[p]^4": RationalFunction(_poly(1)),
    }


def golden_delta_3() -> dict:
    # the [ppp] image is the connected class: a single contraction applied to
    # a 3-cycle cannot split off a through line
    return {
        "[p]^3": {"[ns][p]": _poly(3)},
        "[pp][p]": {"[ns][p]": _poly(1), "[nsp]": _poly(2)},
        "[ppp]": {"[nsp]": _poly(3)},
        "[ns][p]": {"[ns][p]": _poly(0, 1), "[nsp]": _poly(2)},
        "[nsp]": {"[ns][p]": _poly(1), "[nsp]": _poly(1, 1)},
    }


def golden_normalized_4() -> dict:
    return {
        "[ns][p]^2": {"[ns][p]^2": _poly(0, 1), "[nsp][p]": _poly(1), "[ns]^2": _poly(2)},
        "[ns][pp]": {"[ns][pp]": _poly(0, 1), "[nspp]": _poly(1), "[ns]^2": _poly(2)},
        "[nsp][p]": {"[nsp][p]": _poly(1, 1), "[ns][p]^2": _poly(4), "[nspp]": _poly(1),
                     "[npsp]": _poly(2), "[nsns]": _poly(4)},
        "[nspp]": {"[nspp]": _poly(1, 1), "[ns][pp]": _poly(4), "[nsp][p]": _poly(1),
                   "[npsp]": _poly(2), "[nsns]": _poly(4)},
        "[npsp]": {"[npsp]": _poly(0, 1), "[nsp][p]": _poly(1), "[nspp]": _poly(1), "[ns]^2": _poly(4)},
        "[ns]^2": {"[ns]^2": _poly(0, 2), "[nsns]": _poly(2)},
        "[nsns]": {"[nsns]": _poly(2, 2), "[ns]^2": _poly(4)},
    }


GOLDEN_ST_4 = {
    "[ns][p]^2": 4, "[ns][pp]": 4, "[nsp][p]": 1, "[nspp]": 1,
    "[npsp]": 2, "[ns]^2": 8, "[nsns]": 4,
}


def golden_rank3_universal(eps: int) -> dict:
    """Closed-form diagram coefficients of the rank-3 projector as functions
    of the dimension (parameter value eps*N written in terms of N)."""
    if eps == 1:
        den = _prod(_poly(-1, 1), _poly(2, 1))  # (N-1)(N+2)
        return {"pair": RationalFunction(-_poly(1, 1), den), "cycle": RationalFunction(_poly(1), den)}
    den = _prod(_poly(-2, 1), _poly(1, 1))  # (N-2)(N+1)
    return {"pair": RationalFunction(_poly(-1, 1), den), "cycle": RationalFunction(_poly(1), den)}


def golden_checks() -> list:
    """All golden comparisons as (name, passed) pairs."""
    checks = []

    p4 = splitting_idempotent(4)
    want = golden_splitting_4()
    got = {str(z): c for z, c in p4.coordinates.terms.items()}
    checks.append(("splitting idempotent rank 4 coefficients", got == want))

    ok = True
    for zt, row in golden_delta_3().items():
        got_row = delta_op(BraceletMonomial.from_str(zt)).terms
        want_row = {BraceletMonomial.from_str(k): RationalFunction(v) for k, v in row.items()}
        ok = ok and got_row == want_row
    checks.append(("rank 3 class action table", ok))

    ok = True
    for zt, row in golden_normalized_4().items():
        z = BraceletMonomial.from_str(zt)
        got_row = a_action_normalized_single(z)
        want_row = {BraceletMonomial.from_str(k): RationalFunction(v) for k, v in row.items()}
        ok = ok and got_row == want_row
    checks.append(("rank 4 normalized action table", ok))

    ok = all(stability_index(BraceletMonomial.from_str(k)) == v for k, v in GOLDEN_ST_4.items())
    checks.append(("rank 4 stability indices", ok))

    ok = len(monomials_of_degree(3)) == 5
    checks.append(("five degree-3 class labels", ok))

    for eps in (1, -1):
        form = universal_form(3, 12 if eps == 1 else 12, eps, symbolic=True)
        elem = to_algebra_element(form)
        want_n = golden_rank3_universal(eps)
        pair = elem.coefficient(next(iter(d_pair(3, 1, 2).terms)))
        cyc_elem = multiply_elements(d_elem(3, 1), s_elem(3, 2))
        cycle = elem.coefficient(next(iter(cyc_elem.terms)))
        if eps == -1:
            pair = pair.substitute_negated()
            cycle = cycle.substitute_negated()
        ok = pair == want_n["pair"] and cycle == want_n["cycle"] and len(elem.terms) == 10
        checks.append((f"rank 3 universal expansion (eps={eps:+d})", ok))

    spec = {str(e.value) for e in spectrum_universal(4)}
    want_spec = {"d + 4", "2*d + 4", "d", "d + 2", "d - 2", "2*d - 2"}
    checks.append(("rank 4 generic spectrum", spec == want_spec))
    return checks


def a_action_normalized_single(z: BraceletMonomial) -> dict:
    from .bracelets import BraceletVector
    from .exactnum import RF_ONE

    return a_action_normalized(BraceletVector(z.degree, {z: RF_ONE})).terms


def _square_relations(n: int) -> bool:
    one = AlgebraElement.one(n)
    for i in range(1, n):
        s, d = s_elem(n, i), d_elem(n, i)
        if multiply_elements(s, s) != one:
            return False
        if multiply_elements(d, d) != d.scale(RationalFunction.delta()):
            return False
        if multiply_elements(d, s) != d or multiply_elements(s, d) != d:
            return False
    return True


def _distant_commutation(n: int) -> bool:
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) < 2:
                continue
            si, sj = s_elem(n, i), s_elem(n, j)
            di, dj = d_elem(n, i), d_elem(n, j)
            if multiply_elements(si, sj) != multiply_elements(sj, si):
                return False
            if multiply_elements(di, sj) != multiply_elements(sj, di):
                return False
            if multiply_elements(di, dj) != multiply_elements(dj, di):
                return False
    return True


def _braid_absorption(n: int) -> bool:
    for i in range(1, n - 1):
        si, si1 = s_elem(n, i), s_elem(n, i + 1)
        di, di1 = d_elem(n, i), d_elem(n, i + 1)
        if multiply_elements(multiply_elements(si, si1), si) != \
                multiply_elements(multiply_elements(si1, si), si1):
            return False
        if multiply_elements(multiply_elements(di, di1), di) != di:
            return False
        if multiply_elements(multiply_elements(di1, di), di1) != di1:
            return False
        if multiply_elements(multiply_elements(si, di1), di) != multiply_elements(si1, di):
            return False
        if multiply_elements(multiply_elements(di1, di), si1) != multiply_elements(di1, si):
            return False
    return True


def _jm_commute(n: int) -> bool:
    jms = [jucys_murphy(n, k) for k in range(1, n + 1)]
    return all(
        multiply_elements(jms[a], jms[b]) == multiply_elements(jms[b], jms[a])
        for a in range(n)
        for b in range(a + 1, n)
    )


def relation_checks() -> list:
    checks = []
    for n in (4, 5):
        checks.append((f"square relations n={n}", lambda n=n: _square_relations(n)))
        checks.append((f"distant commutation n={n}", lambda n=n: _distant_commutation(n)))
        checks.append((f"braid and absorption relations n={n}", lambda n=n: _braid_absorption(n)))
    checks.append(("commuting family n=4", lambda: _jm_commute(4)))
    return checks


def _idempotent_props(n: int):
    form = splitting_idempotent(n)
    v = form.coordinates
    annihilated = a_action_normalized(v).is_zero()
    w = v
    for e in form.provenance:
        w = w - a_action_normalized(w).scale(e.value.inverse())
    squares = w == v
    sym = all(v.coefficient(star(z)) == c for z, c in v.terms.items())
    return annihilated, squares, sym


def projector_checks() -> list:
    checks = []
    for n in range(2, 6):
        checks.append((f"idempotent laws n={n}", lambda n=n: all(_idempotent_props(n))))
    def diagram_idem():
        p4 = to_algebra_element(splitting_idempotent(4))
        return multiply_elements(p4, p4) == p4
    checks.append(("diagram-level idempotency n=4", diagram_idem))
    return checks


def _golden_check_list() -> list:
    return [(name, (lambda ok=ok: ok)) for name, ok in golden_checks()]


SUITES = {"relations": relation_checks, "projector": projector_checks,
          "golden": _golden_check_list}


def run_verify(suite: str, as_json: bool):
    named = SUITES[suite]()
    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda item: (item[0], bool(item[1]())), named))
    else:
        results = [(name, bool(fn())) for name, fn in named]
    failed = [name for name, ok in results if not ok]
    if as_json:
        out = _dump({"suite": suite, "checks": [{"name": n, "ok": ok} for n, ok in results]})
    else:
        out = "\n".join(("ok  " if ok else "FAIL") + f" {name}" for name, ok in results)
    return (1 if failed else 0), out


def _spectrum_output(args, as_json: bool):
    if args.generic:
        entries = spectrum_universal(args.n)
        label = "generic"
    else:
        _require_metric(args)
        entries = spectrum_universal(args.n, args.N, args.eps)
        label = f"N={args.N},eps={args.eps}"
    if as_json:
        return 0, _dump({"n": args.n, "delta": label, "entries": [e.to_json() for e in entries]})
    lines = [f"spectrum for n={args.n} ({label}):"]
    for e in entries:
        tail = "" if e.specialized is None else f"  -> {e.specialized}"
        lines.append(f"  {str(e.value):12s} f={e.f} skew {e.skew}{tail}")
    return 0, "\n".join(lines)


def _require_metric(args):
    if args.N is None or args.eps is None:
        raise UsageError("this combination needs --N and --eps (or --generic)")


def _format_element_text(elem: AlgebraElement) -> str:
    parts = []
    for d, c in sorted(elem.terms.items(), key=lambda t: t[0].pairs):
        parts.append(f"({c})*[{d.to_text()}]")
    return " + ".join(parts) if parts else "0"


def _format_form_text(form: ProjectorForm) -> str:
    items = sorted(form.coordinates.terms.items(), key=lambda t: t[0].words())
    return " + ".join(f"({c})*e{z}" for z, c in items) if items else "0"


def _project_output(args, as_json: bool):
    form_kind = args.form
    n = args.n
    if form_kind == "splitting" or (args.generic and form_kind == "universal"):
        form = splitting_idempotent(n) if form_kind == "splitting" else universal_form(n)
        label = "generic"
        element = None
    elif form_kind == "quasi":
        _require_metric(args)
        label = f"N={args.N},eps={args.eps}"
        element = quasi_additive(n, args.N, args.eps)
        form = None
    elif form_kind.startswith("reduced="):
        mu = parse_partition(form_kind.split("=", 1)[1])
        if sum(mu) != n:
            raise UsageError(f"reduced label {mu} does not have size n={n}")
        if args.generic:
            form = reduced_form(mu)
            label = "generic"
        else:
            _require_metric(args)
            form = reduced_form(mu, args.N, args.eps)
            label = f"N={args.N},eps={args.eps}"
        element = None
    elif form_kind == "universal":
        _require_metric(args)
        form = universal_form(n, args.N, args.eps)
        label = f"N={args.N},eps={args.eps}"
        element = None
    else:
        raise UsageError(f"unknown --form {form_kind!r}")

    if args.apply is not None:
        _require_metric(args)
        with open(args.apply) as fh:
            tensor = DenseTensor.from_json(json.load(fh))
        if tensor.n != n or tensor.N != args.N:
            raise ValueError("tensor file shape does not match --n/--N")
        metric = make_metric(args.N, args.eps)
        elem = element if element is not None else to_algebra_element(form)
        image = apply_element(elem, tensor, metric)
        return 0, _dump(image.to_json(metric))

    if element is not None:
        if as_json:
            return 0, _dump({"n": n, "delta": label, "basis": "diagram", "terms": element.to_json()})
        return 0, _format_element_text(element)
    if as_json:
        payload = form.to_json(label)
        if args.diagrams:
            payload["diagram_terms"] = to_algebra_element(form).to_json()
        return 0, _dump(payload)
    text = _format_form_text(form)
    if args.diagrams:
        text += "\n= " + _format_element_text(to_algebra_element(form))
    return 0, text


def run_cli(request: CommandRequest):
    """Dispatch a validated request; returns (exit_status, output text)."""
    args = argparse.Namespace(**request.parameters)
    as_json = request.output_format == "json"
    sub = request.subcommand
    if sub == "spectrum":
        return _spectrum_output(args, as_json)
    if sub == "project":
        return _project_output(args, as_json)
    if sub == "lr":
        val = young.lr_coefficient(args.mu, args.lam, args.nu)
        return 0, (_dump({"coefficient": val}) if as_json else str(val))
    if sub == "jdt":
        quots = sorted(young.jdt_quotient(args.mu, args.nu))
        if as_json:
            return 0, _dump({"quotient": [list(q) for q in quots]})
        return 0, "\n".join("(" + ",".join(map(str, q)) + ")" if q else "()" for q in quots)
    if sub == "verify":
        return run_verify(args.suite, as_json)
    if sub == "weyl-demo":
        result = demos.weyl_demo(args.N, seed=args.seed)
        if as_json:
            return 0, _dump(result)
        lines = [f"{k}: {v}" for k, v in result.items() if k != "reduced_31_coefficients"]
        if "reduced_31_coefficients" in result:
            lines.append("reduced (3,1) projector coefficients:")
            for k, v in sorted(result["reduced_31_coefficients"].items()):
                lines.append(f"  {k}: {v}")
        return 0, "\n".join(lines)
    if sub == "report":
        from .report import render_report

        if args.generic:
            form = splitting_idempotent(args.n)
        else:
            _require_metric(args)
            form = universal_form(args.n, args.N, args.eps)
        created = render_report(form, args.out)
        return 0, "\n".join(os.path.join(args.out, name) for name in created)
    raise UsageError(f"unknown subcommand {sub!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="traceless",
                                     description="exact traceless projectors via diagram algebra")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_metric_flags(p, with_generic=True):
        p.add_argument("--N", type=int, default=None)
        p.add_argument("--eps", type=int, choices=(1, -1), default=None)
        if with_generic:
            p.add_argument("--generic", action="store_true")

    p = sub.add_parser("spectrum", help="eigenvalue data of the contraction sum")
    p.add_argument("--n", type=int, required=True)
    add_metric_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("project", help="expand a projector")
    p.add_argument("--n", type=int, required=True)
    add_metric_flags(p)
    p.add_argument("--form", default="universal",
                   help="universal | reduced=MU | quasi | splitting")
    p.add_argument("--apply", default=None, metavar="TENSORFILE")
    p.add_argument("--diagrams", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("jdt", help="reverse-slide quotient set")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("weyl-demo", help="traceless projection of a curvature-type tensor")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="render coefficient tables and figures")
    p.add_argument("--n", type=int, required=True)
    add_metric_flags(p)
    p.add_argument("--out", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("subcommand", "json")}
    request = CommandRequest(
        subcommand=args.subcommand,
        parameters=params,
        output_format="json" if getattr(args, "json", False) else "text",
    )
    if request.subcommand in ("lr", "jdt"):
        try:
            request.parameters["mu"] = parse_partition(request.parameters["mu"])
            request.parameters["nu"] = parse_partition(request.parameters["nu"])
            if "lam" in request.parameters:
                request.parameters["lam"] = parse_partition(request.parameters["lam"])
        except UsageError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        status, output = run_cli(request)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PoleError, ZeroEigenvalueError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if output:
        print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
