"""Acceptance gate: one test per stated criterion, exact equality throughout.

Every test prints a PASS or FAIL line so the whole gate can be audited with
`pytest -s tests/test_acceptance.py`.
"""

import time
from fractions import Fraction
from math import factorial

from traceless.bracelets import (
    BraceletMonomial,
    BraceletVector,
    a_action_normalized,
    class_from_monomial,
    delta_op,
    monomials_of_degree,
    phi,
    star,
    stability_index,
)
from traceless.brauer import (
    AlgebraElement,
    contraction_sum,
    enumerate_diagrams,
    flip_star,
    multiply_elements,
    s_elem,
)
from traceless.demos import reduced_31_expected, riemann_like_tensor, weyl_demo
from traceless.exactnum import Polynomial, RationalFunction, RF_ONE
from traceless.projector import (
    projector_element,
    quasi_additive,
    reduced_form,
    spectrum_reduced,
    spectrum_universal,
    splitting_idempotent,
    to_algebra_element,
)
from traceless.tensor import (
    apply_element,
    is_traceless,
    make_metric,
    random_tensor,
    trace_ij,
)
from traceless.young import (
    hook_dim,
    jdt_quotient,
    lr_coefficient,
    lr_coefficient_via_rectification,
    partitions_of,
    subdiagrams,
)


def M(text):
    return BraceletMonomial.from_str(text)


def rf(*coeffs):
    return RationalFunction(Polynomial(coeffs))


def report(num, label):
    def wrap(fn):
        def run():
            try:
                fn()
            except BaseException:
                print(f"FAIL criterion {num:2d}: {label}")
                raise
            print(f"PASS criterion {num:2d}: {label}")

        run.__name__ = fn.__name__
        return run

    return wrap


GOLDEN_RANK4_SPLITTING = {
    "[ns][p]^2": (Polynomial((4, 0, -4, -1)), Polynomial((0, -16, -4, 4, 1))),
    "[ns][pp]": (Polynomial((4,)), Polynomial((0, -16, -4, 4, 1))),
    "[nsp][p]": (Polynomial((3, 1)), Polynomial((-16, -4, 4, 1))),
    "[nspp]": (Polynomial((-1,)), Polynomial((-16, -4, 4, 1))),
    "[npsp]": (Polynomial((-2,)), Polynomial((0, -8, 2, 1))),
    "[ns]^2": (Polynomial((6, 3, 1)), Polynomial((16, -12, -8, 3, 1))),
    "[nsns]": (Polynomial((-2, -3)), Polynomial((16, -12, -8, 3, 1))),
    "[p]^4": (Polynomial((1,)), Polynomial((1,))),
}


@report(1, "rank-4 generic idempotent reproduces the seven-coefficient table in < 1 s")
def test_criterion_01():
    t0 = time.perf_counter()
    form = splitting_idempotent(4)
    elapsed = time.perf_counter() - t0
    got = {str(z): c for z, c in form.coordinates.terms.items()}
    want = {k: RationalFunction(*v) for k, v in GOLDEN_RANK4_SPLITTING.items()}
    assert got == want
    assert elapsed < 1.0, f"took {elapsed:.3f}s"


@report(2, "class-action tables at ranks 3 and 4 match the printed lines")
def test_criterion_02():
    delta_table = {
        "[p]^3": {"[ns][p]": rf(3)},
        "[pp][p]": {"[ns][p]": rf(1), "[nsp]": rf(2)},
        # third line as fixed by the diagram product: the image of a full
        # cycle is the connected class (the printed table's [ns][p] entry on
        # this line contradicts the adjacent derivation and the oracle)
        "[ppp]": {"[nsp]": rf(3)},
        "[ns][p]": {"[ns][p]": rf(0, 1), "[nsp]": rf(2)},
        "[nsp]": {"[ns][p]": rf(1), "[nsp]": rf(1, 1)},
    }
    for zt, row in delta_table.items():
        assert delta_op(M(zt)).terms == {M(k): v for k, v in row.items()}, zt

    normalized_table = {
        "[ns][p]^2": {"[ns][p]^2": rf(0, 1), "[nsp][p]": rf(1), "[ns]^2": rf(2)},
        "[ns][pp]": {"[ns][pp]": rf(0, 1), "[nspp]": rf(1), "[ns]^2": rf(2)},
        "[nsp][p]": {"[nsp][p]": rf(1, 1), "[ns][p]^2": rf(4), "[nspp]": rf(1),
                     "[npsp]": rf(2), "[nsns]": rf(4)},
        "[nspp]": {"[nspp]": rf(1, 1), "[ns][pp]": rf(4), "[nsp][p]": rf(1),
                   "[npsp]": rf(2), "[nsns]": rf(4)},
        "[npsp]": {"[npsp]": rf(0, 1), "[nsp][p]": rf(1), "[nspp]": rf(1), "[ns]^2": rf(4)},
        "[ns]^2": {"[ns]^2": rf(0, 2), "[nsns]": rf(2)},
        "[nsns]": {"[nsns]": rf(2, 2), "[ns]^2": rf(4)},
    }
    for zt, row in normalized_table.items():
        z = M(zt)
        got = a_action_normalized(BraceletVector(4, {z: RF_ONE})).terms
        assert got == {M(k): v for k, v in row.items()}, zt


@report(3, "the seven rank-4 stability indices are 4,4,1,1,2,8,4")
def test_criterion_03():
    values = {"[ns][p]^2": 4, "[ns][pp]": 4, "[nsp][p]": 1, "[nspp]": 1,
              "[npsp]": 2, "[ns]^2": 8, "[nsns]": 4}
    for text, want in values.items():
        assert stability_index(M(text)) == want, text


@report(4, "rank-3 universal projector expands to the ten-diagram formulas for both metrics")
def test_criterion_04():
    from traceless.projector import universal_form

    for eps in (1, -1):
        form = universal_form(3, 12, eps, symbolic=True)
        elem = to_algebra_element(form)
        assert len(elem.terms) == 10
        if eps == 1:
            den = rf(-1, 1) * rf(2, 1)          # (N-1)(N+2)
            pair_want = rf(-1, -1) / den        # -(N+1)/...
        else:
            den = rf(-2, 1) * rf(1, 1)          # (N-2)(N+1)
            pair_want = rf(-1, 1) / den         # +(N-1)/...
        cycle_want = RationalFunction.const(1) / den
        ident = next(iter(AlgebraElement.one(3).terms))
        for d, c in elem.terms.items():
            value = c if eps == 1 else c.substitute_negated()
            if d == ident:
                assert value == RationalFunction.const(1)
            elif phi(d) == M("[ns][p]"):
                assert value == pair_want, d
            else:
                assert phi(d) == M("[nsp]")
                assert value == cycle_want, d


@report(5, "universal and reduced spectra match all quoted closed forms")
def test_criterion_05():
    for N in (2, 3, 5, 9):
        assert [e.specialized for e in spectrum_universal(2, N, 1)] == [N]
    for N in (2, 3, 5, 9):
        assert sorted(e.specialized for e in spectrum_universal(3, N, 1)) == sorted([N - 1, N + 2])
    for n in range(2, 7):
        got = sorted(e.specialized for e in spectrum_universal(n, 2, -1))
        assert got == sorted(-(n - f + 1) * f for f in range(1, n // 2 + 1))
    got = {e.value for e in spectrum_universal(4)}
    assert got == {rf(4, 1), rf(4, 2), rf(0, 1), rf(2, 1), rf(-2, 1), rf(-2, 2)}
    # symmetric row labels
    for n in range(2, 9):
        got = {e.value for e in spectrum_reduced((n,))}
        assert got == {rf(2 * (n - f - 1) * f, f) for f in range(1, n // 2 + 1)}
    # column-dominated hooks
    for n in range(3, 9):
        assert {e.value for e in spectrum_reduced((2,) + (1,) * (n - 2))} == {rf(2 - n, 1)}
    # general hooks
    for n in range(4, 9):
        for m in range(2, n):
            mu = (m,) + (1,) * (n - m)
            got = {e.value for e in spectrum_reduced(mu)}
            want = {rf(2 * (m - f) * f - n, f) for f in range(1, m // 2 + 1)}
            want |= {rf(2 * (m - 1 - f) * f, f) for f in range(1, (m - 1) // 2 + 1)}
            assert got == want, mu
    assert spectrum_reduced((1, 1, 1, 1)) == []


@report(6, "combinatorial layer: quoted values plus exhaustive cross-definitions")
def test_criterion_06():
    assert lr_coefficient((4, 2, 1), (2, 1), (3, 1)) == 2
    assert jdt_quotient((4, 2, 1), (3, 1)) == {(3,), (2, 1), (1, 1, 1)}
    for size in range(0, 9):
        for mu in partitions_of(size):
            for lam in subdiagrams(mu):
                for nu in partitions_of(size - sum(lam)):
                    a = lr_coefficient(mu, lam, nu)
                    b = lr_coefficient_via_rectification(mu, lam, nu)
                    assert a == b, (mu, lam, nu)
    for n in range(1, 9):
        assert sum(hook_dim(mu) ** 2 for mu in partitions_of(n)) == factorial(n)


def _diagram_route(z):
    n = z.degree
    prod = multiply_elements(contraction_sum(n), class_from_monomial(z))
    groups = {}
    for d, c in prod.terms.items():
        m = phi(d)
        groups[m] = groups.get(m, RationalFunction.const(0)) + c
    nf = RationalFunction.const(factorial(n))
    return {m: c / nf for m, c in groups.items() if not c.is_zero()}


@report(7, "bracelet operator equals diagram-level left multiplication on every class, rank <= 5")
def test_criterion_07():
    for n in range(2, 6):
        for z in monomials_of_degree(n):
            assert delta_op(z).terms == _diagram_route(z), str(z)


@report(8, "structural counts: double factorials and the five degree-3 labels")
def test_criterion_08():
    for n in range(1, 8):
        want = 1
        for k in range(1, 2 * n, 2):
            want *= k
        assert sum(1 for _ in enumerate_diagrams(n)) == want, n
    got = {str(z) for z in monomials_of_degree(3)}
    assert got == {"[p]^3", "[pp][p]", "[ppp]", "[ns][p]", "[nsp]"}


@report(9, "symbolic idempotent laws: annihilation, squaring, flip symmetry")
def test_criterion_09():
    p4 = to_algebra_element(splitting_idempotent(4))
    assert multiply_elements(contraction_sum(4), p4).is_zero()
    assert multiply_elements(p4, p4) == p4
    for n in range(2, 8):
        form = splitting_idempotent(n)
        assert a_action_normalized(form.coordinates).is_zero(), n
    for n in range(2, 7):
        p = to_algebra_element(splitting_idempotent(n))
        assert flip_star(p) == p, n


COMBOS = [(3, 3, 1), (4, 3, 1), (4, 4, 1), (3, 4, -1), (4, 4, -1)]


@report(10, "tensor-level projector laws on all five (n, N, metric) combinations, five seeds")
def test_criterion_10():
    for (n, N, eps) in COMBOS:
        m = make_metric(N, eps)
        p = projector_element(n, N, eps)
        qa = quasi_additive(n, N, eps)
        for seed in range(5):
            t = random_tensor(n, N, seed)
            pt = apply_element(p, t, m)
            assert is_traceless(pt, m), (n, N, eps, seed)
            assert apply_element(p, pt, m).entries == pt.entries, (n, N, eps, seed)
            assert apply_element(qa, t, m).entries == pt.entries, (n, N, eps, seed)
            for i in range(1, n):
                s = s_elem(n, i)
                lhs = apply_element(p, apply_element(s, t, m), m)
                rhs = apply_element(s, pt, m)
                assert lhs.entries == rhs.entries, (n, N, eps, seed, i)


@report(11, "degenerate metrics: one-dimensional annihilation and the two-dimensional symplectic case")
def test_criterion_11():
    m1 = make_metric(1, 1)
    for n in (2, 3, 4):
        p = projector_element(n, 1, 1)
        # the tensor space is one dimensional, so one application decides it
        for seed in range(3):
            assert apply_element(p, random_tensor(n, 1, seed), m1).is_zero()
    m = make_metric(2, -1)
    assert [e.specialized for e in spectrum_universal(3, 2, -1)] == [-3]
    p3 = projector_element(3, 2, -1)
    want = AlgebraElement.one(3) + contraction_sum(3).scale(Fraction(1, 3))
    assert p3 == want
    for seed in range(5):
        out = apply_element(p3, random_tensor(3, 2, seed), m)
        assert is_traceless(out, m)


@report(12, "commutativity dichotomy with the quoted rank-6 witness coefficients")
def test_criterion_12():
    for n in range(2, 6):
        for z in monomials_of_degree(n):
            lhs = delta_op(z).terms
            rhs = {star(x): c for x, c in delta_op(star(z)).terms.items()}
            assert lhs == rhs, str(z)
    # stated expectation: the hexagon class breaks the symmetry at rank 6
    # with diagonal coefficients 2(d+1) against 2d.  Exact computation
    # refutes this: the contraction sum is a combination of a central element
    # and permutations, so it commutes with the whole class algebra; see the
    # decisions ledger for the analysis and test_bracelets for the corrected
    # two-arc witness.
    z6 = M("[nsnpsp]")
    lhs = delta_op(z6).terms
    rhs = {star(x): c for x, c in delta_op(star(z6)).terms.items()}
    assert lhs != rhs, "exact computation: the symmetry holds at rank 6 as well"
    assert lhs[z6] == rf(2, 2) and rhs[z6] == rf(0, 2)


@report(13, "curvature-type demo: trace conditions at N=4, vanishing component at N=3, hook coefficients")
def test_criterion_13():
    out4 = weyl_demo(4)
    assert out4["antisymmetric_last_pair"]
    assert out4["trace_12_zero"] and out4["trace_13_zero"] and out4["trace_23_zero"]
    assert out4["fully_traceless"] and out4["projection_nonzero"]
    out3 = weyl_demo(3)
    assert out3["component_22_projects_to_zero"]
    hook = reduced_form((3, 1), 3, 1)
    want = reduced_31_expected()
    got = {str(z): c.constant_value() for z, c in hook.coordinates.terms.items()}
    assert got == want
    # direct trace checks on the projected tensor, independent of the demo dict
    m = make_metric(4, 1)
    t = riemann_like_tensor(4, seed=2)
    w = apply_element(projector_element(4, 4, 1), t, m)
    for (i, j) in ((1, 2), (1, 3), (2, 3)):
        assert trace_ij(w, i, j, m).is_zero()
