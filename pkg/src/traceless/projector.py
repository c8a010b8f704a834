"""Spectrum construction from Young diagram data and expansion of the
traceless projector in its universal, reduced, quasi-additive and generic
idempotent forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import young
from .brauer import AlgebraElement, central_young_symmetriser, multiply_elements
from .bracelets import (
    BraceletMonomial,
    BraceletVector,
    a_action_normalized,
    apply_a_normalized_poly,
    class_from_monomial,
    delta_normalized_row,
    identity_monomial,
)
from .exactnum import Polynomial, RationalFunction, rf_to_json


class ZeroEigenvalueError(ValueError):
    """A projector factor with eigenvalue zero was requested; such factors
    must be dropped at spectrum construction time."""


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue source: arc count f, the skew shape producing the
    content, the eigenvalue as a degree-one function of the parameter, and its
    integer specialization when a concrete metric was given."""

    f: int
    skew: young.SkewShape
    value: RationalFunction
    specialized: int | None = None

    def sort_key(self):
        return (self.f, self.value.num.coeffs, self.skew.outer, self.skew.inner)

    def to_json(self) -> dict:
        out = {"f": self.f, "skew": self.skew.to_json(), "value": rf_to_json(self.value)}
        if self.specialized is not None:
            out["specialized"] = self.specialized
        return out


def _entry(f: int, outer, inner, delta_value=None) -> SpectrumEntry:
    skew = young.SkewShape(tuple(outer), tuple(inner))
    content = young.skew_content(skew)
    value = RationalFunction(Polynomial((content - f, f)))
    return SpectrumEntry(f, skew, value, delta_value)


def _check_concrete(N: int, eps: int):
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if N < 1:
        raise ValueError("N must be positive")
    if eps == -1 and N % 2 != 0:
        raise ValueError("eps=-1 requires even N")


def _dedupe(entries, key):
    seen = set()
    out = []
    for e in sorted(entries, key=SpectrumEntry.sort_key):
        k = key(e)
        if k not in seen:
            seen.add(k)
            out.append(e)
    return out


def spectrum_universal(n: int, N: int | None = None, eps: int | None = None) -> list:
    """Candidate nonzero eigenvalues of the contraction sum on rank-n tensors.

    Concrete mode (N, eps given) filters labels by the admissible row/column
    bounds, specializes the parameter to eps*N and keeps only values of sign
    eps; N=None drops all restrictions and returns distinct degree-one
    functions of the parameter.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    entries = []
    if N is None:
        for f in range(1, n // 2 + 1):
            for lam in sorted(young.partitions_of(n - 2 * f)):
                for mu in sorted(young.closure_set(lam, f, n)):
                    entries.append(_entry(f, mu, lam))
        return _dedupe(entries, key=lambda e: e.value)
    _check_concrete(N, eps)
    for f in range(1, n // 2 + 1):
        for lam in sorted(young.admissible_lambda(n - 2 * f, N, eps)):
            for mu in sorted(young.closure_set(lam, f, n, N, eps)):
                e = _entry(f, mu, lam)
                alpha = (eps * N - 1) * f + young.skew_content(e.skew)
                if eps * alpha >= 1:
                    entries.append(_entry(f, mu, lam, alpha))
    return _dedupe(entries, key=lambda e: e.specialized)


def spectrum_reduced(mu, N: int | None = None, eps: int | None = None) -> list:
    """Eigenvalue subset relevant on the isotypic component labelled mu, built
    from reverse-slide quotients over even partitions; same concrete/generic
    convention as spectrum_universal."""
    mu = tuple(mu)
    n = sum(mu)
    concrete = N is not None
    if concrete:
        _check_concrete(N, eps)
        if mu not in young.admissible_sigma(n, N, eps):
            raise ValueError(f"{mu} is not an admissible label for N={N}, eps={eps}")
    entries = []
    for f in range(1, n // 2 + 1):
        sigmas = set()
        for nu in young.partitions_of(2 * f):
            if not young.is_even_partition(nu) or not young.contains(nu, mu):
                continue
            sigmas |= young.jdt_quotient(mu, nu)
        if concrete:
            sigmas &= young.admissible_lambda(n - 2 * f, N, eps)
        for sigma in sorted(sigmas):
            e = _entry(f, mu, sigma)
            if concrete:
                alpha = (eps * N - 1) * f + young.skew_content(e.skew)
                if eps * alpha >= 1:
                    entries.append(_entry(f, mu, sigma, alpha))
            else:
                entries.append(e)
    if concrete:
        return _dedupe(entries, key=lambda e: e.specialized)
    return _dedupe(entries, key=lambda e: e.value)


@dataclass
class ProjectorForm:
    """Expanded projector: coordinates over the normalized class basis plus
    the spectrum entries that produced it."""

    kind: str
    n: int
    coordinates: BraceletVector
    provenance: tuple

    def coefficient(self, zeta: BraceletMonomial) -> RationalFunction:
        return self.coordinates.coefficient(zeta)

    def to_json(self, delta_label: str) -> dict:
        items = sorted(self.coordinates.terms.items(), key=lambda t: t[0].words())
        return {
            "n": self.n,
            "kind": self.kind,
            "delta": delta_label,
            "basis": "normalized_bracelet",
            "terms": [{"monomial": str(z), "coefficient": rf_to_json(c)} for z, c in items],
            "spectrum": [e.to_json() for e in self.provenance],
        }


def _factor_values(entries, symbolic: bool):
    values = []
    for e in entries:
        if symbolic or e.specialized is None:
            v = e.value
        else:
            v = RationalFunction.const(e.specialized)
        if v.is_zero():
            raise ZeroEigenvalueError(
                "zero eigenvalue in the spectrum; drop the factor before expanding"
            )
        if v not in values:
            values.append(v)
        else:
            # duplicates can appear only when a symbolic expansion was forced
            # on concrete entries
            continue
    return values


def _infer_delta(entries):
    """Parameter value shared by specialized entries: alpha = value(delta)."""
    for e in entries:
        if e.specialized is not None and e.f:
            content = young.skew_content(e.skew)
            return Fraction(e.specialized - content + e.f, e.f)
    return None


def expand_factorized(n: int, entries, kind: str = "universal", symbolic: bool = False) -> ProjectorForm:
    """Expand the product of factors (1 - A/alpha) over the normalized class
    basis by repeated application of the contraction-sum action.

    Entries carrying integer eigenvalues expand fully numerically at the
    parameter value they encode; otherwise (or when symbolic is forced) the
    expansion is symbolic.  The recursion keeps a common denominator, so
    intermediate coefficients stay polynomial.
    """
    entries = tuple(entries)
    alphas = _factor_values(entries, symbolic)
    delta_value = None if symbolic else _infer_delta(entries)
    if delta_value is not None and all(e.specialized is not None for e in entries):
        num = {identity_monomial(n): Fraction(1)}
        denom = Fraction(1)
        for alpha in alphas:
            a_val = alpha.constant_value()
            acted: dict = {}
            for zeta, c in num.items():
                for xi, row in delta_normalized_row(zeta):
                    add = c * row.evaluate(delta_value)
                    acted[xi] = acted.get(xi, Fraction(0)) + add
            num = {z: c * a_val for z, c in num.items()}
            for z, c in acted.items():
                num[z] = num.get(z, Fraction(0)) - c
            denom *= a_val
        v = BraceletVector(
            n, {z: RationalFunction.const(c / denom) for z, c in num.items() if c}
        )
    elif all(a.den.degree <= 0 and a.den.leading() == 1 for a in alphas):
        num_p = {identity_monomial(n): Polynomial.const(1)}
        denom_p = Polynomial.const(1)
        for alpha in alphas:
            a_num = apply_a_normalized_poly(num_p)
            num_p = {z: c * alpha.num for z, c in num_p.items()}
            for z, c in a_num.items():
                prev = num_p.get(z)
                num_p[z] = -c if prev is None else prev - c
            denom_p = denom_p * alpha.num
        v = BraceletVector(n, {z: RationalFunction(c, denom_p) for z, c in num_p.items()})
    else:
        v = BraceletVector.unit(n)
        for alpha in alphas:
            av = a_action_normalized(v)
            v = v - av.scale(alpha.inverse())
    return ProjectorForm(kind, n, v, entries)


def universal_form(n: int, N: int | None = None, eps: int | None = None,
                   symbolic: bool = False) -> ProjectorForm:
    return expand_factorized(n, spectrum_universal(n, N, eps), "universal", symbolic)


def reduced_form(mu, N: int | None = None, eps: int | None = None,
                 symbolic: bool = False) -> ProjectorForm:
    mu = tuple(mu)
    return expand_factorized(sum(mu), spectrum_reduced(mu, N, eps), f"reduced{mu}", symbolic)


def splitting_idempotent(n: int) -> ProjectorForm:
    """Generic-parameter expansion with no size restrictions; annihilated by
    the contraction sum and idempotent in the diagram algebra."""
    return expand_factorized(n, spectrum_universal(n), "splitting")


def to_algebra_element(form: ProjectorForm) -> AlgebraElement:
    """Expand normalized class coordinates into a diagram-level element."""
    acc = AlgebraElement.zero(form.n)
    for zeta, c in form.coordinates.terms.items():
        acc = acc + class_from_monomial(zeta, normalized=True).scale(c)
    return acc


def _specialize(element: AlgebraElement, N: int, eps: int) -> AlgebraElement:
    value = eps * N
    return AlgebraElement(
        element.n,
        {d: RationalFunction.const(c.evaluate(value)) for d, c in element.terms.items()},
    )


def quasi_additive(n: int, N: int, eps: int) -> AlgebraElement:
    """Sum over admissible labels of the reduced projector times the central
    symmetrizer; equal to the universal projector as an operator on tensors."""
    _check_concrete(N, eps)
    acc = AlgebraElement.zero(n)
    for mu in sorted(young.admissible_lambda(n, N, eps)):
        reduced = to_algebra_element(reduced_form(mu, N, eps))
        acc = acc + _specialize(multiply_elements(reduced, central_young_symmetriser(mu)), N, eps)
    return acc


def projector_element(n: int, N: int, eps: int) -> AlgebraElement:
    """Universal projector as a diagram element with numeric coefficients."""
    return _specialize(to_algebra_element(universal_form(n, N, eps)), N, eps)
