"""Worked verification scenarios combining the projector with concrete
tensors, used by the command line front end and the test suite."""

from __future__ import annotations

from fractions import Fraction

from . import projector as proj
from .bracelets import BraceletMonomial
from .brauer import central_young_symmetriser, s_elem
from .exactnum import rational_to_str
from .tensor import apply_element, is_traceless, make_metric, random_tensor, trace_ij


def riemann_like_tensor(N: int, seed: int = 0):
    """Random rank-4 tensor antisymmetrized in its last index pair."""
    m = make_metric(N, 1)
    t = random_tensor(4, N, seed)
    swapped = apply_element(s_elem(4, 3), t, m)
    return t - swapped


def weyl_demo(N: int, seed: int = 0) -> dict:
    """Totally traceless projection of a curvature-type tensor.

    For N >= 4 the projection keeps the last-pair antisymmetry and kills the
    three independent traces; for N = 3 the (2,2) component dies entirely and
    the surviving traceless part comes from the (3,1) component alone.
    """
    if N < 3:
        raise ValueError("demo needs N >= 3")
    m = make_metric(N, 1)
    t = riemann_like_tensor(N, seed)
    p4 = proj.projector_element(4, N, 1)
    w = apply_element(p4, t, m)
    out = {
        "N": N,
        "seed": seed,
        "antisymmetric_last_pair": (w + apply_element(s_elem(4, 3), w, m)).is_zero(),
        "trace_12_zero": trace_ij(w, 1, 2, m).is_zero(),
        "trace_13_zero": trace_ij(w, 1, 3, m).is_zero(),
        "trace_23_zero": trace_ij(w, 2, 3, m).is_zero(),
        "fully_traceless": is_traceless(w, m),
        "projection_nonzero": not w.is_zero(),
    }
    if N == 3:
        z22 = central_young_symmetriser((2, 2))
        comp = apply_element(z22, t, m)
        out["component_22_projects_to_zero"] = apply_element(p4, comp, m).is_zero()
        hook = proj.reduced_form((3, 1), N, 1)
        out["reduced_31_coefficients"] = {
            str(z): rational_to_str(c.constant_value())
            for z, c in sorted(hook.coordinates.terms.items(), key=lambda kv: kv[0].words())
        }
    return out


def reduced_31_expected() -> dict:
    """Closed-form coefficients of the (3,1) reduced projector at N=3."""
    return {
        "[p]^4": Fraction(1),
        "[ns][p]^2": Fraction(-1, 3),
        "[nsp][p]": Fraction(1, 15),
        "[ns]^2": Fraction(2, 15),
    }


def monomial_key(text: str) -> BraceletMonomial:
    return BraceletMonomial.from_str(text)
