"""Exact construction and verification of traceless tensor projectors through
diagram algebra combinatorics: Young diagram data fixes the spectrum of the
contraction sum, cyclic-word coordinates expand the factorized projector, and
exact tensors verify the result numerically."""

from .exactnum import (
    BigRational,
    PoleError,
    Polynomial,
    RationalFunction,
    rf_arith,
    rf_evaluate,
    rf_normalize,
)
from .young import (
    SkewShape,
    Tableau,
    admissible_lambda,
    admissible_sigma,
    closure_set,
    conjugate,
    hook_dim,
    jdt_quotient,
    lr_coefficient,
    mn_character,
    partitions_of,
    rectify,
    skew_content,
    transpose,
)
from .brauer import (
    AlgebraElement,
    BrauerDiagram,
    arc_count,
    build_named_element,
    central_young_symmetriser,
    class_sum,
    conjugacy_class,
    contraction_sum,
    flip_star,
    min_crossings,
    multiply_diagrams,
    multiply_elements,
    young_symmetriser,
)
from .bracelets import (
    Bracelet,
    BraceletMonomial,
    BraceletVector,
    a_action_normalized,
    class_from_monomial,
    delta_op,
    derive,
    phi,
    stability_index,
    star,
    trace_tau,
)
from .projector import (
    ProjectorForm,
    SpectrumEntry,
    ZeroEigenvalueError,
    expand_factorized,
    projector_element,
    quasi_additive,
    reduced_form,
    spectrum_reduced,
    spectrum_universal,
    splitting_idempotent,
    to_algebra_element,
    universal_form,
)
from .tensor import (
    DenseTensor,
    Metric,
    apply_diagram,
    apply_element,
    is_traceless,
    make_metric,
    random_tensor,
    trace_ij,
)

__version__ = "0.1.0"
