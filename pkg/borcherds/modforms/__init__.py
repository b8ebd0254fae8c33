"""
Modular forms: classical q-expansions, the weight 1/2 plus-space basis,
class polynomials and the on-disk coefficient cache.
"""

from .cache import CACHE_FORMAT, CoefficientCache, default_cache_dir
from .classical import (
    bernoulli,
    delta,
    delta_inverse,
    eisenstein,
    eisenstein_congruence_report,
    eta_cube_product,
    f3_series,
    j_invariant,
    theta,
)
from .heegner import (
    ClassPolynomial,
    eval_j_at_heegner,
    hilbert_class_polynomial,
    j_terms_needed,
)
from .plus_space import (
    PlusSpaceForm,
    check_normalised,
    f3,
    is_plus_space_index,
    kohnen_basis,
    plus_space_form,
)


__all__ = [
    "CACHE_FORMAT",
    "CoefficientCache",
    "default_cache_dir",
    "bernoulli",
    "delta",
    "delta_inverse",
    "eisenstein",
    "eisenstein_congruence_report",
    "eta_cube_product",
    "f3",
    "f3_series",
    "j_invariant",
    "theta",
    "ClassPolynomial",
    "eval_j_at_heegner",
    "hilbert_class_polynomial",
    "j_terms_needed",
    "PlusSpaceForm",
    "check_normalised",
    "is_plus_space_index",
    "kohnen_basis",
    "plus_space_form",
]
