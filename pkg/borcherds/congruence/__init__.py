"""
Congruences between logarithmic derivatives modulo prime powers.

This package contains the set-size thresholds, the admissible discriminant
filter, linear algebra over Z/p^k, the search itself and the certificates
it produces.
"""

from .admissible import (
    admissible_discriminants,
    choose_discriminant_set,
    h_S,
    s_p_membership,
)
from .bounds import (
    class_number_upper_bound,
    congruence_weight,
    index_gamma0,
    lhat_set_size,
    lhat_weight,
    required_set_size,
    sturm_bound,
)
from .certificate import (
    CERTIFICATE_FORMAT,
    CongruenceCertificate,
    SearchConfig,
    canonicalise,
    certificate_from_dict,
    certificate_to_dict,
    load_certificate,
    load_certificates,
    save_certificate,
    save_certificates,
)
from .columns import column_series, column_vector
from .linalg import (
    howell_form,
    in_span,
    kernel_mod_prime_power,
    nullspace_mod_prime,
    rank_mod_prime,
    rref_mod_prime,
)
from .search import combination_series, find_congruences, verify_congruence

__all__ = [
    "admissible_discriminants",
    "choose_discriminant_set",
    "h_S",
    "s_p_membership",
    "class_number_upper_bound",
    "congruence_weight",
    "index_gamma0",
    "lhat_set_size",
    "lhat_weight",
    "required_set_size",
    "sturm_bound",
    "CERTIFICATE_FORMAT",
    "CongruenceCertificate",
    "SearchConfig",
    "canonicalise",
    "certificate_from_dict",
    "certificate_to_dict",
    "load_certificate",
    "load_certificates",
    "save_certificate",
    "save_certificates",
    "column_series",
    "column_vector",
    "howell_form",
    "in_span",
    "kernel_mod_prime_power",
    "nullspace_mod_prime",
    "rank_mod_prime",
    "rref_mod_prime",
    "combination_series",
    "find_congruences",
    "verify_congruence",
]
