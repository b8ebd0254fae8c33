"""
Borcherds products: untwisted and twisted products, their logarithmic
derivatives and the modification used for p = 2, 3.
"""

from .borcherds import ProductExpansion, untwisted_product
from .log_derivative import (
    LhatContext,
    LogDerivSeries,
    lhat,
    lhat_modulus_exponent,
    log_deriv,
    log_deriv_via_product,
)
from .twisted import (
    TwistedClassExpansion,
    log_pd_series,
    pd_series,
    recognise_twisted_class_polynomial,
    twist_field,
    twisted_class_polynomial_expansion,
    twisted_log,
    twisted_product_psi,
)

__all__ = [
    "ProductExpansion",
    "TwistedClassExpansion",
    "untwisted_product",
    "LhatContext",
    "LogDerivSeries",
    "lhat",
    "lhat_modulus_exponent",
    "log_deriv",
    "log_deriv_via_product",
    "log_pd_series",
    "pd_series",
    "recognise_twisted_class_polynomial",
    "twist_field",
    "twisted_class_polynomial_expansion",
    "twisted_log",
    "twisted_product_psi",
]
