"""
Binary quadratic forms: reduction, class numbers, genus characters and
Heegner points.
"""

from .forms import (
    FormClassData,
    HeegnerPoint,
    QuadForm,
    class_number,
    field_class_number,
    heegner_point,
    hurwitz_forms,
    reduce,
    reduced_forms,
    stabilizer_order,
)
from .genus import genus_character
from .symbols import (
    analytic_class_number,
    fundamental_part,
    is_discriminant,
    is_fundamental,
    kronecker,
    validate_twist,
)

__all__ = [
    "FormClassData",
    "HeegnerPoint",
    "QuadForm",
    "class_number",
    "field_class_number",
    "heegner_point",
    "hurwitz_forms",
    "reduce",
    "reduced_forms",
    "stabilizer_order",
    "genus_character",
    "analytic_class_number",
    "fundamental_part",
    "is_discriminant",
    "is_fundamental",
    "kronecker",
    "validate_twist",
]
