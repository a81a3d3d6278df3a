"""Toy non-associative quantum mechanics on the sedenion algebra."""

from .algebra import (
    AlgebraElement,
    BasisUnit,
    SignedUnit,
    Subalgebra,
    basis_product,
    closure_check,
    export_table,
    format_element,
    linear_combine,
    multiply,
    subalgebra_units,
    unit,
)
from .brackets import (
    ModelId,
    PhysicalConstants,
    associator,
    commutator,
    hamiltonian_factor,
    l_operator,
    na_bracket,
    spin_operator,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "BasisUnit",
    "SignedUnit",
    "Subalgebra",
    "basis_product",
    "closure_check",
    "export_table",
    "format_element",
    "linear_combine",
    "multiply",
    "subalgebra_units",
    "unit",
    "ModelId",
    "PhysicalConstants",
    "associator",
    "commutator",
    "hamiltonian_factor",
    "l_operator",
    "na_bracket",
    "spin_operator",
]
