"""Exact structure constants for the Demazure and Grothendieck bases of
the K-theory of flag varieties, computed from the Cartan matrix alone.
"""

from .constants import (
    BASES,
    DEMAZURE,
    GROTHENDIECK,
    BasisMismatchError,
    ConstantTable,
    MissingLowerConstantError,
    demazure_constant,
    expand_product,
    full_table,
    grothendieck_constant,
    parabolic_constants,
)
from .delta import (
    DegreeTooHighError,
    NotHomogeneousError,
    QSequences,
    build_q_sequences,
    delta_a,
    eliminate,
    triangular_t,
)
from .derived import basis_transition, demazure_image, grothendieck_image, is_derived
from .polyring import (
    Polynomial,
    PolynomialParseError,
    VarCountMismatchError,
)
from .rootsys import (
    CartanMatrix,
    GroupTooLargeError,
    IndexOutOfRangeError,
    NonCartanError,
    NotFiniteTypeError,
    ParabolicDatum,
    WeylElement,
    WeylGroup,
    WordCartanMatrix,
    validate_cartan,
    word_cartan_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BASES",
    "DEMAZURE",
    "GROTHENDIECK",
    "BasisMismatchError",
    "CartanMatrix",
    "ConstantTable",
    "DegreeTooHighError",
    "GroupTooLargeError",
    "IndexOutOfRangeError",
    "MissingLowerConstantError",
    "NonCartanError",
    "NotFiniteTypeError",
    "NotHomogeneousError",
    "ParabolicDatum",
    "Polynomial",
    "PolynomialParseError",
    "QSequences",
    "VarCountMismatchError",
    "WeylElement",
    "WeylGroup",
    "WordCartanMatrix",
    "basis_transition",
    "build_q_sequences",
    "delta_a",
    "demazure_constant",
    "demazure_image",
    "eliminate",
    "expand_product",
    "full_table",
    "grothendieck_constant",
    "grothendieck_image",
    "is_derived",
    "parabolic_constants",
    "triangular_t",
    "validate_cartan",
    "word_cartan_matrix",
]
