"""
The category of weighted matrices over a division *-ring.
"""

from starcat.category.biproducts import (
    Biproduct,
    biproduct,
    block,
    block_diagonal,
    codiagonal,
    copair,
    diagonal,
    direct_sum,
    injections,
    pair,
    projections,
    sum_via_biproduct,
)
from starcat.category.objects import (
    Column,
    WMorphism,
    WObject,
    add,
    adjoint,
    adjoint_by_parseval,
    compose,
    from_columns,
    hermitian,
    identity,
    inner_product,
    negate,
    rational_scale,
    zero_morphism,
    zero_object,
)

__all__ = [
    # Objects and morphisms
    "WObject",
    "WMorphism",
    "Column",
    "from_columns",
    "zero_object",
    "zero_morphism",
    # Category structure
    "identity",
    "compose",
    "add",
    "negate",
    "rational_scale",
    # Involution
    "adjoint",
    "adjoint_by_parseval",
    "inner_product",
    "hermitian",
    # Biproducts
    "Biproduct",
    "biproduct",
    "direct_sum",
    "injections",
    "projections",
    "pair",
    "copair",
    "block",
    "block_diagonal",
    "diagonal",
    "codiagonal",
    "sum_via_biproduct",
]
