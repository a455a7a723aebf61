"""Monodromy-based checks of representability by radicals and quadratures."""

from ._core import (
    MonokitError,
    __version__,
    algebraic,
    chebyshev,
    composition_factors,
    decompose,
    fuchsian,
    group_order,
    invert_poly,
    is_k_solvable,
    is_solvable,
    lie_closure,
    monodromy,
    polygon,
    roots,
)

__all__ = [
    "MonokitError",
    "__version__",
    "algebraic",
    "chebyshev",
    "composition_factors",
    "decompose",
    "fuchsian",
    "group_order",
    "invert_poly",
    "is_k_solvable",
    "is_solvable",
    "lie_closure",
    "monodromy",
    "polygon",
    "roots",
]
