from .finite_map import (
    FiniteMap,
    adjunction_check,
    is_compatible,
    pull_back,
    push_forward,
    push_forward_matrix,
    push_forward_vector,
)
from .local import LocElem, loc_normalize
from .matrix import Matrix, bareiss_det, charpoly
from .poly import ONE, TWO_X_PLUS_ONE, X, ZERO, PolyZ


def poly_arith(a: PolyZ, b: PolyZ, op: str) -> PolyZ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(p: PolyZ, x0):
    return p.eval(x0)


__all__ = [
    "FiniteMap", "LocElem", "Matrix", "PolyZ",
    "ONE", "TWO_X_PLUS_ONE", "X", "ZERO",
    "adjunction_check", "bareiss_det", "charpoly", "is_compatible", "loc_normalize",
    "poly_arith", "poly_eval", "pull_back", "push_forward", "push_forward_matrix",
    "push_forward_vector",
]
