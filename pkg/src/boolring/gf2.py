"""Dense linear algebra over GF(2) with rows packed into Python ints.

Column ``j`` of a row is bit ``j`` (least significant first). Vectors use the
same packing.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple


def rref(rows: Sequence[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form. Returns ``(reduced_rows, pivot_columns)``."""
    mat = [r for r in rows if r]
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(mat)) if mat[i] & bit), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i] & bit:
                mat[i] ^= mat[rank]
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def rank(rows: Sequence[int], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of ``{x : A x = 0}``, one vector per free column, in column order."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, pcol in zip(reduced, pivots):
            if row >> free & 1:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


def matvec(rows: Sequence[int], vec: int) -> int:
    """``A x`` packed with bit ``i`` = row ``i``."""
    out = 0
    for i, row in enumerate(rows):
        if (row & vec).bit_count() & 1:
            out |= 1 << i
    return out


def in_span(vectors: Sequence[int], target: int, ncols: int) -> bool:
    basis, pivots = rref(vectors, ncols)
    for row, pcol in zip(basis, pivots):
        if target >> pcol & 1:
            target ^= row
    return target == 0
