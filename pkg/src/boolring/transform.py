"""Pext transformations and their Galerkin complexity analysis.

A transformation is given by three digit masks applied in the order
clear, set, flip. Projecting it onto a family of pexts gives
``T_ij = X_i Theta(X_j)``; comparing against the identity projection
``I_ij = X_i X_j`` through the kernel of ``T + I`` measures how far the
transformation is from the identity on that family.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import ContradictoryMasks, EmptyInput, NotAnEigenpair
from .module import BrMatrix, KernelBasis, Modus, kernel_basis, matvec, per_bit_rank, similarity_matrix
from .pext import Pext, and_, common_width, complement, union, xor

SCORE_NOTE = "complexity_score is the total per-digit GF(2) rank of T+I; larger means further from identity"


@dataclass(frozen=True)
class TransformSpec:
    set_mask: Pext
    clear_mask: Pext
    flip_mask: Pext
    name: str = ""

    def __post_init__(self) -> None:
        common_width([self.set_mask, self.clear_mask, self.flip_mask])
        if and_(self.set_mask, self.clear_mask):
            raise ContradictoryMasks(f"digits {list(and_(self.set_mask, self.clear_mask).statements())} both set and cleared")

    @property
    def width(self) -> int:
        return self.set_mask.width

    @classmethod
    def identity(cls, width: int, name: str = "identity") -> "TransformSpec":
        z = Pext.zero(width)
        return cls(z, z, z, name)

    @classmethod
    def from_json(cls, doc: dict, width: Optional[int] = None) -> "TransformSpec":
        masks = {key: doc.get(key) for key in ("set", "clear", "flip")}
        given = [Pext.parse(v) for v in masks.values() if v is not None]
        if width is None:
            if not given:
                raise ValueError("transform spec has no masks and no width")
            width = given[0].width
        parsed = {k: Pext.parse(v) if v is not None else Pext.zero(width) for k, v in masks.items()}
        return cls(parsed["set"], parsed["clear"], parsed["flip"], doc.get("name", ""))

    def to_json(self) -> dict:
        return {"name": self.name, "set": str(self.set_mask), "clear": str(self.clear_mask), "flip": str(self.flip_mask)}


def apply_transform(spec: TransformSpec, a: Pext) -> Pext:
    out = and_(a, complement(spec.clear_mask))
    out = union(out, spec.set_mask)
    return xor(out, spec.flip_mask)


def galerkin(xs: Sequence[Pext], spec: TransformSpec) -> BrMatrix:
    """``T_ij = X_i Theta(X_j)``."""
    if not xs:
        raise EmptyInput("no texts")
    common_width(list(xs) + [spec.set_mask])
    images = [apply_transform(spec, x) for x in xs]
    return BrMatrix(tuple(tuple(and_(a, b) for b in images) for a in xs))


@dataclass(frozen=True)
class ComplexityReport:
    t_matrix: BrMatrix
    i_matrix: BrMatrix
    sum_matrix: BrMatrix
    kernel: KernelBasis
    per_bit_rank: Tuple[int, ...]
    complexity_score: int

    def to_json(self) -> dict:
        return {
            "t_matrix": self.t_matrix.to_json(),
            "i_matrix": self.i_matrix.to_json(),
            "sum_matrix": self.sum_matrix.to_json(),
            "kernel": self.kernel.to_json(),
            "per_bit_rank": list(self.per_bit_rank),
            "complexity_score": self.complexity_score,
            "score_note": SCORE_NOTE,
        }


def complexity_report(xs: Sequence[Pext], spec: TransformSpec) -> ComplexityReport:
    t = galerkin(xs, spec)
    i = similarity_matrix(xs, "product")
    s = t ^ i
    ranks = per_bit_rank(s)
    return ComplexityReport(t, i, s, kernel_basis(s), ranks, sum(ranks))


def eigen_restrict(m: BrMatrix, v: Modus, lam: Pext) -> Modus:
    """Restrict an eigenpair ``M v = lam v`` to the fixed point ``xi = lam v`` (``M xi = xi``)."""
    if matvec(m, v) != v.scale(lam):
        raise NotAnEigenpair(f"M v != lam v for lam={lam}")
    return v.scale(lam)
