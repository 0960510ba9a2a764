"""The module ``B^k`` over a finite Boolean ring: modi, matrices and kernels.

The ring splits digit-wise into copies of GF(2), so every linear question
about a matrix decomposes into one GF(2) problem per statement digit. Exact
kernels are computed that way; the randomized kernel-element routines work
directly with ring operations and are checked against the exact kernel.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, List, Literal, Sequence, Tuple

from . import gf2
from .errors import EmptyInput, IndexOutOfRange, NotFound, ShapeMismatch, WidthMismatch
from .pext import Pext, and_, common_width, complement, xor


@dataclass(frozen=True)
class Modus:
    entries: Tuple[Pext, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise EmptyInput("a modus needs at least one entry")
        common_width(self.entries)

    @classmethod
    def parse(cls, bitstrings: Iterable[str]) -> "Modus":
        return cls(tuple(Pext.parse(s) for s in bitstrings))

    @classmethod
    def zero(cls, k: int, width: int) -> "Modus":
        return cls((Pext.zero(width),) * k)

    @classmethod
    def from_slices(cls, slices: Sequence[int], k: int) -> "Modus":
        """Inverse of :meth:`slice`: ``slices[p - 1]`` is the packed digit-``p`` slice."""
        width = len(slices)
        entries = []
        for j in range(k):
            bits = 0
            for p, s in enumerate(slices):
                if s >> j & 1:
                    bits |= 1 << (width - 1 - p)
            entries.append(Pext(bits, width))
        return cls(tuple(entries))

    @property
    def width(self) -> int:
        return self.entries[0].width

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Pext]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Pext:
        return self.entries[i]

    def __xor__(self, other: "Modus") -> "Modus":
        if len(self) != len(other):
            raise ShapeMismatch(f"modus lengths {len(self)} != {len(other)}")
        return Modus(tuple(xor(a, b) for a, b in zip(self, other)))

    def scale(self, lam: Pext) -> "Modus":
        """Ring-modus product ``lam * v``."""
        return Modus(tuple(and_(lam, a) for a in self))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def slice(self, p: int) -> int:
        """Digit ``p`` (1-based statement) of every entry, entry ``j`` at bit ``j``."""
        shift = self.width - p
        out = 0
        for j, a in enumerate(self.entries):
            out |= (a.bits >> shift & 1) << j
        return out

    def to_json(self) -> List[str]:
        return [str(a) for a in self.entries]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_json()) + ")"


@dataclass(frozen=True)
class BrMatrix:
    cells: Tuple[Tuple[Pext, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells or not cells[0]:
            raise EmptyInput("a matrix needs at least one cell")
        if any(len(row) != len(cells[0]) for row in cells):
            raise ShapeMismatch("ragged matrix rows")
        common_width(c for row in cells for c in row)

    @classmethod
    def parse(cls, rows: Iterable[Iterable[str]]) -> "BrMatrix":
        return cls(tuple(tuple(Pext.parse(s) for s in row) for row in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int, width: int) -> "BrMatrix":
        z = Pext.zero(width)
        return cls(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, diag: Sequence[Pext]) -> "BrMatrix":
        width = common_width(diag)
        z = Pext.zero(width)
        k = len(diag)
        return cls(tuple(tuple(diag[i] if i == j else z for j in range(k)) for i in range(k)))

    @classmethod
    def identity(cls, k: int, width: int) -> "BrMatrix":
        return cls.diagonal([Pext.one(width)] * k)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def width(self) -> int:
        return self.cells[0][0].width

    def __getitem__(self, ij: Tuple[int, int]) -> Pext:
        i, j = ij
        return self.cells[i][j]

    def __xor__(self, other: "BrMatrix") -> "BrMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} != {other.shape}")
        return BrMatrix(
            tuple(tuple(xor(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.cells, other.cells))
        )

    def slice(self, p: int) -> List[int]:
        """GF(2) matrix of digit ``p``: one packed int per row, column ``j`` at bit ``j``."""
        shift = self.width - p
        rows = []
        for row in self.cells:
            r = 0
            for j, a in enumerate(row):
                r |= (a.bits >> shift & 1) << j
            rows.append(r)
        return rows

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.cells[i][j] == self.cells[j][i] for i in range(self.rows) for j in range(i)
        )

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "width": self.width,
            "cells": [[str(a) for a in row] for row in self.cells],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BrMatrix":
        m = cls.parse(doc["cells"])
        declared = (doc.get("rows", m.rows), doc.get("cols", m.cols))
        if declared != m.shape:
            raise ShapeMismatch(f"declared shape {declared} but cells are {m.shape}")
        if doc.get("width", m.width) != m.width:
            raise WidthMismatch(f"declared width {doc['width']} but cells have {m.width}")
        return m


@dataclass(frozen=True)
class KernelBasis:
    generators: Tuple[Modus, ...]
    per_bit_nullity: Tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "generators": [g.to_json() for g in self.generators],
            "per_bit_nullity": list(self.per_bit_nullity),
        }


Pair = Tuple[int, int]


def _check_vec(m: BrMatrix, w: Modus) -> None:
    if m.cols != len(w):
        raise ShapeMismatch(f"matrix has {m.cols} columns, modus has {len(w)} entries")
    if m.width != w.width:
        raise WidthMismatch(f"matrix width {m.width} != modus width {w.width}")


def matvec(m: BrMatrix, w: Modus) -> Modus:
    """``v_i = (M_i1 w_1) + ... + (M_im w_m)``."""
    _check_vec(m, w)
    return Modus(tuple(reduce(xor, map(and_, row, w.entries)) for row in m.cells))


def in_kernel(m: BrMatrix, v: Modus) -> bool:
    return matvec(m, v).is_zero()


def similarity_matrix(xs: Sequence[Pext], kind: Literal["product", "difference"] = "product") -> BrMatrix:
    """``M_ij = X_i X_j`` (product) or ``M_ij = X_i + X_j`` (difference)."""
    if not xs:
        raise EmptyInput("no texts")
    common_width(xs)
    op = {"product": and_, "difference": xor}[kind]
    return BrMatrix(tuple(tuple(op(a, b) for b in xs) for a in xs))


def pair_dot(p: Tuple[Pext, Pext], q: Tuple[Pext, Pext]) -> Pext:
    """``(a, b) . (c, d) = (a c) + (b d)``."""
    return xor(and_(p[0], q[0]), and_(p[1], q[1]))


def check_pairs(pairs: Sequence[Pair], k: int) -> None:
    for i, j in pairs:
        if not (0 <= i < k and 0 <= j < k):
            raise IndexOutOfRange(f"pair ({i}, {j}) out of range for {k} texts")


def gramian(xs: Sequence[Pext], pairs: Sequence[Pair]) -> BrMatrix:
    """Gramian of the two-component modi ``(X_i, X_j)`` named by ``pairs`` (0-based)."""
    if not pairs:
        raise EmptyInput("no pairs")
    check_pairs(pairs, len(xs))
    vecs = [(xs[i], xs[j]) for i, j in pairs]
    return BrMatrix(tuple(tuple(pair_dot(p, q) for q in vecs) for p in vecs))


def _lift(u: int, p: int, k: int, width: int) -> Modus:
    atom = Pext._raw(1 << (width - p), width)
    zero = Pext._raw(0, width)
    return Modus(tuple(atom if u >> j & 1 else zero for j in range(k)))


def kernel_basis(m: BrMatrix) -> KernelBasis:
    """Generators of ``ker(M)``, one family per statement digit.

    Every kernel element is ``sum_i r_i g_i`` for ring coefficients ``r_i``;
    generator ``g`` from digit ``p`` only has entries ``0`` or the atom of ``p``.
    """
    gens: List[Modus] = []
    nullity = []
    for p in range(1, m.width + 1):
        basis = gf2.nullspace(m.slice(p), m.cols)
        nullity.append(len(basis))
        gens.extend(_lift(u, p, m.cols, m.width) for u in basis)
    return KernelBasis(tuple(gens), tuple(nullity))


def per_bit_rank(m: BrMatrix) -> Tuple[int, ...]:
    return tuple(gf2.rank(m.slice(p), m.cols) for p in range(1, m.width + 1))


def random_modus(rng: random.Random, k: int, width: int) -> Modus:
    return Modus(tuple(Pext(rng.getrandbits(width), width) for _ in range(k)))


def _annihilator(w: Modus) -> Pext:
    """``(1 + w_1) ... (1 + w_n)``: the largest ring element killing every entry."""
    return reduce(and_, (complement(a) for a in w))


def project_to_kernel(m: BrMatrix, v: Modus) -> Modus:
    """``lam v`` with ``lam = (1 + w_1) ... (1 + w_n)`` and ``w = M v``; always in ``ker(M)``."""
    return v.scale(_annihilator(matvec(m, v)))


def random_kernel_element(m: BrMatrix, seed: int) -> Modus:
    """:func:`project_to_kernel` applied to a seeded random modus. May return zero."""
    if m.rows != m.cols:
        raise ShapeMismatch(f"square matrix required, got {m.shape}")
    rng = random.Random(seed)
    return project_to_kernel(m, random_modus(rng, m.cols, m.width))


def split_kernel_element(m1: BrMatrix, m2: BrMatrix, seed: int) -> Modus:
    """Kernel element of ``M1 + M2`` from ``lam = prod (1 + u_i + w_i)`` with ``u = M1 v``, ``w = M2 v``."""
    if m1.shape != m2.shape:
        raise ShapeMismatch(f"shapes {m1.shape} != {m2.shape}")
    if m1.width != m2.width:
        raise WidthMismatch(f"widths {m1.width} != {m2.width}")
    rng = random.Random(seed)
    v = random_modus(rng, m1.cols, m1.width)
    u = matvec(m1, v)
    w = matvec(m2, v)
    return v.scale(_annihilator(u ^ w))


def nonzero_kernel_element(m: BrMatrix, seed: int, budget: int = 64) -> Modus:
    """Retry :func:`random_kernel_element` with seeds ``seed, seed+1, ...``."""
    for s in range(seed, seed + budget):
        x = random_kernel_element(m, s)
        if not x.is_zero():
            return x
    raise NotFound(f"no nonzero kernel element within {budget} draws")


def linear_combination(coeffs: Sequence[Pext], gens: Sequence[Modus]) -> Modus:
    if len(coeffs) != len(gens) or not gens:
        raise ShapeMismatch("need one coefficient per generator")
    return reduce(Modus.__xor__, (g.scale(c) for c, g in zip(coeffs, gens)))


def is_invariant_submodule(m: BrMatrix, gens: Sequence[Modus]) -> bool:
    """Whether ``M g`` stays inside the span of ``gens`` for every generator ``g``.

    Ring coefficients act digit by digit, so membership is a GF(2) span test per digit.
    """
    if not gens:
        return True
    if m.rows != m.cols:
        raise ShapeMismatch(f"square matrix required, got {m.shape}")
    for g in gens:
        _check_vec(m, g)
    images = [matvec(m, g) for g in gens]
    for p in range(1, m.width + 1):
        span = [g.slice(p) for g in gens]
        for img in images:
            if not gf2.in_span(span, img.slice(p), m.cols):
                return False
    return True
