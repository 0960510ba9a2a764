"""Finite Boolean ring elements as fixed-width bitvectors.

A :class:`Pext` is a subset of an ``n``-statement catalog. In text form it is
a string over ``{0, 1}`` whose leftmost character is statement 1. Internally
the string is read as a big-endian integer, so statement ``i`` lives at bit
``width - i``.

Addition is symmetric difference (bitwise xor), multiplication is
intersection (bitwise and). Both are exposed as functions and as the
``^`` / ``&`` operators; ``~`` is the complement ``1 + A`` and ``|`` is the
union ``A + B + AB``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput, WidthMismatch

_BITSTRING = re.compile(r"[01]+")


@dataclass(frozen=True, slots=True)
class Pext:
    bits: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"width must be >= 1, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits:#x} do not fit in width {self.width}")

    @classmethod
    def _raw(cls, bits: int, width: int) -> "Pext":
        """Construct without validation; callers guarantee the invariants."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "bits", bits)
        object.__setattr__(obj, "width", width)
        return obj

    @classmethod
    def parse(cls, text: str) -> "Pext":
        text = text.strip()
        if not _BITSTRING.fullmatch(text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(int(text, 2), len(text))

    @classmethod
    def zero(cls, width: int) -> "Pext":
        return cls(0, width)

    @classmethod
    def one(cls, width: int) -> "Pext":
        return cls((1 << width) - 1, width)

    @classmethod
    def from_statements(cls, indices: Iterable[int], width: int) -> "Pext":
        """Build the pext containing the given 1-based statement indices."""
        bits = 0
        for i in indices:
            if not 1 <= i <= width:
                raise ValueError(f"statement index {i} outside 1..{width}")
            bits |= 1 << (width - i)
        return cls(bits, width)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.width}b")

    def __repr__(self) -> str:
        return f"Pext('{self}')"

    def __bool__(self) -> bool:
        return self.bits != 0

    def __getitem__(self, index: int) -> int:
        """Digit of 1-based statement ``index``."""
        if not 1 <= index <= self.width:
            raise IndexError(index)
        return (self.bits >> (self.width - index)) & 1

    def statements(self) -> Iterator[int]:
        """1-based indices of the statements contained in this pext, ascending."""
        for i in range(1, self.width + 1):
            if self[i]:
                yield i

    def __xor__(self, other: "Pext") -> "Pext":
        return xor(self, other)

    def __and__(self, other: "Pext") -> "Pext":
        return and_(self, other)

    def __or__(self, other: "Pext") -> "Pext":
        return union(self, other)

    def __invert__(self) -> "Pext":
        return complement(self)

    def __ge__(self, other: "Pext") -> bool:
        return compare(self, other) in (Order.GREATER, Order.EQUAL)

    def __le__(self, other: "Pext") -> bool:
        return compare(self, other) in (Order.LESS, Order.EQUAL)

    def __gt__(self, other: "Pext") -> bool:
        return compare(self, other) is Order.GREATER

    def __lt__(self, other: "Pext") -> bool:
        return compare(self, other) is Order.LESS


class Order(enum.Enum):
    EQUAL = "equal"
    GREATER = "greater"
    LESS = "less"
    INCOMPARABLE = "incomparable"


def _check(a: Pext, b: Pext) -> int:
    if a.width != b.width:
        raise WidthMismatch(f"width {a.width} != {b.width}")
    return a.width


def xor(a: Pext, b: Pext) -> Pext:
    return Pext._raw(a.bits ^ b.bits, _check(a, b))


def and_(a: Pext, b: Pext) -> Pext:
    return Pext._raw(a.bits & b.bits, _check(a, b))


def complement(a: Pext) -> Pext:
    return xor(Pext.one(a.width), a)


def union(a: Pext, b: Pext) -> Pext:
    return xor(xor(a, b), and_(a, b))


def union_fold(elems: Sequence[Pext]) -> Pext:
    """Union of all elements: the unity of the subring their statements span."""
    if not elems:
        raise EmptyInput("union_fold needs at least one element")
    return reduce(union, elems)


def product_fold(elems: Sequence[Pext]) -> Pext:
    if not elems:
        raise EmptyInput("product_fold needs at least one element")
    return reduce(and_, elems)


def restrict(t: Pext, a: Pext) -> Pext:
    """The restriction homomorphism ``X -> T X`` onto the subring with unity ``t``."""
    return and_(t, a)


def geq(a: Pext, b: Pext) -> bool:
    """``a >= b`` iff ``b (a + b) == 0``."""
    return not and_(b, xor(a, b))


def compare(a: Pext, b: Pext) -> Order:
    _check(a, b)
    if a.bits == b.bits:
        return Order.EQUAL
    if geq(a, b):
        return Order.GREATER
    if geq(b, a):
        return Order.LESS
    return Order.INCOMPARABLE


def is_zero_divisor_pair(l: Pext, r: Pext) -> bool:
    _check(l, r)
    return bool(l) and bool(r) and not and_(l, r)


def common_width(elems: Iterable[Pext]) -> int:
    """Shared width of ``elems``; raises on an empty or mixed-width collection."""
    widths = {e.width for e in elems}
    if not widths:
        raise EmptyInput("no elements")
    if len(widths) > 1:
        raise WidthMismatch(f"mixed widths {sorted(widths)}")
    return widths.pop()
