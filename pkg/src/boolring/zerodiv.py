"""Zero-divisor stack assignment.

Split texts into two nonempty stacks so that the common characteristics of
the left stack are covered by the right stack, i.e. ``L R = 0`` with
``L = X_l1 ... X_lp`` and ``R = (1 + X_r1) ... (1 + X_rq)``. Each ring
operation is counted so the cost of every check can be reported.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Sequence, Tuple

from .errors import InvalidAssignment, TooManyTexts
from .pext import Pext, and_, common_width, xor

DEFAULT_LIMIT = 20


@dataclass(frozen=True)
class Assignment:
    left: FrozenSet[int]
    right: FrozenSet[int]

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Assignment":
        """Text ``i`` goes LEFT iff bit ``i`` of ``mask`` is set."""
        left = frozenset(i for i in range(n) if mask >> i & 1)
        return cls(left, frozenset(range(n)) - left)

    def to_json(self, ids: Optional[Sequence[str]] = None) -> dict:
        name = (lambda i: ids[i]) if ids is not None else (lambda i: i)
        return {"left": [name(i) for i in sorted(self.left)], "right": [name(i) for i in sorted(self.right)]}


@dataclass
class SearchStats:
    guesses: int = 0
    ring_ops: int = 0
    found: Optional[Assignment] = field(default=None)


def validate_assignment(a: Assignment, n: int) -> None:
    if not a.left or not a.right:
        raise InvalidAssignment("both stacks must be nonempty")
    if a.left & a.right:
        raise InvalidAssignment(f"texts {sorted(a.left & a.right)} are on both stacks")
    if a.left | a.right != frozenset(range(n)):
        raise InvalidAssignment(f"assignment does not cover exactly texts 0..{n - 1}")


def _check(xs: Sequence[Pext], left: Sequence[int], right: Sequence[int], one: Pext) -> Tuple[Pext, int]:
    ops = 0
    lhs = xs[left[0]]
    for i in left[1:]:
        lhs = and_(lhs, xs[i])
        ops += 1
    rhs = None
    for i in right:
        c = xor(one, xs[i])
        ops += 1
        if rhs is None:
            rhs = c
        else:
            rhs = and_(rhs, c)
            ops += 1
    result = and_(lhs, rhs)
    return result, ops + 1


def check_assignment(xs: Sequence[Pext], a: Assignment) -> Tuple[Pext, int]:
    """``L R`` for assignment ``a`` and the number of ring operations spent.

    The count is ``n + |right| - 1`` which never exceeds ``2n - 1``.
    """
    width = common_width(xs)
    validate_assignment(a, len(xs))
    return _check(xs, sorted(a.left), sorted(a.right), Pext.one(width))


def solve_bruteforce(xs: Sequence[Pext], limit: int = DEFAULT_LIMIT) -> Tuple[Optional[Assignment], SearchStats]:
    """First satisfying assignment in binary-counter order (LEFT = set bits), if any."""
    n = len(xs)
    if n > limit:
        raise TooManyTexts(f"{n} texts exceed the brute-force limit of {limit}")
    if n < 2:
        raise InvalidAssignment("need at least two texts")
    one = Pext.one(common_width(xs))
    stats = SearchStats()
    for mask in range(1, (1 << n) - 1):
        left = [i for i in range(n) if mask >> i & 1]
        right = [i for i in range(n) if not mask >> i & 1]
        result, ops = _check(xs, left, right, one)
        stats.guesses += 1
        stats.ring_ops += ops
        if not result:
            stats.found = Assignment.from_mask(mask, n)
            break
    return stats.found, stats


def solve_random(xs: Sequence[Pext], budget: int, seed: int) -> Tuple[Optional[Assignment], SearchStats]:
    """Up to ``budget`` uniformly random two-sided assignments; stop at the first success."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    n = len(xs)
    if n < 2:
        raise InvalidAssignment("need at least two texts")
    one = Pext.one(common_width(xs))
    rng = random.Random(seed)
    stats = SearchStats()
    for _ in range(budget):
        mask = rng.randint(1, (1 << n) - 2)
        left = [i for i in range(n) if mask >> i & 1]
        right = [i for i in range(n) if not mask >> i & 1]
        result, ops = _check(xs, left, right, one)
        stats.guesses += 1
        stats.ring_ops += ops
        if not result:
            stats.found = Assignment.from_mask(mask, n)
            break
    return stats.found, stats
