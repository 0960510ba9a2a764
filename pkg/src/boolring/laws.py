"""Executable ring and module laws, checked on seeded random data.

Each law is a predicate over a fixed number of random pexts. Ring laws go
through :data:`OPS` so a replacement ``xor`` or ``and_`` can be checked
against them (this is how a broken implementation gets caught).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Optional, Sequence

from . import pext as _p
from .module import (
    BrMatrix,
    Modus,
    in_kernel,
    kernel_basis,
    linear_combination,
    matvec,
    random_kernel_element,
    split_kernel_element,
)
from . import gf2
from .pext import Pext

BinOp = Callable[[Pext, Pext], Pext]


class Ops(NamedTuple):
    xor: BinOp
    and_: BinOp


OPS = Ops(_p.xor, _p.and_)


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    check: Callable[..., bool]


@dataclass
class LawResult:
    name: str
    trials: int
    counterexample: Optional[List[str]] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _ring_laws(o: Ops) -> List[Law]:
    x, m = o.xor, o.and_

    def one(a: Pext) -> Pext:
        return Pext.one(a.width)

    def zero(a: Pext) -> Pext:
        return Pext.zero(a.width)

    def geq(a: Pext, b: Pext) -> bool:
        return not m(b, x(a, b))

    def union(a: Pext, b: Pext) -> Pext:
        return x(x(a, b), m(a, b))

    return [
        Law("xor associative", 3, lambda a, b, c: x(x(a, b), c) == x(a, x(b, c))),
        Law("xor commutative", 2, lambda a, b: x(a, b) == x(b, a)),
        Law("zero is additive identity", 1, lambda a: x(zero(a), a) == a),
        Law("A xor A = 0", 1, lambda a: x(a, a) == zero(a)),
        Law("and associative", 3, lambda a, b, c: m(m(a, b), c) == m(a, m(b, c))),
        Law("and commutative", 2, lambda a, b: m(a, b) == m(b, a)),
        Law("idempotent", 1, lambda a: m(a, a) == a),
        Law("one is unity", 1, lambda a: m(a, one(a)) == a),
        Law("left distributive", 3, lambda a, b, c: m(a, x(b, c)) == x(m(a, b), m(a, c))),
        Law("right distributive", 3, lambda a, b, c: m(x(a, b), c) == x(m(a, c), m(b, c))),
        Law("union is bitwise or", 2, lambda a, b: union(a, b) == Pext(a.bits | b.bits, a.width)),
        Law("restrict preserves xor", 3, lambda t, a, b: m(t, x(a, b)) == x(m(t, a), m(t, b))),
        Law("restrict preserves and", 3, lambda t, a, b: m(t, m(a, b)) == m(m(t, a), m(t, b))),
        Law("restrict maps one to T", 1, lambda t: m(t, one(t)) == t),
        Law("restrict kernel is ideal of complement", 2,
            lambda t, a: (not m(t, a)) == geq(x(one(t), t), a)),
        Law("order reflexive", 1, lambda a: geq(a, a)),
        Law("order antisymmetric", 2, lambda a, b: (geq(a, b) and geq(b, a)) == (a == b)),
        Law("order transitive", 3, lambda a, b, c: geq(a, m(m(a, b), c))),
        Law("A >= 0 and 1 >= A", 1, lambda a: geq(a, zero(a)) and geq(one(a), a)),
        Law("A >= A and C", 2, lambda a, c: geq(a, m(a, c))),
        Law("order compatible with and", 3, lambda a, b, c: geq(m(c, a), m(c, m(a, b)))),
    ]


_K = 3  # module laws use 3x3 matrices


def _matrix(args: Sequence[Pext]) -> BrMatrix:
    return BrMatrix(tuple(tuple(args[i * _K:(i + 1) * _K]) for i in range(_K)))


def _slice_consistent(*args: Pext) -> bool:
    mat, w = _matrix(args[:9]), Modus(args[9:12])
    v = matvec(mat, w)
    return all(v.slice(p) == gf2.matvec(mat.slice(p), w.slice(p)) for p in range(1, w.width + 1))


def _kernel_closed(*args: Pext) -> bool:
    mat = _matrix(args[:-1])
    gens = kernel_basis(mat).generators
    if not gens:
        return True
    rng = random.Random(args[-1].bits)
    coeffs = [Pext(rng.getrandbits(mat.width), mat.width) for _ in gens]
    return in_kernel(mat, linear_combination(coeffs, gens))


def _module_laws() -> List[Law]:
    nm = _K * _K
    return [
        Law("matvec linear in ring scalar", nm + _K + 1,
            lambda *a: matvec(_matrix(a), Modus(a[nm:nm + _K]).scale(a[-1]))
            == matvec(_matrix(a), Modus(a[nm:nm + _K])).scale(a[-1])),
        Law("matvec matches per-digit GF(2) product", nm + _K, _slice_consistent),
        Law("random kernel element lies in kernel", nm + 1,
            lambda *a: in_kernel(_matrix(a), random_kernel_element(_matrix(a), a[-1].bits))),
        Law("split kernel element lies in kernel", 2 * nm + 1,
            lambda *a: in_kernel(_matrix(a[:nm]) ^ _matrix(a[nm:2 * nm]),
                                 split_kernel_element(_matrix(a[:nm]), _matrix(a[nm:2 * nm]), a[-1].bits))),
        Law("ring combination of kernel generators lies in kernel", nm + 1, _kernel_closed),
    ]


def _shrink(law: Law, args: List[Pext]) -> List[Pext]:
    """Greedily clear bits while the law keeps failing."""
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(args):
            for bit in range(a.width):
                if a.bits >> bit & 1:
                    trial = list(args)
                    trial[i] = Pext(a.bits & ~(1 << bit), a.width)
                    if not _holds(law, trial):
                        args, changed = trial, True
                        a = trial[i]
    return args


def _holds(law: Law, args: Sequence[Pext]) -> bool:
    try:
        return bool(law.check(*args))
    except Exception:
        return False


DEFAULT_MODULE_TRIALS = 1000


def run_laws(trials: int, width: int, seed: int, ops: Optional[Ops] = None,
             module_trials: Optional[int] = DEFAULT_MODULE_TRIALS) -> List[LawResult]:
    """Check every law on seeded random pexts of the given width.

    Module laws build 3x3 matrices and run ``min(trials, module_trials)``
    times; pass ``module_trials=None`` to run them ``trials`` times as well.
    """
    if trials < 1 or width < 1:
        raise ValueError("trials and width must be >= 1")
    ops = OPS if ops is None else ops
    rng = random.Random(seed)
    results = []
    suites = [(law, trials) for law in _ring_laws(ops)]
    mt = trials if module_trials is None else min(trials, module_trials)
    suites += [(law, mt) for law in _module_laws()]
    for law, n in suites:
        result = LawResult(law.name, 0)
        for _ in range(n):
            args = [Pext(rng.getrandbits(width), width) for _ in range(law.arity)]
            result.trials += 1
            if not _holds(law, args):
                result.counterexample = [str(a) for a in _shrink(law, args)]
                break
        results.append(result)
    return results
