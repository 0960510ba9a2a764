"""Reasonable two-clusterings of coded texts.

A clustering LEFT / RIGHT is *reasonable* when there are nonzero ``l``, ``r``
with ``l r = 0`` such that every LEFT text contains ``l`` and misses ``r`` and
every RIGHT text contains ``r`` and misses ``l``. Three searches are offered:

* :func:`cluster_atoms` reads the answer off per-digit signatures and is exact;
* :func:`cluster_via_m` looks for two-valued modi in the kernel of the
  product matrix ``M_ij = X_i X_j``;
* :func:`cluster_via_gram` looks for feasible sparsity patterns in the kernel
  of the pair Gramian.

Text indices are 0-based throughout. Every witness is returned in canonical
form: text 0 is on the LEFT and ``(l, r)`` are the largest elements that
witness the partition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    DisconnectedPairGraph,
    EmptyInput,
    EmptyLeft,
    EmptySide,
    InfeasibleText,
    NotAZeroDivisorPair,
    ShapeMismatch,
)
from .module import (
    Modus,
    Pair,
    check_pairs,
    gramian,
    kernel_basis,
    project_to_kernel,
    random_kernel_element,
    similarity_matrix,
)
from .pext import Pext, and_, common_width, complement, is_zero_divisor_pair

DEFAULT_M_TRIES = 64
DEFAULT_GRAM_DEPTH = 2


@dataclass(frozen=True)
class ClusterWitness:
    l: Pext
    r: Pext
    left: FrozenSet[int]
    right: FrozenSet[int]
    method: str = ""

    @property
    def partition(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(sorted(self.left)), tuple(sorted(self.right))

    def to_json(self, ids: Optional[Sequence[str]] = None) -> dict:
        name = (lambda i: ids[i]) if ids is not None else (lambda i: i)
        return {
            "l": str(self.l),
            "r": str(self.r),
            "left": [name(i) for i in sorted(self.left)],
            "right": [name(i) for i in sorted(self.right)],
            "method": self.method,
        }


def check_witness(xs: Sequence[Pext], w: ClusterWitness) -> None:
    """Raise ``AssertionError`` unless ``w`` satisfies every witness invariant for ``xs``."""
    assert is_zero_divisor_pair(w.l, w.r), "l, r must be nonzero with l r = 0"
    assert w.left and w.right, "both sides must be nonempty"
    assert not (w.left & w.right), "sides overlap"
    assert w.left | w.right == frozenset(range(len(xs))), "sides do not cover all texts"
    for i in w.left:
        assert and_(xs[i], w.l) == w.l and not and_(xs[i], w.r), f"text {i} is not a LEFT text"
    for i in w.right:
        assert and_(xs[i], w.r) == w.r and not and_(xs[i], w.l), f"text {i} is not a RIGHT text"


def stack_characteristics(left: Sequence[Pext], right: Sequence[Pext]) -> Pext:
    """``L R`` with ``L`` the product of ``left`` and ``R`` the product of complements of ``right``."""
    if not left:
        raise EmptyLeft("the left stack is empty")
    width = common_width(list(left) + list(right))
    lhs = reduce(and_, left)
    rhs = reduce(and_, (complement(x) for x in right), Pext.one(width))
    return and_(lhs, rhs)


def witness_partition(xs: Sequence[Pext], l: Pext, r: Pext) -> ClusterWitness:
    if not is_zero_divisor_pair(l, r):
        raise NotAZeroDivisorPair(f"({l}, {r}) is not a pair of nonzero zero-divisors")
    common_width(list(xs) + [l])
    left, right = set(), set()
    for i, x in enumerate(xs):
        has_l, has_r = and_(x, l), and_(x, r)
        if has_l == l and not has_r:
            left.add(i)
        elif has_r == r and not has_l:
            right.add(i)
        else:
            raise InfeasibleText(i)
    if not left or not right:
        raise EmptySide("witness leaves one side empty")
    return ClusterWitness(l, r, frozenset(left), frozenset(right))


def _signatures(xs: Sequence[Pext]) -> Dict[int, Pext]:
    """Map each per-digit signature (text ``i`` at bit ``i``) to the union of its digits."""
    width = common_width(xs)
    sig_atoms: Dict[int, int] = {}
    for p in range(1, width + 1):
        sig = 0
        for i, x in enumerate(xs):
            if x[p]:
                sig |= 1 << i
        sig_atoms[sig] = sig_atoms.get(sig, 0) | 1 << (width - p)
    return {s: Pext(bits, width) for s, bits in sig_atoms.items()}


def maximal_witness(xs: Sequence[Pext], left: Iterable[int], method: str = "") -> Optional[ClusterWitness]:
    """Canonical witness for the partition with the given LEFT side, or ``None`` if unreasonable."""
    k = len(xs)
    left_mask = reduce(lambda acc, i: acc | 1 << i, left, 0)
    full = (1 << k) - 1
    if left_mask in (0, full):
        return None
    if not left_mask & 1:
        left_mask ^= full
    sigs = _signatures(xs)
    l, r = sigs.get(left_mask), sigs.get(left_mask ^ full)
    if l is None or r is None:
        return None
    side = frozenset(i for i in range(k) if left_mask >> i & 1)
    return ClusterWitness(l, r, side, frozenset(range(k)) - side, method)


def _canonical(xs: Sequence[Pext], w: ClusterWitness, method: str) -> ClusterWitness:
    best = maximal_witness(xs, w.left, method)
    assert best is not None, "a validated witness must have a maximal form"
    return best


def _sorted(ws: Iterable[ClusterWitness]) -> List[ClusterWitness]:
    unique = {w.partition: w for w in ws}
    return [unique[p] for p in sorted(unique)]


def cluster_atoms(xs: Sequence[Pext]) -> List[ClusterWitness]:
    """All reasonable 2-clusterings, read from complementary digit signatures."""
    if len(xs) < 2:
        raise EmptyInput("clustering needs at least two texts")
    k = len(xs)
    full = (1 << k) - 1
    sigs = _signatures(xs)
    found = []
    for sig in sigs:
        if sig & 1 and sig != full and (sig ^ full) in sigs:
            found.append(maximal_witness(xs, (i for i in range(k) if sig >> i & 1), "atoms"))
    return _sorted(found)


def _entry_atoms(v: Modus) -> Dict[int, Pext]:
    """Atoms of the subalgebra generated by the entries of ``v``, keyed by their entry pattern."""
    width = v.width
    groups: Dict[int, int] = {}
    for p in range(1, width + 1):
        pattern = v.slice(p)
        groups[pattern] = groups.get(pattern, 0) | 1 << (width - p)
    return {pat: Pext(bits, width) for pat, bits in groups.items() if pat}


def _two_valued_multipliers(v: Modus) -> Iterable[Tuple[Pext, Pext]]:
    """Pairs of entry-algebra atoms ``(a, b)`` whose patterns are complementary.

    ``(a + b) v`` then carries ``a`` on one group of texts and ``b`` on the rest.
    """
    full = (1 << len(v)) - 1
    atoms = _entry_atoms(v)
    for pat, a in sorted(atoms.items()):
        other = atoms.get(pat ^ full)
        if other is not None and pat & 1:
            yield a, other


def cluster_via_m(xs: Sequence[Pext], seed: int = 0, tries: int = DEFAULT_M_TRIES) -> List[ClusterWitness]:
    """Clusterings revealed by two-valued kernel modi of ``M_ij = X_i X_j``.

    Candidate kernel modi are projections onto ``ker(M)`` of the complement
    modus ``(1 + X_1, ..., 1 + X_k)`` and of ``(X_1, ..., X_k)``, the sum of
    the exact kernel generators, and ``tries`` randomized kernel elements. Each candidate is multiplied by
    unions of two atoms of the algebra generated by its entries (products of
    entry values and their complements); when the result is two-valued its
    values are tried as ``(r, l)``.
    """
    if len(xs) < 2:
        raise EmptyInput("clustering needs at least two texts")
    m = similarity_matrix(xs, "product")
    basis = kernel_basis(m)
    candidates = [
        project_to_kernel(m, Modus(tuple(complement(x) for x in xs))),
        project_to_kernel(m, Modus(tuple(xs))),
    ]
    if basis.generators:
        candidates.append(reduce(Modus.__xor__, basis.generators))
    candidates.extend(random_kernel_element(m, seed + t) for t in range(tries))
    found = []
    for v in candidates:
        for a, b in _two_valued_multipliers(v):
            # texts carrying ``a`` are annihilated by it, so ``a`` witnesses the other side
            for l, r in ((b, a), (a, b)):
                try:
                    w = witness_partition(xs, l, r)
                except (InfeasibleText, EmptySide, NotAZeroDivisorPair):
                    continue
                found.append(_canonical(xs, w, "m"))
    return _sorted(found)


class _ParityUnionFind:
    """Union-find tracking whether each node is on the same side as its root."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.parity = [0] * n

    def find(self, x: int) -> Tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parent[node], self.parity[node] = root, acc
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, differ: int) -> bool:
        """Record ``side(a) xor side(b) == differ``; return False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == differ
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ differ
        return True


def _pattern_sides(pairs: Sequence[Pair], v: Modus) -> Optional[Tuple[Dict[int, int], Pext, Pext]]:
    """Shared core of :func:`pattern_feasible`.

    Returns ``(side, l, r)`` where ``side`` maps every text touched by a pair to
    0 (LEFT) or 1 (RIGHT), ``l`` is the value on RIGHT-RIGHT pairs and ``r`` the
    value on LEFT-LEFT pairs; ``None`` when the pattern is infeasible.
    """
    if len(v) != len(pairs):
        raise ShapeMismatch(f"modus has {len(v)} entries for {len(pairs)} pairs")
    values = sorted({a for a in v if a}, key=lambda a: a.bits)
    if len(values) != 2 or not is_zero_divisor_pair(*values):
        return None
    nodes = sorted({i for pair in pairs for i in pair})
    index = {node: n for n, node in enumerate(nodes)}
    uf = _ParityUnionFind(len(nodes))
    for (i, j), a in zip(pairs, v):
        if not uf.union(index[i], index[j], 0 if a else 1):
            return None
    # each connected component fixes its own orientation from the value on its same-side pairs
    orient: Dict[int, int] = {}
    value_side: Dict[Pext, Dict[int, int]] = {values[0]: {}, values[1]: {}}
    for (i, j), a in zip(pairs, v):
        if not a:
            continue
        root, par = uf.find(index[i])
        seen = value_side[a].setdefault(root, par)
        if seen != par:
            return None
        other = value_side[values[1] if a == values[0] else values[0]].get(root)
        if other is not None and other == par:
            return None
    l, r = values
    for root in {uf.find(n)[0] for n in range(len(nodes))}:
        if root in value_side[l]:
            orient[root] = value_side[l][root] ^ 1
        elif root in value_side[r]:
            orient[root] = value_side[r][root]
        else:
            orient[root] = 0
    side = {}
    for node, n in index.items():
        root, par = uf.find(n)
        side[node] = par ^ orient[root]
    return side, l, r


def pattern_feasible(pairs: Sequence[Pair], v: Modus) -> bool:
    """Whether ``v`` encodes a consistent LEFT/RIGHT split of the paired texts.

    Requires exactly two nonzero values forming a zero-divisor pair, a
    nonzero entry exactly on same-side pairs (checked with a parity
    union-find), and all pairs of one value lying on the same side.
    """
    return _pattern_sides(pairs, v) is not None


def all_pairs(k: int) -> List[Pair]:
    return list(itertools.combinations(range(k), 2))


def _check_connected(pairs: Sequence[Pair], k: int) -> None:
    uf = _ParityUnionFind(k)
    for i, j in pairs:
        if uf.find(i)[0] != uf.find(j)[0]:
            uf.union(i, j, 0)
    if len({uf.find(i)[0] for i in range(k)}) != 1:
        raise DisconnectedPairGraph("the pair graph does not connect every text")


def _gram_candidates(gens: Sequence[Modus], depth: int) -> Iterable[Modus]:
    for size in range(1, depth + 1):
        for combo in itertools.combinations(gens, size):
            v = reduce(Modus.__xor__, combo)
            if v.is_zero():
                continue
            yield v
            for a in sorted({a for a in v if a}, key=lambda a: a.bits):
                scaled = v.scale(complement(a))
                if not scaled.is_zero():
                    yield scaled


def cluster_via_gram(
    xs: Sequence[Pext], pairs: Optional[Sequence[Pair]] = None, depth: int = DEFAULT_GRAM_DEPTH
) -> List[ClusterWitness]:
    """Clusterings whose sparsity pattern appears among combinations of Gramian kernel generators.

    ``pairs`` defaults to all unordered pairs ``(i, j)``, ``i < j``. Up to
    ``depth`` generators are summed, and each sum is also tried after
    multiplication by the complement of each of its distinct entry values.
    """
    k = len(xs)
    if k < 2:
        raise EmptyInput("clustering needs at least two texts")
    pairs = all_pairs(k) if pairs is None else list(pairs)
    check_pairs(pairs, k)
    _check_connected(pairs, k)
    basis = kernel_basis(gramian(xs, pairs))
    found = []
    for v in _gram_candidates(basis.generators, depth):
        res = _pattern_sides(pairs, v)
        if res is None:
            continue
        side, l, r = res
        for ll, rr in ((l, r), (r, l)):
            try:
                w = witness_partition(xs, ll, rr)
            except (InfeasibleText, EmptySide):
                continue
            left = {i for i, s in side.items() if s == 0}
            if left in (w.left, w.right):
                found.append(_canonical(xs, w, "gram"))
    return _sorted(found)
