"""Simple complex root systems from Cartan data.

Node numbering follows Bourbaki throughout.  Arrow orientation is fixed by
C[i][j] = 2<a_i, a_j>/<a_j, a_j>, and the Gram form is normalized so long
roots have squared length 2; every downstream quantity is a scale-invariant
ratio, so the normalization only makes stored values canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Sequence

from .errors import InvalidType, NonIntegralWeights, RankTooSmall, TypeMismatch, ZeroVector
from .ratmat import RatMatrix, as_vector, intify

RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class SimpleType:
    """Isomorphism class of a simple complex Lie algebra: letter + rank."""

    letter: str
    rank: int

    def __post_init__(self):
        bounds = RANK_BOUNDS.get(self.letter)
        if bounds is None:
            raise InvalidType(f"unknown letter {self.letter!r}")
        lo, hi = bounds
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidType(f"rank {self.rank} out of range for type {self.letter}")

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"


def _edges(t: SimpleType) -> list[tuple[int, int]]:
    n = t.rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if t.letter in ("A", "B", "C", "F", "G"):
        return chain
    if t.letter == "D":
        return chain[:-1] + [(n - 3, n - 1)]
    # E: chain a1-a3-a4-...-an with a2 hanging off a4
    chain = [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)]
    return chain + [(1, 3)]


def simple_root_length_halves(t: SimpleType) -> tuple[Fraction, ...]:
    """d_i = <a_i, a_i>/2 per node, long roots normalized to d = 1."""
    n = t.rank
    one = Fraction(1)
    half = Fraction(1, 2)
    if t.letter == "B":
        return (one,) * (n - 1) + (half,)
    if t.letter == "C":
        return (half,) * (n - 1) + (one,)
    if t.letter == "F":
        return (one, one, half, half)
    if t.letter == "G":
        # a1 short: the highest root is 3a1 + 2a2
        return (Fraction(1, 3), one)
    return (one,) * n


def cartan_matrix(t: SimpleType) -> RatMatrix:
    """Integer Cartan matrix C[i][j] = 2<a_i,a_j>/<a_j,a_j>."""
    n = t.rank
    d = simple_root_length_halves(t)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = Fraction(2)
    for i, j in _edges(t):
        # <a_i, a_j> = -max(d_i, d_j) for adjacent nodes in every simple type
        prod = -max(d[i], d[j])
        entries[i][j] = prod / d[j]
        entries[j][i] = prod / d[i]
    return RatMatrix.from_rows(entries)


def gram_matrix(t: SimpleType) -> RatMatrix:
    """Gram form <a_i, a_j> with long roots of squared length 2."""
    c = cartan_matrix(t)
    d = simple_root_length_halves(t)
    return RatMatrix.build(t.rank, t.rank, lambda i, j: c[i, j] * d[j])


ROOT_COUNT_FORMULAS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@dataclass(frozen=True)
class RootSystem:
    """A simple complex root system in simple-root coordinates."""

    simple_type: SimpleType
    cartan: RatMatrix
    gram: RatMatrix
    roots: tuple[tuple[int, ...], ...]
    highest: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @cached_property
    def root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.roots)

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r for r in self.roots if sum(r) > 0)

    @cached_property
    def _gram_scaled(self) -> tuple[list[list[int]], int]:
        # integer multiple of the Gram matrix, for fast exact inner products
        den = 1
        for e in self.gram.entries:
            den = lcm(den, e.denominator)
        rows = [[int(self.gram[i, j] * den) for j in range(self.rank)] for i in range(self.rank)]
        return rows, den

    def inner(self, v: Sequence, w: Sequence) -> Fraction:
        rows, den = self._gram_scaled
        iv, dv = intify(v)
        iw, dw = intify(w)
        total = 0
        for i, a in enumerate(iv):
            if a:
                row = rows[i]
                total += a * sum(row[j] * b for j, b in enumerate(iw) if b)
        return Fraction(total, den * dv * dw)


def _simple_coord(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i) for k in range(n))


@lru_cache(maxsize=None)
def _build_cached(letter: str, rank: int) -> RootSystem:
    t = SimpleType(letter, rank)
    n = t.rank
    cartan = cartan_matrix(t)
    # pairing of a coordinate vector against the coroot of a_i
    pair_rows = [[int(cartan[j, i]) for j in range(n)] for i in range(n)]

    def coroot_pairing(v: tuple[int, ...], i: int) -> int:
        return sum(c * p for c, p in zip(v, pair_rows[i]))

    positives: set[tuple[int, ...]] = {_simple_coord(n, i) for i in range(n)}
    layer = sorted(positives)
    while layer:
        nxt: set[tuple[int, ...]] = set()
        for gamma in layer:
            for i in range(n):
                alpha = _simple_coord(n, i)
                # length p of the descending a_i-string through gamma
                p = 0
                probe = tuple(a - b for a, b in zip(gamma, alpha))
                while probe in positives:
                    p += 1
                    probe = tuple(a - b for a, b in zip(probe, alpha))
                if p - coroot_pairing(gamma, i) > 0:
                    up = tuple(a + b for a, b in zip(gamma, alpha))
                    if up not in positives:
                        nxt.add(up)
        positives |= nxt
        layer = sorted(nxt)

    count = ROOT_COUNT_FORMULAS[letter](rank)
    if 2 * len(positives) != count:
        raise InvalidType(f"closure produced {2 * len(positives)} roots for {t.name}, expected {count}")

    tops = [g for g in positives if all(tuple(a + b for a, b in zip(g, _simple_coord(n, i))) not in positives for i in range(n))]
    if len(tops) != 1:
        raise InvalidType(f"{t.name} has {len(tops)} maximal roots; system is not irreducible")
    roots = sorted(positives, key=lambda v: (sum(v), v))
    all_roots = tuple(roots) + tuple(tuple(-x for x in v) for v in roots)
    return RootSystem(t, cartan, gram_matrix(t), all_roots, tops[0])


def build_root_system(t: SimpleType) -> RootSystem:
    """Full root system of type t via breadth-first closure over root strings."""
    return _build_cached(t.letter, t.rank)


def pairing(rs: RootSystem, v: Sequence, w: Sequence) -> Fraction:
    """2<v,w>/<w,w>: the value of v on the coroot of w."""
    v = as_vector(v)
    w = as_vector(w)
    ww = rs.inner(w, w)
    if ww == 0:
        raise ZeroVector("pairing against the zero vector")
    return 2 * rs.inner(v, w) / ww


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Weights a_i(H) attached to the nodes of the simple system."""

    simple_type: SimpleType
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.simple_type.rank:
            raise ValueError("one weight per node required")

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise NonIntegralWeights(f"weights {self.weights} are not integers")
        return tuple(int(w) for w in self.weights)


def min_orbit_wdd(rs: RootSystem) -> WeightedDynkinDiagram:
    """Weighted diagram of the minimal nonzero nilpotent orbit: a -> 2<a,phi>/<phi,phi>."""
    phi = rs.highest
    n = rs.rank
    weights = tuple(pairing(rs, _simple_coord(n, i), phi) for i in range(n))
    return WeightedDynkinDiagram(rs.simple_type, weights)


def extended_neighbors(rs: RootSystem) -> frozenset[int]:
    """Nodes adjacent to the added lowest-root node of the extended diagram.

    Computed as {i : <phi, a_i> != 0}; 0-based node indices.
    """
    if rs.rank < 2:
        raise RankTooSmall("the extended A1 diagram is a double edge; use min_orbit_wdd")
    n = rs.rank
    return frozenset(i for i in range(n) if rs.inner(rs.highest, _simple_coord(n, i)) != 0)


def orbit_dim_from_wdd(rs: RootSystem, w: WeightedDynkinDiagram) -> int:
    """Orbit dimension from the grading a weighted diagram induces on the roots."""
    if w.simple_type != rs.simple_type:
        raise TypeMismatch(f"diagram of type {w.simple_type.name} against system {rs.simple_type.name}")
    if not w.is_integral():
        raise NonIntegralWeights(f"weights {w.weights} are not integers")
    zero = ones = 0
    for root in rs.roots:
        value = sum(c * wt for c, wt in zip(root, w.weights))
        if value == 0:
            zero += 1
        elif value == 1:
            ones += 1
    return len(rs.roots) - zero - ones


def find_cartan_isomorphism(source: RatMatrix, target: RatMatrix) -> tuple[int, ...] | None:
    """A node bijection sigma with target[sigma i][sigma j] == source[i][j], or None.

    Backtracking over node assignments; ranks here never exceed ~11 and the
    row multiset signature prunes almost everything.
    """
    n = source.rows
    if target.rows != n:
        return None

    def signature(mat: RatMatrix, i: int) -> tuple:
        return (mat[i, i], tuple(sorted(mat[i, j] for j in range(n) if j != i)))

    src_sig = [signature(source, i) for i in range(n)]
    tgt_sig = [signature(target, i) for i in range(n)]
    assigned: list[int | None] = [None] * n
    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        for cand in range(n):
            if used[cand] or tgt_sig[cand] != src_sig[i]:
                continue
            ok = True
            for j in range(i):
                sj = assigned[j]
                if source[i, j] != target[cand, sj] or source[j, i] != target[sj, cand]:
                    ok = False
                    break
            if ok:
                assigned[i] = cand
                used[cand] = True
                if backtrack(i + 1):
                    return True
                assigned[i] = None
                used[cand] = False
        return False

    if backtrack(0):
        return tuple(assigned)  # type: ignore[arg-type]
    return None


def candidate_types(rank: int) -> list[SimpleType]:
    """All classified simple types of the given rank."""
    out = [SimpleType("A", rank)]
    for letter in ("B", "C", "D", "F", "G"):
        lo, hi = RANK_BOUNDS[letter]
        if rank >= lo and (hi is None or rank <= hi):
            out.append(SimpleType(letter, rank))
    if 6 <= rank <= 8:
        out.append(SimpleType("E", rank))
    return out


def duality_permutation(t: SimpleType) -> tuple[int, ...]:
    """The involution -w0 induces on the simple roots, in Bourbaki order."""
    n = t.rank
    ident = tuple(range(n))
    if t.letter == "A":
        return tuple(range(n - 1, -1, -1))
    if t.letter == "D" and n % 2 == 1:
        return ident[:-2] + (n - 1, n - 2)
    if t.letter == "E" and n == 6:
        return (5, 1, 4, 3, 2, 0)
    return ident
