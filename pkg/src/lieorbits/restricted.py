"""Restricted root systems with multiplicities.

Restricted roots are kept in the ambient simple-root coordinates (inside the
tau*-fixed subspace) rather than in a separately chosen basis of the split
part, so the Gram form restricts and every equality or pairing test stays
exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import InconsistentDiagram, UnrecognizedSystem
from .ratmat import RatMatrix, Vector, as_vector, is_zero, vec_scale, vec_sub
from .rootsys import SimpleType, candidate_types, cartan_matrix, find_cartan_isomorphism
from .satake import SatakeDiagram, satake_involution


@dataclass(frozen=True)
class TypeLabel:
    """Classified type of a restricted root system."""

    letter: str
    rank: int
    reduced: bool

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"


def restrict(sd: SatakeDiagram, v) -> Vector:
    """Project onto the tau*-fixed subspace: r(v) = (v + tau* v)/2."""
    inv = satake_involution(sd)
    v = as_vector(v)
    image = inv.tau_star.mat_vec(v)
    return tuple((a + b) / 2 for a, b in zip(v, image))


@dataclass(frozen=True, eq=False)
class RestrictedRootSystem:
    """Image of the root system under restriction, with multiplicities."""

    source: SatakeDiagram
    elements: tuple[Vector, ...]
    multiplicities: tuple[tuple[Vector, int], ...]
    positives: tuple[Vector, ...]
    simple: tuple[Vector, ...]
    highest: Vector
    highest_mult: int
    type_label: TypeLabel

    @cached_property
    def mult(self) -> dict[Vector, int]:
        return dict(self.multiplicities)

    @cached_property
    def element_set(self) -> frozenset[Vector]:
        return frozenset(self.elements)

    def inner(self, v: Vector, w: Vector) -> Fraction:
        return self.source.rs.inner(v, w)

    def coroot_pairing(self, v: Vector, w: Vector) -> Fraction:
        return 2 * self.inner(v, w) / self.inner(w, w)


@lru_cache(maxsize=None)
def restricted_root_system(sd: SatakeDiagram) -> RestrictedRootSystem:
    """Restricted roots {r(alpha)} \\ {0} with mult(xi) = #{alpha : r(alpha) = xi}."""
    rs = sd.rs
    inv = satake_involution(sd)
    n = rs.rank
    # tau* is integral (it permutes the root lattice), so the counting loop
    # runs on doubled integer coordinates: 2 r(alpha) = alpha + tau*(alpha)
    tau_rows = inv.tau_star.int_rows()
    if tau_rows is None:
        raise InconsistentDiagram(f"{sd.name}: tau* does not preserve the root lattice")
    tau_cols = [list(col) for col in zip(*tau_rows)]

    def doubled(root: tuple[int, ...]) -> tuple[int, ...]:
        out = list(root)
        for j, c in enumerate(root):
            if c:
                col = tau_cols[j]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    def halved(vec: tuple[int, ...]) -> Vector:
        return tuple(Fraction(x, 2) for x in vec)

    doubled_counts: Counter[tuple[int, ...]] = Counter()
    for root in rs.roots:
        image = doubled(root)
        if any(image):
            doubled_counts[image] += 1
    if not doubled_counts:
        raise InconsistentDiagram(f"{sd.name}: every root restricts to zero (compact-form diagram)")
    counts = {halved(vec): m for vec, m in doubled_counts.items()}

    doubled_pos = {doubled(root) for root in rs.positive_roots}
    doubled_pos.discard((0,) * n)
    if any(tuple(-x for x in v) in doubled_pos for v in doubled_pos):
        raise InconsistentDiagram(f"{sd.name}: restriction of the positive system is not positive")
    positives = sorted(halved(v) for v in doubled_pos)

    simple_images: list[Vector] = []
    for i in sd.white:
        image = halved(doubled(tuple(int(k == i) for k in range(n))))
        if not is_zero(image) and image not in simple_images:
            simple_images.append(image)

    highest = halved(doubled(rs.highest))
    label = _classify(rs, frozenset(counts), positives, simple_images, sd.name)
    if highest not in counts:
        raise InconsistentDiagram(f"{sd.name}: r(phi) is not a restricted root")
    return RestrictedRootSystem(
        source=sd,
        elements=tuple(sorted(counts)),
        multiplicities=tuple(sorted(counts.items())),
        positives=tuple(positives),
        simple=tuple(simple_images),
        highest=highest,
        highest_mult=counts[highest],
        type_label=label,
    )


def _classify(rs, element_set, positives, simple_images, name: str) -> TypeLabel:
    non_reduced = any(vec_scale(Fraction(2), xi) in element_set for xi in element_set)
    reduced_pos = [xi for xi in positives if vec_scale(Fraction(2), xi) not in element_set]
    reduced_set = set(reduced_pos)
    indecomposable = [
        xi for xi in reduced_pos if not any(eta != xi and vec_sub(xi, eta) in reduced_set for eta in reduced_pos)
    ]

    def anchor(xi: Vector) -> int:
        for pos, image in enumerate(simple_images):
            if xi == image or xi == vec_scale(Fraction(2), image):
                return pos
        raise UnrecognizedSystem(f"{name}: reduced simple root {xi} has no simple-image anchor")

    simple_reduced = sorted(indecomposable, key=anchor)
    rank = len(simple_reduced)
    if rank != len(simple_images):
        raise UnrecognizedSystem(f"{name}: {rank} indecomposables vs {len(simple_images)} simple images")

    entries = [[None] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(rank):
            value = 2 * rs.inner(simple_reduced[i], simple_reduced[j]) / rs.inner(simple_reduced[j], simple_reduced[j])
            if value.denominator != 1 or (i != j and value > 0) or (i == j and value != 2):
                raise UnrecognizedSystem(f"{name}: restricted Cartan entry {value} at ({i},{j})")
            entries[i][j] = value
    cbar = RatMatrix.from_rows(entries)

    matches = [t for t in candidate_types(rank) if find_cartan_isomorphism(cbar, cartan_matrix(t)) is not None]
    if not matches:
        raise UnrecognizedSystem(f"{name}: restricted Cartan matrix matches no classified type")
    if len(matches) == 1:
        letter = matches[0].letter
    else:
        # rank-2 double edge: B2 and C2 are isomorphic; label by source order
        if set(m.letter for m in matches) != {"B", "C"}:
            raise UnrecognizedSystem(f"{name}: ambiguous restricted type {[m.name for m in matches]}")
        letter = "B" if cbar.entries == cartan_matrix(SimpleType("B", rank)).entries else "C"
    if non_reduced:
        return TypeLabel("BC", rank, False)
    return TypeLabel(letter, rank, True)


def classify_restricted_type(rrs: RestrictedRootSystem) -> TypeLabel:
    """Type label of a restricted system (computed during construction)."""
    return rrs.type_label


def is_C_or_BC(rrs: RestrictedRootSystem) -> bool:
    """True for C_r/BC_r, counting A1 as C1 and B2 as C2."""
    label = rrs.type_label
    if label.letter in ("C", "BC"):
        return True
    return (label.letter == "A" and label.rank == 1) or (label.letter == "B" and label.rank == 2)


def parity_criterion(rrs: RestrictedRootSystem) -> bool:
    """Whether some restricted root pairs oddly against the highest root."""
    lam = rrs.highest
    for xi in rrs.elements:
        value = rrs.coroot_pairing(lam, xi)
        if value.denominator != 1:
            raise UnrecognizedSystem(f"non-integral pairing {value} in {rrs.source.name}")
        if int(value) % 2 != 0:
            return True
    return False


def dominant_longest(rrs: RestrictedRootSystem) -> Vector:
    """The unique dominant restricted root of maximal squared length.

    Independent route to the highest root; construction uses r(phi).
    """
    max_len = max(rrs.inner(xi, xi) for xi in rrs.elements)
    longest = [xi for xi in rrs.elements if rrs.inner(xi, xi) == max_len]
    dominant = [xi for xi in longest if all(rrs.inner(xi, eta) >= 0 for eta in rrs.positives)]
    if len(dominant) != 1:
        raise InconsistentDiagram(f"{rrs.source.name}: {len(dominant)} dominant longest restricted roots")
    return dominant[0]


def is_hermitian(sd: SatakeDiagram) -> bool:
    """Hermitian symmetric real form: dim g_lambda = 1 and restricted type C/BC."""
    rrs = restricted_root_system(sd)
    return rrs.highest_mult == 1 and is_C_or_BC(rrs)
