"""Smallest complex nilpotent orbits meeting a real form.

Two independent routes produce the weighted diagram of the smallest orbit
meeting the real form: coroot pairings against the highest restricted root,
and a square rational system in the matching-diagram unknowns plus the
black/arrow coroot basis coefficients.  The verification sweep insists they
agree on every catalog entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentDiagram, TypeMismatch
from .ratmat import RatMatrix, as_vector, rat_solve
from .restricted import is_hermitian, parity_criterion, restricted_root_system
from .rootsys import (
    WeightedDynkinDiagram,
    extended_neighbors,
    min_orbit_wdd,
    orbit_dim_from_wdd,
    pairing,
)
from .satake import RealFormDescriptor, SatakeDiagram, build_satake, parse_form_name, satake_involution

CONDITION_FIELDS = ("c_i", "c_ii", "c_iv", "c_v", "c_vi", "c_vii", "c_xii")


@dataclass(frozen=True)
class EquivalenceConditions:
    """Seven equivalent tests for "the minimal complex orbit misses the real form".

    Each boolean is computed by its own route; they must all agree.
    """

    c_i: bool
    c_ii: bool
    c_iv: bool
    c_v: bool
    c_vi: bool
    c_vii: bool
    c_xii: bool

    def values(self) -> tuple[bool, ...]:
        return tuple(getattr(self, f) for f in CONDITION_FIELDS)

    @property
    def all_agree(self) -> bool:
        return len(set(self.values())) == 1


@dataclass(frozen=True)
class OrbitReport:
    """Everything this package computes about one real form."""

    descriptor: RealFormDescriptor
    min_wdd: WeightedDynkinDiagram
    min_meets: bool
    min_g_wdd: WeightedDynkinDiagram
    min_g_dim: int
    g_lambda_dim: int
    minimal_real_orbit_count: int
    hermitian: bool
    conditions: EquivalenceConditions


def wdd_matches_satake(w: WeightedDynkinDiagram, sd: SatakeDiagram) -> bool:
    """Black nodes carry weight zero and arrow-paired nodes carry equal weights."""
    if w.simple_type != sd.rs.simple_type:
        raise TypeMismatch(f"diagram of type {w.simple_type.name} against Satake diagram of {sd.rs.simple_type.name}")
    if any(w.weights[b] != 0 for b in sd.black):
        return False
    return all(w.weights[i] == w.weights[j] for i, j in sd.arrows)


def min_meets_real_form(sd: SatakeDiagram) -> bool:
    """Whether the minimal complex nilpotent orbit meets the real form."""
    return wdd_matches_satake(min_orbit_wdd(sd.rs), sd)


def black_extended_criterion(sd: SatakeDiagram) -> bool:
    """Some black node is adjacent to the added node of the extended diagram."""
    if sd.rs.rank < 2:
        return False
    return bool(sd.black & extended_neighbors(sd.rs))


def min_g_wdd_direct(sd: SatakeDiagram) -> WeightedDynkinDiagram:
    """Weighted diagram of the smallest orbit meeting the real form.

    weight_i = 2<a_i, lambda>/<lambda,lambda> for the highest restricted root
    lambda = (phi + tau* phi)/2.
    """
    rs = sd.rs
    lam = restricted_root_system(sd).highest
    n = rs.rank
    weights = tuple(pairing(rs, tuple(int(k == i) for k in range(n)), lam) for i in range(n))
    wdd = WeightedDynkinDiagram(rs.simple_type, weights)
    if not wdd.is_integral() or any(x not in (0, 1, 2) for x in wdd.as_ints()):
        raise InconsistentDiagram(f"{sd.name}: weights {weights} outside {{0,1,2}}")
    return wdd


@dataclass(frozen=True)
class CorootSystemSolution:
    """Solution of the square system splitting twice the minimal-orbit coroot
    into a split-part diagram (match unknowns, one per white arrow class) and
    coefficients over the black/arrow coroot basis."""

    wdd: WeightedDynkinDiagram
    white_values: dict[int, Fraction]
    basis_coeffs: dict[tuple, Fraction]


def solve_coroot_system(sd: SatakeDiagram) -> CorootSystemSolution:
    """Set up and solve the linear system; one equation per node."""
    rs = sd.rs
    n = rs.rank
    cartan = rs.cartan
    satake_involution(sd)  # validates the entry before we trust its data

    class_rep: dict[int, int] = {}
    for w in sd.white:
        class_rep[w] = w
    for i, j in sd.arrows:
        rep = min(i, j)
        class_rep[i] = rep
        class_rep[j] = rep
    reps = sorted(set(class_rep.values()))
    blacks = sorted(sd.black)
    columns: list[tuple] = [("class", r) for r in reps]
    columns += [("black", b) for b in blacks]
    columns += [("arrow", i, j) for i, j in sd.arrows]
    if len(columns) != n:
        raise InconsistentDiagram(f"{sd.name}: coroot system is {n}x{len(columns)}, not square")

    def entry(i: int, col: tuple) -> Fraction:
        if col[0] == "class":
            return Fraction(int(i in class_rep and class_rep[i] == col[1]))
        if col[0] == "black":
            return cartan[i, col[1]]
        _, a, b = col
        return cartan[i, a] - cartan[i, b]

    matrix = RatMatrix.build(n, n, lambda i, j: entry(i, columns[j]))
    target = min_orbit_wdd(rs).weights
    solution = rat_solve(matrix, as_vector(tuple(2 * t for t in target)))

    white_values = {columns[k][1]: solution[k] for k in range(len(reps))}
    basis_coeffs = {columns[k]: solution[k] for k in range(len(reps), n)}
    halve = restricted_root_system(sd).highest_mult == 1
    weights = []
    for i in range(n):
        if i in sd.black:
            weights.append(Fraction(0))
        else:
            value = white_values[class_rep[i]]
            weights.append(value / 2 if halve else value)
    return CorootSystemSolution(
        WeightedDynkinDiagram(rs.simple_type, tuple(weights)), white_values, basis_coeffs
    )


def min_g_wdd_linear_system(sd: SatakeDiagram) -> WeightedDynkinDiagram:
    """Same diagram as min_g_wdd_direct, through the linear-system route."""
    return solve_coroot_system(sd).wdd


def min_g_dimension(sd: SatakeDiagram) -> int:
    """Complex dimension of the smallest orbit meeting the real form."""
    return orbit_dim_from_wdd(sd.rs, min_g_wdd_direct(sd))


def count_minimal_real_orbits(sd: SatakeDiagram) -> int:
    """Number of minimal real nilpotent orbits (equivalently, minimal
    nilpotent K_C-orbits in p_C): one when dim g_lambda >= 2 or some
    restricted root pairs oddly against lambda, two otherwise."""
    rrs = restricted_root_system(sd)
    if rrs.highest_mult >= 2:
        return 1
    return 1 if parity_criterion(rrs) else 2


FIVE_FAMILIES = ("su_star", "sp_pq", "f4_m20", "e6_m26")


def in_five_families(descriptor: RealFormDescriptor) -> bool:
    """Membership in the classified list: su*(2k), so(n,1), sp(p,q), e6(-26), f4(-20)."""
    if descriptor.family in FIVE_FAMILIES:
        return True
    return descriptor.family == "so_pq" and descriptor.params[0] == 1


def equivalence_conditions(sd: SatakeDiagram) -> EquivalenceConditions:
    """The seven booleans, each computed by its own route."""
    rs = sd.rs
    rrs = restricted_root_system(sd)
    inv = satake_involution(sd)
    phi = as_vector(rs.highest)
    return EquivalenceConditions(
        c_i=min_g_wdd_direct(sd) != min_orbit_wdd(rs),
        c_ii=not min_meets_real_form(sd),
        c_iv=rrs.highest_mult >= 2,
        c_v=inv.tau_star.mat_vec(phi) != phi,
        c_vi=not wdd_matches_satake(min_orbit_wdd(rs), sd),
        c_vii=black_extended_criterion(sd),
        c_xii=in_five_families(sd.descriptor),
    )


def orbit_report(sd: SatakeDiagram) -> OrbitReport:
    """Aggregate every computed quantity for one diagram."""
    rrs = restricted_root_system(sd)
    report = OrbitReport(
        descriptor=sd.descriptor,
        min_wdd=min_orbit_wdd(sd.rs),
        min_meets=min_meets_real_form(sd),
        min_g_wdd=min_g_wdd_direct(sd),
        min_g_dim=min_g_dimension(sd),
        g_lambda_dim=rrs.highest_mult,
        minimal_real_orbit_count=count_minimal_real_orbits(sd),
        hermitian=is_hermitian(sd),
        conditions=equivalence_conditions(sd),
    )
    if report.min_meets and report.min_g_wdd != report.min_wdd:
        raise InconsistentDiagram(f"{sd.name}: orbit meets the real form but diagrams differ")
    if (report.minimal_real_orbit_count == 2) != report.hermitian:
        raise InconsistentDiagram(f"{sd.name}: orbit count {report.minimal_real_orbit_count} vs hermitian {report.hermitian}")
    return report


# ---------------------------------------------------------------------------
# serialization (consumed by the CLI; field names match OrbitReport verbatim)

# the commonly drawn E6 labeling runs along the chain and puts the branch
# node last; drawn_order[k] = Bourbaki index of drawn node alpha_{k+1}
DRAWN_NODE_ORDERS = {
    "E6": (0, 2, 3, 4, 5, 1),
    "F4": (0, 1, 2, 3),
}


def _drawn_labels(wdd: WeightedDynkinDiagram) -> dict[str, int] | None:
    order = DRAWN_NODE_ORDERS.get(wdd.simple_type.name)
    if order is None:
        return None
    ints = wdd.as_ints()
    return {f"alpha{k + 1}": ints[idx] for k, idx in enumerate(order)}


def report_to_dict(report: OrbitReport) -> dict:
    data = {
        "descriptor": report.descriptor.canonical_name,
        "min_wdd": list(report.min_wdd.as_ints()),
        "min_meets": report.min_meets,
        "min_g_wdd": list(report.min_g_wdd.as_ints()),
        "min_g_dim": report.min_g_dim,
        "g_lambda_dim": report.g_lambda_dim,
        "minimal_real_orbit_count": report.minimal_real_orbit_count,
        "hermitian": report.hermitian,
        "conditions": {f: getattr(report.conditions, f) for f in CONDITION_FIELDS},
    }
    labels = _drawn_labels(report.min_g_wdd)
    if labels is not None:
        data["paper_labels"] = {
            "min_wdd": _drawn_labels(report.min_wdd),
            "min_g_wdd": labels,
        }
    return data


def report_from_dict(data: dict) -> OrbitReport:
    descriptor = parse_form_name(data["descriptor"])
    simple_type = build_satake(descriptor).rs.simple_type
    return OrbitReport(
        descriptor=descriptor,
        min_wdd=WeightedDynkinDiagram(simple_type, as_vector(data["min_wdd"])),
        min_meets=bool(data["min_meets"]),
        min_g_wdd=WeightedDynkinDiagram(simple_type, as_vector(data["min_g_wdd"])),
        min_g_dim=int(data["min_g_dim"]),
        g_lambda_dim=int(data["g_lambda_dim"]),
        minimal_real_orbit_count=int(data["minimal_real_orbit_count"]),
        hermitian=bool(data["hermitian"]),
        conditions=EquivalenceConditions(**{f: bool(data["conditions"][f]) for f in CONDITION_FIELDS}),
    )
