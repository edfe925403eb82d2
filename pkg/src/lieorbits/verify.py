"""Catalog-wide verification sweep.

Every module-level invariant is run over every catalog entry, each failure
tagged with the entry name and a stable check name so a corrupted entry is
reported, not silently absorbed.  Cross-checks against family-derived
reference data (expected Hermitian flag, expected real rank, golden table
rows) catch corruptions that still yield a structurally valid diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LieOrbitsError
from .orbits import (
    equivalence_conditions,
    count_minimal_real_orbits,
    in_five_families,
    min_g_dimension,
    min_g_wdd_direct,
    min_meets_real_form,
    solve_coroot_system,
)
from .ratmat import as_vector, vec_add
from .restricted import dominant_longest, is_C_or_BC, is_hermitian, parity_criterion, restricted_root_system
from .rootsys import (
    ROOT_COUNT_FORMULAS,
    RootSystem,
    build_root_system,
    extended_neighbors,
    min_orbit_wdd,
    orbit_dim_from_wdd,
    simple_root_length_halves,
)
from .satake import RealFormDescriptor, SatakeDiagram, catalog, satake_involution, validate_satake

EXCEPTIONAL_REAL_RANK = {
    "g2_2": 2,
    "f4_4": 4,
    "f4_m20": 1,
    "e6_6": 6,
    "e6_2": 4,
    "e6_m14": 2,
    "e6_m26": 2,
    "e7_7": 7,
    "e7_m5": 4,
    "e7_m25": 3,
    "e8_8": 8,
    "e8_m24": 4,
}


def expected_real_rank(d: RealFormDescriptor) -> int:
    """Real rank per family, from the standard classification tables."""
    f, p = d.family, d.params
    if f == "sl_R":
        return p[0] - 1
    if f == "su_star":
        return p[0] - 1
    if f in ("su_pq", "so_pq", "sp_pq"):
        return p[0]
    if f == "sp_R":
        return p[0]
    if f == "so_star":
        return p[0] // 2
    return EXCEPTIONAL_REAL_RANK[f]


def golden_row(d: RealFormDescriptor) -> tuple[tuple[int, ...], int] | None:
    """Expected (weights, dimension) for the five families, None elsewhere."""
    f, p = d.family, d.params
    if f == "su_star":
        k = p[0]
        if k == 2:
            return (0, 2, 0), 8
        weights = [0] * (2 * k - 1)
        weights[1] = weights[2 * k - 3] = 1
        return tuple(weights), 8 * k - 8
    if f == "so_pq" and p[0] == 1:
        n = p[1] + 1
        if n == 6:
            return (0, 2, 0), 8
        rank = (n - 1) // 2 if n % 2 == 1 else n // 2
        weights = [0] * rank
        weights[0] = 2
        return tuple(weights), 2 * n - 4
    if f == "sp_pq":
        total = p[0] + p[1]
        if total == 2:
            return (0, 2), 6
        weights = [0] * total
        weights[1] = 1
        return tuple(weights), 4 * total - 2
    if f == "e6_m26":
        return (1, 0, 0, 0, 0, 1), 32
    if f == "f4_m20":
        return (0, 0, 0, 1), 22
    return None


@dataclass(frozen=True)
class Failure:
    entry: str
    check: str
    message: str

    def __str__(self) -> str:
        return f"FAIL {self.entry} [{self.check}] {self.message}"


@dataclass
class VerificationResult:
    entries: int
    checks_run: int
    failures: list[Failure]

    @property
    def ok(self) -> bool:
        return not self.failures


def _dual_coxeter_number(rs: RootSystem) -> Fraction:
    # 1 + sum of the highest root's coefficients over the coroot basis,
    # independently of the grading-based dimension formula
    d = simple_root_length_halves(rs.simple_type)
    return 1 + sum(c * di for c, di in zip(rs.highest, d))


def check_root_system(rs: RootSystem) -> list[Failure]:
    name = rs.simple_type.name
    failures = []

    expected = ROOT_COUNT_FORMULAS[rs.simple_type.letter](rs.rank)
    if len(rs.roots) != expected:
        failures.append(Failure(name, "roots.count", f"{len(rs.roots)} roots, closed form gives {expected}"))

    root_set = rs.root_set
    non_extendable = {
        xi
        for xi in rs.positive_roots
        if all(tuple(a + b for a, b in zip(xi, eta)) not in root_set for eta in rs.positive_roots)
    }
    if non_extendable != {rs.highest}:
        failures.append(Failure(name, "roots.highest-unique", f"non-extendable positives: {sorted(non_extendable)}"))

    wdd = min_orbit_wdd(rs)
    if rs.rank == 1:
        if wdd.weights != (Fraction(2),):
            failures.append(Failure(name, "minwdd.a1", f"A1 weight is {wdd.weights}, expected (2,)"))
    else:
        if any(w not in (0, 1) for w in wdd.weights):
            failures.append(Failure(name, "minwdd.zero-one", f"weights {wdd.weights} not in {{0,1}}"))
        support = frozenset(i for i, w in enumerate(wdd.weights) if w != 0)
        if support != extended_neighbors(rs):
            failures.append(
                Failure(name, "minwdd.support", f"support {sorted(support)} vs neighbors {sorted(extended_neighbors(rs))}")
            )

    dim = orbit_dim_from_wdd(rs, wdd)
    if dim != 2 * _dual_coxeter_number(rs) - 2:
        failures.append(Failure(name, "minwdd.dimension", f"dim {dim} != 2h^v-2 = {2 * _dual_coxeter_number(rs) - 2}"))
    return failures


def check_satake_entry(sd: SatakeDiagram) -> list[Failure]:
    report = validate_satake(sd)
    failures = [Failure(sd.name, check, msg) for check, msg in report.failures]
    if failures:
        return failures

    rrs = restricted_root_system(sd)
    omega = len(sd.black) + len(sd.arrows)
    if omega != sd.rs.rank - len(rrs.simple):
        failures.append(
            Failure(sd.name, "involution.omega-count", f"#black+#arrows = {omega} != rank - #restricted simples")
        )
    return failures


def check_restricted_entry(sd: SatakeDiagram) -> list[Failure]:
    name = sd.name
    rs = sd.rs
    failures = []
    try:
        rrs = restricted_root_system(sd)
    except LieOrbitsError as exc:
        return [Failure(name, "restricted.construction", str(exc))]

    # roots restricting to zero are exactly those supported on black nodes,
    # so the multiplicity sum has an independent combinatorial count
    total = sum(m for _, m in rrs.multiplicities)
    span_black = sum(1 for r in rs.roots if all(r[i] == 0 for i in range(rs.rank) if i not in sd.black))
    if total + span_black != len(rs.roots):
        failures.append(
            Failure(name, "restricted.mult-sum", f"mult sum {total} + black-span {span_black} != {len(rs.roots)} roots")
        )

    for xi, m in rrs.multiplicities:
        neg = tuple(-x for x in xi)
        if rrs.mult.get(neg) != m:
            failures.append(Failure(name, "restricted.negation", f"mult({xi}) != mult(-{xi})"))
            break

    try:
        if dominant_longest(rrs) != rrs.highest:
            failures.append(Failure(name, "restricted.highest-two-routes", "r(phi) is not the dominant longest root"))
    except LieOrbitsError as exc:
        failures.append(Failure(name, "restricted.highest-two-routes", str(exc)))

    pos_set = set(rrs.positives)
    elem_set = rrs.element_set
    lam = rrs.highest
    if any(vec_add(lam, eta) in elem_set for eta in pos_set):
        failures.append(Failure(name, "restricted.highest-nonextendable", "lambda + eta is a restricted root"))

    phi = as_vector(rs.highest)
    phi_sq = rs.inner(phi, phi)
    lam_sq = rs.inner(lam, lam)
    if rrs.highest_mult >= 2:
        if phi_sq != 2 * lam_sq:
            failures.append(Failure(name, "restricted.norm-ratio", f"<phi,phi>={phi_sq} but 2<lam,lam>={2 * lam_sq}"))
    else:
        if phi_sq != lam_sq:
            failures.append(Failure(name, "restricted.norm-ratio", f"<phi,phi>={phi_sq} but <lam,lam>={lam_sq}"))

    tau_phi = satake_involution(sd).tau_star.mat_vec(phi)
    if (tau_phi != phi) != (rrs.highest_mult >= 2):
        failures.append(
            Failure(name, "restricted.mult-vs-phi-moved", f"mult {rrs.highest_mult} vs tau*phi moved {tau_phi != phi}")
        )
    if tau_phi != phi and rs.inner(phi, tau_phi) != 0:
        failures.append(Failure(name, "restricted.phi-tau-orthogonal", f"<phi, tau*phi> = {rs.inner(phi, tau_phi)}"))

    if parity_criterion(rrs) == is_C_or_BC(rrs):
        failures.append(
            Failure(name, "restricted.parity-criterion", f"odd pairing {parity_criterion(rrs)} but type {rrs.type_label.name}")
        )

    if is_hermitian(sd) != sd.hermitian_expected:
        failures.append(
            Failure(name, "restricted.hermitian", f"derived {is_hermitian(sd)}, reference list says {sd.hermitian_expected}")
        )

    if len(rrs.simple) != expected_real_rank(sd.descriptor):
        failures.append(
            Failure(
                name,
                "restricted.real-rank",
                f"{len(rrs.simple)} restricted simple roots, family tables give {expected_real_rank(sd.descriptor)}",
            )
        )
    return failures


def check_orbit_entry(sd: SatakeDiagram) -> list[Failure]:
    name = sd.name
    failures = []
    try:
        direct = min_g_wdd_direct(sd)
        system = solve_coroot_system(sd)
    except LieOrbitsError as exc:
        return [Failure(name, "orbit.construction", str(exc))]

    if direct != system.wdd:
        failures.append(
            Failure(name, "orbit.two-methods", f"direct {direct.weights} != linear system {system.wdd.weights}")
        )
    if not direct.is_integral() or any(x not in (0, 1, 2) for x in direct.as_ints()):
        failures.append(Failure(name, "orbit.weights-range", f"weights {direct.weights} outside {{0,1,2}}"))

    from .orbits import wdd_matches_satake

    if not wdd_matches_satake(direct, sd):
        failures.append(Failure(name, "orbit.matches-satake", "diagram of the meeting orbit does not match the entry"))

    conditions = equivalence_conditions(sd)
    if not conditions.all_agree:
        failures.append(Failure(name, "orbit.condition-battery", f"conditions disagree: {conditions.values()}"))
    if conditions.c_ii != in_five_families(sd.descriptor):
        failures.append(
            Failure(name, "orbit.five-families", f"c_ii={conditions.c_ii} vs family membership {in_five_families(sd.descriptor)}")
        )

    count = count_minimal_real_orbits(sd)
    if count not in (1, 2):
        failures.append(Failure(name, "orbit.count-range", f"count {count}"))
    if (count == 2) != sd.hermitian_expected:
        failures.append(Failure(name, "orbit.count-hermitian", f"count {count} vs hermitian {sd.hermitian_expected}"))

    min_dim = orbit_dim_from_wdd(sd.rs, min_orbit_wdd(sd.rs))
    g_dim = min_g_dimension(sd)
    meets = min_meets_real_form(sd)
    if g_dim < min_dim or (g_dim == min_dim) != meets:
        failures.append(Failure(name, "orbit.dim-monotone", f"dim {g_dim} vs minimal dim {min_dim}, meets={meets}"))

    row = golden_row(sd.descriptor)
    if row is not None:
        weights, dim = row
        if direct.as_ints() != weights or g_dim != dim:
            failures.append(
                Failure(name, "orbit.golden-row", f"got {direct.as_ints()} dim {g_dim}, table says {weights} dim {dim}")
            )
    return failures


ENTRY_CHECKS = (check_satake_entry, check_restricted_entry, check_orbit_entry)


def run_verification(max_rank: int = 8, entries: Iterable[SatakeDiagram] | None = None) -> VerificationResult:
    """Run every invariant suite; used by the CLI `verify` command."""
    diagrams: Sequence[SatakeDiagram] = list(entries) if entries is not None else catalog(max_rank)
    failures: list[Failure] = []
    checks = 0

    seen_types = []
    for sd in diagrams:
        if sd.rs.simple_type not in seen_types:
            seen_types.append(sd.rs.simple_type)
    for t in seen_types:
        checks += 1
        failures += check_root_system(build_root_system(t))

    for sd in diagrams:
        for check in ENTRY_CHECKS:
            checks += 1
            try:
                failures += check(sd)
            except LieOrbitsError as exc:
                failures.append(Failure(sd.name, "error", str(exc)))
    return VerificationResult(entries=len(diagrams), checks_run=checks, failures=failures)
