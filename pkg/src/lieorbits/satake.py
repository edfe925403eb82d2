"""Satake diagrams of the non-compact real simple Lie algebras without
complex structure, and the exact involutions they induce on the root lattice.

The catalog is transcribed per family from the standard classification as
parametrized patterns, never per instance; `validate_satake` machine-checks
every entry against the involution invariants, so a mis-transcribed pattern
surfaces as a named diagnostic rather than silently wrong output.

Node indices are 0-based Bourbaki positions.  The name grammar (parsed
case-insensitively, no spaces):

    sl(<n>,R)  su*(<2k>)  su(<p>,<q>)  so(<p>,<q>)  so*(<2n>)  sp(<n>,R)
    sp(<p>,<q>)  g2(2)  f4(4)  f4(-20)  e6(6)  e6(2)  e6(-14)  e6(-26)
    e7(7)  e7(-5)  e7(-25)  e8(8)  e8(-24)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FormNameError, InconsistentDiagram, OutOfRangeParams
from .ratmat import RatMatrix, as_vector, matrix_rank, rat_solve, vec_scale, vec_sub
from .rootsys import (
    RootSystem,
    SimpleType,
    build_root_system,
    candidate_types,
    cartan_matrix,
    duality_permutation,
    find_cartan_isomorphism,
)

EXCEPTIONAL_FAMILIES = {
    "g2_2": "g2(2)",
    "f4_4": "f4(4)",
    "f4_m20": "f4(-20)",
    "e6_6": "e6(6)",
    "e6_2": "e6(2)",
    "e6_m14": "e6(-14)",
    "e6_m26": "e6(-26)",
    "e7_7": "e7(7)",
    "e7_m5": "e7(-5)",
    "e7_m25": "e7(-25)",
    "e8_8": "e8(8)",
    "e8_m24": "e8(-24)",
}


@dataclass(frozen=True)
class RealFormDescriptor:
    """A real form named by family plus integer parameters."""

    family: str
    params: tuple[int, ...]

    @property
    def canonical_name(self) -> str:
        f, p = self.family, self.params
        if f == "sl_R":
            return f"sl({p[0]},R)"
        if f == "su_star":
            return f"su*({2 * p[0]})"
        if f == "su_pq":
            return f"su({p[0]},{p[1]})"
        if f == "so_pq":
            return f"so({p[0]},{p[1]})"
        if f == "sp_R":
            return f"sp({p[0]},R)"
        if f == "sp_pq":
            return f"sp({p[0]},{p[1]})"
        if f == "so_star":
            return f"so*({2 * p[0]})"
        return EXCEPTIONAL_FAMILIES[f]


@dataclass(frozen=True)
class SatakeDiagram:
    """Dynkin diagram of the complexification + black nodes + arrow pairing."""

    descriptor: RealFormDescriptor
    rs: RootSystem
    black: frozenset[int]
    arrows: tuple[tuple[int, int], ...]
    hermitian_expected: bool

    @property
    def name(self) -> str:
        return self.descriptor.canonical_name

    @property
    def white(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rs.rank) if i not in self.black)


@dataclass(frozen=True)
class SatakeInvolution:
    """theta* on simple-root coordinates, its negative tau*, and the node
    permutation p_tilde (arrow pairing on white nodes, duality involution on
    each black component)."""

    theta_star: RatMatrix
    tau_star: RatMatrix
    p_tilde: tuple[int, ...]


def _sorted_arrows(pairs) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _diagram(descriptor, letter, rank, black, arrows, hermitian):
    rs = build_root_system(SimpleType(letter, rank))
    return SatakeDiagram(descriptor, rs, frozenset(black), _sorted_arrows(arrows), hermitian)


def _check(cond: bool, message: str):
    if not cond:
        raise OutOfRangeParams(message)


def build_satake(d: RealFormDescriptor) -> SatakeDiagram:
    """Instantiate the family pattern for one descriptor."""
    f, p = d.family, d.params
    if f == "sl_R":
        (n,) = p
        _check(n >= 2, f"sl(n,R) needs n >= 2, got n={n}")
        return _diagram(d, "A", n - 1, (), (), hermitian=(n == 2))
    if f == "su_star":
        (k,) = p
        _check(k >= 2, f"su*(2k) needs k >= 2, got 2k={2 * k}")
        return _diagram(d, "A", 2 * k - 1, range(0, 2 * k - 1, 2), (), hermitian=False)
    if f == "su_pq":
        p_, q_ = p
        _check(1 <= p_ <= q_, f"su(p,q) needs 1 <= p <= q, got ({p_},{q_})")
        n = p_ + q_ - 1
        arrows = [(i, n - 1 - i) for i in range(p_) if i != n - 1 - i]
        return _diagram(d, "A", n, range(p_, n - p_), arrows, hermitian=True)
    if f == "so_pq":
        return _build_so(d)
    if f == "sp_R":
        (n,) = p
        _check(n >= 1, f"sp(n,R) needs n >= 1, got n={n}")
        if n == 1:
            return _diagram(d, "A", 1, (), (), hermitian=True)
        return _diagram(d, "C", n, (), (), hermitian=True)
    if f == "sp_pq":
        p_, q_ = p
        _check(1 <= p_ <= q_, f"sp(p,q) needs 1 <= p <= q, got ({p_},{q_})")
        n = p_ + q_
        white = set(range(1, 2 * p_, 2))
        return _diagram(d, "C", n, set(range(n)) - white, (), hermitian=False)
    if f == "so_star":
        (n,) = p
        _check(n >= 3, f"so*(2n) needs n >= 3, got 2n={2 * n}")
        if n == 3:
            # so*(6) is isomorphic to su(1,3); D3 is cataloged through A3
            return _diagram(d, "A", 3, {1}, ((0, 2),), hermitian=True)
        if n % 2 == 0:
            return _diagram(d, "D", n, range(0, n, 2), (), hermitian=True)
        return _diagram(d, "D", n, range(0, n - 2, 2), ((n - 2, n - 1),), hermitian=True)
    if f in EXCEPTIONAL_FAMILIES:
        letter, rank, black, arrows, hermitian = {
            "g2_2": ("G", 2, (), (), False),
            "f4_4": ("F", 4, (), (), False),
            "f4_m20": ("F", 4, (0, 1, 2), (), False),
            "e6_6": ("E", 6, (), (), False),
            "e6_2": ("E", 6, (), ((0, 5), (2, 4)), False),
            "e6_m14": ("E", 6, (2, 3, 4), ((0, 5),), True),
            "e6_m26": ("E", 6, (1, 2, 3, 4), (), False),
            "e7_7": ("E", 7, (), (), False),
            "e7_m5": ("E", 7, (1, 4, 6), (), False),
            "e7_m25": ("E", 7, (1, 2, 3, 4), (), True),
            "e8_8": ("E", 8, (), (), False),
            "e8_m24": ("E", 8, (1, 2, 3, 4), (), False),
        }[f]
        return _diagram(d, letter, rank, black, arrows, hermitian)
    raise FormNameError(f"unknown real-form family {f!r}")


def _build_so(d: RealFormDescriptor) -> SatakeDiagram:
    p_, q_ = d.params
    _check(1 <= p_ <= q_, f"so(p,q) needs 1 <= p <= q, got ({p_},{q_})")
    total = p_ + q_
    _check(total >= 5, f"so(p,q) needs p+q >= 5, got p+q={total} (non-simple or complex structure below)")
    hermitian = p_ == 2
    if total % 2 == 1:
        m = (total - 1) // 2
        return _diagram(d, "B", m, range(p_, m), (), hermitian)
    if total == 6:
        # D3 = A3: so(1,5)=su*(4), so(2,4)=su(2,2), so(3,3)=sl(4,R)
        if p_ == 1:
            return _diagram(d, "A", 3, (0, 2), (), hermitian)
        if p_ == 2:
            return _diagram(d, "A", 3, (), ((0, 2),), hermitian)
        return _diagram(d, "A", 3, (), (), hermitian)
    m = total // 2
    if p_ == m:
        return _diagram(d, "D", m, (), (), hermitian)
    if p_ == m - 1:
        return _diagram(d, "D", m, (), ((m - 2, m - 1),), hermitian)
    return _diagram(d, "D", m, range(p_, m), (), hermitian)


_NAME_PATTERNS = [
    (re.compile(r"^sl\((\d+),r\)$"), lambda g: RealFormDescriptor("sl_R", (int(g[0]),))),
    (re.compile(r"^su\*\((\d+)\)$"), "su_star"),
    (re.compile(r"^su\((\d+),(\d+)\)$"), lambda g: RealFormDescriptor("su_pq", _pq(g))),
    (re.compile(r"^so\((\d+),(\d+)\)$"), lambda g: RealFormDescriptor("so_pq", _pq(g))),
    (re.compile(r"^so\*\((\d+)\)$"), "so_star"),
    (re.compile(r"^sp\((\d+),r\)$"), lambda g: RealFormDescriptor("sp_R", (int(g[0]),))),
    (re.compile(r"^sp\((\d+),(\d+)\)$"), lambda g: RealFormDescriptor("sp_pq", _pq(g))),
]

_EXCEPTIONAL_BY_NAME = {name: fam for fam, name in EXCEPTIONAL_FAMILIES.items()}


def _pq(groups) -> tuple[int, int]:
    a, b = int(groups[0]), int(groups[1])
    return (a, b) if a <= b else (b, a)


def parse_form_name(text: str) -> RealFormDescriptor:
    """Parse a real-form name under the grammar in the module docstring."""
    token = text.strip()
    if any(ch.isspace() for ch in token):
        raise FormNameError(f"form name {text!r} must not contain spaces")
    lowered = token.lower()
    if lowered in _EXCEPTIONAL_BY_NAME:
        return RealFormDescriptor(_EXCEPTIONAL_BY_NAME[lowered], ())
    for pattern, make in _NAME_PATTERNS:
        m = pattern.match(lowered)
        if not m:
            continue
        if make == "su_star":
            val = int(m.group(1))
            if val % 2 != 0:
                raise OutOfRangeParams(f"su*(m) needs even m, got {val}")
            return RealFormDescriptor("su_star", (val // 2,))
        if make == "so_star":
            val = int(m.group(1))
            if val % 2 != 0:
                raise OutOfRangeParams(f"so*(m) needs even m, got {val}")
            return RealFormDescriptor("so_star", (val // 2,))
        return make(m.groups())
    raise FormNameError(f"cannot parse real-form name {token!r}")


def catalog(max_rank: int) -> list[SatakeDiagram]:
    """All catalog entries of complex rank <= max_rank, sorted by name.

    Isomorphic low-rank duplicates (sl(2,R)/su(1,1)/sp(1,R), so(1,5)/su*(4),
    ...) are retained: the catalog is indexed by descriptor, not by
    isomorphism class.
    """
    if max_rank < 2:
        raise OutOfRangeParams(f"catalog needs max_rank >= 2, got {max_rank}")
    descriptors: list[RealFormDescriptor] = []
    descriptors += [RealFormDescriptor("sl_R", (n,)) for n in range(2, max_rank + 2)]
    descriptors += [RealFormDescriptor("su_star", (k,)) for k in range(2, (max_rank + 1) // 2 + 1)]
    for total in range(2, max_rank + 2):
        descriptors += [RealFormDescriptor("su_pq", (a, total - a)) for a in range(1, total // 2 + 1)]
    for total in range(5, 2 * max_rank + 2):
        if total % 2 == 0 and total != 6 and total // 2 > max_rank:
            continue
        if total % 2 == 1 and (total - 1) // 2 > max_rank:
            continue
        descriptors += [RealFormDescriptor("so_pq", (a, total - a)) for a in range(1, total // 2 + 1)]
    descriptors += [RealFormDescriptor("sp_R", (n,)) for n in range(1, max_rank + 1)]
    for total in range(2, max_rank + 1):
        descriptors += [RealFormDescriptor("sp_pq", (a, total - a)) for a in range(1, total // 2 + 1)]
    descriptors += [RealFormDescriptor("so_star", (n,)) for n in range(3, max_rank + 1)]
    exceptional_rank = {"g2": 2, "f4": 4, "e6": 6, "e7": 7, "e8": 8}
    for fam in EXCEPTIONAL_FAMILIES:
        if exceptional_rank[fam.split("_")[0]] <= max_rank:
            descriptors.append(RealFormDescriptor(fam, ()))
    entries = [build_satake(d) for d in descriptors]
    entries = [sd for sd in entries if sd.rs.rank <= max_rank]
    return sorted(entries, key=lambda sd: sd.name)


# ---------------------------------------------------------------------------
# involution construction


def _black_components(sd: SatakeDiagram) -> list[tuple[int, ...]]:
    cartan = sd.rs.cartan
    remaining = set(sd.black)
    components = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            node = frontier.pop()
            for other in list(remaining - comp):
                if cartan[node, other] != 0:
                    comp.add(other)
                    frontier.append(other)
        components.append(tuple(sorted(comp)))
        remaining -= comp
    return components


def _component_duality(sd: SatakeDiagram, comp: tuple[int, ...]) -> dict[int, int]:
    """Duality involution (-w0) of one black component as a node map."""
    sub = RatMatrix.build(len(comp), len(comp), lambda i, j: sd.rs.cartan[comp[i], comp[j]])
    for t in candidate_types(len(comp)):
        sigma = find_cartan_isomorphism(sub, cartan_matrix(t))
        if sigma is None:
            continue
        inverse = {s: i for i, s in enumerate(sigma)}
        delta = duality_permutation(t)
        return {comp[i]: comp[inverse[delta[sigma[i]]]] for i in range(len(comp))}
    raise InconsistentDiagram(f"{sd.name}: black component {comp} is not of classified type")


def _build_involution(sd: SatakeDiagram) -> SatakeInvolution:
    rs = sd.rs
    n = rs.rank
    _structural_failures(sd, strict=True)

    p_tilde = list(range(n))
    for i, j in sd.arrows:
        p_tilde[i], p_tilde[j] = j, i
    for comp in _black_components(sd):
        for node, image in _component_duality(sd, comp).items():
            p_tilde[node] = image

    # w0(Pi_0) acts as -duality on span(Pi_0) and identity on its
    # Gram-orthogonal complement; realized through the Gram split of each
    # basis vector, not through Weyl words.  The basis vectors are simple
    # roots, so the projections only need Gram matrix entries.
    black_nodes = sorted(sd.black)
    nb = len(black_nodes)
    sub_gram = RatMatrix.build(nb, nb, lambda a, c: rs.gram[black_nodes[a], black_nodes[c]])

    def w0_column(j: int) -> list[Fraction]:
        column = [Fraction(int(k == j)) for k in range(n)]
        if nb:
            coeffs = rat_solve(sub_gram, tuple(rs.gram[b, j] for b in black_nodes))
            for c, b in zip(coeffs, black_nodes):
                column[b] -= c
                column[p_tilde[b]] -= c
        return column

    columns = [w0_column(p_tilde[j]) for j in range(n)]
    theta = RatMatrix.build(n, n, lambda i, j: -columns[j][i])
    return SatakeInvolution(theta, -theta, tuple(p_tilde))


def _structural_failures(sd: SatakeDiagram, strict: bool = False) -> list[str]:
    n = sd.rs.rank
    problems = []
    if not all(0 <= b < n for b in sd.black):
        problems.append(f"black nodes {sorted(sd.black)} out of range for rank {n}")
    seen: set[int] = set()
    for i, j in sd.arrows:
        if i == j:
            problems.append(f"arrow pairs node {i} with itself")
            continue
        if not (0 <= i < n and 0 <= j < n):
            problems.append(f"arrow ({i},{j}) out of range for rank {n}")
            continue
        if i in sd.black or j in sd.black:
            problems.append(f"arrow ({i},{j}) touches a black node")
        if i in seen or j in seen:
            problems.append(f"node in arrow ({i},{j}) already carries an arrow")
        seen |= {i, j}
    if strict and problems:
        raise InconsistentDiagram(f"{sd.name}: " + "; ".join(problems))
    return problems


def _int_columns(mat: RatMatrix) -> list[list[int]] | None:
    rows = mat.int_rows()
    if rows is None:
        return None
    return [list(col) for col in zip(*rows)]


def _coroot_vector(rs: RootSystem, i: int):
    # coroot of a simple root under the Gram identification: 2 a_i / <a_i,a_i>
    e = as_vector(tuple(int(k == i) for k in range(rs.rank)))
    return vec_scale(2 / rs.inner(e, e), e)


def _involution_failures(sd: SatakeDiagram, inv: SatakeInvolution) -> list[tuple[str, str]]:
    rs = sd.rs
    n = rs.rank
    theta, tau, p = inv.theta_star, inv.tau_star, inv.p_tilde
    failures: list[tuple[str, str]] = []

    if not (theta @ theta).is_identity():
        failures.append(("involution.theta-squared", "theta* squared is not the identity"))

    theta_cols = _int_columns(theta)
    if theta_cols is None:
        failures.append(("involution.preserves-roots", "theta* does not preserve the root lattice"))
        return failures

    def apply_cols(cols: list[list[int]], root: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * n
        for j, c in enumerate(root):
            if c:
                col = cols[j]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    root_set = rs.root_set
    bad = next((r for r in rs.roots if apply_cols(theta_cols, r) not in root_set), None)
    if bad is not None:
        failures.append(("involution.preserves-roots", f"theta* does not preserve the root set (e.g. {bad})"))

    for b in sorted(sd.black):
        if theta_cols[b] != [int(k == b) for k in range(n)]:
            failures.append(("involution.fixes-black", f"theta* moves black simple root {b}"))

    for w in sd.white:
        shifted = [-theta_cols[w][k] - int(k == p[w]) for k in range(n)]
        ok = all(x >= 0 for x in shifted) and all(shifted[k] == 0 for k in range(n) if k not in sd.black)
        if not ok:
            failures.append(
                ("involution.white-translate", f"-theta*(a_{w}) - p~(a_{w}) is not a nonnegative black combination")
            )

    tau_cols = [[-x for x in col] for col in theta_cols]
    for r in rs.roots:
        image = apply_cols(tau_cols, r)
        moved = tuple(a - b for a, b in zip(r, image))
        if moved in root_set:
            failures.append(("involution.tau-normal", f"alpha - tau*(alpha) is a root for alpha={r}"))
            break

    permuted_phi = [0] * n
    for i, c in enumerate(rs.highest):
        permuted_phi[p[i]] = c
    if tuple(permuted_phi) != rs.highest:
        failures.append(("involution.ptilde-fixes-phi", "p~ does not fix the highest root"))

    if any(rs.cartan[p[i], p[j]] != rs.cartan[i, j] for i in range(n) for j in range(n)):
        failures.append(("involution.ptilde-automorphism", "p~ is not a Dynkin diagram automorphism"))

    omega = [_coroot_vector(rs, b) for b in sorted(sd.black)]
    omega += [vec_sub(_coroot_vector(rs, i), _coroot_vector(rs, j)) for i, j in sd.arrows]
    if omega:
        if matrix_rank(omega) != len(omega):
            failures.append(("involution.basis-independent", "black/arrow coroot vectors are dependent"))
        for v in omega:
            if tau.mat_vec(v) != vec_scale(Fraction(-1), v):
                failures.append(("involution.basis-eigenspace", "a basis vector is not in the -1 eigenspace of tau*"))
                break
    eigen_dim = n - matrix_rank(_tau_plus_id_rows(tau, n))
    if eigen_dim != len(omega):
        failures.append(
            ("involution.basis-count", f"-1 eigenspace of tau* has dim {eigen_dim}, basis has {len(omega)} vectors")
        )
    return failures


def _tau_plus_id_rows(tau: RatMatrix, n: int) -> list[list[Fraction]]:
    ident = RatMatrix.identity(n)
    return [[tau[i, j] + ident[i, j] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_satake: empty failures means the entry is sound."""

    entry: str
    failures: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


@lru_cache(maxsize=None)
def satake_involution(sd: SatakeDiagram) -> SatakeInvolution:
    """theta* for a diagram, raising InconsistentDiagram if any invariant fails."""
    inv = _build_involution(sd)
    failures = _involution_failures(sd, inv)
    if failures:
        detail = "; ".join(f"{check}: {msg}" for check, msg in failures)
        raise InconsistentDiagram(f"{sd.name}: {detail}")
    return inv


def validate_satake(sd: SatakeDiagram) -> ValidationReport:
    """Run every structural and involution check, reporting all failures."""
    structural = [("structure.arrows", msg) for msg in _structural_failures(sd)]
    if structural:
        return ValidationReport(sd.name, tuple(structural))
    try:
        inv = _build_involution(sd)
    except InconsistentDiagram as exc:
        return ValidationReport(sd.name, (("structure.construction", str(exc)),))
    return ValidationReport(sd.name, tuple(_involution_failures(sd, inv)))
