from fractions import Fraction

import pytest

from lieorbits.errors import InvalidType, NonIntegralWeights, RankTooSmall, ZeroVector
from lieorbits.rootsys import (
    ROOT_COUNT_FORMULAS,
    SimpleType,
    WeightedDynkinDiagram,
    build_root_system,
    cartan_matrix,
    duality_permutation,
    extended_neighbors,
    find_cartan_isomorphism,
    min_orbit_wdd,
    orbit_dim_from_wdd,
    pairing,
    simple_root_length_halves,
)

ALL_TYPES = (
    [SimpleType("A", n) for n in range(1, 9)]
    + [SimpleType("B", n) for n in range(2, 9)]
    + [SimpleType("C", n) for n in range(2, 9)]
    + [SimpleType("D", n) for n in range(4, 9)]
    + [SimpleType("E", n) for n in (6, 7, 8)]
    + [SimpleType("F", 4), SimpleType("G", 2)]
)

# standard highest-root coefficient tables, frozen as an oracle against the
# closure construction
HIGHEST_ROOTS = {
    "A": lambda n: (1,) * n,
    "B": lambda n: (1,) + (2,) * (n - 1),
    "C": lambda n: (2,) * (n - 1) + (1,),
    "D": lambda n: (1,) + (2,) * (n - 3) + (1, 1),
    "E": lambda n: {6: (1, 2, 2, 3, 2, 1), 7: (2, 2, 3, 4, 3, 2, 1), 8: (2, 3, 4, 6, 5, 4, 3, 2)}[n],
    "F": lambda n: (2, 3, 4, 2),
    "G": lambda n: (3, 2),
}

DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}


def test_invalid_types():
    for letter, rank in [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 1), ("X", 2)]:
        with pytest.raises(InvalidType):
            SimpleType(letter, rank)


def test_a1_roots():
    rs = build_root_system(SimpleType("A", 1))
    assert set(rs.roots) == {(1,), (-1,)}
    assert rs.highest == (1,)


def test_a2_roots_hand_enumeration():
    rs = build_root_system(SimpleType("A", 2))
    expected = {(1, 0), (0, 1), (1, 1)}
    assert set(rs.positive_roots) == expected
    assert len(rs.roots) == 6
    assert rs.highest == (1, 1)


def test_g2_roots_hand_enumeration():
    rs = build_root_system(SimpleType("G", 2))
    expected = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert set(rs.positive_roots) == expected
    assert len(rs.roots) == 12
    assert rs.highest == (3, 2)


@pytest.mark.parametrize("t", ALL_TYPES, ids=lambda t: t.name)
def test_root_counts_and_highest(t):
    rs = build_root_system(t)
    assert len(rs.roots) == ROOT_COUNT_FORMULAS[t.letter](t.rank)
    assert rs.highest == HIGHEST_ROOTS[t.letter](t.rank)
    assert set(rs.roots) == {tuple(-x for x in r) for r in rs.roots}
    assert (0,) * t.rank not in rs.root_set


@pytest.mark.parametrize("t", ALL_TYPES, ids=lambda t: t.name)
def test_gram_cartan_consistency(t):
    rs = build_root_system(t)
    n = t.rank
    for i in range(n):
        for j in range(n):
            assert 2 * rs.gram[i, j] / rs.gram[j, j] == rs.cartan[i, j]
            assert rs.gram[i, j] == rs.gram[j, i]
    # long roots have squared length 2
    assert max(rs.gram[i, i] for i in range(n)) == 2


def test_pairing_examples():
    a2 = build_root_system(SimpleType("A", 2))
    assert pairing(a2, (1, 0), (1, 0)) == 2
    assert pairing(a2, (1, 0), (0, 1)) == -1
    g2 = build_root_system(SimpleType("G", 2))
    # phi = 3a1 + 2a2 with a1 short is orthogonal to a1 and pairs to 1 on a2
    assert pairing(g2, g2.highest, (1, 0)) == 0
    assert pairing(g2, g2.highest, (0, 1)) == 1


def test_pairing_zero_vector():
    a2 = build_root_system(SimpleType("A", 2))
    with pytest.raises(ZeroVector):
        pairing(a2, (1, 0), (0, 0))


def test_min_orbit_wdd_examples():
    assert min_orbit_wdd(build_root_system(SimpleType("A", 1))).weights == (Fraction(2),)
    assert min_orbit_wdd(build_root_system(SimpleType("A", 3))).as_ints() == (1, 0, 1)
    # E6: weight sits on the branch node (Bourbaki a2)
    assert min_orbit_wdd(build_root_system(SimpleType("E", 6))).as_ints() == (0, 1, 0, 0, 0, 0)


def test_extended_neighbors_examples():
    for n in range(2, 8):
        assert extended_neighbors(build_root_system(SimpleType("A", n))) == {0, n - 1}
    for n in range(2, 8):
        assert extended_neighbors(build_root_system(SimpleType("C", n))) == {0}
        assert extended_neighbors(build_root_system(SimpleType("B", n))) == {1}
    with pytest.raises(RankTooSmall):
        extended_neighbors(build_root_system(SimpleType("A", 1)))


@pytest.mark.parametrize("t", [t for t in ALL_TYPES if t.rank >= 2], ids=lambda t: t.name)
def test_min_wdd_support_is_extended_neighbors(t):
    rs = build_root_system(t)
    wdd = min_orbit_wdd(rs)
    assert all(w in (0, 1) for w in wdd.weights)
    assert {i for i, w in enumerate(wdd.weights) if w} == extended_neighbors(rs)


def test_orbit_dim_examples():
    a2 = build_root_system(SimpleType("A", 2))
    assert orbit_dim_from_wdd(a2, WeightedDynkinDiagram(a2.simple_type, (Fraction(1), Fraction(1)))) == 4
    e6 = build_root_system(SimpleType("E", 6))
    row = WeightedDynkinDiagram(e6.simple_type, tuple(Fraction(x) for x in (1, 0, 0, 0, 0, 1)))
    assert orbit_dim_from_wdd(e6, row) == 32
    f4 = build_root_system(SimpleType("F", 4))
    row = WeightedDynkinDiagram(f4.simple_type, tuple(Fraction(x) for x in (0, 0, 0, 1)))
    assert orbit_dim_from_wdd(f4, row) == 22


def test_orbit_dim_rejects_nonintegral():
    a2 = build_root_system(SimpleType("A", 2))
    with pytest.raises(NonIntegralWeights):
        orbit_dim_from_wdd(a2, WeightedDynkinDiagram(a2.simple_type, (Fraction(1, 2), Fraction(1))))


@pytest.mark.parametrize("t", ALL_TYPES, ids=lambda t: t.name)
def test_min_orbit_dimension_is_dual_coxeter_formula(t):
    rs = build_root_system(t)
    dim = orbit_dim_from_wdd(rs, min_orbit_wdd(rs))
    assert dim == 2 * DUAL_COXETER[t.letter](t.rank) - 2
    # independent route: h^v = 1 + sum of coroot coefficients of phi
    d = simple_root_length_halves(t)
    hv = 1 + sum(c * di for c, di in zip(rs.highest, d))
    assert dim == 2 * hv - 2


def test_highest_root_never_extendable():
    for t in ALL_TYPES:
        rs = build_root_system(t)
        for eta in rs.positive_roots:
            assert tuple(a + b for a, b in zip(rs.highest, eta)) not in rs.root_set


def test_cartan_isomorphism_and_duality():
    a3 = cartan_matrix(SimpleType("A", 3))
    assert find_cartan_isomorphism(a3, a3) is not None
    b3 = cartan_matrix(SimpleType("B", 3))
    c3 = cartan_matrix(SimpleType("C", 3))
    assert find_cartan_isomorphism(b3, c3) is None
    assert find_cartan_isomorphism(cartan_matrix(SimpleType("B", 2)), cartan_matrix(SimpleType("C", 2))) is not None
    assert duality_permutation(SimpleType("A", 4)) == (3, 2, 1, 0)
    assert duality_permutation(SimpleType("D", 5)) == (0, 1, 2, 4, 3)
    assert duality_permutation(SimpleType("D", 4)) == (0, 1, 2, 3)
    assert duality_permutation(SimpleType("E", 6)) == (5, 1, 4, 3, 2, 0)
    assert duality_permutation(SimpleType("E", 7)) == tuple(range(7))
