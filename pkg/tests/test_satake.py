import dataclasses
from fractions import Fraction

import pytest

from lieorbits.errors import FormNameError, InconsistentDiagram, OutOfRangeParams
from lieorbits.ratmat import RatMatrix
from lieorbits.satake import (
    build_satake,
    catalog,
    parse_form_name,
    satake_involution,
    validate_satake,
)


def form(name):
    return build_satake(parse_form_name(name))


def test_parse_grammar_roundtrip():
    names = [
        "sl(5,R)", "su*(6)", "su(2,3)", "so(3,8)", "so*(10)", "sp(4,R)", "sp(2,3)",
        "g2(2)", "f4(4)", "f4(-20)", "e6(6)", "e6(2)", "e6(-14)", "e6(-26)",
        "e7(7)", "e7(-5)", "e7(-25)", "e8(8)", "e8(-24)",
    ]
    for name in names:
        assert parse_form_name(name).canonical_name == name
    # case-insensitive, and (p,q) normalizes to p <= q
    assert parse_form_name("SU*(4)").canonical_name == "su*(4)"
    assert parse_form_name("so(5,1)").canonical_name == "so(1,5)"
    assert parse_form_name("SP(3,R)").canonical_name == "sp(3,R)"


def test_parse_rejects_garbage():
    for bad in ["sl(3)", "so(2;3)", "su**(4)", "e9(9)", "sp()", "sl(3, R)", "frobnicate"]:
        with pytest.raises((FormNameError, OutOfRangeParams)):
            parse_form_name(bad)


def test_bounds_rejected():
    for bad in ["sl(1,R)", "su*(2)", "su*(5)", "su(0,3)", "so(1,3)", "so(2,2)", "so(1,1)", "so*(4)", "sp(0,R)"]:
        with pytest.raises(OutOfRangeParams):
            build_satake(parse_form_name(bad))


def test_split_forms_all_white():
    for name in ["sl(4,R)", "sp(3,R)", "g2(2)", "f4(4)", "e6(6)", "e7(7)", "e8(8)"]:
        sd = form(name)
        assert not sd.black and not sd.arrows


def test_catalog_entry_patterns():
    sd = form("su*(4)")
    assert sd.rs.simple_type.name == "A3" and sd.black == {0, 2} and not sd.arrows

    sd = form("su(1,2)")
    assert sd.rs.simple_type.name == "A2" and not sd.black and sd.arrows == ((0, 1),)

    sd = form("sp(1,1)")
    assert sd.rs.simple_type.name == "C2" and sd.black == {0} and not sd.arrows

    sd = form("f4(-20)")
    assert sd.rs.simple_type.name == "F4" and sd.black == {0, 1, 2}

    # chain a1-a3-a4-a5-a6 with a2 on the branch: black everywhere except the ends
    sd = form("e6(-26)")
    assert sd.rs.simple_type.name == "E6" and sd.black == {1, 2, 3, 4} and not sd.arrows

    sd = form("su(2,5)")
    assert sd.black == {2, 3} and sd.arrows == ((0, 5), (1, 4))

    sd = form("so(3,5)")
    assert sd.rs.simple_type.name == "D4" and not sd.black and sd.arrows == ((2, 3),)

    sd = form("so(2,8)")
    assert sd.rs.simple_type.name == "D5" and sd.black == {2, 3, 4} and not sd.arrows

    sd = form("so(1,6)")
    assert sd.rs.simple_type.name == "B3" and sd.black == {1, 2}

    sd = form("so*(8)")
    assert sd.rs.simple_type.name == "D4" and sd.black == {0, 2} and not sd.arrows

    sd = form("so*(10)")
    assert sd.black == {0, 2} and sd.arrows == ((3, 4),)

    sd = form("e6(2)")
    assert not sd.black and sd.arrows == ((0, 5), (2, 4))

    sd = form("e6(-14)")
    assert sd.black == {2, 3, 4} and sd.arrows == ((0, 5),)

    sd = form("e7(-5)")
    assert sd.black == {1, 4, 6}

    sd = form("e7(-25)")
    assert sd.black == {1, 2, 3, 4}

    sd = form("e8(-24)")
    assert sd.black == {1, 2, 3, 4}


def test_low_rank_isomorphic_images():
    # D3 entries are cataloged through A3
    assert form("so(1,5)").black == {0, 2}
    assert form("so(2,4)").arrows == ((0, 2),)
    sd = form("so(3,3)")
    assert not sd.black and not sd.arrows
    assert form("so*(6)").black == {1} and form("so*(6)").arrows == ((0, 2),)


def test_involution_split_is_minus_identity():
    inv = satake_involution(form("sl(5,R)"))
    assert inv.theta_star == -RatMatrix.identity(4)
    assert inv.tau_star == RatMatrix.identity(4)


def test_involution_su_star4():
    inv = satake_involution(form("su*(4)"))
    # theta* fixes the black ends and sends a2 to -(a1+a2+a3)
    assert inv.theta_star.column(0) == (Fraction(1), Fraction(0), Fraction(0))
    assert inv.theta_star.column(2) == (Fraction(0), Fraction(0), Fraction(1))
    assert inv.theta_star.column(1) == (Fraction(-1), Fraction(-1), Fraction(-1))


def test_involution_su12_arrow_swap():
    inv = satake_involution(form("su(1,2)"))
    assert inv.theta_star.column(0) == (Fraction(0), Fraction(-1))
    assert inv.theta_star.column(1) == (Fraction(-1), Fraction(0))
    assert inv.p_tilde == (1, 0)


def test_catalog_rank_bound_and_order():
    entries = catalog(8)
    assert all(sd.rs.rank <= 8 for sd in entries)
    names = [sd.name for sd in entries]
    assert names == sorted(names)
    assert len(names) == len(set(names))
    for expected in ["sl(2,R)", "su(1,1)", "sp(1,R)", "so(1,5)", "e8(-24)", "su(4,5)", "so(8,9)", "sp(4,4)"]:
        assert expected in names
    assert "so(1,2)" not in names
    assert "so(1,3)" not in names


def test_catalog_entries_all_validate():
    for sd in catalog(6):
        assert validate_satake(sd).ok, validate_satake(sd).failures


def test_catalog_names_reparse_to_same_entry():
    for sd in catalog(8):
        descriptor = parse_form_name(sd.name)
        assert descriptor == sd.descriptor
        assert build_satake(descriptor) == sd


def test_corrupted_black_set_fails_validation():
    sd = form("su*(4)")
    corrupted = dataclasses.replace(sd, black=frozenset({0, 1}))
    report = validate_satake(corrupted)
    assert not report.ok
    assert any(check == "involution.preserves-roots" for check, _ in report.failures)
    with pytest.raises(InconsistentDiagram):
        satake_involution(corrupted)


def test_self_arrow_fails_validation():
    sd = form("sl(3,R)")
    corrupted = dataclasses.replace(sd, arrows=((1, 1),))
    report = validate_satake(corrupted)
    assert not report.ok
    assert any("itself" in msg for _, msg in report.failures)


def test_arrow_touching_black_fails_validation():
    sd = form("su*(4)")
    corrupted = dataclasses.replace(sd, arrows=((0, 1),))
    report = validate_satake(corrupted)
    assert not report.ok


def test_black_longest_element_matches_weyl_word_route():
    # independent oracle: enumerate the Weyl group of the black subsystem by
    # closure over simple reflections, pick the element sending every black
    # positive root to a negative, and compare with the eigenspace-formula
    # w0 recovered from theta* (theta* = -w0 o p~)
    for name in ["su*(6)", "f4(-20)", "e6(-26)", "so(2,8)", "so(1,6)", "e7(-25)", "sp(1,2)"]:
        sd = form(name)
        rs = sd.rs
        n = rs.rank
        blacks = sorted(sd.black)
        if not blacks:
            continue

        def reflection(b):
            return RatMatrix.build(n, n, lambda i, j: Fraction(int(i == j)) - (rs.cartan[j, b] if i == b else 0))

        generators = [reflection(b) for b in blacks]
        group = {RatMatrix.identity(n).entries: RatMatrix.identity(n)}
        frontier = list(group.values())
        while frontier:
            new = []
            for w in frontier:
                for g in generators:
                    wg = w @ g
                    if wg.entries not in group:
                        group[wg.entries] = wg
                        new.append(wg)
            frontier = new

        black_positive = [r for r in rs.positive_roots if all(r[i] == 0 for i in range(n) if i not in sd.black)]

        def sends_all_negative(w):
            return all(sum(w.mat_vec(tuple(Fraction(x) for x in r))) < 0 for r in black_positive)

        longest = [w for w in group.values() if sends_all_negative(w)]
        assert len(longest) == 1, name

        inv = satake_involution(sd)
        p = inv.p_tilde
        recovered = RatMatrix.build(n, n, lambda i, j: -inv.theta_star[i, p[j]])
        assert recovered == longest[0], name


def test_hermitian_metadata():
    expected_true = ["su(1,1)", "su(2,3)", "so(2,5)", "so(2,4)", "sp(3,R)", "sp(1,R)", "so*(8)", "e6(-14)", "e7(-25)", "sl(2,R)"]
    expected_false = ["sl(3,R)", "su*(4)", "so(1,4)", "sp(1,2)", "f4(-20)", "e6(-26)", "g2(2)", "e8(8)"]
    for name in expected_true:
        assert form(name).hermitian_expected, name
    for name in expected_false:
        assert not form(name).hermitian_expected, name
