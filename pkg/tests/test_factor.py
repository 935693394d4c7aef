"""Radical factorization chains, invertibility, meager peels, probes."""

import pytest

from idealis.factor import (Failure, PreconditionFailed, class_group_probe,
                            cofactor, divides_in_invertibles, is_invertible,
                            is_radical_in_invertibles, meager_check,
                            meager_factor, radical_closed_ideals,
                            radical_factor_principal, sp_factor,
                            support_witness)
from idealis.ideals import (ideal_eq, ideal_from, ideal_intersect,
                            ideal_subset, ideal_sum, radical, unit_ideal)
from idealis.systems import close, closed_ideals, system


def test_principal_chain_on_n2(n2):
    ch = radical_factor_principal(n2, (2, 1))
    assert [F.gens for F in ch.factors] == [((1, 1),), ((1, 0),)]
    assert ch.comparable
    assert ch.target.gens == ((2, 1),)
    # reassembly is asserted inside the chain constructor; spot-check anyway
    acc = unit_ideal(n2)
    for F in ch.factors:
        acc = close(ch.system, ideal_sum(acc, F))
    assert acc == ch.target


def test_principal_chain_factors_are_radical_and_nested(n2):
    ch = radical_factor_principal(n2, (3, 1))
    assert [F.gens for F in ch.factors] == \
        [((1, 1),), ((1, 0),), ((1, 0),)]
    for F in ch.factors:
        assert ideal_eq(radical(F), F)
    for A, B in zip(ch.factors, ch.factors[1:]):
        assert ideal_subset(A, B) or ideal_subset(B, A)


def test_gap_element_has_no_radical_chain(gap23):
    # sqrt(2 + H) = M is not principal, so no chain of radical principal
    # factors can exist; the witness is the offending radical
    f = radical_factor_principal(gap23, (2,))
    assert isinstance(f, Failure)
    assert f.to_json() == {"failure": "NonPrincipalRadical",
                           "witness": {"gens": [[2], [3]], "kind": "integral"}}


def test_unit_factors_trivially(gap23, n2):
    assert radical_factor_principal(gap23, (0,)).factors == ()
    assert radical_factor_principal(n2, (0, 0)).factors == ()


def test_sp_factor(n2, gap23):
    t = system("t", n2)
    r = sp_factor(close(t, ideal_from([(1, 1)], n2)), t)
    assert [F.gens for F in r.factors] == [((1, 1),)]
    tg = system("t", gap23)
    f = sp_factor(close(tg, ideal_from([(3,)], gap23)), tg)
    assert isinstance(f, Failure)
    assert f.reason == "RadicalNotInvertible"
    assert f.witness.gens == ((2,), (3,))


def test_sp_factor_requires_closed_input(n2):
    t = system("t", n2)
    with pytest.raises(ValueError, match="not closed"):
        sp_factor(ideal_from([(1, 0), (0, 1)], n2), t)


def test_radical_closed_ideals(n2, gap23):
    t = system("t", n2)
    assert [I.gens for I in radical_closed_ideals(t)] == \
        [((0, 1),), ((1, 0),), ((1, 1),)]
    # under s the union of the two coordinate primes is closed as well
    s = system("s", n2)
    assert [I.gens for I in radical_closed_ideals(s)] == \
        [((0, 1),), ((0, 1), (1, 0)), ((1, 0),), ((1, 1),)]
    assert [I.gens for I in radical_closed_ideals(system("t", gap23))] == \
        [((2,), (3,))]


def test_radical_closed_family_matches_lattice_filter(n2):
    """Every radical closed ideal in the radius-5 lattice is a cell union."""
    t = system("t", n2)
    fam = set(radical_closed_ideals(t))
    unit = unit_ideal(n2)
    from_lattice = {
        I for I in closed_ideals(t, 5)
        if I != unit and ideal_eq(radical(I), I)
    }
    assert from_lattice == fam


def test_is_invertible(gap23, n2):
    tg = system("t", gap23)
    assert is_invertible(ideal_from([(2,)], gap23), tg)
    assert not is_invertible(ideal_from([(2,), (3,)], gap23), tg)
    t = system("t", n2)
    assert is_invertible(ideal_from([(1, 1)], n2), t)


def test_cofactor_reassembles(n2):
    t = system("t", n2)
    I = ideal_from([(1, 0)], n2)
    J = ideal_from([(3, 2)], n2)
    C = cofactor(I, J, t)
    assert close(t, ideal_sum(I, C)) == close(t, J)


def test_divides_in_invertibles_is_containment(n2):
    t = system("t", n2)
    I = ideal_from([(1, 0)], n2)
    assert divides_in_invertibles(I, ideal_from([(3, 2)], n2), t)
    assert not divides_in_invertibles(I, ideal_from([(0, 2)], n2), t)


def test_radical_in_invertibles(n2):
    t = system("t", n2)
    assert is_radical_in_invertibles(ideal_from([(1, 1)], n2), t)
    assert not is_radical_in_invertibles(ideal_from([(2, 0)], n2), t)


def test_meager_check_rows(n2):
    t = system("t", n2)
    P1 = close(t, ideal_from([(1, 0)], n2))
    I = close(t, ideal_from([(2, 0)], n2))
    v = meager_check([P1, P1], I, t)
    assert bool(v)
    assert v.rows == (((0,), 0, True), ((1,), 2, True))
    bad = meager_check([P1, P1, P1], I, t)    # (2,0) is not in P1 cubed
    assert not bad.meager


def test_meager_factor_peels(n2, gap23):
    t = system("t", n2)
    mf = meager_factor(close(t, ideal_from([(2, 1)], n2)), t)
    assert [F.gens for F in mf.factors] == [((1, 1),), ((1, 0),)]
    tg = system("t", gap23)
    with pytest.raises(ValueError, match="invertible"):
        meager_factor(close(tg, ideal_from([(2,), (3,)], gap23)), tg)


def test_support_witness(n2):
    from idealis.spectrum import height_one
    for gens in ([(2, 1)], [(1, 0), (0, 1)], [(0, 3)]):
        I = ideal_from(gens, n2)
        z = support_witness(I)
        for P in height_one(n2):
            assert P.ideal.contains_vec(z) == P.contains(I)
    assert support_witness(ideal_from([(1, 0), (0, 1)], n2)) == (0, 0)


def test_support_witness_needs_principal_cells(gap23):
    with pytest.raises(PreconditionFailed, match="non-principal"):
        support_witness(ideal_from([(2,), (3,)], gap23))


def test_class_group_probe(n2, gap23):
    doc = class_group_probe(n2, system("t", n2), 4).to_json()
    assert doc["trivial_within_radius"] is True
    assert doc["invertible_count"] == doc["principal_count"] == 25
    assert doc["nonprincipal"] == []
    doc = class_group_probe(gap23, system("t", gap23), 6).to_json()
    assert doc["invertible_count"] == 6
    assert doc["trivial_within_radius"] is True
