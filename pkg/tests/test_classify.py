"""Property verdicts, frozen witnesses, and equivalence-suite agreement."""

import pytest

from idealis.classify import (GLOBAL_PROPS, MATRIX_PROPS, classify, evaluate,
                              property_names, suite_battery, suite_names,
                              tfae_suite)
from idealis.spectrum import UncertifiedModel

ALL_TRUE = {"n1", "n2", "n3", "nxz", "z1", "z2"}
ALL_FALSE = {"gap23", "n345", "n25", "n357", "g23xn", "g23x25", "g23xz"}

# Semi-decisions that legitimately stay open at radius 8: the collision or
# violation window of these monoids exceeds the search box.
EXPECTED_UNKNOWN = {
    ("n3", "s"): {"cancellative"},
    ("n345", "s"): {"cancellative"},
    ("n25", "s"): {"cancellative"},
    ("n25", "t"): {"modular_system"},
    ("n357", "s"): {"cancellative"},
    ("g23xn", "w"): {"cancellative", "class_group_trivial"},
    ("g23xn", "t"): {"cancellative", "class_group_trivial", "modular_system"},
    ("g23x25", "w"): {"cancellative", "class_group_trivial"},
    ("g23x25", "t"): {"cancellative", "class_group_trivial",
                      "modular_system"},
}


def test_property_name_canonicalization(gap23):
    assert evaluate(gap23, "t", "t_SP").prop == "sp"
    assert evaluate(gap23, "t", "aD").prop == "almost_dedekind"
    assert evaluate(gap23, "t", "prime_power_condition").prop == "ppc"
    with pytest.raises(ValueError, match="unknown property"):
        evaluate(gap23, "t", "nfreely_atomic")


def test_ppc_witness_frozen(gap23):
    v = evaluate(gap23, "t", "ppc")
    assert v.verdict == "false"
    assert v.witness.gens == ((2,),)
    assert "no closed power" in v.note


def test_sp_witnesses_frozen(gap23, n345):
    # sqrt(3+H) = M fails to be a product of closed primes in both cases
    assert evaluate(gap23, "t", "sp").witness.gens == ((2,), (3,))
    assert evaluate(n345, "w", "sp").witness.gens == ((3,), (4,), (5,))


def test_almost_dedekind_witness_names_localization(g23xn):
    v = evaluate(g23xn, "t", "almost_dedekind")
    assert v.verdict == "false"
    assert v.witness == {"face": [1], "localization": "g23xn_loc1"}


def test_vacuous_flag(gap23):
    # one closed prime only: no strict pair exists to compare
    v = evaluate(gap23, "t", "primary_inclusive")
    assert v.verdict == "true" and v.vacuous


def test_expected_unknowns_and_nothing_else(certified):
    for name, H in certified.items():
        doc = classify(H)
        for lbl in ("s", "w", "t"):
            got = {p for p, v in doc["systems"][lbl].items()
                   if v["verdict"] == "unknown-beyond-radius"}
            assert got == EXPECTED_UNKNOWN.get((name, lbl), set()), (name, lbl)


def test_unknowns_carry_explanatory_notes(n25):
    v = evaluate(n25, "t", "modular_system")
    assert v.verdict == "unknown-beyond-radius"
    assert "radius" in v.note


def test_gap23_matrix_counts(gap23):
    doc = classify(gap23)
    for lbl in ("s", "w", "t"):
        verdicts = [v["verdict"] for v in doc["systems"][lbl].values()]
        assert verdicts.count("true") == 11
        assert verdicts.count("false") == 23
    assert sorted(p for p, v in doc["systems"]["t"].items()
                  if v["verdict"] == "true") == [
        "class_group_trivial", "finite_conductor", "half_cancellative",
        "intersection_localizations", "local", "max_eq_height_one",
        "max_eq_t_max", "min_primes_fg_height_one", "modular_system",
        "primary_inclusive", "treed"]


def test_global_rows(gap23, n2):
    doc = classify(gap23)
    assert {p: v["verdict"] for p, v in doc["global"].items()} == {
        "acc_radical_principal": "true", "dvm": "false", "factorial": "false",
        "pit": "true", "radical_factorial": "false", "valuation": "false"}
    doc = classify(n2)
    assert doc["global"]["factorial"]["verdict"] == "true"
    assert doc["global"]["radical_factorial"]["verdict"] == "true"


def test_factorial_implies_radical_factorial(certified):
    for H in certified.values():
        doc = classify(H)
        if doc["global"]["factorial"]["verdict"] == "true":
            assert doc["global"]["radical_factorial"]["verdict"] == "true"


def test_modular_system_implies_primary_inclusive(certified):
    # consequence of modularity; vacuous truths count as truths
    for H in certified.items():
        name, H = H
        doc = classify(H)
        for lbl in ("s", "w", "t"):
            row = doc["systems"][lbl]
            if row["modular_system"]["verdict"] == "true":
                assert row["primary_inclusive"]["verdict"] == "true", \
                    (name, lbl)


def test_w_sp_is_t_ad_and_t_sp(certified):
    """The bridge between the w-matrix and the t-matrix columns."""
    for name, H in certified.items():
        w_sp = evaluate(H, "w", "sp").verdict
        t_ad = evaluate(H, "t", "almost_dedekind").verdict
        t_sp = evaluate(H, "t", "sp").verdict
        if "unknown-beyond-radius" in (w_sp, t_ad, t_sp):
            continue
        both = "true" if (t_ad == "true" and t_sp == "true") else "false"
        assert w_sp == both, name


def test_treed_with_invertible_radicals_forces_ad_and_sp(certified):
    for name, H in certified.items():
        for lbl in ("s", "w", "t"):
            treed = evaluate(H, lbl, "treed").verdict
            inv = evaluate(H, lbl, "primes_contain_invertible_radical").verdict
            if treed == "true" and inv == "true":
                assert evaluate(H, lbl, "almost_dedekind").verdict == "true"
                assert evaluate(H, lbl, "sp").verdict == "true"


def test_suite_names_are_stable():
    assert suite_names() == ("Thm4.2", "Cor4.4", "Cor4.5", "Thm3.9",
                             "Thm3.10", "Prop3.6", "Prop5.2", "Cor5.3",
                             "Cor4.6", "Prop5.4", "Cor3.8", "Thm4.3")
    assert len(property_names()) == 40
    assert len(MATRIX_PROPS) == 34 and len(GLOBAL_PROPS) == 6


def test_unknown_suite_rejected(gap23):
    with pytest.raises(ValueError, match="unknown suite"):
        tfae_suite(gap23, "Thm9.9")


def test_all_suites_agree_on_named_models(certified):
    for name, H in certified.items():
        for suite, rep in suite_battery(H).items():
            assert rep.agreement, (name, suite)
            verdicts = {c.verdict for c in rep.conditions if not c.vacuous}
            if name in ALL_TRUE:
                # groups satisfy everything vacuously, leaving an empty set
                assert verdicts <= {"true"}, (name, suite)
            else:
                assert "true" not in verdicts, (name, suite)


def test_suite_report_shape(gap23):
    rep = tfae_suite(gap23, "Thm4.2")
    doc = rep.to_json()
    assert doc["suite"] == "Thm4.2" and doc["monoid"] == "gap23"
    assert doc["agreement"] is True
    assert all(c["verdict"] == "false" for c in doc["conditions"])
    ids = [c["id"] for c in doc["conditions"]]
    assert ids == sorted(ids, key=lambda s: [int(x) for x in s.split(".")])


def test_dual_suite_carries_groups(gap23):
    rep = tfae_suite(gap23, "Thm4.3")
    assert sorted({c.group for c in rep.conditions}) == ["A", "B"]
    assert rep.agreement


def test_via_equivalents_note(gap23):
    rep = tfae_suite(gap23, "Prop5.4")
    c4 = next(c for c in rep.conditions if c.cid == "4")
    assert c4.verdict == "false"
    assert c4.note == "via-equivalents"


def test_closure_identity_postcheck(n2):
    rep = tfae_suite(n2, "Cor3.8")
    assert rep.agreement
    assert "closure identity verified" in rep.note


def test_suite_battery_shares_contexts(n345):
    got = suite_battery(n345, names=("Thm4.2", "Cor4.4"))
    assert set(got) == {"Thm4.2", "Cor4.4"}
    assert all(not r.conditions[0].verdict == "true" for r in got.values())


def test_classify_shape(nxz, affine1):
    doc = classify(nxz)
    assert doc["certified"] is True
    assert set(doc) == {"monoid", "certified", "radius", "systems", "global",
                        "suites", "spectrum"}
    assert set(doc["systems"]) == {"s", "w", "t"}
    assert set(doc["suites"]) == set(suite_names())
    bad = classify(affine1)
    assert bad["certified"] is False and "note" in bad


def test_uncertified_suites_raise(affine1):
    with pytest.raises(UncertifiedModel):
        tfae_suite(affine1, "Thm4.2")
