import json

import pytest

from enhanced_power import constructions as cons
from enhanced_power.graph import INFINITE
from enhanced_power.groups import GroupError
from enhanced_power.structure import (
    Case,
    Lemma23,
    lemma_2_3_classify,
    lemma_3_1_check,
    open_question_rows,
    open_question_scan,
    sl25_counterexample_check,
    sl25_counterexample_facts,
    theorem_3_2_condition,
    theorem_a_predict,
    theorem_a_verify,
    theorem_b_verify,
    verify_group,
)


@pytest.mark.parametrize(
    "name, p, tag",
    [
        ("C3xQ8", 2, Case.CASE_2A_NORMAL_COMPLEMENT),
        ("C3xQ8", 3, Case.CASE_1_CYCLIC_CENTRAL),
        ("SL2_3", 2, Case.CASE_2B_SL23),
        ("GL2_3_TILDE", 2, Case.CASE_2B_GL23TILDE),
        ("D8", 2, Case.NONE),
        ("Q16", 2, Case.CASE_2A_NORMAL_COMPLEMENT),
        ("S3", 3, Case.NONE),
        ("Dic12", 2, Case.CASE_1_CYCLIC_CENTRAL),
    ],
)
def test_case_prediction(named, name, p, tag):
    case = theorem_a_predict(named(name), p)
    assert case.tag is tag
    assert case.recheck()


def test_case_prediction_witnesses(named):
    case = theorem_a_predict(named("C3xQ8"), 2)
    assert len(case.witnesses["Q"]) == 3 and len(case.witnesses["Z(P)"]) == 2
    case = theorem_a_predict(named("SL2_3"), 2)
    assert len(case.witnesses["O_2'(G)"]) == 1


def test_case_prediction_errors(named):
    with pytest.raises(GroupError):
        theorem_a_predict(named("S3"), 5)
    with pytest.raises(GroupError):
        theorem_a_predict(named("A5"), 2)


def test_non_centralizing_quaternion_is_none():
    # Z(Q8) acts as -1 on C3^2, so the involution is not central and 2 does not divide |K|
    G = next(G for G in cons.extras() if G.name == "C3^2:Q8")
    assert theorem_a_predict(G, 2).tag is Case.NONE
    rep = theorem_a_verify(G)
    assert rep.agrees and rep.k_order == 1


def test_three_refinement_exercised():
    G = next(G for G in cons.extras() if G.name == "Q8:C9")
    rep = theorem_a_verify(G)
    assert rep.k_order == 6
    assert rep.three_refinement_ok is True and rep.two_part_ok is True
    assert [r.case for r in rep.primes] == ["CASE_2B_SL23", "CASE_1_CYCLIC_CENTRAL"]


@pytest.mark.parametrize(
    "name, predicted, k_order",
    [("C3xQ8", {2, 3}, 6), ("Q16", {2}, 2), ("S4", set(), 1), ("SL2_3xC5", {2, 5}, 10)],
)
def test_prime_characterization(named, name, predicted, k_order):
    rep = theorem_a_verify(named(name))
    assert rep.agrees and rep.k_order == k_order
    assert {r.p for r in rep.primes if r.predicted} == predicted
    assert {r.p for r in rep.primes if r.actual} == predicted
    if 2 in predicted and rep.primes[0].case.startswith("CASE_2"):
        assert rep.two_part_ok


def test_prime_characterization_non_solvable(named):
    rep = theorem_a_verify(named("A5"))
    assert not rep.applicable and rep.agrees


@pytest.mark.parametrize(
    "name, tag",
    [("Q8", Lemma23.NORMAL_2_COMPLEMENT), ("SL2_3", Lemma23.SL23), ("GL2_3_TILDE", Lemma23.GL23TILDE), ("C5xSL2_3", Lemma23.SL23)],
)
def test_quaternion_sylow_classification(named, name, tag):
    assert lemma_2_3_classify(named(name)) is tag


def test_quaternion_sylow_with_nontrivial_odd_core():
    G = next(G for G in cons.extras() if G.name == "ASL2_3")
    assert lemma_2_3_classify(G) is Lemma23.SL23


def test_quaternion_sylow_preconditions(named):
    with pytest.raises(GroupError):
        lemma_2_3_classify(named("D8"))
    with pytest.raises(GroupError):
        lemma_2_3_classify(named("SL2_5"))


def test_sl2_5_is_not_a_solvable_exception():
    facts = sl25_counterexample_facts()
    assert all(facts.values()), facts
    assert sl25_counterexample_check()
    G = cons.matrix_group("SL2", 5)
    assert G.n == 120 and int((G.element_order == 2).sum()) == 1


def test_two_prime_diameter_examples(named):
    rep = theorem_b_verify(named("S3"))
    assert rep.applicable and rep.diameter == INFINITE and rep.k_order == 1 and not rep.structural and rep.agrees
    rep = theorem_b_verify(named("Dic12"))
    assert rep.diameter == 2 and rep.k_order == 2 and rep.structural and rep.agrees and rep.lemma_3_1
    rep = theorem_b_verify(named("C6"))
    assert not rep.applicable and "cyclic" in rep.reason
    assert not theorem_b_verify(named("C30")).applicable


def test_two_prime_diameter_prime_power_groups(named):
    for name, diam in [("Q8", 2), ("D8", INFINITE), ("C2^3", INFINITE), ("Q16", 2)]:
        rep = theorem_b_verify(named(name))
        assert rep.single_prime and rep.diameter == diam and rep.agrees


def test_two_prime_structural_condition(named):
    assert theorem_3_2_condition(named("Dic12"))
    assert not theorem_3_2_condition(named("S3"))


def test_sylow_adjacency_condition(named):
    assert lemma_3_1_check(named("Dic12"))
    assert lemma_3_1_check(named("C3xQ8"))
    with pytest.raises(GroupError):
        lemma_3_1_check(named("S3"))
    with pytest.raises(GroupError):
        lemma_3_1_check(named("Q8"))


def test_open_question_scan(named):
    assert open_question_scan([]) == []
    assert open_question_scan([named("S3"), named("Q8"), named("C30")]) == []
    rows = open_question_rows([named("C5xS3"), named("S3xC5")])
    assert rows and all(r.diameter == 2 and r.center_order == 5 for r in rows)


def test_open_question_sweep_runs(catalog_96):
    rows = open_question_rows(catalog_96)
    assert rows
    for r in open_question_scan(catalog_96):
        assert (r.diameter == 2) != (r.center_order > 1)


def test_verify_group_record(named):
    rep = verify_group(named("Q8"))
    doc = rep.to_dict()
    assert list(doc) == [
        "schema", "name", "order", "primes", "k_order", "k_members", "diameter",
        "theorem_a", "theorem_b", "sanity", "agrees", "elapsed",
    ]
    assert doc["k_order"] == 2 and doc["diameter"] == 2 and doc["elapsed"] is None
    json.dumps(doc)
    assert verify_group(named("S3")).to_dict()["diameter"] == "infinite"
    assert verify_group(named("C4"), timing=True).elapsed is not None
