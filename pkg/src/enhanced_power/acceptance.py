"""Acceptance checks: each returns a :class:`Check` and prints one line when run."""

from __future__ import annotations

import subprocess
import sys
import tempfile
import time
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import constructions as cons
from .catalog import CatalogEntry, generate_catalog
from .graph import adjacency_by_closure, build_graph, k_prime_divisors_structural, k_subgroup
from .groups import (
    is_generalized_quaternion,
    is_power_of,
    is_solvable,
    prime_factors,
    subgroup_as_group,
    sylow,
)
from .isomorphism import automorphism_count, is_isomorphic
from .structure import (
    Case,
    Lemma23,
    cited_facts,
    lemma_2_3_classify,
    sl25_counterexample_check,
    theorem_a_predict,
    theorem_a_verify,
    theorem_b_verify,
)


@dataclass
class Check:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


@lru_cache(maxsize=None)
def _catalog(max_order: int) -> tuple[CatalogEntry, ...]:
    return tuple(generate_catalog(max_order))


def k_oracle_agreement(max_order: int = 64, limit_s: float = 60.0) -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    entries = generate_catalog(max_order)
    for e in entries:
        G = e.group
        K1, K2 = k_subgroup(G, "universal"), k_subgroup(G, "intersection")
        graph_primes = {p for p in prime_factors(G.n) if K1.order % p == 0}
        if K1.members != K2.members or graph_primes != k_prime_divisors_structural(G):
            bad.append(G.name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= limit_s
    return ok, f"{len(entries)} groups, {len(bad)} disagreements {bad[:5]}, {elapsed:.1f}s <= {limit_s:.0f}s"


def prime_characterization_sweep(max_order: int = 96, limit_s: float = 300.0) -> tuple[bool, str]:
    start = time.perf_counter()
    bad, fired2, fired3 = [], 0, 0
    checked = 0
    for e in generate_catalog(max_order):
        G = e.group
        if not is_solvable(G):
            continue
        checked += 1
        rep = theorem_a_verify(G)
        if not rep.agrees:
            bad.append(G.name)
        fired2 += rep.two_part_ok is not None
        fired3 += rep.three_refinement_ok is not None
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= limit_s
    return ok, (
        f"{checked} solvable groups, {len(bad)} disagreements {bad[:5]}, case 2 fired {fired2}x, "
        f"3-refinement exercised {fired3}x, {elapsed:.1f}s <= {limit_s:.0f}s"
    )


def named_groups() -> tuple[bool, str]:
    facts = {}
    S = cons.matrix_group("SL2", 3)
    facts["|SL2(3)|=24"] = S.n == 24
    facts["|K(SL2(3))|=2"] = k_subgroup(S).order == 2
    facts["SL2(3) case 2B_SL23"] = theorem_a_predict(S, 2).tag is Case.CASE_2B_SL23
    T = cons.gl2_3_tilde()
    P = sylow(T, 2)
    facts["|GL2(3)~|=48"] = T.n == 48
    facts["Sylow2(GL2(3)~)=Q16"] = len(P) == 16 and is_generalized_quaternion(subgroup_as_group(P))
    facts["GL2(3)~ not iso GL2(3)"] = not is_isomorphic(T, cons.matrix_group("GL2", 3))
    G = cons.builtin("C3xQ8")
    facts["|K(C3xQ8)|=6"] = k_subgroup(G).order == 6
    facts["C3xQ8 p=2 case 2A"] = theorem_a_predict(G, 2).tag is Case.CASE_2A_NORMAL_COMPLEMENT
    facts["C3xQ8 p=3 case 1"] = theorem_a_predict(G, 3).tag is Case.CASE_1_CYCLIC_CENTRAL
    failed = [k for k, v in facts.items() if not v]
    return not failed, f"{len(facts)} facts, failed: {failed}"


def quaternion_sylow_trichotomy(max_order: int = 200) -> tuple[bool, str]:
    groups = [e.group for e in _catalog(max_order)] + [G for G in cons.extras() if G.n > max_order]
    tally: dict[str, int] = {}
    violations = []
    for G in groups:
        if G.n % 2 or not is_solvable(G):
            continue
        if not is_generalized_quaternion(subgroup_as_group(sylow(G, 2))):
            continue
        tag = lemma_2_3_classify(G)
        tally[tag.value] = tally.get(tag.value, 0) + 1
        if tag is Lemma23.VIOLATION:
            violations.append(G.name)
    sl25 = sl25_counterexample_check()
    ok = not violations and sl25 and len(tally) == 3
    return ok, f"classified {tally}, violations {violations}, SL2(5) counterexample confirmed={sl25}"


def two_prime_diameter_sweep(max_order: int = 200, limit_s: float = 300.0) -> tuple[bool, str]:
    start = time.perf_counter()
    bad, applicable, lemma31 = [], 0, 0
    for e in _catalog(max_order):
        rep = theorem_b_verify(e.group)
        if not rep.applicable:
            continue
        applicable += 1
        lemma31 += rep.lemma_3_1 is not None
        if not rep.agrees:
            bad.append(e.name)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= limit_s
    return ok, (
        f"{applicable} applicable groups, {len(bad)} disagreements {bad[:5]}, "
        f"two-prime Sylow condition checked on {lemma31}, {elapsed:.1f}s <= {limit_s:.0f}s"
    )


def automorphism_facts() -> tuple[bool, str]:
    counts = {name: automorphism_count(cons.builtin(name)) for name in ("Q8", "Q16", "Q32")}
    ok = counts["Q8"] == 24 and is_power_of(counts["Q16"], 2) and is_power_of(counts["Q32"], 2)
    return ok, f"|Aut| = {counts}"


def cited_fact_suite(max_order: int = 96) -> tuple[bool, str]:
    bad = []
    entries = generate_catalog(max_order)
    for e in entries:
        facts = cited_facts(e.group)
        wanted = ("k_is_subgroup", "k_central", "k_of_quotient_trivial")
        if not all(facts[k] for k in wanted):
            bad.append(e.name)
    return not bad, f"{len(entries)} groups, failures {bad[:5]}"


def graph_oracle_equivalence(max_order: int = 48) -> tuple[bool, str]:
    bad, pairs = [], 0
    entries = [e for e in generate_catalog(max_order) if e.group.n >= 2]
    for e in entries:
        G = e.group
        if not np.array_equal(build_graph(G).adjacency, adjacency_by_closure(G)):
            bad.append(G.name)
        pairs += (G.n - 1) * (G.n - 2) // 2
    return not bad, f"{len(entries)} groups, {pairs} vertex pairs, mismatches {bad[:5]}"


def report_determinism(max_order: int = 96) -> tuple[bool, str]:
    with tempfile.TemporaryDirectory() as tmp:
        outputs = []
        for i in range(2):
            path = Path(tmp) / f"r{i}.jsonl"
            cmd = [sys.executable, "-m", "enhanced_power", "verify-a", "--max-order", str(max_order), "--report", str(path)]
            proc = subprocess.run(cmd, capture_output=True, text=True)
            if proc.returncode != 0:
                return False, f"run {i} exited {proc.returncode}: {proc.stderr.strip()[-200:]}"
            outputs.append(path.read_bytes())
    same = outputs[0] == outputs[1]
    return same and len(outputs[0]) > 0, f"two reports of {len(outputs[0])} bytes, identical={same}"


CRITERIA = [
    (1, "K-oracle agreement (order <= 64)", k_oracle_agreement),
    (2, "K(G) prime characterization sweep (solvable, order <= 96)", prime_characterization_sweep),
    (3, "Named-group checks", named_groups),
    (4, "Quaternion Sylow trichotomy and SL(2,5)", quaternion_sylow_trichotomy),
    (5, "Two-prime diameter sweep (order <= 200)", two_prime_diameter_sweep),
    (6, "Quaternion automorphism counts", automorphism_facts),
    (7, "Cited K(G) facts (order <= 96)", cited_fact_suite),
    (8, "Graph-oracle equivalence (order <= 48)", graph_oracle_equivalence),
    (9, "Report determinism", report_determinism),
]


def run_check(number: int) -> Check:
    _, title, fn = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    passed, detail = fn()
    check = Check(number, title, passed, detail, time.perf_counter() - start)
    print(check.line(), flush=True)
    return check


def run_all() -> list[Check]:
    return [run_check(number) for number, _, _ in CRITERIA]
