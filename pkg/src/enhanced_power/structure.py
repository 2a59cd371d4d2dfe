"""Executable versions of the K(G) characterizations, checked against ground truth.

Ground truth for "p divides |K(G)|" comes from two independent routes: the
universal-vertex scan of the enhanced power graph and the unique-central-
subgroup test. The predictions here use only Sylow structure, normal
complements, O_{2'}(G) and quotient identification.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import constructions
from .graph import (
    INFINITE,
    build_graph,
    diameter,
    k_prime_divisors_structural,
    k_subgroup,
)
from .groups import (
    ElementSet,
    Group,
    GroupError,
    center,
    centralizer,
    derived_series,
    has_normal_p_complement,
    is_cyclic,
    is_cyclic_group,
    is_generalized_quaternion,
    is_solvable,
    o_p_prime,
    order_p_elements,
    p_part,
    prime_factors,
    quotient,
    subgroup_as_group,
    sylow,
    unique_subgroup_order_p,
)
from .isomorphism import is_isomorphic


class Case(str, enum.Enum):
    CASE_1_CYCLIC_CENTRAL = "CASE_1_CYCLIC_CENTRAL"
    CASE_2A_NORMAL_COMPLEMENT = "CASE_2A_NORMAL_COMPLEMENT"
    CASE_2B_SL23 = "CASE_2B_SL23"
    CASE_2B_GL23TILDE = "CASE_2B_GL23TILDE"
    NONE = "NONE"

    @property
    def is_case_2(self) -> bool:
        return self.name.startswith("CASE_2")


class Lemma23(str, enum.Enum):
    NORMAL_2_COMPLEMENT = "NORMAL_2_COMPLEMENT"
    SL23 = "SL23"
    GL23TILDE = "GL23TILDE"
    VIOLATION = "VIOLATION"


@lru_cache(maxsize=None)
def reference_sl2_3() -> Group:
    return constructions.matrix_group("SL2", 3)


@lru_cache(maxsize=None)
def reference_gl2_3_tilde() -> Group:
    return constructions.gl2_3_tilde()


def identify_sl23_or_gl23tilde(H: Group) -> Lemma23 | None:
    if H.n == 24 and is_isomorphic(H, reference_sl2_3()):
        return Lemma23.SL23
    if H.n == 48 and is_isomorphic(H, reference_gl2_3_tilde()):
        return Lemma23.GL23TILDE
    return None


@dataclass
class TheoremACase:
    """A predicted case together with the subsets that justify it."""

    group: Group
    p: int
    tag: Case
    witnesses: dict[str, ElementSet] = field(default_factory=dict)

    def recheck(self) -> bool:
        """Re-verify the witness conditions behind ``tag`` from scratch."""
        G, w = self.group, self.witnesses
        if self.tag is Case.NONE:
            return True
        P = w["P"]
        if self.tag is Case.CASE_1_CYCLIC_CENTRAL:
            return is_cyclic(P)[0] and len(center(G) & P) > 1
        ZP = w["Z(P)"]
        if not is_generalized_quaternion(subgroup_as_group(P)):
            return False
        if self.tag is Case.CASE_2A_NORMAL_COMPLEMENT:
            Q = w["Q"]
            return len(Q) * len(P) == G.n and ZP <= (centralizer(G, Q) & P)
        U = w["O_2'(G)"]
        if not ZP <= (centralizer(G, U) & P):
            return False
        want = Lemma23.SL23 if self.tag is Case.CASE_2B_SL23 else Lemma23.GL23TILDE
        return identify_sl23_or_gl23tilde(quotient(G, U)[0]) is want


def _subgroup_center(P: ElementSet) -> ElementSet:
    G = P.group
    return centralizer(G, P) & P


def theorem_a_predict(G: Group, p: int) -> TheoremACase:
    """Which clause of the solvable-group characterization applies at ``p``."""
    if G.n % p:
        raise GroupError(f"{p} does not divide |{G.name}| = {G.n}")
    if not is_solvable(G):
        raise GroupError(f"{G.name} is not solvable")
    P = sylow(G, p)
    if is_cyclic(P)[0] and len(center(G) & P) > 1:
        return TheoremACase(G, p, Case.CASE_1_CYCLIC_CENTRAL, {"P": P, "Z(G)": center(G)})
    if p != 2 or not is_generalized_quaternion(subgroup_as_group(P)):
        return TheoremACase(G, p, Case.NONE, {"P": P})
    ZP = _subgroup_center(P)
    Q = has_normal_p_complement(G, 2)
    if Q is not None and ZP <= (centralizer(G, Q) & P):
        return TheoremACase(G, p, Case.CASE_2A_NORMAL_COMPLEMENT, {"P": P, "Z(P)": ZP, "Q": Q})
    U = o_p_prime(G, 2)
    if ZP <= (centralizer(G, U) & P):
        ident = identify_sl23_or_gl23tilde(quotient(G, U)[0])
        if ident is Lemma23.SL23:
            return TheoremACase(G, p, Case.CASE_2B_SL23, {"P": P, "Z(P)": ZP, "O_2'(G)": U})
        if ident is Lemma23.GL23TILDE:
            return TheoremACase(G, p, Case.CASE_2B_GL23TILDE, {"P": P, "Z(P)": ZP, "O_2'(G)": U})
    return TheoremACase(G, p, Case.NONE, {"P": P, "Z(P)": ZP})


@dataclass
class PrimeRecord:
    p: int
    predicted: bool
    case: str
    actual: bool
    actual_graph: bool
    actual_structural: bool
    witnesses_recheck: bool

    @property
    def agrees(self) -> bool:
        return self.actual_graph == self.actual_structural == self.predicted and self.witnesses_recheck

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "predicted": self.predicted,
            "case": self.case,
            "actual": self.actual,
            "actual_graph": self.actual_graph,
            "actual_structural": self.actual_structural,
            "witnesses_recheck": self.witnesses_recheck,
            "agrees": self.agrees,
        }


@dataclass
class TheoremAReport:
    applicable: bool
    reason: str
    primes: list[PrimeRecord]
    k_order: int
    two_part_ok: bool | None
    three_refinement_ok: bool | None

    @property
    def agrees(self) -> bool:
        if not self.applicable:
            return True
        return (
            all(r.agrees for r in self.primes)
            and self.two_part_ok is not False
            and self.three_refinement_ok is not False
        )

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "records": [r.to_dict() for r in self.primes],
            "two_part_ok": self.two_part_ok,
            "three_refinement_ok": self.three_refinement_ok,
            "agrees": self.agrees,
        }


def theorem_a_verify(G: Group) -> TheoremAReport:
    K = k_subgroup(G, "universal")
    if not is_solvable(G):
        return TheoremAReport(False, "not solvable", [], K.order, None, None)
    structural = k_prime_divisors_structural(G)
    records = []
    cases = {}
    for p in prime_factors(G.n):
        case = theorem_a_predict(G, p)
        cases[p] = case.tag
        by_graph = K.order % p == 0
        records.append(
            PrimeRecord(
                p=p,
                predicted=case.tag is not Case.NONE,
                case=case.tag.value,
                actual=by_graph,
                actual_graph=by_graph,
                actual_structural=p in structural,
                witnesses_recheck=case.recheck(),
            )
        )
    two_part_ok = None
    three_ok = None
    if cases.get(2, Case.NONE).is_case_2:
        two_part_ok = p_part(K.order, 2) == 2
        if K.order % 3 == 0 and cases[2] in (Case.CASE_2B_SL23, Case.CASE_2B_GL23TILDE):
            three_ok = cases[2] is Case.CASE_2B_SL23
    return TheoremAReport(True, "", records, K.order, two_part_ok, three_ok)


def lemma_2_3_classify(G: Group) -> Lemma23:
    """Place a solvable group with generalized quaternion Sylow 2-subgroup in the trichotomy."""
    if not is_solvable(G):
        raise GroupError(f"{G.name} is not solvable")
    if G.n % 2 or not is_generalized_quaternion(subgroup_as_group(sylow(G, 2))):
        raise GroupError(f"{G.name} does not have a generalized quaternion Sylow 2-subgroup")
    if has_normal_p_complement(G, 2) is not None:
        return Lemma23.NORMAL_2_COMPLEMENT
    ident = identify_sl23_or_gl23tilde(quotient(G, o_p_prime(G, 2))[0])
    return ident or Lemma23.VIOLATION


def sl25_counterexample_facts() -> dict[str, bool]:
    G = constructions.matrix_group("SL2", 5)
    U = o_p_prime(G, 2)
    quot = quotient(G, U)[0]
    return {
        "order_120": G.n == 120,
        "not_solvable": not derived_series(G)[1],
        "sylow2_generalized_quaternion": is_generalized_quaternion(subgroup_as_group(sylow(G, 2))),
        "no_normal_2_complement": has_normal_p_complement(G, 2) is None,
        "o2prime_trivial": len(U) == 1,
        "quotient_not_sl23_or_gl23tilde": quot.n not in (24, 48) or identify_sl23_or_gl23tilde(quot) is None,
    }


def sl25_counterexample_check() -> bool:
    """SL(2,5) shows the trichotomy needs solvability."""
    return all(sl25_counterexample_facts().values())


def theorem_3_2_condition(G: Group) -> bool:
    """Some prime divisor has a unique subgroup of that order, and it is central."""
    return any(all(unique_subgroup_order_p(G, p)) for p in prime_factors(G.n))


@dataclass
class TheoremBReport:
    applicable: bool
    reason: str
    primes: list[int]
    diameter: float | int | None = None
    k_order: int | None = None
    structural: bool | None = None
    single_prime: bool = False
    lemma_3_1: bool | None = None

    @property
    def agrees(self) -> bool:
        if not self.applicable:
            return True
        ok = (self.diameter == 2) == (self.k_order > 1) == self.structural
        return ok and self.lemma_3_1 is not False

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "diameter": _diam_json(self.diameter),
            "k_order": self.k_order,
            "structural": self.structural,
            "single_prime": self.single_prime,
            "lemma_3_1": self.lemma_3_1,
            "agrees": self.agrees,
        }


def _diam_json(d):
    if d is None:
        return None
    return "infinite" if d == INFINITE else int(d)


def theorem_b_applicability(G: Group) -> str:
    """Empty string when applicable, otherwise the reason for skipping."""
    if G.n <= 2:
        return "order <= 2"
    if len(prime_factors(G.n)) > 2:
        return "more than two prime divisors"
    if is_cyclic_group(G):
        return "cyclic (non-cyclicity is an implicit hypothesis)"
    return ""


def theorem_b_verify(G: Group) -> TheoremBReport:
    primes = prime_factors(G.n)
    reason = theorem_b_applicability(G)
    if reason:
        return TheoremBReport(False, reason, primes)
    d = diameter(build_graph(G))
    report = TheoremBReport(
        True,
        "",
        primes,
        diameter=d,
        k_order=k_subgroup(G).order,
        structural=theorem_3_2_condition(G),
        single_prime=len(primes) == 1,
    )
    if len(primes) == 2 and d == 2:
        report.lemma_3_1 = lemma_3_1_check(G)
    return report


def lemma_3_1_check(G: Group) -> bool:
    """Every element of order p is adjacent to every element of order q."""
    primes = prime_factors(G.n)
    if len(primes) != 2:
        raise GroupError(f"{G.name} is not divisible by exactly two primes")
    graph = build_graph(G)
    if diameter(graph) != 2:
        raise GroupError(f"Delta({G.name}) does not have diameter 2")
    p, q = primes
    xs, ys = order_p_elements(G, p), order_p_elements(G, q)
    return bool(graph.adjacency[xs[:, None], ys[None, :]].all())


@dataclass
class OpenQuestionFinding:
    name: str
    order: int
    primes: list[int]
    diameter: float | int
    center_order: int
    k_order: int

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "primes": self.primes,
            "diameter": _diam_json(self.diameter),
            "center_order": self.center_order,
            "k_order": self.k_order,
        }


def open_question_rows(groups: Iterable[Group]) -> list[OpenQuestionFinding]:
    """Tabulate diameter against |Z(G)| for non-cyclic groups with exactly three prime divisors."""
    rows = []
    for G in groups:
        primes = prime_factors(G.n)
        if len(primes) != 3 or is_cyclic_group(G):
            continue
        rows.append(
            OpenQuestionFinding(
                G.name, G.n, primes, diameter(build_graph(G)), len(center(G)), k_subgroup(G).order
            )
        )
    return rows


def open_question_scan(groups: Iterable[Group]) -> list[OpenQuestionFinding]:
    """Groups where ``diam = 2`` and ``|Z(G)| > 1`` disagree (candidate counterexamples)."""
    return [r for r in open_question_rows(groups) if (r.diameter == 2) != (r.center_order > 1)]


@dataclass
class VerificationReport:
    name: str
    order: int
    primes: list[int]
    k_order: int
    k_members: list[int]
    diameter: float | int | None
    theorem_a: TheoremAReport
    theorem_b: TheoremBReport
    sanity: dict[str, bool]
    elapsed: float | None = None

    @property
    def agrees(self) -> bool:
        return self.theorem_a.agrees and self.theorem_b.agrees and all(self.sanity.values())

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "name": self.name,
            "order": self.order,
            "primes": self.primes,
            "k_order": self.k_order,
            "k_members": self.k_members,
            "diameter": _diam_json(self.diameter),
            "theorem_a": self.theorem_a.to_dict(),
            "theorem_b": self.theorem_b.to_dict(),
            "sanity": self.sanity,
            "agrees": self.agrees,
            "elapsed": self.elapsed,
        }


def cited_facts(G: Group) -> dict[str, bool]:
    """K(G) is a subgroup, central, agrees across methods, and K(G/K(G)) = 1."""
    K = k_subgroup(G, "universal")
    K2 = k_subgroup(G, "intersection")
    facts = {
        "k_methods_agree": K.members == K2.members,
        "k_is_subgroup": K.members.is_subgroup(),
        "k_central": K.members <= center(G),
        "k_primes_structural": {p for p in prime_factors(G.n) if K.order % p == 0}
        == k_prime_divisors_structural(G),
    }
    if facts["k_is_subgroup"] and facts["k_central"]:
        Q, _ = quotient(G, K.members)
        facts["k_of_quotient_trivial"] = k_subgroup(Q).order == 1 if Q.n > 1 else True
    else:
        facts["k_of_quotient_trivial"] = False
    return facts


def verify_group(G: Group, *, timing: bool = False) -> VerificationReport:
    """Full per-group verification record."""
    start = time.perf_counter()
    K = k_subgroup(G)
    d = diameter(build_graph(G)) if G.n > 1 else None
    report = VerificationReport(
        name=G.name,
        order=G.n,
        primes=prime_factors(G.n),
        k_order=K.order,
        k_members=list(K.members.members),
        diameter=d,
        theorem_a=theorem_a_verify(G),
        theorem_b=theorem_b_verify(G),
        sanity=cited_facts(G),
    )
    if timing:
        report.elapsed = round(time.perf_counter() - start, 6)
    return report
