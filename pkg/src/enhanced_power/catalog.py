"""Desk-scale group corpus, group (de)serialization and report writers.

The corpus is generated from families, direct products and a handful of
matrix groups. It is not the small-groups library: "verified over the
catalog" means verified over exactly these entries.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from . import constructions as cons
from .groups import (
    MAX_ORDER,
    Group,
    GroupError,
    ResourceLimitError,
    from_cayley_table,
    from_permutations,
)
from .isomorphism import invariants, is_isomorphic

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
DEDUPE_BUDGET = 50_000

# lower rank wins when isomorphic entries are merged
_KIND_RANK = {"family": 0, "matrix": 1, "extra": 2, "product": 3}
_FAMILY_RANK = ["cyclic", "elementary_abelian", "symmetric", "alternating", "dihedral", "dicyclic"]


def _preference(entry: "CatalogEntry") -> tuple:
    fam = entry.provenance.split("(")[0]
    fam_rank = _FAMILY_RANK.index(fam) if fam in _FAMILY_RANK else len(_FAMILY_RANK)
    return (_KIND_RANK[entry.kind], fam_rank, entry.group.n, entry.name)


class SpecError(GroupError):
    """A GroupSpec document does not match the schema."""


@dataclass
class CatalogEntry:
    group: Group
    provenance: str
    kind: str
    aliases: list[str] = field(default_factory=list)
    dedupe_unresolved: bool = False

    @property
    def name(self) -> str:
        return self.group.name

    @property
    def invariant_key(self) -> tuple:
        return invariants(self.group)[:4]


def _family_recipes(max_order: int) -> list[tuple[str, Any]]:
    recipes = []
    for n in range(1, max_order + 1):
        recipes.append((f"cyclic({n})", lambda n=n: cons.cyclic(n)))
    for n in range(4, max_order + 1, 2):
        recipes.append((f"dihedral({n})", lambda n=n: cons.dihedral(n)))
    for n in range(8, max_order + 1, 4):
        recipes.append((f"dicyclic({n})", lambda n=n: cons.dicyclic(n)))
    for p in (2, 3, 5, 7):
        k = 2
        while p**k <= max_order:
            recipes.append((f"elementary_abelian({p},{k})", lambda p=p, k=k: cons.elementary_abelian(p, k)))
            k += 1
    factorial = {1: 1, 2: 2, 3: 6, 4: 24, 5: 120}
    for n in range(1, 6):
        if factorial[n] <= max_order:
            recipes.append((f"symmetric({n})", lambda n=n: cons.symmetric(n)))
        if max(1, factorial[n] // 2) <= max_order:
            recipes.append((f"alternating({n})", lambda n=n: cons.alternating(n)))
    return recipes


def _matrix_recipes(max_order: int) -> list[tuple[str, Any]]:
    recipes = [
        ("matrix_group(GL2,2)", 6, lambda: cons.matrix_group("GL2", 2)),
        ("matrix_group(SL2,3)", 24, lambda: cons.matrix_group("SL2", 3)),
        ("matrix_group(GL2,3)", 48, lambda: cons.matrix_group("GL2", 3)),
        ("matrix_group(SL2,5)", 120, lambda: cons.matrix_group("SL2", 5)),
        ("gl2_3_tilde()", 48, cons.gl2_3_tilde),
    ]
    return [(prov, build) for prov, order, build in recipes if order <= max_order]


def _dedupe(entries: list[CatalogEntry], budget: int) -> list[CatalogEntry]:
    entries = sorted(entries, key=_preference)
    buckets: dict[tuple, list[CatalogEntry]] = {}
    kept = []
    for entry in entries:
        reps = buckets.setdefault(entry.invariant_key, [])
        for rep in reps:
            try:
                same = is_isomorphic(rep.group, entry.group, max_order=MAX_ORDER, budget=budget)
            except ResourceLimitError:
                rep.dedupe_unresolved = entry.dedupe_unresolved = True
                log.warning("could not decide %s vs %s; keeping both", rep.name, entry.name)
                continue
            if same:
                rep.aliases.append(entry.name)
                break
        else:
            reps.append(entry)
            kept.append(entry)
    return kept


def generate_catalog(
    max_order: int,
    *,
    families: bool = True,
    products: bool = True,
    matrix_groups: bool = True,
    extras: bool = True,
    dedupe: bool = True,
    dedupe_budget: int = DEDUPE_BUDGET,
) -> list[CatalogEntry]:
    """Build the corpus of groups with order at most ``max_order``.

    Products pair every non-trivial family (or matrix) group with every
    non-trivial family group. With ``dedupe`` on, isomorphic entries collapse
    onto one representative whose ``aliases`` list the others.
    """
    if not 1 <= max_order <= MAX_ORDER:
        raise GroupError(f"max_order must be in 1..{MAX_ORDER}, got {max_order}")

    fam = []
    if families or products:
        fam = [CatalogEntry(build(), prov, "family") for prov, build in _family_recipes(max_order)]
        if dedupe:
            fam = _dedupe(fam, dedupe_budget)
    mats = []
    if matrix_groups:
        mats = [CatalogEntry(build(), prov, "matrix") for prov, build in _matrix_recipes(max_order)]
    extra = []
    if extras:
        extra = [CatalogEntry(G, f"extras:{G.name}", "extra") for G in cons.extras() if G.n <= max_order]

    prods = []
    if products:
        factors = sorted((e for e in fam if e.group.n > 1), key=lambda e: (e.group.n, e.name))
        left = factors + [e for e in mats if e.group.n > 1]
        for i, a in enumerate(left):
            for j, b in enumerate(factors):
                if a.kind == "family" and j < i:
                    continue
                if a.group.n * b.group.n > max_order:
                    continue
                G = cons.direct_product(a.group, b.group)
                prods.append(CatalogEntry(G, f"direct_product({a.name},{b.name})", "product"))

    entries = (fam if families else []) + mats + extra + prods
    if dedupe:
        entries = _dedupe(entries, dedupe_budget)
    return sorted(entries, key=lambda e: (e.group.n, e.name))


# GroupSpec


@dataclass
class GroupSpec:
    name: str
    kind: str
    n: int | None = None
    table: list[list[int]] | None = None
    degree: int | None = None
    generators: list[list[int]] | None = None

    def to_json(self) -> dict:
        doc: dict[str, Any] = {"schema": SCHEMA_VERSION, "name": self.name, "kind": self.kind}
        if self.kind == "cayley":
            doc["n"] = self.n
            doc["table"] = self.table
        else:
            doc["degree"] = self.degree
            doc["generators"] = self.generators
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "GroupSpec":
        if not isinstance(doc, dict):
            raise SpecError("group spec must be a JSON object")
        if doc.get("schema", SCHEMA_VERSION) != SCHEMA_VERSION:
            raise SpecError(f"unsupported schema version {doc.get('schema')!r}")
        kind = doc.get("kind")
        name = doc.get("name", "G")
        if not isinstance(name, str):
            raise SpecError("name must be a string")
        if kind == "cayley":
            n, table = doc.get("n"), doc.get("table")
            if not isinstance(n, int) or not isinstance(table, list):
                raise SpecError("cayley spec needs integer 'n' and list 'table'")
            if len(table) != n or any(not isinstance(r, list) or len(r) != n for r in table):
                raise SpecError(f"table must be {n} rows of {n} entries")
            return cls(name, kind, n=n, table=table)
        if kind == "perm":
            degree, gens = doc.get("degree"), doc.get("generators")
            if not isinstance(degree, int) or not isinstance(gens, list):
                raise SpecError("perm spec needs integer 'degree' and list 'generators'")
            return cls(name, kind, degree=degree, generators=gens)
        raise SpecError(f"kind must be 'cayley' or 'perm', got {kind!r}")


def load_group(spec: GroupSpec | dict | str | Path) -> Group:
    """Decode a spec (object, JSON dict, or path to a JSON file) into a group."""
    if isinstance(spec, (str, Path)):
        try:
            doc = json.loads(Path(spec).read_text())
        except json.JSONDecodeError as exc:
            raise SpecError(f"{spec}: invalid JSON ({exc})") from exc
        spec = GroupSpec.from_json(doc)
    elif isinstance(spec, dict):
        spec = GroupSpec.from_json(spec)
    if spec.kind == "cayley":
        if spec.table and spec.table[0] != list(range(spec.n)):
            raise SpecError("cayley specs must use id 0 for the identity")
        return from_cayley_table(np.array(spec.table), spec.name)
    return from_permutations(spec.degree, spec.generators, spec.name)


def save_group(G: Group, path: str | Path | None = None) -> GroupSpec:
    spec = GroupSpec(G.name, "cayley", n=G.n, table=G.table.tolist())
    if path is not None:
        Path(path).write_text(json.dumps(spec.to_json()) + "\n")
    return spec


# reports

CSV_FIELDS = [
    "schema",
    "name",
    "order",
    "p",
    "predicted",
    "case",
    "actual",
    "agrees",
    "k_order",
    "diameter",
    "theorem_b_applicable",
    "theorem_b_agrees",
]


def _as_dict(report) -> dict:
    return report if isinstance(report, dict) else report.to_dict()


def render_jsonl(reports: Iterable) -> str:
    return "".join(json.dumps(_as_dict(r)) + "\n" for r in reports)


def render_csv(reports: Iterable) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        doc = _as_dict(report)
        for rec in doc["theorem_a"]["records"]:
            writer.writerow(
                {
                    "schema": SCHEMA_VERSION,
                    "name": doc["name"],
                    "order": doc["order"],
                    "p": rec["p"],
                    "predicted": rec["predicted"],
                    "case": rec["case"],
                    "actual": rec["actual"],
                    "agrees": rec["agrees"],
                    "k_order": doc["k_order"],
                    "diameter": doc["diameter"],
                    "theorem_b_applicable": doc["theorem_b"]["applicable"],
                    "theorem_b_agrees": doc["theorem_b"]["agrees"],
                }
            )
    return buf.getvalue()


def write_report(reports: Iterable, path: str | Path, format: str = "jsonl") -> Path:
    if format not in ("jsonl", "csv"):
        raise ValueError(f"format must be 'jsonl' or 'csv', got {format!r}")
    text = render_jsonl(reports) if format == "jsonl" else render_csv(reports)
    path = Path(path)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc
    return path
