import json

import numpy as np
import pytest

from enhanced_power import constructions as cons
from enhanced_power.catalog import (
    CSV_FIELDS,
    GroupSpec,
    SpecError,
    generate_catalog,
    load_group,
    render_csv,
    save_group,
    write_report,
)
from enhanced_power.groups import GroupAxiomError, GroupError
from enhanced_power.isomorphism import is_isomorphic
from enhanced_power.structure import verify_group


def names(entries):
    return [e.name for e in entries]


def test_order_8_corpus():
    entries = generate_catalog(8)
    eights = [e.name for e in entries if e.group.n == 8]
    assert sorted(eights) == sorted(["C8", "C2^3", "C2xC4", "D8", "Q8"])
    assert len(entries) == 14


def test_order_48_contains_matrix_groups(catalog_48):
    by_name = {G.name: G for G in catalog_48}
    trio = [by_name[n] for n in ("SL2_3", "GL2_3", "GL2_3_TILDE")]
    assert not is_isomorphic(trio[1], trio[2])
    assert "C3xQ8" in by_name
    assert not is_isomorphic(trio[0], cons.builtin("S4"))


def test_isomorphic_entries_merge():
    entries = generate_catalog(12)
    c6 = next(e for e in entries if e.name == "C6")
    assert "C2xC3" in c6.aliases
    assert "C2xC3" not in names(entries)
    # S3 and D6 are the same group; the symmetric family wins
    s3 = next(e for e in entries if e.group.n == 6 and not e.group.is_abelian)
    assert s3.name == "S3" and "D6" in s3.aliases and "GL2_2" in s3.aliases


def test_catalog_is_deterministic():
    a = generate_catalog(24)
    b = generate_catalog(24)
    assert names(a) == names(b)
    assert all(np.array_equal(x.group.table, y.group.table) for x, y in zip(a, b))


def test_dedupe_is_sound():
    # no two kept entries are isomorphic
    entries = generate_catalog(48)
    buckets = {}
    for e in entries:
        buckets.setdefault(e.invariant_key, []).append(e.group)
    for groups in buckets.values():
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                assert not is_isomorphic(groups[i], groups[j], max_order=512)
    assert not any(e.dedupe_unresolved for e in entries)


def test_catalog_switches():
    only_families = generate_catalog(16, products=False, matrix_groups=False, extras=False)
    assert all(e.kind == "family" for e in only_families)
    raw = generate_catalog(16, dedupe=False)
    assert len(raw) > len(generate_catalog(16))


def test_catalog_bounds():
    with pytest.raises(GroupError):
        generate_catalog(0)
    with pytest.raises(GroupError):
        generate_catalog(10_000)


def test_spec_round_trip(tmp_path, named):
    G = named("Q8")
    path = tmp_path / "q8.json"
    save_group(G, path)
    H = load_group(path)
    assert H.name == "Q8" and np.array_equal(H.table, G.table)
    doc = json.loads(path.read_text())
    assert doc["schema"] == 1 and doc["kind"] == "cayley"
    assert GroupSpec.from_json(doc).to_json() == doc


def test_perm_spec():
    G = load_group({"name": "S3", "kind": "perm", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})
    assert G.n == 6 and not G.is_abelian


@pytest.mark.parametrize(
    "doc, err",
    [
        ({"kind": "cayley", "n": 2, "table": [[0, 1], [0, 1]]}, GroupAxiomError),
        ({"kind": "cayley", "n": 2, "table": [[1, 0], [0, 1]]}, SpecError),
        ({"kind": "cayley", "n": 3, "table": [[0, 1], [1, 0]]}, SpecError),
        ({"kind": "matrix"}, SpecError),
        ({"schema": 7, "kind": "cayley", "n": 1, "table": [[0]]}, SpecError),
        ([1, 2], SpecError),
    ],
)
def test_bad_specs(doc, err):
    with pytest.raises(err):
        load_group(doc) if isinstance(doc, dict) else GroupSpec.from_json(doc)


def test_invalid_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(SpecError):
        load_group(path)


def test_write_report_empty(tmp_path):
    assert write_report([], tmp_path / "e.jsonl").read_text() == ""
    text = write_report([], tmp_path / "e.csv", "csv").read_text()
    assert text == ",".join(CSV_FIELDS) + "\n"


def test_csv_one_row_per_prime(named):
    text = render_csv([verify_group(named("C3xQ8"))])
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[1].startswith("1,C3xQ8,24,2,True,CASE_2A_NORMAL_COMPLEMENT")


def test_reports_are_byte_identical(tmp_path, named):
    groups = [named(n) for n in ("S3", "Q8", "SL2_3")]
    for fmt in ("jsonl", "csv"):
        a = write_report([verify_group(G) for G in groups], tmp_path / f"a.{fmt}", fmt).read_bytes()
        b = write_report([verify_group(G) for G in groups], tmp_path / f"b.{fmt}", fmt).read_bytes()
        assert a == b and a


def test_write_report_errors(tmp_path):
    with pytest.raises(ValueError):
        write_report([], tmp_path / "x", "xml")
    with pytest.raises(OSError):
        write_report([], tmp_path / "missing" / "x.jsonl")
