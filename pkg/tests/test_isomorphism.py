import itertools

import numpy as np
import pytest

from enhanced_power import constructions as cons
from enhanced_power.groups import ResourceLimitError, from_cayley_table, generated_subgroup
from enhanced_power.isomorphism import (
    SearchBudgetExceeded,
    automorphism_count,
    find_isomorphism,
    generating_sequence,
    invariants,
    is_isomorphic,
)


def brute_automorphisms(G):
    count = 0
    T = G.table
    for perm in itertools.permutations(range(1, G.n)):
        f = np.array((0,) + perm)
        if (f[T] == T[f[:, None], f[None, :]]).all():
            count += 1
    return count


@pytest.mark.parametrize("name", ["C5", "C6", "C2^2", "S3", "C4"])
def test_automorphism_count_matches_brute_force(name):
    G = cons.builtin(name)
    assert automorphism_count(G) == brute_automorphisms(G)


def test_automorphism_counts_known():
    assert automorphism_count(cons.builtin("Q8")) == 24
    assert automorphism_count(cons.builtin("C8")) == 4
    for name in ("Q16", "Q32"):
        n = automorphism_count(cons.builtin(name))
        assert n & (n - 1) == 0


def test_automorphism_count_caps():
    with pytest.raises(ResourceLimitError):
        automorphism_count(cons.builtin("C3xSL2_3"))
    with pytest.raises(SearchBudgetExceeded):
        automorphism_count(cons.elementary_abelian(2, 5), budget=100)


@pytest.mark.parametrize(
    "a, b, want",
    [
        ("C4", "C2^2", False),
        ("D6", "S3", True),
        ("GL2_3_TILDE", "GL2_3", False),
        ("C6", "C2xC3", True),
        ("D12", "C2xS3", True),
        ("Dic12", "D12", False),
        ("Q16", "D16", False),
        ("C3xQ8", "SL2_3", False),
    ],
)
def test_is_isomorphic_examples(a, b, want):
    assert is_isomorphic(cons.builtin(a), cons.builtin(b)) is want


def test_relabelled_copy_is_isomorphic_with_explicit_map():
    G = cons.builtin("SL2_3")
    rng = np.random.default_rng(7)
    perm = np.concatenate([[0], 1 + rng.permutation(G.n - 1)])
    inv = np.argsort(perm)
    H = from_cayley_table(perm[G.table[np.ix_(inv, inv)]])
    phi = find_isomorphism(G, H)
    assert phi is not None and sorted(phi) == list(range(G.n))
    assert (phi[G.table] == H.table[phi[:, None], phi[None, :]]).all()


def test_reflexive_and_symmetric_on_catalog(catalog_48):
    for G in catalog_48:
        assert is_isomorphic(G, G)
    pairs = [(G, H) for G in catalog_48 for H in catalog_48 if G.n == H.n and G is not H][:200]
    for G, H in pairs:
        assert is_isomorphic(G, H) == is_isomorphic(H, G)
        if invariants(G) != invariants(H):
            assert not is_isomorphic(G, H)


def test_generating_sequence_generates():
    for name in ("Q8", "S4", "C2^3", "SL2_3", "C1"):
        G = cons.builtin(name)
        gens = generating_sequence(G)
        assert len(generated_subgroup(G, gens)) == G.n
    assert len(generating_sequence(cons.builtin("C2^3"))) == 3


def test_isomorphism_order_cap():
    G = cons.builtin("SL2_5")
    with pytest.raises(ResourceLimitError):
        is_isomorphic(G, cons.builtin("SL2_5"), max_order=64)
