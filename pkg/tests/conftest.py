import itertools

import pytest

from enhanced_power import constructions as cons
from enhanced_power.catalog import generate_catalog


@pytest.fixture(scope="session")
def catalog_48():
    return [e.group for e in generate_catalog(48)]


@pytest.fixture(scope="session")
def catalog_96():
    return [e.group for e in generate_catalog(96)]


@pytest.fixture(scope="session")
def named():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = cons.builtin(name)
        return cache[name]

    return get


def brute_closure(G, seed):
    """Subgroup generated by seed, by multiplying pairs until nothing new appears."""
    S = {0, *seed}
    while True:
        new = {G.mul(a, b) for a in S for b in S} | {G.inv(a) for a in S}
        if new <= S:
            return S
        S |= new


def brute_subgroups(G, max_gens=3):
    subs = set()
    for k in range(1, max_gens + 1):
        for seed in itertools.combinations(range(G.n), k):
            subs.add(frozenset(brute_closure(G, seed)))
    return subs


def brute_is_normal(G, S):
    return all(G.mul(G.mul(g, s), G.inv(g)) in S for g in range(G.n) for s in S)
