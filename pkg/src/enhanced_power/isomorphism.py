"""Isomorphism testing and automorphism counting by backtracking.

Both searches map a short generating sequence of the source group onto
candidate images and propagate the partial homomorphism over the subgroup
generated so far, pruning as soon as a relation or injectivity fails.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .groups import (
    Group,
    ResourceLimitError,
    center,
    conjugacy_classes,
    derived_series,
    generated_subgroup,
    order_spectrum,
)

ISOMORPHISM_MAX_ORDER = 128
AUTOMORPHISM_MAX_ORDER = 64
DEFAULT_BUDGET = 200_000


class SearchBudgetExceeded(ResourceLimitError):
    pass


def invariants(G: Group) -> tuple:
    """Cheap isomorphism invariants, compared before any search."""
    cached = G.__dict__.get("_invariants")
    if cached is None:
        classes = conjugacy_classes(G)
        cached = (
            G.n,
            order_spectrum(G),
            len(center(G)),
            tuple(sorted(classes.sizes)),
            len(derived_series(G)[0]),
        )
        G.__dict__["_invariants"] = cached
    return cached


def element_signatures(G: Group) -> np.ndarray:
    """Per-element ``order * n + class size``, preserved by isomorphisms."""
    cached = G.__dict__.get("_signatures")
    if cached is None:
        classes = conjugacy_classes(G)
        size = np.array([len(classes.classes[c]) for c in classes.class_of])
        cached = G.element_order.astype(np.int64) * (G.n + 1) + size
        G.__dict__["_signatures"] = cached
    return cached


def generating_sequence(G: Group) -> list[int]:
    """Greedy generators: each step takes the element that grows the subgroup most.

    Ties go to the lowest id.
    """
    cached = G.__dict__.get("_genseq")
    if cached is not None:
        return cached
    gens: list[int] = []
    H = G.trivial()
    while len(H) < G.n:
        best, best_size = -1, 0
        seen = set()
        for x in range(G.n):
            if x in H:
                continue
            S = generated_subgroup(G, gens + [x])
            if S.mask in seen:
                continue
            seen.add(S.mask)
            if len(S) > best_size:
                best, best_size = x, len(S)
                if best_size == G.n:
                    break
        gens.append(best)
        H = generated_subgroup(G, gens)
    G.__dict__["_genseq"] = gens
    return gens


def _extend(G: Group, H: Group, gens: list[int], images: list[int]) -> np.ndarray | None:
    """Propagate ``gens[i] -> images[i]`` over ``<gens>``; None on a relation clash."""
    phi = np.full(G.n, -1, dtype=np.int64)
    phi[0] = 0
    g = np.array(gens, dtype=np.int64)
    h = np.array(images, dtype=np.int64)
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        targets = G.table[frontier[:, None], g[None, :]].ravel()
        values = H.table[phi[frontier][:, None], h[None, :]].ravel()
        fresh = phi[targets] == -1
        phi[targets[fresh]] = values[fresh]
        if not (phi[targets] == values).all():
            return None
        frontier = np.unique(targets[fresh])
    mapped = phi[phi >= 0]
    if len(np.unique(mapped)) != len(mapped):
        return None
    return phi


def _search(G: Group, H: Group, count_all: bool, budget: int) -> int:
    gens = generating_sequence(G)
    sig_G = element_signatures(G)
    sig_H = element_signatures(H)
    candidates = [np.flatnonzero(sig_H == sig_G[x]).tolist() for x in gens]
    found = 0
    nodes = 0

    def descend(depth: int, images: list[int]) -> bool:
        nonlocal found, nodes
        for y in candidates[depth]:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"search budget of {budget} nodes exhausted ({G.name} -> {H.name})")
            trial = images + [y]
            phi = _extend(G, H, gens[: depth + 1], trial)
            if phi is None:
                continue
            if depth + 1 == len(gens):
                found += 1
                if not count_all:
                    return True
            elif descend(depth + 1, trial):
                return True
        return False

    if not gens:  # trivial group
        return 1
    descend(0, [])
    return found


def _abelian_shortcut(G: Group, H: Group) -> bool | None:
    # finite abelian groups are determined by their order spectrum
    if G.is_abelian and H.is_abelian:
        return order_spectrum(G) == order_spectrum(H)
    if G.is_abelian != H.is_abelian:
        return False
    return None


def is_isomorphic(
    G: Group,
    H: Group,
    *,
    max_order: int = ISOMORPHISM_MAX_ORDER,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Decide ``G ≅ H``.

    Raises :class:`SearchBudgetExceeded` (never returns False) when the search
    runs out of budget, and :class:`ResourceLimitError` above ``max_order``.
    """
    if G.n != H.n:
        return False
    if invariants(G) != invariants(H):
        return False
    if Counter(element_signatures(G).tolist()) != Counter(element_signatures(H).tolist()):
        return False
    shortcut = _abelian_shortcut(G, H)
    if shortcut is not None:
        return shortcut
    if G.n > max_order:
        raise ResourceLimitError(f"isomorphism search capped at order {max_order}, got {G.n}")
    return _search(G, H, count_all=False, budget=budget) > 0


def find_isomorphism(G: Group, H: Group, budget: int = DEFAULT_BUDGET) -> np.ndarray | None:
    """An explicit isomorphism as an id array, or None."""
    if G.n != H.n or invariants(G) != invariants(H):
        return None
    gens = generating_sequence(G)
    if not gens:
        return np.zeros(1, dtype=np.int64)
    sig_G, sig_H = element_signatures(G), element_signatures(H)
    candidates = [np.flatnonzero(sig_H == sig_G[x]).tolist() for x in gens]
    nodes = 0

    def descend(depth, images):
        nonlocal nodes
        for y in candidates[depth]:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"search budget of {budget} nodes exhausted")
            phi = _extend(G, H, gens[: depth + 1], images + [y])
            if phi is None:
                continue
            if depth + 1 == len(gens):
                return phi
            out = descend(depth + 1, images + [y])
            if out is not None:
                return out
        return None

    return descend(0, [])


def automorphism_count(G: Group, budget: int = 2_000_000) -> int:
    """Exact ``|Aut(G)|`` for ``|G| <= 64``."""
    if G.n > AUTOMORPHISM_MAX_ORDER:
        raise ResourceLimitError(f"automorphism counting capped at order {AUTOMORPHISM_MAX_ORDER}")
    return _search(G, G, count_all=True, budget=budget)
