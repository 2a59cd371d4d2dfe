"""Finite groups as Cayley tables.

Elements are dense ids ``0..n-1`` with the identity at ``0``. Subsets of a
group are :class:`ElementSet` bitmasks, so membership tests are O(1) and sets
are hashable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 512
EXHAUSTIVE_ASSOCIATIVITY = 64
SAMPLED_TRIPLES = 10_000


class GroupError(ValueError):
    """Raised for malformed group input."""


class GroupAxiomError(GroupError):
    pass


class NotLatinSquareError(GroupAxiomError):
    pass


class MissingIdentityError(GroupAxiomError):
    pass


class MissingInverseError(GroupAxiomError):
    pass


class AssociativityError(GroupAxiomError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"associativity fails for (a, b, c) = ({a}, {b}, {c})")
        self.triple = (a, b, c)


class ResourceLimitError(RuntimeError):
    """An operation would exceed its size or search budget."""


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and prime_factors(p) == [p]


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_power_of(n: int, p: int) -> bool:
    return n >= 1 and p_part(n, p) == n


def _mask_from_bool(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr.astype(bool), bitorder="little").tobytes(), "little")


class Group:
    """A validated finite group given by its Cayley table.

    ``table[a, b]`` is the id of ``a*b``. Construct through
    :func:`from_cayley_table` or :func:`from_permutations` unless the table is
    already known to be a group with identity 0.
    """

    def __init__(self, table: np.ndarray, name: str = "G"):
        table = np.array(table, dtype=np.int32)
        table.setflags(write=False)
        self.table = table
        self.n = int(table.shape[0])
        self.name = name
        self._rows = table.tolist()
        inverse = np.argmin(table, axis=1).astype(np.int32)
        inverse.setflags(write=False)
        self.inverse = inverse
        self.element_order = _element_orders(table)
        self.element_order.setflags(write=False)

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.n})"

    def __len__(self) -> int:
        return self.n

    @property
    def order(self) -> int:
        return self.n

    # element arithmetic

    def _check(self, a: int) -> None:
        if not 0 <= a < self.n:
            raise IndexError(f"element id {a} out of range for {self.name} (order {self.n})")

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        self._check(a)
        return int(self.inverse[a])

    def pow(self, a: int, k: int) -> int:
        self._check(a)
        if k < 0:
            a, k = int(self.inverse[a]), -k
        rows = self._rows
        result = 0
        while k:
            if k & 1:
                result = rows[result][a]
            a = rows[a][a]
            k >>= 1
        return result

    def order_of(self, a: int) -> int:
        self._check(a)
        return int(self.element_order[a])

    def commute(self, a: int, b: int) -> bool:
        return self._rows[a][b] == self._rows[b][a]

    # cached structure

    @cached_property
    def primes(self) -> list[int]:
        return prime_factors(self.n)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def cyclic_membership(self) -> np.ndarray:
        """Boolean matrix ``M[g, x]`` true iff ``x`` lies in ``<g>``."""
        n = self.n
        M = np.zeros((n, n), dtype=bool)
        cur = np.zeros(n, dtype=np.int64)
        ar = np.arange(n)
        for _ in range(int(self.element_order.max())):
            M[ar, cur] = True
            cur = self.table[cur, ar]
        return M

    def element_set(self, members: Iterable[int] = ()) -> "ElementSet":
        return ElementSet.from_members(self, members)

    def whole(self) -> "ElementSet":
        return ElementSet(self, (1 << self.n) - 1)

    def trivial(self) -> "ElementSet":
        return ElementSet(self, 1)


def _element_orders(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    ar = np.arange(n)
    order = np.zeros(n, dtype=np.int64)
    cur = ar.copy()
    for k in range(1, n + 1):
        hit = (cur == 0) & (order == 0)
        order[hit] = k
        if order.all():
            break
        cur = table[cur, ar]
    return order


@dataclass(frozen=True, eq=False)
class ElementSet:
    """A subset of a group's elements stored as an integer bitmask."""

    group: Group
    mask: int

    @classmethod
    def from_members(cls, group: Group, members: Iterable[int]) -> "ElementSet":
        mask = 0
        for x in members:
            group._check(int(x))
            mask |= 1 << int(x)
        return cls(group, mask)

    @classmethod
    def from_bool(cls, group: Group, arr: np.ndarray) -> "ElementSet":
        return cls(group, _mask_from_bool(arr))

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> int(x)) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.group is other.group and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask & ~other.mask)

    def __repr__(self) -> str:
        shown = list(self.members[:12])
        tail = ", ..." if len(self) > 12 else ""
        return f"ElementSet({self.group.name}, size={len(self)}, {shown}{tail})"

    @cached_property
    def bool_array(self) -> np.ndarray:
        n = self.group.n
        raw = np.frombuffer(self.mask.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
        arr = np.unpackbits(raw, bitorder="little")[:n].astype(bool)
        arr.setflags(write=False)
        return arr

    @cached_property
    def members(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.bool_array))

    @property
    def index_array(self) -> np.ndarray:
        return np.flatnonzero(self.bool_array)

    @property
    def least(self) -> int:
        return (self.mask & -self.mask).bit_length() - 1

    def is_subgroup(self) -> bool:
        if 0 not in self:
            return False
        idx = self.index_array
        arr = self.bool_array
        return bool(arr[self.group.table[np.ix_(idx, idx)]].all())


# construction


def from_cayley_table(table: Sequence[Sequence[int]] | np.ndarray, name: str = "G") -> Group:
    """Validate a Cayley table and return the group it defines.

    If the identity is not element 0, ids 0 and e are swapped so that it is.
    """
    T = np.asarray(table)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise GroupError(f"Cayley table must be a non-empty square array, got shape {T.shape}")
    n = T.shape[0]
    if n > MAX_ORDER:
        raise ResourceLimitError(f"order {n} exceeds the cap of {MAX_ORDER}")
    if not np.issubdtype(T.dtype, np.integer):
        raise GroupError("Cayley table entries must be integers")
    T = T.astype(np.int64)
    if T.min() < 0 or T.max() >= n:
        raise GroupError(f"Cayley table entries must lie in 0..{n - 1}")

    ar = np.arange(n)
    row_ok = (np.sort(T, axis=1) == ar).all(axis=1)
    if not row_ok.all():
        r = int(np.flatnonzero(~row_ok)[0])
        raise NotLatinSquareError(f"row {r} is not a permutation of 0..{n - 1}")
    col_ok = (np.sort(T, axis=0) == ar[:, None]).all(axis=0)
    if not col_ok.all():
        c = int(np.flatnonzero(~col_ok)[0])
        raise NotLatinSquareError(f"column {c} is not a permutation of 0..{n - 1}")

    ids = np.flatnonzero((T == ar).all(axis=1) & (T.T == ar).all(axis=1))
    if ids.size == 0:
        raise MissingIdentityError("no two-sided identity element")
    e = int(ids[0])
    if e != 0:
        perm = ar.copy()
        perm[0], perm[e] = e, 0
        # relabel: new id i stands for old id perm[i]; perm is an involution
        T = perm[T[np.ix_(perm, perm)]]

    right = np.argmin(T, axis=1)
    no_inverse = (T[ar, right] != 0) | (T[right, ar] != 0)
    if no_inverse.any():
        bad = int(np.flatnonzero(no_inverse)[0])
        raise MissingInverseError(f"element {bad} has no two-sided inverse")

    _check_associative(T)
    return Group(T, name)


def _check_associative(T: np.ndarray) -> None:
    n = T.shape[0]
    if n <= EXHAUSTIVE_ASSOCIATIVITY:
        lhs = T[T][:, :, :]  # lhs[a, b, c] = T[T[a, b], c]
        rhs = T[:, T]  # rhs[a, b, c] = T[a, T[b, c]]
        bad = np.argwhere(lhs != rhs)
    else:
        rng = np.random.default_rng(n)
        a, b, c = rng.integers(0, n, size=(3, SAMPLED_TRIPLES))
        miss = T[T[a, b], c] != T[a, T[b, c]]
        bad = np.stack([a[miss], b[miss], c[miss]], axis=1)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise AssociativityError(a, b, c)


def from_permutations(degree: int, generators: Sequence[Sequence[int]], name: str = "G") -> Group:
    """Close permutation generators and tabulate the group they generate.

    Products compose right to left: ``(a*b)[i] = a[b[i]]``.
    """
    identity = tuple(range(degree))
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if len(g) != degree or sorted(g) != list(identity):
            raise GroupError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(g)

    elements = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        for g in gens:
            y = tuple(x[j] for j in g)  # x*g
            if y not in index:
                if len(elements) >= MAX_ORDER:
                    raise ResourceLimitError(f"closure exceeds {MAX_ORDER} elements")
                index[y] = len(elements)
                elements.append(y)
        i += 1

    P = np.array(elements, dtype=np.int64).reshape(len(elements), degree)
    n = len(elements)
    comp = P[np.arange(n)[:, None, None], P[None, :, :]]  # comp[a, b] = P[a][P[b]]
    rows = np.concatenate([P, comp.reshape(n * n, degree)])
    _, label = np.unique(rows, axis=0, return_inverse=True)
    label = label.ravel()
    element_of = np.empty(label.max() + 1, dtype=np.int64)
    element_of[label[:n]] = np.arange(n)
    table = element_of[label[n:]].reshape(n, n)
    return from_cayley_table(table, name)


# subgroup machinery


def generated_subgroup(G: Group, seed: Iterable[int] | ElementSet) -> ElementSet:
    """Smallest subgroup containing ``seed``."""
    inside = np.zeros(G.n, dtype=bool)
    inside[0] = True
    gens: list[int] = []
    T = G.table
    for s in seed:
        s = int(s)
        if inside[s]:
            continue
        gens.append(s)
        frontier = np.flatnonzero(inside)
        while frontier.size:
            prod = T[np.ix_(frontier, gens)].ravel()
            new = np.unique(prod[~inside[prod]])
            inside[new] = True
            frontier = new
    return ElementSet.from_bool(G, inside)


def cyclic_subgroup(G: Group, g: int) -> ElementSet:
    return ElementSet.from_bool(G, G.cyclic_membership[g])


def is_cyclic(S: ElementSet) -> tuple[bool, int | None]:
    """Return ``(cyclic, generator)`` for the subgroup ``S``."""
    if not S.is_subgroup():
        raise GroupError("is_cyclic expects a subgroup")
    size = len(S)
    idx = S.index_array
    hits = idx[S.group.element_order[idx] == size]
    if hits.size:
        return True, int(hits[0])
    return False, None


def center(G: Group) -> ElementSet:
    T = G.table
    return ElementSet.from_bool(G, (T == T.T).all(axis=1))


def centralizer(G: Group, S: Iterable[int] | ElementSet) -> ElementSet:
    T = G.table
    keep = np.ones(G.n, dtype=bool)
    for s in S:
        keep &= T[:, s] == T[s, :]
    return ElementSet.from_bool(G, keep)


def normalizer(G: Group, H: ElementSet) -> ElementSet:
    idx = H.index_array
    arr = H.bool_array
    conj = G.table[G.table[:, idx], G.inverse[:, None]]  # conj[g, i] = g h_i g^-1
    return ElementSet.from_bool(G, arr[conj].all(axis=1))


def is_normal(G: Group, H: ElementSet) -> bool:
    return len(normalizer(G, H)) == G.n


def conjugates_of(G: Group, x: int) -> np.ndarray:
    """Array indexed by ``g`` holding ``g x g^-1``."""
    return G.table[G.table[:, x], G.inverse]


@dataclass(frozen=True)
class ConjClasses:
    group: Group
    classes: tuple[ElementSet, ...]
    class_of: tuple[int, ...]

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def conjugacy_classes(G: Group) -> ConjClasses:
    return _conjugacy_classes(G)


def _conjugacy_classes(G: Group) -> ConjClasses:
    cached = G.__dict__.get("_classes")
    if cached is not None:
        return cached
    class_of = np.full(G.n, -1, dtype=np.int64)
    classes = []
    for x in range(G.n):
        if class_of[x] >= 0:
            continue
        orbit = np.zeros(G.n, dtype=bool)
        orbit[conjugates_of(G, x)] = True
        class_of[orbit] = len(classes)
        classes.append(ElementSet.from_bool(G, orbit))
    result = ConjClasses(G, tuple(classes), tuple(int(c) for c in class_of))
    G.__dict__["_classes"] = result
    return result


def normal_closure(G: Group, x: int) -> ElementSet:
    cls = _conjugacy_classes(G)
    return generated_subgroup(G, cls.classes[cls.class_of[x]])


def _join_normal(G: Group, A: ElementSet, B: ElementSet) -> ElementSet:
    # product of two normal subgroups is their join
    prod = G.table[np.ix_(A.index_array, B.index_array)].ravel()
    arr = np.zeros(G.n, dtype=bool)
    arr[prod] = True
    return ElementSet.from_bool(G, arr)


def normal_subgroups(G: Group, limit: int = 5000) -> list[ElementSet]:
    """All normal subgroups, sorted by order then least non-identity member.

    Every normal subgroup is a join of normal closures of single elements, so
    closing those atoms under joins enumerates all of them. ``limit`` bounds
    the number of subgroups found before :class:`ResourceLimitError`.
    """
    cached = G.__dict__.get("_normal_subgroups")
    if cached is not None:
        return list(cached)
    cls = _conjugacy_classes(G)
    atoms = []
    seen_atoms = set()
    for c in cls.classes:
        N = normal_closure(G, c.least)
        if N.mask not in seen_atoms:
            seen_atoms.add(N.mask)
            atoms.append(N)
    found = {G.trivial().mask: G.trivial()}
    queue = [G.trivial()]
    while queue:
        N = queue.pop()
        for A in atoms:
            if A <= N:
                continue
            J = _join_normal(G, N, A)
            if J.mask not in found:
                found[J.mask] = J
                queue.append(J)
                if len(found) > limit:
                    raise ResourceLimitError(f"{G.name} has more than {limit} normal subgroups")
    result = sorted(found.values(), key=lambda N: (len(N), (N.mask & ~1) & -(N.mask & ~1)))
    G.__dict__["_normal_subgroups"] = tuple(result)
    return result


def o_p_prime(G: Group, p: int) -> ElementSet:
    """Largest normal subgroup of order coprime to ``p``."""
    cls = _conjugacy_classes(G)
    U = G.trivial()
    for c in cls.classes:
        x = c.least
        if x in U or G.element_order[x] % p == 0:
            continue
        N = normal_closure(G, x)
        if len(N) % p:
            U = _join_normal(G, U, N)
    return U


def p_elements(G: Group, p: int) -> np.ndarray:
    orders = G.element_order
    return np.array([is_power_of(int(o), p) for o in orders], dtype=bool)


def sylow(G: Group, p: int) -> ElementSet:
    """A Sylow ``p``-subgroup, built by ascent through normalizers."""
    target = p_part(G.n, p)
    if target == 1:
        return G.trivial()
    pel = p_elements(G, p)
    orders = np.where(pel, G.element_order, 0)
    start = int(np.argmax(orders))  # first element of maximal p-power order
    P = cyclic_subgroup(G, start)
    while len(P) < target:
        N = normalizer(G, P)
        cand = np.flatnonzero(N.bool_array & ~P.bool_array & pel)
        if cand.size == 0:
            raise RuntimeError(f"Sylow ascent stalled in {G.name} at order {len(P)} for p={p}")
        P = generated_subgroup(G, _generators_hint(P) + [int(cand[0])])
        if not is_power_of(len(P), p):
            raise RuntimeError(f"Sylow ascent left the {p}-subgroups in {G.name}")
    return P


def _generators_hint(H: ElementSet) -> list[int]:
    """A short generating list for ``H`` (greedy, ascending ids)."""
    G = H.group
    gens: list[int] = []
    cur = G.trivial()
    for x in H.members:
        if x not in cur:
            gens.append(x)
            cur = generated_subgroup(G, gens)
            if cur == H:
                break
    return gens


def has_normal_p_complement(G: Group, p: int) -> ElementSet | None:
    """The normal ``p``-complement if there is one, else ``None``."""
    S = np.flatnonzero(G.element_order % p != 0)
    arr = np.zeros(G.n, dtype=bool)
    arr[S] = True
    if arr[G.table[np.ix_(S, S)]].all():
        return ElementSet.from_bool(G, arr)
    return None


def commutator_subgroup(G: Group, H: ElementSet | None = None) -> ElementSet:
    idx = np.arange(G.n) if H is None else H.index_array
    T, inv = G.table, G.inverse
    # [a, b] = a^-1 b^-1 a b
    ab = T[np.ix_(idx, idx)]
    comm = T[T[np.ix_(inv[idx], inv[idx])], ab]
    return generated_subgroup(G, np.unique(comm))


def derived_series(G: Group) -> tuple[list[ElementSet], bool]:
    series = [G.whole()]
    while True:
        D = commutator_subgroup(G, series[-1])
        if D == series[-1]:
            break
        series.append(D)
    return series, len(series[-1]) == 1


def is_solvable(G: Group) -> bool:
    cached = G.__dict__.get("_solvable")
    if cached is None:
        cached = derived_series(G)[1]
        G.__dict__["_solvable"] = cached
    return cached


def quotient(G: Group, N: ElementSet, name: str | None = None) -> tuple[Group, np.ndarray]:
    """Quotient group ``G/N`` and the projection as an id array."""
    if not N.is_subgroup():
        raise GroupError("quotient needs a subgroup")
    if not is_normal(G, N):
        raise GroupError("quotient needs a normal subgroup")
    cosets = G.table[:, N.index_array].min(axis=1)  # least member of gN
    reps = np.unique(cosets)  # sorted; reps[0] == 0 is the identity coset
    relabel = np.full(G.n, -1, dtype=np.int64)
    relabel[reps] = np.arange(len(reps))
    proj = relabel[cosets]
    table = proj[G.table[np.ix_(reps, reps)]]
    Q = from_cayley_table(table, name or f"{G.name}/N{len(N)}")
    return Q, proj


def order_spectrum(G: Group) -> tuple[tuple[int, int], ...]:
    vals, counts = np.unique(G.element_order, return_counts=True)
    return tuple((int(v), int(c)) for v, c in zip(vals, counts))


def exponent(G: Group) -> int:
    return math.lcm(*(int(o) for o in G.element_order))


# structural predicates


def order_p_elements(G: Group, p: int) -> np.ndarray:
    return np.flatnonzero(G.element_order == p)


def unique_subgroup_order_p(G: Group, p: int) -> tuple[bool, bool]:
    """``(unique, central)`` for the subgroups of prime order ``p``."""
    els = order_p_elements(G, p)
    unique = len(els) == p - 1 and len(els) > 0
    Z = center(G)
    central = len(els) > 0 and all(int(x) in Z for x in els)
    return unique, central


def is_cyclic_group(G: Group) -> bool:
    return int(G.element_order.max()) == G.n


def is_p_group(G: Group, p: int) -> bool:
    return is_power_of(G.n, p)


def is_generalized_quaternion(G: Group) -> bool:
    n = G.n
    if n < 8 or not is_power_of(n, 2):
        return False
    return len(order_p_elements(G, 2)) == 1 and not is_cyclic_group(G)


def subgroup_as_group(H: ElementSet, name: str | None = None) -> Group:
    """Re-index a subgroup as a standalone group (ids follow member order)."""
    G = H.group
    idx = H.index_array
    relabel = np.full(G.n, -1, dtype=np.int64)
    relabel[idx] = np.arange(len(idx))
    return Group(relabel[G.table[np.ix_(idx, idx)]], name or f"{G.name}[{len(idx)}]")
