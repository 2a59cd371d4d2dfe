"""Concrete groups: standard families, direct products and 2x2 matrix groups."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .groups import (
    MAX_ORDER,
    Group,
    GroupError,
    ResourceLimitError,
    from_cayley_table,
    from_permutations,
    generated_subgroup,
    is_generalized_quaternion,
    is_power_of,
    is_prime,
    subgroup_as_group,
    sylow,
)


def cyclic(n: int) -> Group:
    if not 1 <= n <= MAX_ORDER:
        raise GroupError(f"cyclic order must be in 1..{MAX_ORDER}, got {n}")
    ar = np.arange(n)
    return from_cayley_table((ar[:, None] + ar[None, :]) % n, f"C{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given order ``2m``; elements ``r^i s^j`` have id ``j*m + i``."""
    if order < 4 or order % 2 or order > MAX_ORDER:
        raise GroupError(f"dihedral order must be even and in 4..{MAX_ORDER}, got {order}")
    m = order // 2
    i, j = np.divmod(np.arange(order), m)[::-1]
    # r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
    sign = np.where(j == 1, -1, 1)
    e = (i[:, None] + sign[:, None] * i[None, :]) % m
    f = (j[:, None] + j[None, :]) % 2
    return from_cayley_table(f * m + e, f"D{order}")


def dicyclic(order: int) -> Group:
    """Dicyclic group of order ``4m``: ``<a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>``.

    For ``order`` a power of two this is the generalized quaternion group and
    is named ``Q<order>``; otherwise ``Dic<order>``.
    """
    if order < 8 or order % 4 or order > MAX_ORDER:
        raise GroupError(f"dicyclic order must be a multiple of 4 in 8..{MAX_ORDER}, got {order}")
    m2 = order // 2
    m = m2 // 2
    i, j = np.arange(order) % m2, np.arange(order) // m2
    sign = np.where(j == 1, -1, 1)
    e = i[:, None] + sign[:, None] * i[None, :]
    jj = j[:, None] + j[None, :]
    e = (e + np.where(jj == 2, m, 0)) % m2
    f = jj % 2
    name = f"Q{order}" if is_power_of(order, 2) else f"Dic{order}"
    return from_cayley_table(f * m2 + e, name)


def elementary_abelian(p: int, k: int) -> Group:
    if not is_prime(p) or k < 1 or p**k > MAX_ORDER:
        raise GroupError(f"elementary abelian {p}^{k} out of range")
    n = p**k
    digits = np.array([[(x // p**t) % p for t in range(k)] for x in range(n)])
    s = (digits[:, None, :] + digits[None, :, :]) % p
    ids = (s * (p ** np.arange(k))).sum(axis=2)
    return from_cayley_table(ids, f"C{p}^{k}" if k > 1 else f"C{p}")


def symmetric(n: int) -> Group:
    if not 1 <= n <= 5:
        raise GroupError(f"symmetric degree must be in 1..5, got {n}")
    gens = []
    if n >= 2:
        gens.append([1, 0] + list(range(2, n)))
        gens.append(list(range(1, n)) + [0])
    return from_permutations(n, gens, f"S{n}")


def alternating(n: int) -> Group:
    if not 1 <= n <= 5:
        raise GroupError(f"alternating degree must be in 1..5, got {n}")
    gens = []
    for t in range(2, n):
        g = list(range(n))
        g[0], g[1], g[t] = 1, t, 0  # the 3-cycle (0 1 t)
        gens.append(g)
    return from_permutations(n, gens, f"A{n}")


FAMILIES = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "symmetric": symmetric,
    "alternating": alternating,
}


def construct_family(kind: str, parameter) -> Group:
    """Build a family member, e.g. ``construct_family("dicyclic", 16)``.

    ``elementary_abelian`` takes a ``(p, k)`` pair.
    """
    if kind == "elementary_abelian":
        p, k = parameter
        return elementary_abelian(p, k)
    try:
        build = FAMILIES[kind]
    except KeyError:
        raise GroupError(f"unknown family {kind!r}") from None
    return build(parameter)


def direct_product(G: Group, H: Group, name: str | None = None) -> Group:
    """``G x H`` with ``(a, b)`` stored as id ``a*|H| + b``."""
    if G.n * H.n > MAX_ORDER:
        raise ResourceLimitError(f"|{G.name} x {H.name}| = {G.n * H.n} exceeds {MAX_ORDER}")
    TG = G.table.astype(np.int64)
    TH = H.table.astype(np.int64)
    table = (TG[:, None, :, None] * H.n + TH[None, :, None, :]).reshape(G.n * H.n, G.n * H.n)
    return from_cayley_table(table, name or f"{G.name}x{H.name}")


# finite fields and 2x2 matrices


@dataclass(frozen=True)
class FiniteField:
    """GF(p) or GF(p^2) with elements encoded as ints ``c0 + c1*p``.

    The quadratic extension uses ``x^2 + 1`` for ``p = 3`` and a searched
    monic irreducible ``x^2 - c`` otherwise.
    """

    p: int
    k: int

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def nonresidue(self) -> int:
        # x^2 = nonresidue in the extension
        p = self.p
        squares = {(a * a) % p for a in range(p)}
        if p == 3:
            return 2  # x^2 + 1, i.e. x^2 = -1
        return next(c for c in range(2, p) if c not in squares)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**t) % self.p for t in range(self.k))

    def encode(self, coeffs) -> int:
        return sum((c % self.p) * self.p**t for t, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        a0, a1 = self.coeffs(a)
        b0, b1 = self.coeffs(b)
        r = self.nonresidue
        return self.encode([a0 * b0 + r * a1 * b1, a0 * b1 + a1 * b0])

    def neg(self, a: int) -> int:
        return self.encode([-c for c in self.coeffs(a)])

    @property
    def generator_of_extension(self) -> int:
        """The class of ``x`` (only meaningful for ``k = 2``)."""
        return self.p

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        return _field_tables(self.p, self.k)


@lru_cache(maxsize=None)
def _field_tables(p: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    F = FiniteField(p, k)
    q = F.q
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    return add, mul


def field(q: int) -> FiniteField:
    if q in (2, 3, 5, 7):
        return FiniteField(q, 1)
    if q == 9:
        return FiniteField(3, 2)
    raise GroupError(f"unsupported field size {q}")


def _det(F: FiniteField, m) -> int:
    a, b, c, d = m
    return F.add(F.mul(a, d), F.neg(F.mul(b, c)))


def _matrix_table(F: FiniteField, mats: list[tuple[int, int, int, int]]) -> np.ndarray:
    """Cayley table of a list of 2x2 matrices (row-major 4-tuples) closed under product."""
    add, mul = F.tables()
    q = F.q
    M = np.array(mats, dtype=np.int64)
    a, b, c, d = (M[:, t] for t in range(4))
    # (A*B) entries for every pair, A indexed by rows
    e00 = add[mul[a[:, None], a[None, :]], mul[b[:, None], c[None, :]]]
    e01 = add[mul[a[:, None], b[None, :]], mul[b[:, None], d[None, :]]]
    e10 = add[mul[c[:, None], a[None, :]], mul[d[:, None], c[None, :]]]
    e11 = add[mul[c[:, None], b[None, :]], mul[d[:, None], d[None, :]]]
    key = ((e00 * q + e01) * q + e10) * q + e11
    lookup = np.full(q**4, -1, dtype=np.int64)
    lookup[((a * q + b) * q + c) * q + d] = np.arange(len(mats))
    table = lookup[key]
    if (table < 0).any():
        raise RuntimeError("matrix set is not closed under multiplication")
    return table


def _order_matrices(F: FiniteField, mats) -> list[tuple[int, int, int, int]]:
    one = (1, 0, 0, 1)
    rest = sorted(m for m in mats if m != one)
    return [one] + rest


def matrix_group(kind: str, q: int) -> Group:
    """``SL2`` or ``GL2`` over GF(q), enumerated and tabulated."""
    if kind not in ("SL2", "GL2"):
        raise GroupError(f"matrix group kind must be SL2 or GL2, got {kind!r}")
    if q not in (2, 3, 5, 9):
        raise GroupError(f"unsupported q={q}; expected one of 2, 3, 5, 9")
    F = field(q)
    size = (q * q - 1) * (q * q - q)
    if kind == "SL2":
        size //= q - 1
    if size > MAX_ORDER:
        raise ResourceLimitError(f"{kind}({q}) has order {size} > {MAX_ORDER}")
    mats = []
    for m in itertools.product(range(q), repeat=4):
        det = _det(F, m)
        if (kind == "GL2" and det != 0) or (kind == "SL2" and det == 1):
            mats.append(m)
    mats = _order_matrices(F, mats)
    return from_cayley_table(_matrix_table(F, mats), f"{kind}_{q}")


def gl2_3_tilde() -> Group:
    """The order-48 group isoclinic to GL(2,3) with a Q16 Sylow 2-subgroup.

    Realised inside SL(2,9) as ``SL(2,3)`` together with ``delta*g`` for the
    ``g`` in GL(2,3) of determinant -1, where ``delta^2 = -1`` in GF(9).
    """
    F = FiniteField(3, 2)
    delta = F.generator_of_extension
    minus_one = F.neg(1)
    assert F.mul(delta, delta) == minus_one
    mats = set()
    for m in itertools.product(range(3), repeat=4):
        det = _det(FiniteField(3, 1), m)
        if det == 1:
            mats.add(m)
        elif det == 2:
            mats.add(tuple(F.mul(delta, e) for e in m))
    mats = _order_matrices(F, mats)
    G = from_cayley_table(_matrix_table(F, mats), "GL2_3_TILDE")
    P = sylow(G, 2)
    if G.n != 48 or len(P) != 16 or not is_generalized_quaternion(subgroup_as_group(P)):
        raise RuntimeError("GL2_3_TILDE failed its order/Sylow verification")
    return G


def affine_group(p: int, matrices, name: str) -> Group:
    """Maps ``v -> A v + b`` on GF(p)^2, with ``A`` from the group generated by ``matrices``.

    Built as a permutation group on the ``p^2`` vectors ``v = (v0, v1)``
    stored as ``v0 + p*v1``.
    """
    pts = [(a, b) for b in range(p) for a in range(p)]
    gens = [[((a + 1) % p) + p * b for a, b in pts], [a + p * ((b + 1) % p) for a, b in pts]]
    for (m00, m01), (m10, m11) in matrices:
        gens.append([((m00 * a + m01 * b) % p) + p * ((m10 * a + m11 * b) % p) for a, b in pts])
    return from_permutations(p * p, gens, name)


def q8_by_c9() -> Group:
    """Q8 extended by C9 acting through its C3 quotient, order 72.

    Realised inside SL(2,3) x C9 as the subgroup generated by ``Q8 x 1`` and
    ``(w, c)`` with ``w`` of order 3 and ``c`` a generator of C9.
    """
    S = matrix_group("SL2", 3)
    W = direct_product(S, cyclic(9))
    w = int(np.flatnonzero(S.element_order == 3)[0])
    Q = sylow(S, 2)
    gens = [x * 9 for x in Q.members] + [w * 9 + 1]
    return subgroup_as_group(generated_subgroup(W, gens), "Q8:C9")


# i = [[0, -1], [1, 0]] and j = [[1, 1], [1, -1]] generate Q8 in SL(2,3)
_Q8_IN_SL23 = [((0, 2), (1, 0)), ((1, 1), (1, 2))]
_SL23_GENS = [((1, 1), (0, 1)), ((1, 0), (1, 1))]


def extras() -> list[Group]:
    """Small groups outside the families that exercise the rarer theorem clauses."""
    return [
        q8_by_c9(),
        affine_group(3, _Q8_IN_SL23, "C3^2:Q8"),
        affine_group(3, _SL23_GENS, "ASL2_3"),
    ]


# built-in names


def _parse_single(token: str) -> Group:
    fixed = {
        "SL2_2": lambda: matrix_group("SL2", 2),
        "GL2_2": lambda: matrix_group("GL2", 2),
        "SL2_3": lambda: matrix_group("SL2", 3),
        "GL2_3": lambda: matrix_group("GL2", 3),
        "SL2_5": lambda: matrix_group("SL2", 5),
        "GL2_5": lambda: matrix_group("GL2", 5),
        "GL2_3_TILDE": gl2_3_tilde,
    }
    if token in fixed:
        return fixed[token]()
    patterns = [
        (r"C(\d+)\^(\d+)", lambda p, k: elementary_abelian(int(p), int(k))),
        (r"C(\d+)", lambda n: cyclic(int(n))),
        (r"D(\d+)", lambda n: dihedral(int(n))),
        (r"Q(\d+)", lambda n: _quaternion(int(n))),
        (r"Dic(\d+)", lambda n: dicyclic(int(n))),
        (r"S(\d+)", lambda n: symmetric(int(n))),
        (r"A(\d+)", lambda n: alternating(int(n))),
    ]
    for pattern, build in patterns:
        m = re.fullmatch(pattern, token)
        if m:
            return build(*m.groups())
    raise GroupError(f"unknown group name {token!r}")


def _quaternion(n: int) -> Group:
    if not is_power_of(n, 2) or n < 8:
        raise GroupError(f"Q{n}: generalized quaternion order must be a power of 2 >= 8")
    return dicyclic(n)


def builtin(name: str) -> Group:
    """Resolve names like ``Q16``, ``SL2_3``, ``GL2_3_TILDE`` or ``C3xQ8``."""
    parts = name.split("x")
    G = _parse_single(parts[0])
    for part in parts[1:]:
        G = direct_product(G, _parse_single(part))
    G.name = name
    return G
