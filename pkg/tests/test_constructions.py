import math

import numpy as np
import pytest

from enhanced_power import constructions as cons
from enhanced_power.groups import (
    GroupError,
    ResourceLimitError,
    center,
    is_generalized_quaternion,
    is_solvable,
    normal_subgroups,
    o_p_prime,
    order_spectrum,
    subgroup_as_group,
    sylow,
)
from enhanced_power.isomorphism import is_isomorphic


def test_cyclic_has_phi_elements_of_each_order():
    G = cons.cyclic(12)
    counts = dict(order_spectrum(G))
    for d in (1, 2, 3, 4, 6, 12):
        phi = sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)
        assert counts[d] == phi
    assert G.is_abelian


@pytest.mark.parametrize("k", [3, 4, 5])
def test_generalized_quaternion_family(k):
    Q = cons.dicyclic(2**k)
    assert Q.name == f"Q{2**k}"
    involutions = np.flatnonzero(Q.element_order == 2)
    assert len(involutions) == 1
    Z = center(Q)
    assert len(Z) == 2 and int(involutions[0]) in Z
    assert is_generalized_quaternion(Q)


def test_dihedral_8():
    D = cons.dihedral(8)
    assert D.name == "D8" and int((D.element_order == 2).sum()) == 5
    assert not is_generalized_quaternion(D)


def test_dicyclic_12_is_not_quaternion():
    G = cons.dicyclic(12)
    assert G.name == "Dic12" and int((G.element_order == 2).sum()) == 1 and G.n == 12


@pytest.mark.parametrize(
    "kind, param, order",
    [("symmetric", 4, 24), ("alternating", 5, 60), ("alternating", 4, 12), ("elementary_abelian", (3, 2), 9)],
)
def test_construct_family_orders(kind, param, order):
    assert cons.construct_family(kind, param).n == order


@pytest.mark.parametrize(
    "kind, param",
    [("cyclic", 0), ("dihedral", 7), ("dicyclic", 10), ("symmetric", 6), ("elementary_abelian", (4, 2)), ("nope", 3)],
)
def test_construct_family_rejects_bad_parameters(kind, param):
    with pytest.raises(GroupError):
        cons.construct_family(kind, param)


def test_direct_products():
    V = cons.direct_product(cons.cyclic(2), cons.cyclic(2))
    assert V.n == 4 and max(V.element_order) == 2
    G = cons.builtin("C3xQ8")
    assert G.n == 24
    assert len(o_p_prime(G, 2)) == 3
    assert is_generalized_quaternion(subgroup_as_group(sylow(G, 2)))
    Q8 = cons.dicyclic(8)
    assert is_isomorphic(cons.direct_product(Q8, cons.cyclic(1)), Q8)
    with pytest.raises(ResourceLimitError):
        cons.direct_product(cons.cyclic(30), cons.cyclic(30))


def test_direct_product_id_layout():
    G, H = cons.cyclic(3), cons.cyclic(4)
    P = cons.direct_product(G, H)
    for a, b, c, d in [(1, 3, 2, 2), (2, 1, 2, 3)]:
        assert P.mul(a * 4 + b, c * 4 + d) == G.mul(a, c) * 4 + H.mul(b, d)


@pytest.mark.parametrize("q", [2, 3, 5, 9])
def test_field_axioms(q):
    F = cons.field(q)
    add, mul = F.tables()
    els = range(q)
    assert all(add[0, a] == a and mul[1, a] == a for a in els)
    for a in els:
        for b in els:
            assert add[a, b] == add[b, a] and mul[a, b] == mul[b, a]
            for c in els:
                assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]
    for a in range(1, q):
        assert 1 in mul[a]  # inverse exists


def test_gf9_delta_squared_is_minus_one():
    F = cons.FiniteField(3, 2)
    d = F.generator_of_extension
    assert F.mul(d, d) == F.neg(1)


@pytest.mark.parametrize("kind, q", [("SL2", 2), ("GL2", 2), ("SL2", 3), ("GL2", 3), ("SL2", 5), ("GL2", 5)])
def test_matrix_group_orders(kind, q):
    gl = (q * q - 1) * (q * q - q)
    want = gl if kind == "GL2" else gl // (q - 1)
    assert cons.matrix_group(kind, q).n == want


def test_matrix_group_errors():
    with pytest.raises(GroupError):
        cons.matrix_group("SL2", 7)
    with pytest.raises(GroupError):
        cons.matrix_group("PSL2", 3)
    with pytest.raises(ResourceLimitError):
        cons.matrix_group("SL2", 9)


def test_sl2_5_sylow_2_is_quaternion():
    G = cons.matrix_group("SL2", 5)
    P = sylow(G, 2)
    assert len(P) == 8 and is_generalized_quaternion(subgroup_as_group(P))


def test_gl2_3_tilde_properties():
    T = cons.gl2_3_tilde()
    assert T.n == 48
    P = sylow(T, 2)
    assert len(P) == 16 and is_generalized_quaternion(subgroup_as_group(P))
    assert len(center(T)) == 2
    assert not is_isomorphic(T, cons.matrix_group("GL2", 3))
    assert not is_isomorphic(T, cons.builtin("C2xS4"))
    assert is_solvable(T)


def test_gl2_3_tilde_contains_sl2_3_of_index_2():
    T = cons.gl2_3_tilde()
    S = cons.matrix_group("SL2", 3)
    halves = [N for N in normal_subgroups(T) if len(N) == 24]
    assert any(is_isomorphic(subgroup_as_group(N), S) for N in halves)


def test_extras():
    by_name = {G.name: G for G in cons.extras()}
    assert by_name["Q8:C9"].n == 72 and by_name["C3^2:Q8"].n == 72 and by_name["ASL2_3"].n == 216
    # the centre is <-1> x <c^3>, where c generates C9
    assert len(center(by_name["Q8:C9"])) == 6


@pytest.mark.parametrize(
    "name, order",
    [("C12", 12), ("D8", 8), ("Q16", 16), ("S4", 24), ("SL2_3", 24), ("GL2_3", 48), ("GL2_3_TILDE", 48), ("SL2_5", 120), ("C3xQ8", 24), ("C2^3", 8), ("Dic12", 12)],
)
def test_builtin_names(name, order):
    G = cons.builtin(name)
    assert G.n == order and G.name == name


@pytest.mark.parametrize("name", ["Q12", "X5", "D7", ""])
def test_builtin_rejects_unknown(name):
    with pytest.raises(GroupError):
        cons.builtin(name)
