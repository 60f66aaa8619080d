from __future__ import annotations

import numpy as np
import pytest

from vsrep import catalog as cat
from vsrep.perm import (
    DegreeBoundError,
    Permutation,
    PermGroup,
    enumerate_elements,
    fixed_points,
    group_order,
    is_transitive,
    is_two_transitive,
    orbit,
    orbits,
    schreier_sims,
)

from oracles import perm_closure


def test_orbit_examples():
    assert orbit(PermGroup.from_images(5, [range(5)]), 0) == {0}
    assert orbit(cat.cyclic(5), 2) == set(range(5))
    for p in range(5):
        assert orbit(cat.sym(5), p) == set(range(5))
    with pytest.raises(ValueError):
        orbit(cat.sym(5), 5)


def test_two_transitivity_examples():
    assert is_two_transitive(cat.sym(5))
    assert not is_two_transitive(cat.cyclic(5))
    assert is_two_transitive(cat.agl1(5))
    with pytest.raises(ValueError):
        is_two_transitive(PermGroup.from_images(1, [[0]]))


def test_orders():
    assert group_order(cat.sym(5)) == 120
    assert group_order(cat.psl2(8)) == 8**3 - 8
    assert group_order(PermGroup.from_images(4, [range(4)])) == 1


def test_fixed_points_examples():
    assert fixed_points(cat.sym_fixed(4)) == {4}
    assert fixed_points(cat.sym(4)) == set()
    assert fixed_points(PermGroup.from_images(3, [range(3)])) == {0, 1, 2}


def test_product_convention():
    s = Permutation((1, 2, 0))
    t = Permutation((1, 0, 2))
    assert (s * t).images == tuple(s(t(i)) for i in range(3))
    assert (s * s.inverse()).is_identity()
    assert Permutation.from_cycles(4, (0, 1, 2)).cycles() == [(0, 1, 2)]
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


@pytest.mark.parametrize(
    "g",
    [cat.sym(5), cat.alt(6), cat.dihedral(7), cat.agl1(7), cat.psl2(5), cat.cyclic(6), cat.alt(5)],
    ids=["S5", "A6", "D7", "AGL1_7", "PSL2_5", "C6", "A5"],
)
def test_order_and_membership_match_closure(g):
    elems = perm_closure([s.images for s in g.generators])
    chain = schreier_sims(g)
    assert chain.order == len(elems)
    for e in list(elems)[:50]:
        assert chain.contains(Permutation(e))
    listed = enumerate_elements(g, 10**6)
    assert {x.images for x in listed} == elems


def test_membership_rejects_outsiders():
    chain = schreier_sims(cat.alt(5))
    assert not chain.contains(Permutation.from_cycles(5, (0, 1)))


def test_enumerate_bound():
    with pytest.raises(DegreeBoundError):
        enumerate_elements(cat.sym(6), 100)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_family_orders(n):
    import math

    assert group_order(cat.sym(n)) == math.factorial(n)
    assert group_order(cat.alt(n)) == math.factorial(n) // 2
    assert group_order(cat.cyclic(n)) == n
    assert group_order(cat.dihedral(n)) == 2 * n


def test_orbit_stabilizer_and_partition():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        gens = [tuple(int(x) for x in rng.permutation(n)) for _ in range(int(rng.integers(1, 3)))]
        g = PermGroup.from_images(n, gens)
        orbs = orbits(g)
        assert sorted(p for o in orbs for p in o) == list(range(n))
        order = group_order(g)
        assert all(order % len(o) == 0 for o in orbs)
        if n >= 2 and is_two_transitive(g):
            assert is_transitive(g)
