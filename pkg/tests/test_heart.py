from __future__ import annotations

import numpy as np
import pytest

from vsrep import catalog as cat
from vsrep.field import GF
from vsrep.heart import heart, heart_dim, heart_faithful, kappa_embed, remark_odd_check, theorem_simple_check
from vsrep.linalg import mat_mul
from vsrep.normalg import very_simple_exact
from vsrep.perm import Permutation, PermGroup, is_transitive
from vsrep.rep import perm_matrix

F2 = GF(2)


@pytest.mark.parametrize("n,dim", [(5, 4), (6, 4), (9, 8), (3, 2), (4, 2)])
def test_heart_dimension(n, dim):
    h = heart(cat.sym(n))
    assert h.dim == dim == heart_dim(n)
    assert h.parity == ("odd" if n % 2 else "even")


def test_heart_rejects_small_degree():
    with pytest.raises(ValueError):
        heart(cat.sym(2))


def test_heart_even_basis_convention():
    # with c_i = e_i - e_5, 1_B = c_0 + ... + c_4, so c_4 = c_0 + c_1 + c_2 + c_3 in the quotient
    h = heart(cat.cyclic(6))
    m = h.rep.gens[0]
    # c_0 -> e_1 - e_0 = c_1 - c_0
    assert m[:, 0].tolist() == [1, 1, 0, 0]
    # c_3 -> e_4 - e_0 = c_4 - c_0 = c_1 + c_2 + c_3
    assert m[:, 3].tolist() == [0, 1, 1, 1]


def test_heart_is_a_homomorphism():
    g = cat.sym(6)
    h = heart(g)
    rng = np.random.default_rng(2)
    for _ in range(10):
        word = [int(x) for x in rng.integers(0, 2, size=6)]
        p = Permutation.identity(6)
        for i in word:
            p = p * g.generators[i]
        assert np.array_equal(h.rep.evaluate(word), heart(PermGroup(6, (p,))).rep.gens[0])


def test_faithfulness():
    assert heart_faithful(heart(cat.sym(5)))
    assert not heart_faithful(heart(cat.alt(4)))
    assert heart_faithful(heart(PermGroup.from_images(5, [range(5)])))


@pytest.mark.parametrize("g", [cat.cyclic(5), cat.sym(5), cat.agl1(5), cat.dihedral(7), cat.agl1(7), cat.psl2(8), cat.agl1(9), cat.cyclic(11), cat.alt(7)])
def test_remark_odd(g):
    assert remark_odd_check(g)


def test_remark_odd_rejects_bad_input():
    with pytest.raises(ValueError):
        remark_odd_check(cat.sym(6))
    with pytest.raises(ValueError):
        remark_odd_check(PermGroup.from_images(5, [[1, 0, 2, 3, 4]]))


def test_theorem_check_examples():
    g = cat.sym(6)
    assert theorem_simple_check(g, very_simple_exact(heart(g).rep))
    g = cat.sym_fixed(4)
    assert theorem_simple_check(g, very_simple_exact(heart(g).rep))
    g = cat.cyclic(5)
    d = very_simple_exact(heart(g).rep)
    assert not d.very_simple and theorem_simple_check(g, d)


def test_fixed_point_branch():
    # S_5 fixing a sixth point: very simple, not 2-transitive on all six points
    g = cat.sym_fixed(5)
    d = very_simple_exact(heart(g).rep)
    assert d.very_simple
    assert theorem_simple_check(g, d)


def test_kappa_single_point():
    g = cat.sym(6)
    k = kappa_embed(g, [2])
    assert k.shape == (6, 1)
    assert sorted(np.flatnonzero(k[:, 0]).tolist()) == list(range(6))
    k = kappa_embed(g, [0, 1])
    assert np.flatnonzero(k[:, 0]).tolist() == [0, 2, 3, 4, 5]


@pytest.mark.parametrize("b1", [[0], [0, 1], [0, 1, 2], [1, 3, 4, 5]])
def test_kappa_column_sums(b1):
    n = 6
    k = kappa_embed(cat.sym(n), b1)
    b2 = n - len(b1)
    sums = k.sum(axis=0) % 2
    assert all(int(s) == (1 + b2) % 2 for s in sums)


def test_kappa_equivariance():
    n = 7
    b1 = [0, 1, 2]
    k = kappa_embed(cat.sym(n), b1)
    rng = np.random.default_rng(8)
    for _ in range(20):
        p1 = rng.permutation(3)
        p2 = rng.permutation(4) + 3
        s = Permutation(tuple(int(x) for x in np.concatenate([p1, p2])))
        s1 = Permutation(tuple(int(x) for x in p1))
        assert np.array_equal(mat_mul(F2, perm_matrix(s), k), mat_mul(F2, k, perm_matrix(s1)))


def test_kappa_rejects_bad_subsets():
    g = cat.sym(5)
    for bad in ([], list(range(5)), [0, 0], [7]):
        with pytest.raises(ValueError):
            kappa_embed(g, bad)


def test_dimension_formula_on_catalog():
    groups = [cat.sym(n) for n in range(3, 12)] + [cat.alt(n) for n in range(4, 12)]
    groups += [cat.psl2(q) for q in (4, 5, 7, 8, 9)] + [cat.agl1(q) for q in (5, 7, 8, 9, 11)]
    for g in groups:
        assert heart(g).dim == heart_dim(g.degree)
