from __future__ import annotations

import numpy as np
import pytest

from vsrep import catalog as cat
from vsrep.field import GF, field_from_order
from vsrep.heart import heart
from vsrep.linalg import identity, mat_kron, mat_mul, mat_nullspace
from vsrep.meataxe import is_absolutely_irreducible
from vsrep.normalg import (
    CLAUSE_LABELS,
    NormalSubalgebra,
    TensorWitness,
    WitnessError,
    center,
    diagnose_subalgebra,
    is_normal_subalgebra,
    normal_closure,
    tensor_factorize,
    twisted_witness,
    very_simple_exact,
    very_simple_randomized,
)
from vsrep.rep import CharacterTwist, Representation, perm_to_rep, rep_twist, sum_zero_submodule

F2 = GF(2)


def units(n):
    out = []
    for i in range(n):
        for j in range(n):
            m = np.zeros((n, n), dtype=np.uint8)
            m[i, j] = 1
            out.append(m)
    return np.array(out)


def s3_rep():
    # GL_2(F_2) = S_3 with a transposition and a 3-cycle as generators
    return Representation(
        F2, 2, (np.array([[0, 1], [1, 0]], dtype=np.uint8), np.array([[0, 1], [1, 1]], dtype=np.uint8)), ("t", "c")
    )


def test_scalars_and_full_are_normal():
    r = cat.gl2f2_natural()
    assert is_normal_subalgebra(r, [identity(2)])
    assert is_normal_subalgebra(r, units(2))


def test_image_of_normal_subgroup_algebra_is_normal():
    r = s3_rep()
    c = r.gens[1]
    assert is_normal_subalgebra(r, [identity(2), c])
    assert not is_normal_subalgebra(r, [identity(2), r.gens[0]])
    chk = is_normal_subalgebra(r, [r.gens[0]])
    assert not chk and "identity" in chk.reason
    with pytest.raises(ValueError):
        is_normal_subalgebra(r, [identity(3)])


def test_normal_closure_examples():
    r = s3_rep()
    assert normal_closure(r).is_scalars
    gf4 = normal_closure(r, [r.gens[1]])
    assert gf4.dim == 2
    # commutative and every nonzero element invertible
    elems = [np.zeros((2, 2), dtype=np.uint8), identity(2), r.gens[1], mat_mul(F2, r.gens[1], r.gens[1])]
    assert gf4.subspace() == normal_closure(r, elems[2:]).subspace()
    h = heart(cat.sym(5)).rep
    assert normal_closure(h, [h.gens[0]]).is_full


def test_normal_closure_is_normal_and_minimal():
    r = cat.gl2f2_tensor()
    seed = mat_kron(F2, np.array([[1, 1], [0, 1]], dtype=np.uint8), identity(2))
    clos = normal_closure(r, [seed])
    assert is_normal_subalgebra(r, clos.basis)
    assert clos.dim == 4
    # left factor algebra End(V1) (x) Id
    left = np.array([mat_kron(F2, u, identity(2)) for u in units(2)])
    assert clos.subspace() == NormalSubalgebra(r, left).subspace()


def test_exact_gl2f2_natural_twisted():
    d = very_simple_exact(cat.gl2f2_natural())
    assert d.tag == "TwistedMultiplication"
    v = d.verdict
    assert v.ext_degree == 2 and v.surjective and v.subalgebra.dim == 2
    assert d.verify(cat.gl2f2_natural())


def test_chi_of_transposition_and_three_cycle():
    r = s3_rep()
    gf4 = normal_closure(r, [r.gens[1]])
    tw = twisted_witness(r, gf4.basis)
    assert tw.chi == (1, 0) and tw.surjective
    assert diagnose_subalgebra(r, gf4).tag == "TwistedMultiplication"


def test_twisted_witness_rejects_scalars():
    with pytest.raises(ValueError):
        twisted_witness(s3_rep(), identity(2)[None])


def test_twisted_verify_catches_tampering():
    r = s3_rep()
    tw = twisted_witness(r, normal_closure(r, [r.gens[1]]).basis)
    from dataclasses import replace

    with pytest.raises(WitnessError):
        replace(tw, chi=(0, 0)).verify(r)


def _intertwiner_exists(F, xs, ys):
    """Is there an invertible P with P x P^-1 = y for all pairs? (absolutely simple case)"""
    n = xs[0].shape[0]
    eye = identity(n)
    rows = [F.sub(mat_kron(F, eye, x.T), mat_kron(F, y, eye)) for x, y in zip(xs, ys)]
    null = mat_nullspace(F, np.vstack(rows))
    if null.dim == 0:
        return False
    from vsrep.linalg import is_invertible

    return is_invertible(F, null.basis[0].reshape(n, n))


def test_tensor_factorize_round_trip():
    r = cat.gl2f2_tensor()
    left = np.array([mat_kron(F2, u, identity(2)) for u in units(2)])
    split = tensor_factorize(r, NormalSubalgebra(r, left))
    assert (split.d1, split.d2) == (2, 2)
    assert split.verify(r)
    nat = cat.gl2f2_natural().gens
    eye = identity(2)
    assert _intertwiner_exists(F2, list(split.witness.A), [nat[0], nat[1], eye, eye])
    assert _intertwiner_exists(F2, list(split.witness.B), [eye, eye, nat[0], nat[1]])


def test_tensor_witness_verify_detects_wrong_factor():
    r = cat.gl2f2_tensor()
    eye = identity(2)
    nat = cat.gl2f2_natural().gens
    good = TensorWitness(identity(4), (nat[0], nat[1], eye, eye), (eye, eye, nat[0], nat[1]))
    assert good.verify(r)
    bad = TensorWitness(identity(4), (nat[1], nat[1], eye, eye), (eye, eye, nat[0], nat[1]))
    with pytest.raises(WitnessError):
        bad.verify(r)


def test_tensor_factorize_rejects_degenerate_algebra():
    r = cat.gl2f2_tensor()
    with pytest.raises(ValueError):
        tensor_factorize(r, NormalSubalgebra(r, identity(4)[None]))


def test_exact_catalog_buckets():
    d = very_simple_exact(cat.gl2f2_tensor())
    assert d.tag == "TensorSplit" and (d.verdict.d1, d.verdict.d2) == (2, 2)
    d = very_simple_exact(cat.gl2f2_wreath())
    assert d.tag == "Induced" and d.verdict.r == 2
    d = very_simple_exact(heart(cat.sym(5)).rep)
    assert d.very_simple
    d = very_simple_exact(heart(cat.agl1(9)).rep)
    assert d.tag == "Induced" and d.verdict.r == 4
    assert d.verify(heart(cat.agl1(9)).rep)


def test_exact_early_verdicts():
    d = very_simple_exact(perm_to_rep(cat.sym(5)))
    assert d.tag == "NotIrreducible" and d.verify(perm_to_rep(cat.sym(5)))
    h = heart(cat.cyclic(5)).rep
    d = very_simple_exact(h)
    assert d.tag == "NotAbsolutelyIrreducible" and d.verdict.end_degree == 4


def test_all_witnesses_reports_alternatives():
    r = cat.gl2f2_tensor()
    d = very_simple_exact(r, all_witnesses=True)
    assert d.tag == "TensorSplit"
    tags = {a.tag for a in d.alternatives}
    assert tags <= {"TensorSplit", "Induced", "TwistedMultiplication"}
    assert d.verify(r)


def test_one_dimensional_is_very_simple():
    r = Representation(GF(5), 1, (np.array([[2]], dtype=np.uint8),))
    assert very_simple_exact(r).very_simple
    assert very_simple_randomized(r, trials=1).very_simple


def test_randomized_s7_heart():
    d = very_simple_randomized(heart(cat.sym(7)).rep, seed=0, trials=64)
    assert d.very_simple and d.verdict.mode == "randomized" and d.verdict.trials == 64


@pytest.mark.parametrize(
    "build",
    [
        cat.gl2f2_natural,
        cat.gl2f2_tensor,
        cat.gl2f2_wreath,
        lambda: heart(cat.agl1(5)).rep,
        lambda: heart(cat.agl1(7)).rep,
        lambda: heart(cat.agl1(9)).rep,
        lambda: heart(cat.psl2(8)).rep,
        lambda: heart(cat.alt(6)).rep,
    ],
)
def test_mode_agreement(build):
    r = build()
    exact = very_simple_exact(r)
    rand = very_simple_randomized(r, seed=1, trials=256)
    assert exact.very_simple == rand.very_simple
    if not rand.very_simple:
        assert rand.verify(r)


def test_randomized_rejects_zero_trials():
    with pytest.raises(ValueError):
        very_simple_randomized(cat.gl2f2_natural(), trials=0)


def test_center():
    r = s3_rep()
    assert center(F2, units(2)).shape[0] == 1
    gf4 = normal_closure(r, [r.gens[1]])
    assert center(F2, gf4.basis).shape[0] == 2


def test_clause_labels_cover_every_bucket():
    assert set(CLAUSE_LABELS) == {
        "VerySimple",
        "NotIrreducible",
        "NotAbsolutelyIrreducible",
        "TensorSplit",
        "Induced",
        "TwistedMultiplication",
        "ProperNormalSubalgebraUnclassified",
    }


def test_very_simple_subgroup_implies_very_simple_group():
    # A_5 inside S_5 on the heart
    h = heart(cat.sym(5)).rep
    sub = h.restrict(cat.alt_words_in_sym(5))
    assert very_simple_exact(sub).very_simple
    assert very_simple_exact(h).very_simple


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_restriction_to_normal_subgroup_is_absolutely_simple(n):
    h = heart(cat.sym(n)).rep
    assert very_simple_exact(h).very_simple
    assert is_absolutely_irreducible(h.restrict(cat.alt_words_in_sym(n)))


def test_twisting_by_a_character_keeps_the_bucket():
    F3 = GF(3)
    r = sum_zero_submodule(perm_to_rep(cat.sym(4), F3))
    sign = CharacterTwist((2, 2))
    assert very_simple_exact(r).tag == very_simple_exact(rep_twist(r, sign)).tag
    F4 = field_from_order(4)
    nat = Representation(F4, 2, cat.gl2f2_natural().gens)
    for scalars in [(2, 1), (3, 3), (2, 3)]:
        tw = rep_twist(nat, CharacterTwist(scalars))
        assert very_simple_exact(tw).tag == very_simple_exact(nat).tag


def test_very_simple_implies_absolutely_irreducible_and_no_proper_closure():
    for g in (cat.sym(5), cat.alt(5), cat.sym(6), cat.psl2(8)):
        h = heart(g).rep
        d = very_simple_exact(h)
        assert d.very_simple
        assert is_absolutely_irreducible(h)
        rng = np.random.default_rng(0)
        for _ in range(5):
            x = F2.random((h.dim, h.dim), rng)
            clos = normal_closure(h, [x])
            assert clos.is_scalars or clos.is_full
