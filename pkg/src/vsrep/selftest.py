"""Self-checks behind ``vsrep selftest``."""

from __future__ import annotations

import time
from typing import Callable, TextIO

import numpy as np

from . import catalog as cat
from .field import GF, field_from_order
from .heart import heart, heart_dim, remark_odd_check
from .linalg import mat_mul, mat_rref
from .meataxe import is_absolutely_irreducible
from .normalg import very_simple_exact
from .oracle import brute_force_very_simple
from .perm import is_transitive
from .rep import Representation

__all__ = ["oracle_cases", "run_selftest", "GL3F2", "GAMMA_L1_8", "C7_ON_GF8"]

_F2 = GF(2)

# SL_3(F_2) from an elementary transvection and the cyclic coordinate shift
GL3F2 = ((( 1, 1, 0), (0, 1, 0), (0, 0, 1)), ((0, 0, 1), (1, 0, 0), (0, 1, 0)))
# multiplication by x and the squaring map on F_2[x]/(x^3+x+1), basis 1, x, x^2
_MUL_X = ((0, 0, 1), (1, 0, 1), (0, 1, 0))
_SQUARE = ((1, 0, 0), (0, 0, 1), (0, 1, 1))
GAMMA_L1_8 = (_MUL_X, _SQUARE)
C7_ON_GF8 = (_MUL_X,)


def _rep(mats) -> Representation:
    arr = tuple(np.array(m, dtype=np.uint8) for m in mats)
    return Representation(_F2, arr[0].shape[0], arr)


def oracle_cases(max_dim: int = 3) -> list[tuple[str, Representation]]:
    """Named GF(2) modules of dimension at most ``max_dim`` for the brute-force oracle."""
    cases = [
        ("trivial_1", _rep([[[1]]])),
        ("gl2f2_natural", cat.gl2f2_natural()),
        ("c3_on_gf4", _rep([[[0, 1], [1, 1]]])),
        ("unipotent_2", _rep([[[1, 1], [0, 1]]])),
        ("identity_2", _rep([np.eye(2, dtype=np.uint8)])),
        ("heart_sym3", heart(cat.sym(3)).rep),
        ("heart_sym4", heart(cat.sym(4)).rep),
        ("sl3f2_natural", _rep(GL3F2)),
        ("gamma_l1_8", _rep(GAMMA_L1_8)),
        ("c7_on_gf8", _rep(C7_ON_GF8)),
        ("perm_sym3", _perm(cat.sym(3))),
        ("perm_cyclic3", _perm(cat.cyclic(3))),
    ]
    if max_dim >= 4:
        cases += [
            ("heart_sym5", heart(cat.sym(5)).rep),
            ("heart_alt5", heart(cat.alt(5)).rep),
            ("heart_cyclic5", heart(cat.cyclic(5)).rep),
            ("heart_dihedral5", heart(cat.dihedral(5)).rep),
            ("heart_agl1_5", heart(cat.agl1(5)).rep),
            ("heart_sym6", heart(cat.sym(6)).rep),
            ("heart_psl2_4", heart(cat.psl2(4)).rep),
            ("gl2f2_tensor", cat.gl2f2_tensor()),
            ("gl2f2_wreath", cat.gl2f2_wreath()),
            ("perm_sym4", _perm(cat.sym(4))),
        ]
    return [(name, r) for name, r in cases if r.dim <= max_dim]


def _perm(g) -> Representation:
    from .rep import perm_to_rep

    return perm_to_rep(g)


def _check_field_axioms() -> bool:
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        F = field_from_order(q)
        a = np.arange(q, dtype=np.uint8)
        x, y, z = np.meshgrid(a, a, a, indexing="ij")
        if not np.array_equal(F.add(F.add(x, y), z), F.add(x, F.add(y, z))):
            return False
        if not np.array_equal(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z))):
            return False
        if not np.array_equal(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z))):
            return False
        if not np.array_equal(F.mul(a[1:], F.inv(a[1:])), np.ones(q - 1, dtype=np.uint8)):
            return False
    return True


def _check_rref_canonical() -> bool:
    rng = np.random.default_rng(0)
    for q in (2, 3, 4):
        F = field_from_order(q)
        for _ in range(20):
            a = F.random((5, 8), rng)
            while True:
                p = F.random((5, 5), rng)
                if mat_rref(F, p)[1] == 5:
                    break
            r1, k1, _ = mat_rref(F, a)
            r2, k2, _ = mat_rref(F, mat_mul(F, p, a))
            if k1 != k2 or not np.array_equal(r1, r2):
                return False
    return True


def _check_oracle(max_dim: int) -> bool:
    for _name, rep in oracle_cases(max_dim):
        exact = very_simple_exact(rep).very_simple
        brute, _, _ = brute_force_very_simple(rep.gens)
        if exact != brute:
            return False
    return True


def _check_remarks() -> bool:
    for n in range(3, 10):
        for build in (cat.sym, cat.alt, cat.cyclic):
            if heart(build(n)).dim != heart_dim(n):
                return False
    for n in (5, 7, 9):
        for g in (cat.sym(n), cat.alt(n), cat.cyclic(n), cat.dihedral(n)):
            if is_transitive(g) and not remark_odd_check(g):
                return False
    # restriction of a very simple S_n heart to A_n is absolutely simple
    for n in (5, 6, 7):
        h = heart(cat.sym(n)).rep
        if very_simple_exact(h).very_simple:
            sub = h.restrict(cat.alt_words_in_sym(n))
            if not is_absolutely_irreducible(sub):
                return False
    return True


def run_selftest(quick: bool = False, stream: TextIO | None = None) -> bool:
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("field axioms (q <= 16, exhaustive)", _check_field_axioms),
        ("RREF canonical under row equivalence", _check_rref_canonical),
        ("exhaustive-seed oracle, dim <= 3", lambda: _check_oracle(3)),
        ("remark suites", _check_remarks),
    ]
    if not quick:
        checks.append(("exhaustive-seed oracle, dim 4", lambda: _check_oracle(4)))
    ok = True
    for label, fn in checks:
        t0 = time.perf_counter()
        passed = bool(fn())
        ok &= passed
        if stream is not None:
            stream.write(f"{'PASS' if passed else 'FAIL'}  {label}  ({time.perf_counter() - t0:.2f}s)\n")
    return ok
