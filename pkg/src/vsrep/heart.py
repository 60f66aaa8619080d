"""The heart of a permutation group over GF(2).

For ``G`` acting on ``B = {0..n-1}`` the heart is the sum-zero hyperplane of
``F_2^B`` when ``n`` is odd, and that hyperplane modulo the all-ones vector
when ``n`` is even.

Bases are fixed so the matrices are reproducible: the hyperplane uses
``e_i - e_{n-1}`` (``i = 0..n-2``), and for even ``n`` the quotient uses the
images of the first ``n - 2`` of those vectors.  In sum-zero coordinates
``c`` the quotient coordinates are ``q_i = c_i - c_{n-2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import GF
from .linalg import Subspace, identity, subspace_quotient_coords
from .meataxe import endomorphism_algebra
from .perm import PermGroup, enumerate_elements, fixed_points, is_transitive, is_two_transitive, orbits
from .rep import Representation, perm_matrix, perm_to_rep, sum_zero_submodule

__all__ = [
    "HeartModule",
    "heart",
    "heart_dim",
    "heart_faithful",
    "remark_odd_check",
    "theorem_simple_check",
    "kappa_embed",
]


def heart_dim(n: int) -> int:
    return n - 1 if n % 2 else n - 2


@dataclass(frozen=True, eq=False)
class HeartModule:
    group: PermGroup
    rep: Representation

    @property
    def n(self) -> int:
        return self.group.degree

    @property
    def parity(self) -> str:
        return "odd" if self.n % 2 else "even"

    @property
    def dim(self) -> int:
        return self.rep.dim


def _quotient_matrix(m: np.ndarray, ones: Subspace, complement: np.ndarray) -> np.ndarray:
    # images of the quotient basis vectors, re-expressed in quotient coordinates
    F = ones.field
    images = F.matmul(complement, np.ascontiguousarray(m.T))
    return np.ascontiguousarray(subspace_quotient_coords(ones, images, complement).T)


def heart(g: PermGroup) -> HeartModule:
    n = g.degree
    if n < 3:
        raise ValueError("the heart needs degree >= 3")
    F = GF(2)
    zero_sum = sum_zero_submodule(perm_to_rep(g, F))
    if n % 2:
        rep = zero_sum
    else:
        ones = Subspace.from_vectors(F, n - 1, np.ones(n - 1, dtype=np.uint8))
        complement = identity(n - 1)[: n - 2]
        mats = tuple(_quotient_matrix(m, ones, complement) for m in zero_sum.gens)
        rep = Representation(F, n - 2, mats)
    if rep.dim != heart_dim(n):
        raise AssertionError("heart has the wrong dimension")
    return HeartModule(g, rep)


def _heart_matrix_of(perm, n: int) -> np.ndarray:
    from .perm import Permutation

    g = PermGroup(n, (perm,))
    return heart(g).rep.gens[0]


def heart_faithful(h: HeartModule, order_bound: int = 100_000) -> bool:
    """Whether only the identity element acts trivially on the heart."""
    n = h.n
    eye = identity(h.dim)
    for s in enumerate_elements(h.group, order_bound):
        if s.is_identity():
            continue
        if np.array_equal(_heart_matrix_of(s, n), eye):
            return False
    return True


def remark_odd_check(g: PermGroup, seed: int = 0) -> bool:
    """For odd degree and transitive ``G``: ``End_G(heart)`` is the scalars
    exactly when ``G`` is doubly transitive."""
    if g.degree % 2 == 0:
        raise ValueError("degree must be odd")
    if not is_transitive(g):
        raise ValueError("group must be transitive")
    end = endomorphism_algebra(heart(g).rep, seed)
    return (end.dim == 1) == is_two_transitive(g)


def theorem_simple_check(g: PermGroup, diagnosis) -> bool:
    """A very simple heart forces ``n >= 5`` and either double transitivity,
    or even ``n`` with one fixed point and double transitivity on the rest."""
    if not diagnosis.very_simple:
        return True
    n = g.degree
    if n < 5:
        return False
    if is_two_transitive(g):
        return True
    if n % 2:
        return False
    fixed = fixed_points(g)
    if len(fixed) != 1:
        return False
    (b,) = fixed
    rest = [i for i in range(n) if i != b]
    index = {p: i for i, p in enumerate(rest)}
    from .perm import Permutation

    sub = PermGroup(n - 1, tuple(Permutation(tuple(index[s.images[p]] for p in rest)) for s in g.generators))
    return len(orbits(sub)) == 1 and is_two_transitive(sub)


def kappa_embed(g: PermGroup, b1: Sequence[int]) -> np.ndarray:
    """Matrix (``n x |B_1|``) of ``h -> kappa(h)`` with ``kappa(h)(b) = h(b)`` on
    ``B_1`` and ``kappa(h)(b) = sum_{B_1} h`` on the complement ``B_2``.

    Column ``j`` corresponds to the ``j``-th point of ``sorted(b1)``.  Every
    column has coordinate sum ``1 + |B_2|``, so the image is sum-zero
    exactly when ``|B_2|`` is odd.
    """
    n = g.degree
    pts = sorted(set(int(b) for b in b1))
    if not pts or len(pts) >= n or pts[0] < 0 or pts[-1] >= n or len(pts) != len(b1):
        raise ValueError("B_1 must be a nonempty proper subset of the points without repeats")
    rest = [b for b in range(n) if b not in set(pts)]
    m = np.zeros((n, len(pts)), dtype=np.uint8)
    for j, b in enumerate(pts):
        m[b, j] = 1
        m[rest, j] = 1
    return m
