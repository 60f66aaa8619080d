"""Matrix representations given by generator images, and the standard
constructions on them.

A representation is never attached to an abstract group: it is the list of
matrices assigned to a fixed list of generators.  Subgroups enter through
words in those generators (see :meth:`Representation.restrict`).

A *word* is a sequence of integers; ``i >= 0`` stands for generator ``i``
and ``~i`` (that is ``-i - 1``) for its inverse.  Words are read left to
right as matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .field import FiniteField, FieldMismatchError, GF
from .linalg import as_matrix, identity, is_invertible, mat_inverse, mat_kron, Subspace
from .perm import Permutation, PermGroup

__all__ = [
    "Module",
    "Representation",
    "CharacterTwist",
    "MonomialData",
    "perm_matrix",
    "perm_to_rep",
    "sum_zero_submodule",
    "rep_tensor",
    "rep_adjoint",
    "rep_twist",
    "rep_dual",
    "induced_rep",
    "direct_sum",
    "vec",
    "unvec",
]


def vec(x: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(x).ravel()


def unvec(v: np.ndarray, n: int) -> np.ndarray:
    return np.asarray(v, dtype=np.uint8).reshape(n, n)


@dataclass(frozen=True, eq=False)
class Module:
    """A vector space ``F^dim`` with a list of acting matrices.

    The matrices need not be invertible; this is how subalgebras of
    ``End(V)`` act in the module-theoretic routines.
    """

    field: FiniteField
    dim: int
    gens: tuple[np.ndarray, ...]

    def __post_init__(self):
        mats = tuple(np.ascontiguousarray(as_matrix(self.field, g)) for g in self.gens)
        for m in mats:
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"acting matrix of shape {m.shape} on a {self.dim}-dimensional space")
        object.__setattr__(self, "gens", mats)

    @property
    def transposes(self) -> tuple[np.ndarray, ...]:
        # row-vector action: v -> v @ M.T
        cached = self.__dict__.get("_transposes")
        if cached is None:
            cached = tuple(np.ascontiguousarray(m.T) for m in self.gens)
            object.__setattr__(self, "_transposes", cached)
        return cached

    def act(self, i: int, v: np.ndarray) -> np.ndarray:
        return self.field.matmul(v, self.transposes[i])

    def is_invariant(self, sub: Subspace) -> bool:
        if sub.dim == 0:
            return True
        for t in self.transposes:
            if self.field.matmul(sub.basis, t).size and sub.reduce(self.field.matmul(sub.basis, t)).any():
                return False
        return True


@dataclass(frozen=True, eq=False)
class Representation(Module):
    """Invertible generator images ``rho(g_i)``, one per abstract generator."""

    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        super().__post_init__()
        if self.dim < 1:
            raise ValueError("representations must have dimension >= 1")
        for i, m in enumerate(self.gens):
            if not is_invertible(self.field, m):
                raise ValueError(f"generator {i} is not invertible")
        if self.labels is not None and len(self.labels) != len(self.gens):
            raise ValueError("one label per generator is required")

    @property
    def inverses(self) -> tuple[np.ndarray, ...]:
        cached = self.__dict__.get("_inverses")
        if cached is None:
            cached = tuple(mat_inverse(self.field, m) for m in self.gens)
            object.__setattr__(self, "_inverses", cached)
        return cached

    def evaluate(self, word: Sequence[int]) -> np.ndarray:
        out = identity(self.dim)
        for w in word:
            m = self.gens[w] if w >= 0 else self.inverses[~w]
            out = self.field.matmul(out, m)
        return out

    def restrict(self, words: Sequence[Sequence[int]]) -> "Representation":
        """The representation of the subgroup generated by ``words``."""
        return Representation(self.field, self.dim, tuple(self.evaluate(w) for w in words))

    def to_json(self) -> dict:
        out = {
            "field": self.field.spec,
            "dim": self.dim,
            "generators": [g.tolist() for g in self.gens],
        }
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Representation)
            and self.field == other.field
            and self.dim == other.dim
            and len(self.gens) == len(other.gens)
            and all(np.array_equal(a, b) for a, b in zip(self.gens, other.gens))
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class CharacterTwist:
    """A one-dimensional character: one nonzero scalar per generator."""

    scalars: tuple[int, ...]

    def __post_init__(self):
        if any(int(s) == 0 for s in self.scalars):
            raise ValueError("character values must be nonzero")

    def inverse(self, F: FiniteField) -> "CharacterTwist":
        return CharacterTwist(tuple(F.inv_l[int(s)] for s in self.scalars))


@dataclass(frozen=True)
class MonomialData:
    """Block-monomial generator data for an induced module.

    For generator ``g`` and block ``i``, ``perms[g][i]`` is the block the
    ``i``-th block is sent to, and ``blocks[g][i]`` the ``m x m`` matrix
    carrying block ``i`` onto block ``perms[g][i]``.
    """

    block_count: int
    block_dim: int
    perms: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[np.ndarray, ...], ...]


def perm_matrix(s: Permutation) -> np.ndarray:
    """Matrix of ``h -> h o s^{-1}`` on indicator functions: ``e_b -> e_{s(b)}``."""
    n = s.degree
    m = np.zeros((n, n), dtype=np.uint8)
    m[list(s.images), list(range(n))] = 1
    return m


def perm_to_rep(g: PermGroup, field: FiniteField | None = None) -> Representation:
    F = field or GF(2)
    return Representation(F, g.degree, tuple(perm_matrix(s) for s in g.generators))


def sum_zero_submodule(r: Representation) -> Representation:
    """Action on the coordinate-sum-zero hyperplane in the basis ``e_i - e_{n-1}``.

    In this basis a sum-zero vector has coordinates equal to its first
    ``n - 1`` entries.
    """
    F, n = r.field, r.dim
    if n < 2:
        raise ValueError("the sum-zero submodule needs dimension >= 2")
    basis = np.zeros((n - 1, n), dtype=np.uint8)
    basis[:, : n - 1] = identity(n - 1)
    basis[:, n - 1] = F.neg(np.uint8(1))
    mats = []
    for t in r.transposes:
        images = F.matmul(basis, t)
        colsum = np.zeros(n - 1, dtype=np.uint8)
        for j in range(n):
            colsum = F.add(colsum, images[:, j])
        if colsum.any():
            raise ValueError("representation does not preserve the sum-zero hyperplane")
        mats.append(np.ascontiguousarray(images[:, : n - 1].T))
    return Representation(F, n - 1, tuple(mats))


def _same_field(a: Module, b: Module) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")


def rep_tensor(a: Representation, b: Representation) -> Representation:
    _same_field(a, b)
    if len(a.gens) != len(b.gens):
        raise ValueError("tensor factors must be indexed by the same generator list")
    F = a.field
    return Representation(F, a.dim * b.dim, tuple(mat_kron(F, x, y) for x, y in zip(a.gens, b.gens)))


def rep_adjoint(r: Representation) -> Representation:
    """Conjugation action on ``End(V)``: ``vec(X) -> vec(g X g^-1)``, i.e. the
    matrix ``g (x) (g^-1)^T`` under row-major ``vec``."""
    F = r.field
    mats = tuple(mat_kron(F, g, np.ascontiguousarray(gi.T)) for g, gi in zip(r.gens, r.inverses))
    return Representation(F, r.dim * r.dim, mats)


def rep_twist(r: Representation, t: CharacterTwist) -> Representation:
    if len(t.scalars) != len(r.gens):
        raise ValueError("one scalar per generator is required")
    F = r.field
    return Representation(F, r.dim, tuple(F.scale(int(c), g) for c, g in zip(t.scalars, r.gens)), r.labels)


def rep_dual(r: Representation) -> Representation:
    return Representation(r.field, r.dim, tuple(np.ascontiguousarray(gi.T) for gi in r.inverses), r.labels)


def direct_sum(a: Representation, b: Representation) -> Representation:
    _same_field(a, b)
    if len(a.gens) != len(b.gens):
        raise ValueError("summands must be indexed by the same generator list")
    n = a.dim + b.dim
    mats = []
    for x, y in zip(a.gens, b.gens):
        m = np.zeros((n, n), dtype=np.uint8)
        m[: a.dim, : a.dim] = x
        m[a.dim :, a.dim :] = y
        mats.append(m)
    return Representation(a.field, n, tuple(mats))


def induced_rep(m: MonomialData, field: FiniteField) -> Representation:
    """Block-monomial matrices: block ``(perms[g][i], i)`` holds ``blocks[g][i]``."""
    r, d = m.block_count, m.block_dim
    if len(m.perms) != len(m.blocks):
        raise ValueError("need one block permutation per generator")
    mats = []
    for perm, blks in zip(m.perms, m.blocks):
        if sorted(perm) != list(range(r)) or len(blks) != r:
            raise ValueError("malformed monomial data")
        mat = np.zeros((r * d, r * d), dtype=np.uint8)
        for i, (j, blk) in enumerate(zip(perm, blks)):
            blk = as_matrix(field, blk)
            if blk.shape != (d, d):
                raise ValueError("block entries must be block_dim x block_dim")
            mat[j * d : (j + 1) * d, i * d : (i + 1) * d] = blk
        mats.append(mat)
    return Representation(field, r * d, tuple(mats))
