"""MeatAxe-style module analysis over small finite fields.

A module here is anything with a ``field``, a ``dim`` and a tuple of acting
matrices ``gens`` (see :class:`vsrep.rep.Module`).  Vectors are rows and a
matrix ``M`` acts on ``v`` as ``v @ M.T``.

Algebra elements used by Norton's test are recorded as linear combinations
of positive words in the acting matrices, so the same element can be
evaluated on any module with the same acting-set indexing (a submodule, a
quotient, or a candidate isomorphic module).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .field import FiniteField
from .linalg import (
    Echelon,
    Subspace,
    identity,
    left_nullspace,
    mat_inverse,
    mat_nullspace,
    mat_rref,
)
from .poly import Poly, charpoly, eval_matrix, factor, minpoly, is_irreducible, deg
from .rep import Module

__all__ = [
    "AlgebraElement",
    "NortonCertificate",
    "Irreducible",
    "Reducible",
    "SimpleModule",
    "EndAlgebra",
    "MinimalCountExceedsCap",
    "NortonFailure",
    "spin",
    "spin_with_words",
    "submodule_action",
    "quotient_action",
    "norton_irreducible",
    "simple_module",
    "hom_from_simple",
    "endomorphism_algebra",
    "is_absolutely_irreducible",
    "composition_factors",
    "simple_types",
    "find_simple_submodule",
    "socle_minimal_submodules",
    "isotypic_components",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 4096
RANDOM_DRAWS = 64
MAX_WORD_LENGTH = 8


class MinimalCountExceedsCap(RuntimeError):
    """The number of minimal submodules of one homogeneous type exceeds the cap."""

    def __init__(self, type_dim: int, multiplicity: int, count: int, cap: int):
        self.type_dim = type_dim
        self.multiplicity = multiplicity
        self.count = count
        self.cap = cap
        super().__init__(
            f"{count} minimal submodules of a {type_dim}-dimensional simple type "
            f"(Hom dimension {multiplicity}) exceed the cap {cap}"
        )


class NortonFailure(RuntimeError):
    """Neither seeded draws nor deterministic enumeration settled irreducibility."""


# ---------------------------------------------------------------------------
# Spinning


def spin(module, seeds) -> Subspace:
    """Smallest invariant subspace containing the seed rows."""
    F, n = module.field, module.dim
    seeds = np.asarray(seeds, dtype=np.uint8).reshape(-1, n)
    ech = Echelon(F, n, capacity=n)
    frontier = []
    for v in seeds:
        if ech.add(v):
            frontier.append(ech.rows[-1].copy())
    ts = module.transposes
    while frontier and ech.rank < n:
        batch = np.array(frontier)
        frontier = []
        for t in ts:
            for w in F.matmul(batch, t):
                if ech.add(w):
                    frontier.append(ech.rows[-1].copy())
                    if ech.rank == n:
                        break
            if ech.rank == n:
                break
    if ech.rank == n:
        return Subspace.full(F, n)
    basis = ech.basis()
    return Subspace(F, n, basis, tuple(sorted(ech.pivots)))


def spin_with_words(module, v: np.ndarray) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Standard-basis spin of one vector.

    Returns the spanning vectors ``w_0 = v, w_1, ...`` in discovery order and,
    for ``k >= 1``, the pair ``(parent, generator)`` with
    ``w_k = w_parent @ gens[generator].T``.
    """
    F, n = module.field, module.dim
    v = np.asarray(v, dtype=np.uint8)
    ech = Echelon(F, n, capacity=n)
    if not ech.add(v):
        raise ValueError("cannot spin the zero vector")
    vecs = [v.copy()]
    tree: list[tuple[int, int]] = [(-1, -1)]
    ts = module.transposes
    k = 0
    while k < len(vecs):
        for gi, t in enumerate(ts):
            w = F.matmul(vecs[k], t)
            if ech.add(w):
                vecs.append(w)
                tree.append((k, gi))
        k += 1
    return np.array(vecs, dtype=np.uint8), tree


def submodule_action(module, sub: Subspace) -> Module:
    """Action on an invariant subspace in the coordinates of its RREF basis."""
    F = module.field
    mats = []
    for t in module.transposes:
        img = F.matmul(sub.basis, t)
        mats.append(np.ascontiguousarray(sub.coords(img).T))
    return Module(F, sub.dim, tuple(mats))


def quotient_action(module, sub: Subspace) -> tuple[Module, list[int]]:
    """Action on ``V / sub`` in the basis of unit vectors at the non-pivot columns."""
    F, n = module.field, module.dim
    piv = set(sub.pivots)
    free = [c for c in range(n) if c not in piv]
    units = identity(n)[free]
    mats = []
    for t in module.transposes:
        img = sub.reduce(F.matmul(units, t))[:, free]
        mats.append(np.ascontiguousarray(img.T))
    return Module(F, len(free), tuple(mats)), free


# ---------------------------------------------------------------------------
# Algebra elements


@dataclass(frozen=True)
class AlgebraElement:
    """``sum_i coeffs[i] * word_i`` plus ``scalar * Id``; words are positive."""

    words: tuple[tuple[int, ...], ...]
    coeffs: tuple[int, ...]
    scalar: int = 0

    def evaluate(self, module) -> np.ndarray:
        F, n = module.field, module.dim
        out = F.scale(self.scalar, identity(n)) if self.scalar else np.zeros((n, n), dtype=np.uint8)
        cache: dict[tuple[int, ...], np.ndarray] = {(): identity(n)}
        for word, c in zip(self.words, self.coeffs):
            if not c:
                continue
            m = _eval_word(module, word, cache)
            out = F.add(out, F.scale(c, m))
        return out

    def to_json(self) -> dict:
        return {"words": [list(w) for w in self.words], "coeffs": list(self.coeffs), "scalar": self.scalar}


def _eval_word(module, word: tuple[int, ...], cache: dict) -> np.ndarray:
    if word in cache:
        return cache[word]
    head = _eval_word(module, word[:-1], cache)
    m = module.field.matmul(head, module.gens[word[-1]])
    cache[word] = m
    return m


def _random_element(F: FiniteField, ngens: int, rng: np.random.Generator) -> AlgebraElement:
    # products of random pairs from a growing pool, then a random combination
    pool: list[tuple[int, ...]] = [(i,) for i in range(ngens)]
    for _ in range(max(2, ngens + 2)):
        a = pool[int(rng.integers(len(pool)))]
        b = pool[int(rng.integers(len(pool)))]
        if len(a) + len(b) <= 4 * MAX_WORD_LENGTH:
            pool.append(a + b)
    coeffs = tuple(int(c) for c in rng.integers(0, F.q, size=len(pool)))
    return AlgebraElement(tuple(pool), coeffs, int(rng.integers(0, F.q)))


def _deterministic_elements(F: FiniteField, ngens: int):
    words = []
    for length in range(1, MAX_WORD_LENGTH + 1):
        for w in itertools.product(range(ngens), repeat=length):
            words.append(w)
            yield AlgebraElement((w,), (1,))
    for a, b in itertools.combinations(words, 2):
        yield AlgebraElement((a, b), (1, 1))


# ---------------------------------------------------------------------------
# Norton's irreducibility test


@dataclass(frozen=True)
class NortonCertificate:
    """``theta`` and an irreducible factor ``f`` of its characteristic
    polynomial with ``dim null f(theta) = deg f``; a nonzero vector of that
    nullspace spins to the whole module, and so does one of
    ``null f(theta)^T`` under the transposed action."""

    theta: AlgebraElement
    factor: Poly
    seed: int | None
    draw: int

    def to_json(self) -> dict:
        return {"theta": self.theta.to_json(), "factor": list(self.factor), "seed": self.seed, "draw": self.draw}


@dataclass(frozen=True)
class Irreducible:
    certificate: NortonCertificate
    null_vector: np.ndarray = dc_field(repr=False)

    @property
    def irreducible(self) -> bool:
        return True


@dataclass(frozen=True)
class Reducible:
    submodule: Subspace
    seed: int | None = None

    @property
    def irreducible(self) -> bool:
        return False


def _transpose_module(module) -> Module:
    return Module(module.field, module.dim, tuple(np.ascontiguousarray(g.T) for g in module.gens))


def _check_invariant(module, sub: Subspace) -> Subspace:
    if not 0 < sub.dim < module.dim or not module.is_invariant(sub):
        raise AssertionError("submodule witness failed re-verification")
    return sub


def _try_theta(module, theta: AlgebraElement, seed, draw):
    F, n = module.field, module.dim
    th = theta.evaluate(module)
    cp = charpoly(F, th)
    dual = None
    for f, _mult in factor(F, cp):
        fa = eval_matrix(F, f, th)
        null = mat_nullspace(F, fa)
        v = null.basis[0]
        sub = spin(module, v)
        if sub.dim < n:
            return Reducible(_check_invariant(module, sub), seed)
        if null.dim != deg(f):
            continue
        dnull = mat_nullspace(F, np.ascontiguousarray(fa.T))
        if dual is None:
            dual = _transpose_module(module)
        dsub = spin(dual, dnull.basis[0])
        if dsub.dim < n:
            return Reducible(_check_invariant(module, dsub.annihilator()), seed)
        return Irreducible(NortonCertificate(theta, f, seed, draw), v)
    return None


def norton_irreducible(module, seed: int = 0) -> Irreducible | Reducible:
    """Decide irreducibility of a module by Norton's criterion.

    Up to ``RANDOM_DRAWS`` seeded random algebra elements are tried, then
    elements from a deterministic enumeration of words.
    """
    F, n = module.field, module.dim
    if n < 1:
        raise ValueError("module has dimension 0")
    if n == 1:
        theta = AlgebraElement((), (), 0)
        return Irreducible(NortonCertificate(theta, (0, 1), seed, 0), np.ones(1, dtype=np.uint8))
    ngens = len(module.gens)
    if ngens == 0:
        return Reducible(Subspace.from_vectors(F, n, identity(n)[:1]), seed)
    rng = np.random.default_rng(seed)
    for draw in range(RANDOM_DRAWS):
        out = _try_theta(module, _random_element(F, ngens, rng), seed, draw)
        if out is not None:
            return out
    for draw, theta in enumerate(_deterministic_elements(F, ngens), start=RANDOM_DRAWS):
        out = _try_theta(module, theta, None, draw)
        if out is not None:
            return out
    raise NortonFailure("irreducibility undecided after deterministic enumeration")


# ---------------------------------------------------------------------------
# Simple modules and homomorphisms


@dataclass(frozen=True, eq=False)
class SimpleModule:
    """An irreducible module together with a standard basis.

    ``std`` is the standard-basis spin of a vector of ``null f(theta)``;
    ``action[g]`` is the matrix of generator ``g`` in that basis, acting on
    coordinate rows (``w_k @ gens[g].T = sum_l action[g][k, l] w_l``).
    """

    module: Module
    certificate: NortonCertificate
    std: np.ndarray
    tree: tuple[tuple[int, int], ...]
    action: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def field(self) -> FiniteField:
        return self.module.field

    def end_degree(self) -> int:
        cached = self.__dict__.get("_end_degree")
        if cached is None:
            cached = hom_from_simple(self, self.module).dim
            object.__setattr__(self, "_end_degree", cached)
        return cached


def simple_module(module, result: Irreducible | None = None, seed: int = 0) -> SimpleModule:
    if result is None:
        result = norton_irreducible(module, seed)
    if not isinstance(result, Irreducible):
        raise ValueError("module is reducible")
    F = module.field
    std, tree = spin_with_words(module, result.null_vector)
    if std.shape[0] != module.dim:
        raise AssertionError("certificate vector does not spin to the whole module")
    inv = mat_inverse(F, std)
    action = tuple(F.matmul(F.matmul(std, t), inv) for t in module.transposes)
    return SimpleModule(Module(F, module.dim, module.gens), result.certificate, std, tuple(tree), action)


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Basis of ``Hom(S, M)``: ``images[j]`` is the ``dim S x dim M`` matrix
    whose row ``k`` is the image of the standard basis vector ``w_k``."""

    simple: SimpleModule
    target_dim: int
    images: np.ndarray

    @property
    def dim(self) -> int:
        return self.images.shape[0]

    def seed_images(self) -> np.ndarray:
        """Images of ``w_0`` (one row per basis homomorphism)."""
        return self.images[:, 0, :]

    def map_matrix(self, j: int) -> np.ndarray:
        """Matrix of basis map ``j`` on vectors in the original coordinates of ``S``."""
        F = self.simple.field
        return F.matmul(mat_inverse(F, self.simple.std), self.images[j])


def hom_from_simple(s: SimpleModule, target, candidates: np.ndarray | None = None) -> HomSpace:
    """All module maps ``S -> target``.

    A map is fixed by the image ``m`` of ``w_0``, which must lie in
    ``null f(theta)`` on the target; replaying the spin words from ``m`` and
    imposing the relations of ``S`` cuts out the valid images.
    """
    F = s.field
    ds, dm = s.dim, target.dim
    if len(target.gens) != len(s.module.gens):
        raise ValueError("acting sets differ in length")
    if candidates is None:
        th = s.certificate.theta.evaluate(target)
        candidates = mat_nullspace(F, eval_matrix(F, s.certificate.factor, th)).basis
    c = candidates.shape[0]
    if c == 0:
        return HomSpace(s, dm, np.zeros((0, ds, dm), dtype=np.uint8))
    ts = target.transposes
    xs = np.zeros((ds, c, dm), dtype=np.uint8)
    xs[0] = candidates
    for k in range(1, ds):
        parent, g = s.tree[k]
        xs[k] = F.matmul(xs[parent], ts[g])
    flat = xs.reshape(ds, c * dm)
    blocks = []
    for g, t in enumerate(ts):
        moved = F.matmul(xs.reshape(ds * c, dm), t).reshape(ds, c * dm)
        resid = F.sub(moved, F.matmul(s.action[g], flat))
        blocks.append(resid.reshape(ds, c, dm).transpose(1, 0, 2).reshape(c, ds * dm))
    system = np.concatenate(blocks, axis=1)
    coeffs = left_nullspace(F, system)
    if coeffs.shape[0] == 0:
        return HomSpace(s, dm, np.zeros((0, ds, dm), dtype=np.uint8))
    images = np.stack([F.matmul(coeffs, xs[k]) for k in range(ds)], axis=1)
    return HomSpace(s, dm, images)


def isomorphic(a: SimpleModule, b: SimpleModule) -> bool:
    return a.dim == b.dim and hom_from_simple(a, b.module).dim > 0


# ---------------------------------------------------------------------------
# Endomorphism algebras


@dataclass(frozen=True, eq=False)
class EndAlgebra:
    basis: np.ndarray  # (dim, n, n)
    irreducible: bool
    ext_degree: int | None = None
    generator: np.ndarray | None = None
    generator_minpoly: Poly | None = None

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def commutant(F: FiniteField, n: int, mats: Sequence[np.ndarray]) -> np.ndarray:
    """Basis of ``{X : X M = M X}`` for all given matrices, shape ``(d, n, n)``.

    Row-major ``vec`` gives ``vec(X M - M X) = (I (x) M^T - M (x) I) vec(X)``.
    """
    from .linalg import mat_kron

    eye = identity(n)
    if not mats:
        return identity(n * n).reshape(n * n, n, n)
    system = np.concatenate(
        [F.sub(mat_kron(F, eye, np.ascontiguousarray(m.T)), mat_kron(F, m, eye)) for m in mats], axis=0
    )
    null = mat_nullspace(F, system)
    return null.basis.reshape(null.dim, n, n)


def _field_generator(F: FiniteField, basis: np.ndarray, e: int, seed: int = 0):
    """An element of a field-like algebra whose minimal polynomial is irreducible of degree ``e``."""
    rng = np.random.default_rng(seed)
    candidates = [b for b in basis]
    for _ in range(256):
        c = rng.integers(0, F.q, size=basis.shape[0])
        x = np.zeros_like(basis[0])
        for ci, b in zip(c, basis):
            if ci:
                x = F.add(x, F.scale(int(ci), b))
        candidates.append(x)
    for x in candidates:
        mp = minpoly(F, x)
        if deg(mp) == e and is_irreducible(F, mp):
            return x, mp
    raise ValueError("algebra has no element generating a field of the expected degree")


def endomorphism_algebra(module, seed: int = 0) -> EndAlgebra:
    F, n = module.field, module.dim
    basis = commutant(F, n, module.gens)
    for x in basis:
        for m in module.gens:
            if not np.array_equal(F.matmul(x, m), F.matmul(m, x)):
                raise AssertionError("commutant basis element does not commute")
    res = norton_irreducible(module, seed)
    if not isinstance(res, Irreducible):
        return EndAlgebra(basis, False)
    e = basis.shape[0]
    if e == 1:
        return EndAlgebra(basis, True, 1, identity(n), (F.neg_l[1], 1))
    gen, mp = _field_generator(F, basis, e, seed)
    return EndAlgebra(basis, True, e, gen, mp)


def is_absolutely_irreducible(module, seed: int = 0) -> bool:
    res = norton_irreducible(module, seed)
    if not isinstance(res, Irreducible):
        return False
    return simple_module(module, res).end_degree() == 1


# ---------------------------------------------------------------------------
# Composition factors, socle, isotypic decomposition


def composition_factors(module, seed: int = 0) -> list[SimpleModule]:
    res = norton_irreducible(module, seed)
    if isinstance(res, Irreducible):
        return [simple_module(module, res)]
    sub = res.submodule
    q, _ = quotient_action(module, sub)
    return composition_factors(submodule_action(module, sub), seed) + composition_factors(q, seed)


def simple_types(module, seed: int = 0) -> list[SimpleModule]:
    """One representative per isomorphism type of composition factor."""
    types: list[SimpleModule] = []
    for s in composition_factors(module, seed):
        if not any(isomorphic(t, s) for t in types):
            types.append(s)
    return types


def find_simple_submodule(module, seed: int = 0) -> Subspace:
    """A simple submodule, found by descending through Norton witnesses."""
    F, n = module.field, module.dim
    current = Subspace.full(F, n)
    sub_mod = module
    while True:
        res = norton_irreducible(sub_mod, seed)
        if isinstance(res, Irreducible):
            return current
        w = res.submodule
        # lift from current's coordinates to the ambient space
        vecs = F.matmul(w.basis, current.basis)
        current = Subspace.from_vectors(F, n, vecs)
        sub_mod = submodule_action(module, current)


def _projective_points(F: FiniteField, h: int):
    """Nonzero coefficient vectors of length ``h`` with leading nonzero entry 1."""
    for lead in range(h):
        for tail in itertools.product(range(F.q), repeat=h - lead - 1):
            v = np.zeros(h, dtype=np.uint8)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


def socle_minimal_submodules(module, cap: int = DEFAULT_CAP, seed: int = 0) -> list[Subspace]:
    """All simple submodules, sorted by dimension and canonical basis."""
    F = module.field
    found: list[Subspace] = []
    for s in simple_types(module, seed):
        hom = hom_from_simple(s, module)
        h = hom.dim
        if h == 0:
            continue
        e = s.end_degree()
        count = (F.q**h - 1) // (F.q**e - 1)
        if count > cap:
            raise MinimalCountExceedsCap(s.dim, h, count, cap)
        imgs = hom.seed_images()
        mine: list[Subspace] = []
        for coeff in _projective_points(F, h):
            m = F.matmul(coeff, imgs)
            if any(sub.contains(m) for sub in mine):
                continue
            sub = spin(module, m)
            if sub.dim != s.dim:
                raise AssertionError("image of a simple module has the wrong dimension")
            mine.append(sub)
            if len(mine) == count:
                break
        if len(mine) != count:
            raise AssertionError("minimal submodule count disagrees with the Hom-space dimension")
        found.extend(mine)
    found.sort(key=lambda u: u.sort_key())
    return found


@dataclass(frozen=True, eq=False)
class IsotypicComponent:
    subspace: Subspace
    simple_dim: int
    multiplicity: int


def check_algebra(F: FiniteField, n: int, alg: Sequence[np.ndarray]) -> Subspace:
    """Span of ``alg`` as a subspace of ``F^(n*n)``; raises unless it is a unital algebra."""
    span = Subspace.from_vectors(F, n * n, np.array([np.asarray(a).ravel() for a in alg]).reshape(-1, n * n))
    if not span.contains(identity(n).ravel()):
        raise ValueError("algebra does not contain the identity")
    mats = span.basis.reshape(-1, n, n)
    for a in mats:
        prods = F.matmul(mats.reshape(-1, n), a).reshape(-1, n * n)
        if span.reduce(prods).any():
            raise ValueError("algebra is not closed under multiplication")
    return span


def isotypic_components(module, alg: Sequence[np.ndarray], seed: int = 0) -> list[IsotypicComponent]:
    """Homogeneous components of ``module`` viewed as a module over the algebra spanned by ``alg``."""
    F, n = module.field, module.dim
    span = check_algebra(F, n, alg)
    amod = Module(F, n, tuple(span.basis.reshape(-1, n, n)))
    comps = []
    for s in simple_types(amod, seed):
        hom = hom_from_simple(s, amod)
        if hom.dim == 0:
            continue
        sub = spin(amod, hom.seed_images())
        comps.append(IsotypicComponent(sub, s.dim, sub.dim // s.dim))
    total = Subspace.from_vectors(F, n, np.vstack([c.subspace.basis for c in comps]))
    if total.dim != n or sum(c.subspace.dim for c in comps) != n:
        raise ValueError("module is not semisimple over the algebra")
    comps.sort(key=lambda c: c.subspace.sort_key())
    return comps
