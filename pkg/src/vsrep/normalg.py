"""Normal subalgebras of ``End(V)`` and the very-simplicity decision.

A unital subalgebra ``R`` of ``End(V)`` is normal when every generator
conjugates it into itself.  A representation is very simple when the only
normal subalgebras are the scalars and ``End(V)``.  When that fails, the
offending subalgebra is classified into one of four kinds of witness:

* not absolutely irreducible (a submodule, or a commutant larger than the
  scalars);
* a tensor splitting ``U rho(g) U^-1 = A_g (x) B_g``;
* an induced structure (blocks permuted transitively by the generators);
* a twisted multiplication (a field ``GF(q^e)`` inside ``End(V)`` on which
  the generators act by Frobenius powers, generating the Galois group).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .field import FiniteField
from .linalg import (
    Echelon,
    Subspace,
    identity,
    is_invertible,
    left_nullspace,
    mat_inverse,
    mat_kron,
    mat_power,
    mat_rank,
)
from .meataxe import (
    DEFAULT_CAP,
    Irreducible,
    _field_generator,
    find_simple_submodule,
    hom_from_simple,
    isotypic_components,
    norton_irreducible,
    quotient_action,
    simple_module,
    socle_minimal_submodules,
    spin,
    submodule_action,
)
from .poly import Poly, deg, is_irreducible, minpoly
from .rep import Module, Representation, rep_adjoint

__all__ = [
    "NormalSubalgebra",
    "NormalityCheck",
    "is_normal_subalgebra",
    "normal_closure",
    "center",
    "VerySimple",
    "NotIrreducible",
    "NotAbsolutelyIrreducible",
    "Induced",
    "TensorSplit",
    "TensorWitness",
    "TwistedMultiplication",
    "ProperNormalSubalgebraUnclassified",
    "Diagnosis",
    "CLAUSE_LABELS",
    "very_simple_exact",
    "very_simple_randomized",
    "diagnose_subalgebra",
    "tensor_factorize",
    "twisted_witness",
    "random_group_word",
]


# ---------------------------------------------------------------------------
# Normal subalgebras


@dataclass(frozen=True, eq=False)
class NormalSubalgebra:
    rep: Representation
    basis: np.ndarray  # (dim, n, n), rows of the canonical RREF of the vectorised span

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def is_scalars(self) -> bool:
        return self.dim == 1

    @property
    def is_full(self) -> bool:
        return self.dim == self.rep.dim**2

    def subspace(self) -> Subspace:
        n = self.rep.dim
        return Subspace.from_vectors(self.rep.field, n * n, self.basis.reshape(-1, n * n))

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": self.basis.tolist()}


@dataclass(frozen=True)
class NormalityCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_normal_subalgebra(rep: Representation, basis) -> NormalityCheck:
    """Check unital, multiplicatively closed and conjugation-stable."""
    F, n = rep.field, rep.dim
    mats = np.asarray(basis, dtype=np.uint8)
    if mats.size == 0:
        return NormalityCheck(False, "empty basis")
    if mats.ndim != 3 or mats.shape[1:] != (n, n):
        raise ValueError(f"expected matrices of shape ({n}, {n})")
    span = Subspace.from_vectors(F, n * n, mats.reshape(-1, n * n))
    if not span.contains(identity(n).ravel()):
        return NormalityCheck(False, "identity not in span")
    b = span.basis.reshape(-1, n, n)
    for x in b:
        prods = F.matmul(b.reshape(-1, n), x).reshape(-1, n * n)
        if span.reduce(prods).any():
            return NormalityCheck(False, "not closed under multiplication")
    for i, (g, gi) in enumerate(zip(rep.gens, rep.inverses)):
        for x in b:
            if not span.contains(F.matmul(F.matmul(g, x), gi).ravel()):
                return NormalityCheck(False, f"not stable under conjugation by generator {i}")
    return NormalityCheck(True)


def normal_closure(rep: Representation, seeds: Sequence[np.ndarray] = ()) -> NormalSubalgebra:
    """Smallest normal subalgebra containing ``seeds``.

    The conjugation-stable span ``L`` of the seeds and ``Id`` is the spin of
    those vectors in the adjoint module; the algebra it generates is
    conjugation-stable as well, and equals the union of ``L, L^2, L^3, ...``.
    """
    F, n = rep.field, rep.dim
    nn = n * n
    adj = _adjoint(rep)
    vecs = [identity(n).ravel()] + [np.asarray(s, dtype=np.uint8).ravel() for s in seeds]
    lspace = spin(adj, np.array(vecs))
    if lspace.dim == nn:
        return NormalSubalgebra(rep, identity(nn).reshape(nn, n, n))
    lmats = lspace.basis.reshape(-1, n, n)
    # stacked right factors, laid out so one matmul multiplies by all of them
    right = np.ascontiguousarray(lmats.transpose(1, 0, 2).reshape(n, -1))
    ech = Echelon(F, nn, capacity=nn)
    frontier = []
    for v in lspace.basis:
        if ech.add(v):
            frontier.append(ech.rows[-1].copy())
    while frontier and ech.rank < nn:
        batch = np.array(frontier).reshape(-1, n)
        frontier = []
        prods = F.matmul(batch, right)  # (k*n, L*n)
        k = batch.shape[0] // n
        prods = prods.reshape(k, n, -1, n).transpose(0, 2, 1, 3).reshape(-1, nn)
        for w in prods:
            if ech.add(w):
                frontier.append(ech.rows[-1].copy())
                if ech.rank == nn:
                    break
    if ech.rank == nn:
        return NormalSubalgebra(rep, identity(nn).reshape(nn, n, n))
    return NormalSubalgebra(rep, ech.basis().reshape(-1, n, n))


def _adjoint(rep: Representation) -> Representation:
    cached = rep.__dict__.get("_adjoint")
    if cached is None:
        cached = rep_adjoint(rep)
        object.__setattr__(rep, "_adjoint", cached)
    return cached


def center(F: FiniteField, basis: np.ndarray) -> np.ndarray:
    """Basis of the center of the algebra spanned by ``basis`` (shape ``(d, n, n)``)."""
    d, n, _ = basis.shape
    flat = basis.reshape(d * n, n)
    blocks = []
    for y in basis:
        xy = F.matmul(flat, y).reshape(d, n * n)
        yx = F.matmul(y, basis.transpose(1, 0, 2).reshape(n, d * n)).reshape(n, d, n).transpose(1, 0, 2).reshape(d, n * n)
        blocks.append(F.sub(xy, yx))
    coeffs = left_nullspace(F, np.concatenate(blocks, axis=1))
    if coeffs.shape[0] == 0:
        return np.zeros((0, n, n), dtype=np.uint8)
    z = F.matmul(coeffs, basis.reshape(d, n * n))
    return Subspace.from_vectors(F, n * n, z).basis.reshape(-1, n, n)


# ---------------------------------------------------------------------------
# Verdicts

CLAUSE_LABELS = {
    "VerySimple": "very simple: scalars and End(V) are the only normal subalgebras",
    "NotIrreducible": "condition (i) fails: not simple",
    "NotAbsolutelyIrreducible": "condition (i) fails: simple but not absolutely simple",
    "TensorSplit": "condition (ii) fails: projective absolutely simple tensor splitting",
    "Induced": "condition (iii) fails: induced from a proper subgroup",
    "TwistedMultiplication": "condition (iv) fails: twisted multiplication",
    "ProperNormalSubalgebraUnclassified": "proper normal subalgebra outside the four conditions",
}


class WitnessError(AssertionError):
    """A witness failed independent re-verification."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise WitnessError(msg)


@dataclass(frozen=True, eq=False)
class VerySimple:
    mode: str = "exact"
    trials: int | None = None
    seeds_checked: int = 0

    tag = "VerySimple"

    def verify(self, rep: Representation) -> bool:
        return True

    def payload(self) -> dict:
        return {"mode": self.mode, "trials": self.trials, "seeds_checked": self.seeds_checked}


@dataclass(frozen=True, eq=False)
class NotIrreducible:
    submodule: Subspace

    tag = "NotIrreducible"

    def verify(self, rep: Representation) -> bool:
        _require(0 < self.submodule.dim < rep.dim, "submodule is not proper and nonzero")
        _require(rep.is_invariant(self.submodule), "submodule is not invariant")
        return True

    def payload(self) -> dict:
        return {"submodule": self.submodule.basis.tolist(), "dim": self.submodule.dim}


@dataclass(frozen=True, eq=False)
class NotAbsolutelyIrreducible:
    end_degree: int
    end_basis: np.ndarray
    generator: np.ndarray
    generator_minpoly: Poly

    tag = "NotAbsolutelyIrreducible"

    def verify(self, rep: Representation) -> bool:
        F = rep.field
        _require(self.end_degree > 1, "endomorphism degree must exceed 1")
        _require(self.end_basis.shape[0] == self.end_degree, "End basis size mismatch")
        for x in list(self.end_basis) + [self.generator]:
            for g in rep.gens:
                _require(np.array_equal(F.matmul(x, g), F.matmul(g, x)), "End element fails to commute")
        mp = minpoly(F, self.generator)
        _require(tuple(mp) == tuple(self.generator_minpoly), "recorded minimal polynomial is wrong")
        _require(deg(mp) == self.end_degree and is_irreducible(F, mp), "End is not GF(q^e)")
        return True

    def payload(self) -> dict:
        return {
            "end_degree": self.end_degree,
            "end_basis": self.end_basis.tolist(),
            "generator": self.generator.tolist(),
            "generator_minpoly": list(self.generator_minpoly),
        }


def _verify_subalgebra(rep: Representation, alg: NormalSubalgebra | None) -> None:
    if alg is None:
        return
    chk = is_normal_subalgebra(rep, alg.basis)
    _require(chk.ok, f"witness subalgebra is not normal: {chk.reason}")
    _require(1 < alg.dim < rep.dim**2, "witness subalgebra is scalars or everything")


def block_permutation(rep: Representation, blocks: Sequence[Subspace]) -> list[tuple[int, ...]]:
    """For each generator, the permutation it induces on the blocks."""
    F = rep.field
    perms = []
    for t in rep.transposes:
        images = []
        for b in blocks:
            img = Subspace.from_vectors(F, rep.dim, F.matmul(b.basis, t))
            hit = [j for j, c in enumerate(blocks) if c == img]
            if len(hit) != 1:
                raise WitnessError("a generator does not map a block onto a block")
            images.append(hit[0])
        perms.append(tuple(images))
    return perms


def _blocks_transitive(perms: Sequence[Sequence[int]], r: int) -> bool:
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for p in perms:
            if p[x] not in seen:
                seen.add(p[x])
                queue.append(p[x])
    return len(seen) == r


@dataclass(frozen=True, eq=False)
class Induced:
    r: int
    blocks: tuple[Subspace, ...]
    block_perms: tuple[tuple[int, ...], ...]
    subalgebra: NormalSubalgebra | None = None

    tag = "Induced"

    def verify(self, rep: Representation) -> bool:
        F, n = rep.field, rep.dim
        _require(self.r > 1 and len(self.blocks) == self.r, "need at least two blocks")
        _require(n % self.r == 0, "block count does not divide the dimension")
        _require(all(b.dim == n // self.r for b in self.blocks), "blocks have unequal dimensions")
        total = Subspace.from_vectors(F, n, np.vstack([b.basis for b in self.blocks]))
        _require(total.dim == n, "blocks do not span V as a direct sum")
        perms = block_permutation(rep, self.blocks)
        _require(tuple(map(tuple, perms)) == self.block_perms, "recorded block permutations are wrong")
        _require(_blocks_transitive(perms, self.r), "blocks are not permuted transitively")
        _verify_subalgebra(rep, self.subalgebra)
        return True

    def payload(self) -> dict:
        return {
            "r": self.r,
            "blocks": [b.basis.tolist() for b in self.blocks],
            "block_perms": [list(p) for p in self.block_perms],
            "subalgebra_dim": None if self.subalgebra is None else self.subalgebra.dim,
        }


@dataclass(frozen=True, eq=False)
class TensorWitness:
    """``U rho(g) U^-1 = A_g (x) B_g`` for every generator."""

    U: np.ndarray
    A: tuple[np.ndarray, ...]
    B: tuple[np.ndarray, ...]

    @property
    def d1(self) -> int:
        return self.A[0].shape[0]

    @property
    def d2(self) -> int:
        return self.B[0].shape[0]

    def verify(self, rep: Representation) -> bool:
        F = rep.field
        _require(is_invertible(F, self.U), "basis change is singular")
        ui = mat_inverse(F, self.U)
        for g, a, b in zip(rep.gens, self.A, self.B):
            lhs = F.matmul(F.matmul(self.U, g), ui)
            _require(np.array_equal(lhs, mat_kron(F, a, b)), "tensor equation fails")
        return True


@dataclass(frozen=True, eq=False)
class TensorSplit:
    d1: int
    d2: int
    witness: TensorWitness
    subalgebra: NormalSubalgebra | None = None

    tag = "TensorSplit"

    def verify(self, rep: Representation) -> bool:
        _require(self.d1 > 1 and self.d2 > 1, "both tensor factors must have dimension > 1")
        _require(self.d1 * self.d2 == rep.dim, "factor dimensions do not multiply to dim V")
        self.witness.verify(rep)
        _verify_subalgebra(rep, self.subalgebra)
        return True

    def payload(self) -> dict:
        return {
            "d1": self.d1,
            "d2": self.d2,
            "U": self.witness.U.tolist(),
            "A": [a.tolist() for a in self.witness.A],
            "B": [b.tolist() for b in self.witness.B],
        }


@dataclass(frozen=True, eq=False)
class TwistedMultiplication:
    ext_degree: int
    chi: tuple[int, ...]
    surjective: bool
    field_basis: np.ndarray
    generator: np.ndarray
    generator_minpoly: Poly
    subalgebra: NormalSubalgebra | None = None

    tag = "TwistedMultiplication"

    def verify(self, rep: Representation) -> bool:
        F = rep.field
        e = self.ext_degree
        _require(e > 1 and self.field_basis.shape[0] == e, "extension degree mismatch")
        mp = minpoly(F, self.generator)
        _require(tuple(mp) == tuple(self.generator_minpoly), "recorded minimal polynomial is wrong")
        _require(deg(mp) == e and is_irreducible(F, mp), "subalgebra is not a field of degree e")
        n = rep.dim
        span = Subspace.from_vectors(F, n * n, self.field_basis.reshape(e, -1))
        powers = Subspace.from_vectors(
            F, n * n, np.array([mat_power(F, self.generator, k).ravel() for k in range(e)])
        )
        _require(span == powers, "field basis is not spanned by powers of the generator")
        for g, gi, i in zip(rep.gens, rep.inverses, self.chi):
            for z in self.field_basis:
                conj = F.matmul(F.matmul(g, z), gi)
                _require(np.array_equal(conj, mat_power(F, z, F.q**i)), "conjugation is not the recorded Frobenius power")
        _require(self.surjective == (math.gcd(e, *self.chi) == 1), "surjectivity flag is wrong")
        _verify_subalgebra(rep, self.subalgebra)
        return True

    def payload(self) -> dict:
        return {
            "ext_degree": self.ext_degree,
            "chi": list(self.chi),
            "surjective": self.surjective,
            "field_basis": self.field_basis.tolist(),
            "generator": self.generator.tolist(),
            "generator_minpoly": list(self.generator_minpoly),
        }


@dataclass(frozen=True, eq=False)
class ProperNormalSubalgebraUnclassified:
    subalgebra: NormalSubalgebra

    tag = "ProperNormalSubalgebraUnclassified"

    def verify(self, rep: Representation) -> bool:
        _verify_subalgebra(rep, self.subalgebra)
        return True

    def payload(self) -> dict:
        return {"subalgebra": self.subalgebra.to_json()}


Verdict = (
    VerySimple
    | NotIrreducible
    | NotAbsolutelyIrreducible
    | Induced
    | TensorSplit
    | TwistedMultiplication
    | ProperNormalSubalgebraUnclassified
)

# reporting preference when several proper closures are found
_PRIORITY = {"TensorSplit": 0, "Induced": 1, "TwistedMultiplication": 2, "ProperNormalSubalgebraUnclassified": 3}


@dataclass(frozen=True, eq=False)
class Diagnosis:
    verdict: Verdict
    mode: str
    seed: int
    wall_time: float
    alternatives: tuple = ()
    closures_checked: int = 0

    @property
    def tag(self) -> str:
        return self.verdict.tag

    @property
    def very_simple(self) -> bool:
        return isinstance(self.verdict, VerySimple)

    @property
    def clause(self) -> str:
        return CLAUSE_LABELS[self.tag]

    def verify(self, rep: Representation) -> bool:
        self.verdict.verify(rep)
        for alt in self.alternatives:
            alt.verify(rep)
        return True


# ---------------------------------------------------------------------------
# Witness constructions


def twisted_witness(rep: Representation, field_basis: np.ndarray, seed: int = 0, subalgebra=None) -> TwistedMultiplication:
    """Frobenius exponents of the conjugation action on a field inside ``End(V)``."""
    F = rep.field
    e = field_basis.shape[0]
    if e < 2:
        raise ValueError("the scalars carry no twisted multiplication")
    gen, mp = _field_generator(F, field_basis, e, seed)
    chi = []
    for g, gi in zip(rep.gens, rep.inverses):
        conj = F.matmul(F.matmul(g, gen), gi)
        power = gen
        for i in range(e):
            if np.array_equal(conj, power):
                chi.append(i)
                break
            power = mat_power(F, power, F.q)
        else:
            raise ValueError("conjugation does not act on the field by a Frobenius power")
    surjective = math.gcd(e, *chi) == 1
    if not surjective:
        raise AssertionError("the Galois character is not surjective for an absolutely irreducible module")
    out = TwistedMultiplication(e, tuple(chi), surjective, field_basis, gen, mp, subalgebra)
    out.verify(rep)
    return out


def tensor_factorize(rep: Representation, alg: NormalSubalgebra, seed: int = 0) -> TensorSplit:
    """Split ``V = W (x) Hom_R(W, V)`` for a simple normal subalgebra ``R`` with center ``k``."""
    F, n = rep.field, rep.dim
    amod = Module(F, n, tuple(alg.basis))
    w = find_simple_submodule(amod, seed)
    m = w.dim
    d = n // m
    if m < 2 or d < 2 or m * d != n:
        raise ValueError("subalgebra does not give a proper tensor splitting")
    wmod = submodule_action(amod, w)
    s = simple_module(wmod, seed=seed)
    if s.end_degree() != 1:
        raise ValueError("simple R-module has endomorphisms beyond the scalars")
    hom = hom_from_simple(s, amod)
    if hom.dim != d:
        raise ValueError("multiplicity does not match dim V / dim W")
    # column i*d + j of U^-1 is the image of the i-th standard basis vector under the j-th map
    cols = hom.images.transpose(1, 0, 2).reshape(m * d, n)
    uinv = np.ascontiguousarray(cols.T)
    if not is_invertible(F, uinv):
        raise ValueError("Hom images do not form a basis")
    u = mat_inverse(F, uinv)
    a_list, b_list = [], []
    for g in rep.gens:
        conj = F.matmul(F.matmul(u, g), uinv)
        blocks = conj.reshape(m, d, m, d).transpose(0, 2, 1, 3)
        nz = np.argwhere(blocks.reshape(m * m, d * d).any(axis=1))
        i1, j1 = divmod(int(nz[0][0]), m)
        b = np.ascontiguousarray(blocks[i1, j1])
        pos = tuple(np.argwhere(b)[0])
        inv = F.inv_l[int(b[pos])]
        a = np.array([[F.mul_l[int(blocks[x, y][pos])][inv] for y in range(m)] for x in range(m)], dtype=np.uint8)
        if not np.array_equal(mat_kron(F, a, b), conj):
            raise ValueError("conjugated generator is not a Kronecker product")
        a_list.append(a)
        b_list.append(b)
    witness = TensorWitness(u, tuple(a_list), tuple(b_list))
    out = TensorSplit(m, d, witness, alg)
    out.verify(rep)
    return out


def diagnose_subalgebra(rep: Representation, alg: NormalSubalgebra, seed: int = 0):
    """Classify a proper normal subalgebra of an absolutely irreducible representation."""
    F, n = rep.field, rep.dim
    if not 1 < alg.dim < n * n:
        raise ValueError("subalgebra is not proper")
    chk = is_normal_subalgebra(rep, alg.basis)
    if not chk:
        raise ValueError(f"not a normal subalgebra: {chk.reason}")
    comps = isotypic_components(Module(F, n, ()), list(alg.basis), seed)
    if len(comps) > 1:
        blocks = tuple(c.subspace for c in comps)
        perms = block_permutation(rep, blocks)
        out = Induced(len(blocks), blocks, tuple(perms), alg)
        out.verify(rep)
        return out
    z = center(F, alg.basis)
    if z.shape[0] > 1:
        return twisted_witness(rep, z, seed, alg)
    m = math.isqrt(alg.dim)
    if m * m == alg.dim and 1 < m < n and n % m == 0:
        return tensor_factorize(rep, alg, seed)
    return ProperNormalSubalgebraUnclassified(alg)


# ---------------------------------------------------------------------------
# Decision procedures


def _absolute_checks(rep: Representation, seed: int):
    """Irreducibility then absolute irreducibility; returns a verdict or None."""
    res = norton_irreducible(rep, seed)
    if not isinstance(res, Irreducible):
        v = NotIrreducible(res.submodule)
        v.verify(rep)
        return v
    s = simple_module(rep, res)
    if s.end_degree() > 1:
        from .meataxe import endomorphism_algebra

        end = endomorphism_algebra(rep, seed)
        v = NotAbsolutelyIrreducible(end.ext_degree, end.basis, end.generator, end.generator_minpoly)
        v.verify(rep)
        return v
    return None


def _best(found: list):
    # among induced witnesses the finest block system wins
    return min(found, key=lambda v: (_PRIORITY[v.tag], -getattr(v, "r", 0)))


def _distinct_closures(closures: list[NormalSubalgebra]) -> list[NormalSubalgebra]:
    seen = set()
    out = []
    for c in closures:
        key = c.basis.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def very_simple_exact(
    rep: Representation, seed: int = 0, cap: int = DEFAULT_CAP, all_witnesses: bool = False
) -> Diagnosis:
    """Exact decision: every proper normal subalgebra contains the preimage of
    a minimal submodule of ``End(V) / k Id``, so it suffices to close those."""
    t0 = time.perf_counter()
    F, n = rep.field, rep.dim
    if n == 1:
        return Diagnosis(VerySimple("exact"), "exact", seed, time.perf_counter() - t0)
    early = _absolute_checks(rep, seed)
    if early is not None:
        return Diagnosis(early, "exact", seed, time.perf_counter() - t0)
    adj = _adjoint(rep)
    scal = Subspace.from_vectors(F, n * n, identity(n).ravel())
    quot, free = quotient_action(adj, scal)
    minimal = socle_minimal_submodules(quot, cap, seed)
    proper = []
    for sbar in minimal:
        lift = np.zeros((sbar.dim, n * n), dtype=np.uint8)
        lift[:, free] = sbar.basis
        clos = normal_closure(rep, list(lift.reshape(-1, n, n)))
        if not clos.is_full:
            proper.append(clos)
    if not proper:
        v = VerySimple("exact", None, len(minimal))
        return Diagnosis(v, "exact", seed, time.perf_counter() - t0, closures_checked=len(minimal))
    verdicts = [diagnose_subalgebra(rep, c, seed) for c in _distinct_closures(proper)]
    best = _best(verdicts)
    alts = tuple(v for v in verdicts if v is not best) if all_witnesses else ()
    return Diagnosis(best, "exact", seed, time.perf_counter() - t0, alts, len(minimal))


def random_group_word(ngens: int, rng: np.random.Generator, length: int) -> list[int]:
    return [int(i) if rng.random() < 0.5 else ~int(i) for i in rng.integers(0, ngens, size=length)]


def very_simple_randomized(
    rep: Representation, seed: int = 0, trials: int = 64, all_witnesses: bool = False
) -> Diagnosis:
    """Monte Carlo search for a proper normal closure.

    Seeds are images of random group elements: the closure of ``rho(h)`` is
    the image of the group algebra of the normal subgroup generated by
    ``h``, which is proper exactly when that image is.  A VerySimple answer
    from this mode is a probabilistic claim.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t0 = time.perf_counter()
    F, n = rep.field, rep.dim
    if n == 1:
        return Diagnosis(VerySimple("randomized", trials), "randomized", seed, time.perf_counter() - t0)
    early = _absolute_checks(rep, seed)
    if early is not None:
        return Diagnosis(early, "randomized", seed, time.perf_counter() - t0)
    rng = np.random.default_rng(seed)
    ngens = len(rep.gens)
    proper = []
    checked = 0
    for _ in range(trials):
        word = random_group_word(ngens, rng, int(rng.integers(1, 4 * ngens + 9)))
        x = rep.evaluate(word)
        checked += 1
        if _is_scalar(F, x):
            continue
        clos = normal_closure(rep, [x])
        if not clos.is_full:
            proper.append(clos)
            if not all_witnesses:
                break
    if not proper:
        v = VerySimple("randomized", trials, checked)
        return Diagnosis(v, "randomized", seed, time.perf_counter() - t0, closures_checked=checked)
    verdicts = [diagnose_subalgebra(rep, c, seed) for c in _distinct_closures(proper)]
    best = _best(verdicts)
    alts = tuple(v for v in verdicts if v is not best) if all_witnesses else ()
    return Diagnosis(best, "randomized", seed, time.perf_counter() - t0, alts, checked)


def _is_scalar(F: FiniteField, x: np.ndarray) -> bool:
    c = int(x[0, 0])
    return np.array_equal(x, F.scale(c, identity(x.shape[0]))) if c else not x.any()
