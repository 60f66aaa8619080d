"""Permutation groups given by generators.

Permutations are 0-indexed image tuples.  The product ``s * t`` is the
composition "apply ``t`` first, then ``s``": ``(s * t)(i) = s(t(i))``.  This
matches the permutation-matrix convention of :func:`vsrep.rep.perm_to_rep`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_SCHREIER_SIMS_DEGREE = 64


class DegreeBoundError(ValueError):
    """Raised when a group exceeds a desk-scale bound."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation of 0..{len(imgs) - 1}: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        s = self.images
        return Permutation(tuple(s[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class PermGroup:
    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a permutation group needs at least one generator")
        for g in gens:
            if g.degree != self.degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {self.degree}")

    @classmethod
    def from_images(cls, degree: int, generators: Iterable[Sequence[int]]) -> "PermGroup":
        return cls(degree, tuple(Permutation(tuple(g)) for g in generators))

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g.images) for g in self.generators]}


def orbit(g: PermGroup, point: int) -> set[int]:
    if not 0 <= point < g.degree:
        raise ValueError(f"point {point} out of range for degree {g.degree}")
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for s in g.generators:
            y = s.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbits(g: PermGroup) -> list[list[int]]:
    remaining = set(range(g.degree))
    out = []
    for x in range(g.degree):
        if x in remaining:
            orb = orbit(g, x)
            remaining -= orb
            out.append(sorted(orb))
    return out


def is_transitive(g: PermGroup) -> bool:
    return len(orbit(g, 0)) == g.degree


def is_two_transitive(g: PermGroup) -> bool:
    """Closure of the ordered pair (0, 1) under the componentwise action."""
    n = g.degree
    if n < 2:
        raise ValueError("double transitivity needs degree >= 2")
    seen = {(0, 1)}
    queue = deque([(0, 1)])
    while queue:
        a, b = queue.popleft()
        for s in g.generators:
            pair = (s.images[a], s.images[b])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return len(seen) == n * (n - 1)


def fixed_points(g: PermGroup) -> set[int]:
    return {i for i in range(g.degree) if all(s.images[i] == i for s in g.generators)}


class StabChain:
    """Base and strong generating set from deterministic Schreier-Sims.

    The base is ``0, 1, ..., n-2``; levels whose basic orbit is a single
    point are kept (they cost nothing and keep the base fixed).
    """

    def __init__(self, g: PermGroup):
        n = g.degree
        if n > MAX_SCHREIER_SIMS_DEGREE:
            raise DegreeBoundError(f"degree {n} exceeds the Schreier-Sims bound {MAX_SCHREIER_SIMS_DEGREE}")
        self.degree = n
        self.base = list(range(max(n - 1, 0)))
        self._id = Permutation.identity(n)
        k = len(self.base)
        self.strong: list[list[Permutation]] = [[] for _ in range(k)]
        self.transversals: list[dict[int, Permutation]] = [{} for _ in range(k)]
        for s in g.generators:
            if s.is_identity():
                continue
            for i in range(k):
                if all(s.images[b] == b for b in self.base[:i]):
                    self.strong[i].append(s)
        for i in range(k):
            self._rebuild(i)
        self._run()

    def _rebuild(self, i: int) -> None:
        b = self.base[i]
        trans = {b: self._id}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            u = trans[x]
            for s in self.strong[i]:
                y = s.images[x]
                if y not in trans:
                    trans[y] = s * u
                    queue.append(y)
        self.transversals[i] = trans

    def sift(self, h: Permutation, start: int = 0) -> tuple[Permutation, int]:
        for j in range(start, len(self.base)):
            beta = h.images[self.base[j]]
            u = self.transversals[j].get(beta)
            if u is None:
                return h, j
            h = u.inverse() * h
        return h, len(self.base)

    def _run(self) -> None:
        k = len(self.base)
        checked: list[set] = [set() for _ in range(k)]
        i = k - 1
        while i >= 0:
            restarted = False
            trans = self.transversals[i]
            for beta, u in list(trans.items()):
                for idx, s in enumerate(self.strong[i]):
                    key = (beta, idx)
                    if key in checked[i]:
                        continue
                    checked[i].add(key)
                    gamma = s.images[beta]
                    schreier = trans[gamma].inverse() * s * u
                    h, j = self.sift(schreier, i + 1)
                    if not h.is_identity():
                        for level in range(i + 1, j + 1):
                            self.strong[level].append(h)
                            self._rebuild(level)
                            checked[level].clear()
                        i = j
                        restarted = True
                        break
                if restarted:
                    break
            if not restarted:
                i -= 1

    @property
    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        h, _ = self.sift(p)
        return h.is_identity()


def schreier_sims(g: PermGroup) -> StabChain:
    return StabChain(g)


def group_order(g: PermGroup) -> int:
    return schreier_sims(g).order


def enumerate_elements(g: PermGroup, bound: int) -> list[Permutation]:
    """All elements in breadth-first order from the identity."""
    order = group_order(g)
    if order > bound:
        raise DegreeBoundError(f"group order {order} exceeds bound {bound}")
    ident = Permutation.identity(g.degree)
    seen = {ident.images}
    out = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in g.generators:
            y = s * x
            if y.images not in seen:
                seen.add(y.images)
                out.append(y)
                queue.append(y)
    return out
