"""Brute-force reference for small GF(2) modules.

Matrices are packed into Python integers (bit ``i*n + j`` holds entry
``(i, j)``) and every computation here avoids the numpy linear-algebra
stack, so agreement with :func:`vsrep.normalg.very_simple_exact` is a check
by an independent route.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = ["pack", "unpack", "imul", "closure_dim", "group_elements", "brute_force_very_simple"]


def pack(m) -> int:
    m = np.asarray(m)
    n = m.shape[0]
    out = 0
    for i in range(n):
        for j in range(n):
            if int(m[i, j]) & 1:
                out |= 1 << (i * n + j)
    return out


def unpack(x: int, n: int) -> list[list[int]]:
    return [[(x >> (i * n + j)) & 1 for j in range(n)] for i in range(n)]


def imul(a: int, b: int, n: int) -> int:
    mask = (1 << n) - 1
    rows_b = [(b >> (j * n)) & mask for j in range(n)]
    out = 0
    for i in range(n):
        row = (a >> (i * n)) & mask
        acc = 0
        j = 0
        while row:
            if row & 1:
                acc ^= rows_b[j]
            row >>= 1
            j += 1
        out |= acc << (i * n)
    return out


def _ident(n: int) -> int:
    return sum(1 << (i * n + i) for i in range(n))


def _inverse(a: int, n: int) -> int:
    # the group generated by a is finite, so a^-1 is a power of a
    eye = _ident(n)
    prev, x = eye, a
    while x != eye:
        prev, x = x, imul(x, a, n)
    return prev


class _XorBasis:
    def __init__(self):
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            r = self.rows.get(top)
            if r is None:
                return v
            v ^= r
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[v.bit_length() - 1] = v
            return True
        return False

    def __len__(self) -> int:
        return len(self.rows)


def closure_dim(seeds: Sequence[int], gens: Sequence[int], invs: Sequence[int], n: int) -> int:
    """Dimension of the smallest unital, multiplicatively closed, conjugation-stable span."""
    full = n * n
    basis = _XorBasis()
    elems: list[int] = []
    queue: list[int] = []
    for s in [_ident(n), *seeds]:
        if basis.add(s):
            elems.append(s)
            queue.append(s)
    while queue and len(basis) < full:
        x = queue.pop()
        cands = [imul(imul(g, x, n), gi, n) for g, gi in zip(gens, invs)]
        for y in list(elems):
            cands.append(imul(x, y, n))
            cands.append(imul(y, x, n))
        for c in cands:
            if basis.add(c):
                elems.append(c)
                queue.append(c)
                if len(basis) == full:
                    break
    return len(basis)


def group_elements(gens: Sequence[int], n: int, bound: int = 200_000) -> list[int]:
    eye = _ident(n)
    seen = {eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = imul(g, x, n)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise ValueError("group image too large for brute force")
        frontier = nxt
    return sorted(seen)


def brute_force_very_simple(mats: Sequence[np.ndarray]) -> tuple[bool, int, int | None]:
    """Whether every single-element closure is the scalars or everything.

    Returns ``(very_simple, seeds_examined, counterexample)``.  Seeds are
    visited in increasing integer order; conjugates of a visited seed and
    translates by the identity have the same closure and are skipped.
    """
    mats = [np.asarray(m) for m in mats]
    n = mats[0].shape[0]
    full = n * n
    gens = [pack(m) for m in mats]
    invs = [_inverse(g, n) for g in gens]
    elements = group_elements(gens, n)
    conj = [(h, _inverse(h, n)) for h in elements]
    eye = _ident(n)
    done = bytearray(1 << full)
    examined = 0
    for a in range(1 << full):
        if done[a]:
            continue
        for h, hi in conj:
            b = imul(imul(h, a, n), hi, n)
            done[b] = 1
            done[b ^ eye] = 1
        examined += 1
        d = closure_dim([a], gens, invs, n)
        if d not in (1, full):
            return False, examined, a
    return True, examined, None
