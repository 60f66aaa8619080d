"""Univariate polynomials over GF(q): arithmetic, factorisation, and the
characteristic/minimal polynomials of matrices.

Polynomials are tuples of element codes, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from .field import FiniteField
from .linalg import Echelon, identity

Poly = tuple


def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def deg(f: Poly) -> int:
    return len(f) - 1


def padd(F: FiniteField, f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    add = F.add_l
    return trim(add[f[i] if i < len(f) else 0][g[i] if i < len(g) else 0] for i in range(n))


def psub(F: FiniteField, f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    sub = F.sub_l
    return trim(sub[f[i] if i < len(f) else 0][g[i] if i < len(g) else 0] for i in range(n))


def pscale(F: FiniteField, c: int, f: Poly) -> Poly:
    row = F.mul_l[c]
    return trim(row[a] for a in f)


def pmul(F: FiniteField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    add, mul = F.add_l, F.mul_l
    for i, a in enumerate(f):
        if a:
            row = mul[a]
            for j, b in enumerate(g):
                if b:
                    out[i + j] = add[out[i + j]][row[b]]
    return trim(out)


def pdivmod(F: FiniteField, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return (), trim(r)
    inv_lead = F.inv_l[g[-1]]
    q = [0] * (len(r) - dg)
    sub, mul = F.sub_l, F.mul_l
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if c:
            c = mul[c][inv_lead]
            q[k - dg] = c
            row = mul[c]
            for j in range(dg + 1):
                if g[j]:
                    r[k - dg + j] = sub[r[k - dg + j]][row[g[j]]]
    return trim(q), trim(r[:dg])


def pmod(F: FiniteField, f: Poly, g: Poly) -> Poly:
    return pdivmod(F, f, g)[1]


def monic(F: FiniteField, f: Poly) -> Poly:
    if not f:
        return f
    return pscale(F, F.inv_l[f[-1]], f)


def pgcd(F: FiniteField, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, pmod(F, f, g)
    return monic(F, f)


def ppowmod(F: FiniteField, f: Poly, k: int, m: Poly) -> Poly:
    result: Poly = (1,)
    base = pmod(F, f, m)
    while k:
        if k & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        k >>= 1
    return result


def derivative(F: FiniteField, f: Poly) -> Poly:
    out = []
    for i in range(1, len(f)):
        c = 0
        for _ in range(i % F.p):
            c = F.add_l[c][f[i]]
        out.append(c)
    return trim(out)


def _pth_root(F: FiniteField, f: Poly) -> Poly:
    # f(x) = g(x)^p with coefficients g_i = (f_{ip})^(p^(e-1))
    out = []
    for i in range(0, len(f), F.p):
        out.append(F.frobenius(int(f[i]), F.e - 1) if F.e > 1 else f[i])
    return trim(out)


def squarefree_factorization(F: FiniteField, f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree factors with multiplicities (Yun / char-p variant)."""
    f = monic(F, f)
    if deg(f) < 1:
        return []
    result: list[tuple[Poly, int]] = []
    df = derivative(F, f)
    if not df:
        return [(g, m * F.p) for g, m in squarefree_factorization(F, _pth_root(F, f))]
    c = pgcd(F, f, df)
    w = pdivmod(F, f, c)[0]
    i = 1
    while deg(w) > 0:
        y = pgcd(F, w, c)
        z = pdivmod(F, w, y)[0]
        if deg(z) > 0:
            result.append((monic(F, z), i))
        i += 1
        w = y
        c = pdivmod(F, c, y)[0]
    if deg(c) > 0:
        result.extend((g, m * F.p) for g, m in squarefree_factorization(F, _pth_root(F, c)))
    return result


def distinct_degree_factorization(F: FiniteField, f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree ``f`` into products of equal-degree irreducibles."""
    out: list[tuple[Poly, int]] = []
    x: Poly = (0, 1)
    h = x
    d = 0
    rest = f
    while deg(rest) >= 2 * (d + 1):
        d += 1
        h = ppowmod(F, h, F.q, rest)
        g = pgcd(F, rest, psub(F, h, x))
        if deg(g) > 0:
            out.append((g, d))
            rest = pdivmod(F, rest, g)[0]
            h = pmod(F, h, rest)
    if deg(rest) > 0:
        out.append((rest, deg(rest)))
    return out


def _random_poly(F: FiniteField, n: int, rng: random.Random) -> Poly:
    return trim(rng.randrange(F.q) for _ in range(n))


def equal_degree_factorization(F: FiniteField, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-``d`` irreducibles."""
    if deg(f) == d:
        return [f]
    n = deg(f)
    while True:
        a = _random_poly(F, n, rng)
        if deg(a) < 1:
            continue
        if F.p == 2:
            # trace map x + x^2 + ... + x^(2^(e*d-1))
            t = a
            acc = a
            for _ in range(F.e * d - 1):
                t = pmod(F, pmul(F, t, t), f)
                acc = padd(F, acc, t)
            b = acc
        else:
            b = psub(F, ppowmod(F, a, (F.q**d - 1) // 2, f), (1,))
        g = pgcd(F, f, b)
        if 0 < deg(g) < n:
            h = pdivmod(F, f, g)[0]
            return equal_degree_factorization(F, g, d, rng) + equal_degree_factorization(F, monic(F, h), d, rng)


def factor(F: FiniteField, f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    """Irreducible monic factors with multiplicity, sorted by (degree, coefficients)."""
    rng = random.Random(seed)
    out: list[tuple[Poly, int]] = []
    for g, m in squarefree_factorization(F, f):
        for h, d in distinct_degree_factorization(F, g):
            for irr in equal_degree_factorization(F, h, d, rng):
                out.append((irr, m))
    merged: dict[Poly, int] = {}
    for g, m in out:
        merged[g] = merged.get(g, 0) + m
    return sorted(merged.items(), key=lambda t: (len(t[0]), t[0]))


def is_irreducible(F: FiniteField, f: Poly) -> bool:
    f = monic(F, trim(f))
    if deg(f) < 1:
        return False
    fac = factor(F, f)
    return len(fac) == 1 and fac[0][1] == 1


# ---------------------------------------------------------------------------
# Matrices


def eval_matrix(F: FiniteField, f: Poly, a: np.ndarray) -> np.ndarray:
    """``f(a)`` by Horner's rule."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=np.uint8)
    eye = identity(n)
    for c in reversed(f):
        out = F.matmul(out, a)
        if c:
            out = F.add(out, F.scale(int(c), eye))
    return out


def charpoly(F: FiniteField, a: np.ndarray) -> Poly:
    """Characteristic polynomial via Krylov chains relative to a growing span."""
    n = a.shape[0]
    at = np.ascontiguousarray(a.T)
    width = 2 * n + 1
    ech = Echelon(F, width, pivot_cols=n, capacity=n)
    result: Poly = (1,)
    for i in range(n):
        if ech.rank == n:
            break
        v = np.zeros(n, dtype=np.uint8)
        v[i] = 1
        if ech.contains(np.concatenate([v, np.zeros(n + 1, dtype=np.uint8)])):
            continue
        j = 0
        while True:
            aug = np.zeros(width, dtype=np.uint8)
            aug[:n] = v
            aug[n + j] = 1
            red = ech.reduce(aug)
            if not red[:n].any():
                rel = trim(int(c) for c in red[n:])
                result = pmul(F, result, monic(F, rel))
                break
            ech.add(red, reduced=True)
            v = F.matmul(v, at)
            j += 1
        ech.clear_tail()
    return result


def minpoly(F: FiniteField, a: np.ndarray) -> Poly:
    """Minimal polynomial from the first linear dependency among powers of ``a``."""
    n = a.shape[0]
    m = n * n
    width = m + n + 1
    ech = Echelon(F, width, pivot_cols=m, capacity=n + 1)
    power = identity(n)
    for j in range(n + 1):
        aug = np.zeros(width, dtype=np.uint8)
        aug[:m] = power.ravel()
        aug[m + j] = 1
        red = ech.reduce(aug)
        if not red[:m].any():
            return monic(F, trim(int(c) for c in red[m:]))
        ech.add(red, reduced=True)
        power = F.matmul(power, a)
    raise AssertionError("Cayley-Hamilton violated")
