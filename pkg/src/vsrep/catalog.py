"""Deterministic built-in groups and representations, plus loaders for
external generator data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from .field import GF, field_from_order
from .linalg import identity, mat_kron
from .perm import PermGroup, Permutation, group_order
from .rep import MonomialData, Representation, induced_rep

__all__ = [
    "CatalogEntry",
    "CATALOG",
    "build",
    "names",
    "sym",
    "alt",
    "alt_words_in_sym",
    "cyclic",
    "dihedral",
    "psl2",
    "agl1",
    "sym_fixed",
    "gl2f2_natural",
    "gl2f2_tensor",
    "gl2f2_wreath",
    "load_external",
    "ExternalDataError",
]

MAX_DEGREE = 16
MAX_Q = 16


class ExternalDataError(ValueError):
    """Malformed generator file or a group order that fails verification."""


def _check_n(n: int, lo: int = 1) -> None:
    if not lo <= n <= MAX_DEGREE:
        raise ValueError(f"degree must lie in [{lo}, {MAX_DEGREE}], got {n}")


def _cycle(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


def sym(n: int) -> PermGroup:
    _check_n(n, 2)
    return PermGroup(n, (Permutation.from_cycles(n, (0, 1)), _cycle(n)))


def alt(n: int) -> PermGroup:
    """``(0 1 2)`` with the ``n``-cycle (odd ``n``) or the ``(n-1)``-cycle on ``1..n-1`` (even ``n``)."""
    _check_n(n, 3)
    first = Permutation.from_cycles(n, (0, 1, 2))
    if n % 2:
        second = _cycle(n)
    else:
        second = Permutation.from_cycles(n, tuple(range(1, n)))
    return PermGroup(n, (first, second))


def alt_words_in_sym(n: int) -> list[list[int]]:
    """Words in the generators of :func:`sym` that generate ``A_n``.

    ``t c t c^-1 = (0 1 2)``, together with ``c`` (odd ``n``) or
    ``t c = (1 2 ... n-1)`` (even ``n``).
    """
    _check_n(n, 3)
    three_cycle = [0, 1, 0, ~1]
    return [three_cycle, [1] if n % 2 else [0, 1]]


def cyclic(n: int) -> PermGroup:
    _check_n(n, 1)
    return PermGroup(n, (_cycle(n),))


def dihedral(n: int) -> PermGroup:
    _check_n(n, 3)
    return PermGroup(n, (_cycle(n), Permutation(tuple((-i) % n for i in range(n)))))


def sym_fixed(n: int) -> PermGroup:
    """``S_n`` on ``0..n-1`` with an extra point ``n`` fixed by everything."""
    _check_n(n + 1, 3)
    g = sym(n)
    return PermGroup(n + 1, tuple(Permutation(s.images + (n,)) for s in g.generators))


def _affine_maps(q: int):
    F = field_from_order(q)
    g = F.primitive_element
    return F, g


def psl2(q: int) -> PermGroup:
    """Action on the projective line: field elements by code, then infinity.

    Generators are ``x -> x + 1``, ``x -> g x`` and ``x -> 1/x`` for even
    ``q``; for odd ``q`` the determinant-one versions ``x -> g^2 x`` and
    ``x -> -1/x`` are used so the group is ``PSL_2`` rather than ``PGL_2``.
    """
    if not 2 <= q <= MAX_Q:
        raise ValueError(f"q must lie in [2, {MAX_Q}]")
    F, g = _affine_maps(q)
    inf = q

    def mobius(f: Callable[[int], int], at_inf: int, to_inf: int | None) -> Permutation:
        img = []
        for x in range(q):
            img.append(inf if x == to_inf else f(x))
        img.append(at_inf)
        return Permutation(tuple(img))

    trans = mobius(lambda x: F.add_l[x][1], inf, None)
    if q % 2 == 0:
        scale = mobius(lambda x: F.mul_l[g][x], inf, None)
        invert = mobius(lambda x: F.inv_l[x], 0, 0)
    else:
        g2 = F.mul_l[g][g]
        scale = mobius(lambda x: F.mul_l[g2][x], inf, None)
        invert = mobius(lambda x: F.neg_l[F.inv_l[x]], 0, 0)
    return PermGroup(q + 1, (trans, scale, invert))


def agl1(q: int) -> PermGroup:
    """``x -> x + 1`` and ``x -> g x`` on the field elements by code."""
    if not 2 <= q <= MAX_Q:
        raise ValueError(f"q must lie in [2, {MAX_Q}]")
    F, g = _affine_maps(q)
    trans = Permutation(tuple(F.add_l[x][1] for x in range(q)))
    scale = Permutation(tuple(F.mul_l[g][x] for x in range(q)))
    return PermGroup(q, (trans, scale))


# ---------------------------------------------------------------------------
# Representations over GF(2)

_GL2_UNIPOTENT = np.array([[1, 1], [0, 1]], dtype=np.uint8)
_GL2_SWAP = np.array([[0, 1], [1, 0]], dtype=np.uint8)


def gl2f2_natural() -> Representation:
    """``GL_2(F_2)`` on ``F_2^2``; both generators are involutions."""
    return Representation(GF(2), 2, (_GL2_UNIPOTENT, _GL2_SWAP), ("u", "s"))


def gl2f2_tensor() -> Representation:
    """Product group ``GL_2(F_2) x GL_2(F_2)`` on ``V_1 (x) V_2``; generators ``g (x) Id`` then ``Id (x) h``."""
    F = GF(2)
    eye = identity(2)
    gens = [mat_kron(F, a, eye) for a in (_GL2_UNIPOTENT, _GL2_SWAP)]
    gens += [mat_kron(F, eye, b) for b in (_GL2_UNIPOTENT, _GL2_SWAP)]
    return Representation(F, 4, tuple(gens), ("u1", "s1", "u2", "s2"))


def gl2f2_wreath() -> Representation:
    """``GL_2(F_2) wr C_2``: the natural module induced from the first factor of the base group."""
    eye = identity(2)
    data = MonomialData(
        block_count=2,
        block_dim=2,
        perms=((0, 1), (0, 1), (1, 0)),
        blocks=((_GL2_UNIPOTENT, eye), (_GL2_SWAP, eye), (eye, eye)),
    )
    rep = induced_rep(data, GF(2))
    return Representation(rep.field, rep.dim, rep.gens, ("u", "s", "swap"))


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "group" or "rep"
    builder: Callable
    params: str
    description: str


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("sym", "group", sym, "n", "symmetric group S_n"),
        CatalogEntry("alt", "group", alt, "n", "alternating group A_n"),
        CatalogEntry("cyclic", "group", cyclic, "n", "cyclic group C_n"),
        CatalogEntry("dihedral", "group", dihedral, "n", "dihedral group D_n of order 2n"),
        CatalogEntry("sym_fixed", "group", sym_fixed, "n", "S_n with one extra fixed point (degree n+1)"),
        CatalogEntry("psl2", "group", psl2, "q", "PSL_2(q) on the q+1 points of the projective line"),
        CatalogEntry("agl1", "group", agl1, "q", "affine group AGL_1(q) on q points"),
        CatalogEntry("gl2f2_natural", "rep", gl2f2_natural, "", "GL_2(F_2) natural module"),
        CatalogEntry("gl2f2_tensor", "rep", gl2f2_tensor, "", "GL_2(F_2)^2 on the 2 (x) 2 tensor product"),
        CatalogEntry("gl2f2_wreath", "rep", gl2f2_wreath, "", "GL_2(F_2) wr C_2, induced 4-dim module"),
    ]
}


def names() -> list[str]:
    return sorted(CATALOG)


def build(name: str, *params: int):
    try:
        entry = CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown catalog entry {name!r}; known: {', '.join(names())}") from None
    expected = 1 if entry.params else 0
    if len(params) != expected:
        raise ValueError(f"{name} takes {expected} integer parameter(s)")
    return entry.builder(*params)


def load_external(path, expected_order: int | None = None) -> PermGroup:
    """Read a permutation group file and, if asked, verify its order."""
    try:
        data = json.loads(Path(path).read_text())
        group = PermGroup.from_images(int(data["degree"]), data["generators"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ExternalDataError(f"cannot read permutation group from {path}: {exc}") from exc
    if expected_order is not None:
        order = group_order(group)
        if order != expected_order:
            raise ExternalDataError(f"group order {order} does not match the expected {expected_order}")
    return group
