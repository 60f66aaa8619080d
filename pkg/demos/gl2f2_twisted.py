"""The 2-dimensional natural module of GL_2(F_2) is not very simple.

Walks through the normal subalgebra generated by an element of order 3,
shows it is a copy of GF(4) inside Mat_2(F_2), and reads off how the
group acts on it by Frobenius powers.
"""

from __future__ import annotations

import numpy as np

from vsrep.field import GF
from vsrep.normalg import normal_closure, twisted_witness, very_simple_exact
from vsrep.poly import minpoly
from vsrep.rep import Representation

F = GF(2)
# a transposition and a 3-cycle of S_3 = GL_2(F_2)
t = np.array([[0, 1], [1, 0]], dtype=np.uint8)
c = np.array([[0, 1], [1, 1]], dtype=np.uint8)
rep = Representation(F, 2, (t, c), ("t", "c"))

alg = normal_closure(rep, [c])
print("closure of the 3-cycle has dimension", alg.dim)
for x in alg.basis:
    print(x.tolist())
print("minimal polynomial of the 3-cycle (low degree first):", minpoly(F, c))

tw = twisted_witness(rep, alg.basis)
for label, i in zip(rep.labels, tw.chi):
    print(f"  {label} acts on the field as Frobenius^{i}")
print("chi surjective:", tw.surjective)

d = very_simple_exact(rep)
print("verdict:", d.tag, "|", d.clause)
