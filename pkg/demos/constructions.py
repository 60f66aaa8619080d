"""Three ways to fail very simplicity, each with a checkable witness.

A tensor product of two representations of a product group, a module
induced from a subgroup of index 2, and the heart of AGL(1,9) whose
translation subgroup splits it into four blocks.
"""

from __future__ import annotations

from vsrep import catalog as cat
from vsrep.heart import heart
from vsrep.normalg import very_simple_exact

tensor = cat.gl2f2_tensor()
d = very_simple_exact(tensor, all_witnesses=True)
w = d.verdict.witness
print("tensor module:", d.tag, f"d1={w.d1} d2={w.d2}")
print("  U =", w.U.tolist())
for label, a, b in zip(tensor.labels, w.A, w.B):
    print(f"  {label}: A={a.tolist()} B={b.tolist()}")
print("  other proper closures:", sorted(a.tag for a in d.alternatives))
assert d.verify(tensor)

wreath = cat.gl2f2_wreath()
d = very_simple_exact(wreath)
print("wreath module:", d.tag, "r =", d.verdict.r, "block permutations", d.verdict.block_perms)
assert d.verify(wreath)

h = heart(cat.agl1(9)).rep
d = very_simple_exact(h)
print("AGL(1,9) heart:", d.tag, "r =", d.verdict.r)
for b in d.verdict.blocks:
    print("  block", b.basis.tolist())
print("  generators permute blocks as", d.verdict.block_perms)
assert d.verify(h)
