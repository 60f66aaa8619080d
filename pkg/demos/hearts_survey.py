"""Diagnose the heart of every built-in permutation group up to degree 11.

Prints one row per group: degree, heart dimension, 2-transitivity, verdict
and timing.  Very simple hearts only show up for doubly transitive groups
(or one fixed point plus a doubly transitive action on the rest).
"""

from __future__ import annotations

from vsrep import catalog as cat
from vsrep.heart import heart, theorem_simple_check
from vsrep.normalg import very_simple_exact
from vsrep.perm import group_order, is_two_transitive

CASES = [("sym", n) for n in range(5, 10)] + [("alt", n) for n in range(5, 10)]
CASES += [("cyclic", 5), ("dihedral", 5), ("dihedral", 7)]
CASES += [("psl2", q) for q in (4, 5, 7, 8, 9)] + [("agl1", q) for q in (5, 7, 8, 9)]
CASES += [("sym_fixed", 4), ("sym_fixed", 5)]

print(f"{'group':<14}{'n':>3}{'order':>8}{'dim':>5}  2-trans  {'verdict':<30}time")
for name, p in CASES:
    g = cat.build(name, p)
    h = heart(g)
    d = very_simple_exact(h.rep)
    two = is_two_transitive(g)
    assert theorem_simple_check(g, d)
    extra = ""
    if d.tag == "Induced":
        extra = f" r={d.verdict.r}"
    elif d.tag == "NotAbsolutelyIrreducible":
        extra = f" e={d.verdict.end_degree}"
    print(f"{name + '(' + str(p) + ')':<14}{g.degree:>3}{group_order(g):>8}{h.dim:>5}  {str(two):<7}  {d.tag + extra:<30}{d.wall_time:.2f}s")
