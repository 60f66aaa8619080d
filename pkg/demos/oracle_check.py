"""Compare the exact decision with brute force over every single-element seed.

For a module of dimension n over GF(2) there are 2^(n*n) candidate seeds;
a proper normal subalgebra exists iff one of them has a proper closure.
"""

from __future__ import annotations

import time

from vsrep.normalg import very_simple_exact
from vsrep.oracle import brute_force_very_simple
from vsrep.selftest import oracle_cases

for name, rep in oracle_cases(4):
    t0 = time.perf_counter()
    vs, examined, counter = brute_force_very_simple(rep.gens)
    t1 = time.perf_counter()
    d = very_simple_exact(rep)
    t2 = time.perf_counter()
    mark = "ok" if vs == d.very_simple else "MISMATCH"
    print(
        f"{name:<16} dim {rep.dim}  brute={str(vs):<5} ({examined:>5} orbit reps, {t1 - t0:.2f}s)"
        f"  exact={d.tag:<26} ({t2 - t1:.2f}s)  {mark}"
    )
