"""Very simple representations over small finite fields.

Decides whether the only normal subalgebras of ``End(V)`` for a
representation given by generator matrices are the scalars and everything,
and produces re-verifiable witnesses when they are not.
"""

from __future__ import annotations

from .field import GF, FiniteField, FieldElem, ff_add, ff_frobenius, ff_inv, ff_mul
from .perm import Permutation, PermGroup, group_order, is_two_transitive, orbit
from .rep import (
    CharacterTwist,
    MonomialData,
    Representation,
    induced_rep,
    perm_to_rep,
    rep_adjoint,
    rep_dual,
    rep_tensor,
    rep_twist,
    sum_zero_submodule,
)
from .meataxe import (
    endomorphism_algebra,
    is_absolutely_irreducible,
    isotypic_components,
    norton_irreducible,
    socle_minimal_submodules,
    spin,
)
from .normalg import (
    Diagnosis,
    diagnose_subalgebra,
    is_normal_subalgebra,
    normal_closure,
    tensor_factorize,
    twisted_witness,
    very_simple_exact,
    very_simple_randomized,
)
from .heart import heart, heart_faithful, kappa_embed, remark_odd_check, theorem_simple_check

__version__ = "0.1.0"
