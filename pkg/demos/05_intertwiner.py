#!/usr/bin/env python3
# The direct bridge between the two exceptional-point Hamiltonians: an
# upper-triangular intertwiner S with S @ H_bh(1) = H_ao(0) @ S.

from epgate import (
    ExactMatrix,
    ao_hamiltonian,
    ao_transition,
    bh_hamiltonian,
    bh_transition_inverse,
    intertwiner,
    intertwiner_core,
    intertwiner_inverse,
)
from epgate.models import intertwiner_post_factor, intertwiner_pre_factor

# S can be computed as a product of the two transition matrices ...
n = 5
via_transitions = ao_transition(n) @ bh_transition_inverse(n)

# ... but it also has its own three-factor closed form: powers of (-1+i) on
# the diagonals and a strictly real upper-triangular core of square roots of
# binomial products.
closed_form = (intertwiner_pre_factor(n) @ intertwiner_core(n)
               @ intertwiner_post_factor(n))
assert via_transitions == closed_form == intertwiner(n)
print(intertwiner(n))
print()
print("real core:")
print(intertwiner_core(n))
print()

# The defining property, in product form (no inverse needed):
assert intertwiner(n) @ bh_hamiltonian(n, 1) == \
    ao_hamiltonian(n, 0) @ intertwiner(n)
print("S @ H_bh(1) == H_ao(0) @ S exactly")

# And with the exact inverse, the two EP Hamiltonians are exactly similar.
s, s_inv = intertwiner(n), intertwiner_inverse(n)
assert s @ s_inv == ExactMatrix.identity(n)
assert s @ bh_hamiltonian(n, 1) @ s_inv == ao_hamiltonian(n, 0)
print("H_ao(0) == S @ H_bh(1) @ S^-1 exactly")
