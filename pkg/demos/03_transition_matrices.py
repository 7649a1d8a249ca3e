#!/usr/bin/env python3
# Closed-form transition matrices: diagonal * binomial * diagonal products.

from epgate import (
    ExactMatrix,
    bh_transition,
    bh_transition_inverse,
    ao_transition,
    ao_transition_inverse,
    pascal_matrix,
)
from epgate.models import (
    ao_post_factor,
    ao_pre_factor,
    bh_post_factor,
    bh_pre_factor,
)

# Both families share the same combinatorial core: the binomial matrix with
# rows of Pascal's triangle stacked upside down.
print(pascal_matrix(5))
print()

# Sandwiching it between two diagonals (powers of i and square roots of
# binomials on the left, signed factorials on the right) yields the full
# transition matrix of the complex-symmetric family in closed form, at any
# dimension.
n = 6
assert bh_transition(n) == bh_pre_factor(n) @ pascal_matrix(n) @ bh_post_factor(n)
print(bh_transition(n))
print()

# The real family uses the same skeleton without the complex phases.
assert ao_transition(5) == ao_pre_factor(5) @ pascal_matrix(5) @ ao_post_factor(5)
print(ao_transition(5))
print()

# The factorization also delivers exact inverses: diagonals invert termwise
# and the binomial matrix has an integer inverse, so Q @ Q^-1 is exactly the
# identity, not approximately.
for n in (2, 6, 12):
    assert bh_transition(n) @ bh_transition_inverse(n) == ExactMatrix.identity(n)
    assert ao_transition_inverse(n) @ ao_transition(n) == ExactMatrix.identity(n)
print("exact inverses verified for N = 2, 6, 12")
print(bh_transition_inverse(2))
