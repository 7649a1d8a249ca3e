#!/usr/bin/env python3
# The two tridiagonal model families and their exceptional points.

from fractions import Fraction

from epgate import ao_hamiltonian, bh_hamiltonian

# The first family is complex symmetric: purely imaginary equidistant
# diagonal scaled by z, real couplings sqrt(k(N-k)).  Its spectrum is real
# for |z| < 1 and collapses completely at the exceptional points z = +-1.
h = bh_hamiltonian(4, Fraction(1, 2))
print(h)
print()

# The second family is real but asymmetric: +g on the superdiagonal, -g on
# the subdiagonal, with couplings damped by a polynomial in lambda.  Its
# exceptional point sits at lambda = 0.
print(ao_hamiltonian(4, Fraction(1, 4)))
print()

# Exact characteristic polynomials certify the spectral claims with zero
# tolerance.  Off the EP the coefficients are real rationals (the testable
# form of the families' antilinear symmetry) ...
print([str(c) for c in h.char_poly().coefficients])

# ... and at the EP the polynomial degenerates to a pure power of E: all N
# eigenvalues (and, as the transition matrices show, all eigenvectors)
# coalesce.
for n in (2, 5, 8):
    print(n, [str(c) for c in bh_hamiltonian(n, 1).char_poly().coefficients])
    print(n, [str(c) for c in ao_hamiltonian(n, 0).char_poly().coefficients])
