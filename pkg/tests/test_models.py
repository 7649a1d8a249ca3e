import random
from fractions import Fraction

import pytest

from epgate import models
from epgate.matrices import ExactMatrix, ExactPolynomial
from epgate.models import (
    CouplingSchedule,
    DimensionError,
    DomainError,
    ModelId,
    NonPositiveRadicand,
)
from epgate.radicals import GaussianRational, RadicalSum
from helpers import (
    GOLDEN_H_AO,
    GOLDEN_H_BH,
    GOLDEN_P,
    GOLDEN_Q_AO,
    GOLDEN_Q_BH,
    GOLDEN_R,
    GOLDEN_S,
    T,
)


# ---------------------------------------------------------------------------
# Hamiltonian families against the printed forms
# ---------------------------------------------------------------------------

def test_bh_hamiltonian_golden():
    for n, expected in GOLDEN_H_BH.items():
        assert models.bh_hamiltonian(n, 1) == expected


def test_bh_hamiltonian_diagonal_ordering():
    h = models.bh_hamiltonian(5, Fraction(1, 3))
    diag = [h[k, k] for k in range(5)]
    assert diag[0] == RadicalSum.gaussian(0, Fraction(-4, 3))
    assert diag[-1] == RadicalSum.gaussian(0, Fraction(4, 3))
    assert diag[2] == RadicalSum()


def test_bh_hamiltonian_is_complex_symmetric():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 9)
        z = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
        h = models.bh_hamiltonian(n, z)
        assert h == h.transpose()
        for k in range(n):
            assert h[k, k].as_gaussian().re == 0  # purely imaginary diagonal


def test_ao_hamiltonian_golden():
    for n, expected in GOLDEN_H_AO.items():
        assert models.ao_hamiltonian(n, 0) == expected


def test_ao_hamiltonian_off_ep_couplings():
    # K = 2, damping 1/4: couplings (3/2, sqrt(3), 3/2)
    h = models.ao_hamiltonian(4, Fraction(1, 4))
    assert h[0, 1] == RadicalSum.of(Fraction(3, 2))
    assert h[1, 2] == RadicalSum.sqrt_int(3)
    assert h[2, 3] == RadicalSum.of(Fraction(3, 2))
    assert h[1, 0] == -h[0, 1]


def test_ao_hamiltonian_real_with_antisymmetric_offdiagonal():
    rng = random.Random(6)
    for _ in range(20):
        n = rng.randint(2, 9)
        lam = Fraction(rng.randint(0, 3), 16)
        h = models.ao_hamiltonian(n, lam)
        for i in range(n):
            for j in range(n):
                g = h[i, j].items()
                for _, c in g:
                    assert c.im == 0  # strictly real matrix
                if i != j:
                    assert h[i, j] == -h[j, i]


def test_ao_hamiltonian_domain_errors():
    with pytest.raises(DomainError):
        models.ao_hamiltonian(4, Fraction(-1, 4))
    with pytest.raises(NonPositiveRadicand):
        models.ao_hamiltonian(2, 1)  # damping reaches 1
    with pytest.raises(NonPositiveRadicand):
        models.ao_hamiltonian(6, Fraction(3, 4))  # damping above 1 at K = 3


def test_dimension_errors():
    for fn in (models.bh_hamiltonian, models.ao_hamiltonian):
        with pytest.raises(DimensionError):
            fn(1, 0)
    with pytest.raises(DimensionError):
        models.bh_transition(1)


def test_coupling_schedule():
    assert CouplingSchedule(2).K == 1
    assert CouplingSchedule(7).K == 3
    # damping vanishes at the exceptional point for every dimension
    for n in range(2, 10):
        assert CouplingSchedule(n).damping(1, Fraction(0)) == 0
    # K = 1 uses the linear damping; K = 3 the two-term sum
    assert CouplingSchedule(2).damping(1, Fraction(1, 4)) == Fraction(1, 4)
    assert CouplingSchedule(6).damping(2, Fraction(1, 4)) == \
        Fraction(1, 4) + Fraction(1, 16)
    with pytest.raises(DomainError):
        CouplingSchedule(4).damping(3, Fraction(1, 4))


# ---------------------------------------------------------------------------
# Jordan block and binomial matrix
# ---------------------------------------------------------------------------

def test_jordan_block():
    assert models.jordan_block(2, 0) == ExactMatrix([[0, 1], [0, 0]])
    j3 = models.jordan_block(3, 0)
    assert j3 == ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    j3_eta = models.jordan_block(3, 2)
    assert j3_eta == ExactMatrix([[2, 1, 0], [0, 2, 1], [0, 0, 2]])
    gauss = models.jordan_block(2, GaussianRational(1, -1))
    assert gauss[0, 0] == RadicalSum.gaussian(1, -1)


def test_pascal_matrix_golden():
    for n, expected in GOLDEN_P.items():
        assert models.pascal_matrix(n) == expected
    assert models.pascal_matrix(1) == ExactMatrix([[1]])


# ---------------------------------------------------------------------------
# transition matrices (golden reproduction)
# ---------------------------------------------------------------------------

def test_bh_transition_golden():
    for n, expected in GOLDEN_Q_BH.items():
        assert models.bh_transition(n) == expected


def test_ao_transition_golden():
    for n, expected in GOLDEN_Q_AO.items():
        assert models.ao_transition(n) == expected


def test_intertwiner_golden():
    for n, expected in GOLDEN_S.items():
        assert models.intertwiner(n) == expected


def test_intertwiner_core_golden():
    for n, expected in GOLDEN_R.items():
        assert models.intertwiner_core(n) == expected


def test_intertwiner_diagonal_signs():
    s = models.intertwiner(7)
    for k in range(7):
        assert s[k, k] == RadicalSum.of((-1) ** k)


# ---------------------------------------------------------------------------
# factorized inverses
# ---------------------------------------------------------------------------

def test_bh_transition_inverse_2x2():
    assert models.bh_transition_inverse(2) == \
        ExactMatrix([[0, 1], [1, GaussianRational(0, 1)]])


def test_transition_inverses_multiply_back():
    for n in range(2, 9):
        ident = ExactMatrix.identity(n)
        assert models.ao_transition(n) @ models.ao_transition_inverse(n) == ident
        assert models.bh_transition_inverse(n) @ models.bh_transition(n) == ident
        assert models.intertwiner(n) @ models.intertwiner_inverse(n) == ident


def test_intertwiner_inverse_2x2_is_involution():
    s = models.intertwiner(2)
    assert models.intertwiner_inverse(2) == s
    assert s @ s == ExactMatrix.identity(2)


# ---------------------------------------------------------------------------
# derived Hamiltonians
# ---------------------------------------------------------------------------

def test_jordan_basis_families_hit_the_block_at_the_ep():
    for n in range(2, 7):
        j = models.jordan_block(n, 0)
        assert models.bh_in_jordan_basis(n, 1) == j
        assert models.ao_in_jordan_basis(n, 0) == j


def test_frame_swaps_at_the_ep():
    for n in range(2, 7):
        assert models.ao_in_bh_frame(n, 0) == models.bh_hamiltonian(n, 1)
        assert models.bh_in_ao_frame(n, 1) == models.ao_hamiltonian(n, 0)


def test_ep_helpers():
    assert models.ep_hamiltonian(3, ModelId.BH) == models.bh_hamiltonian(3, 1)
    assert models.ep_hamiltonian(3, ModelId.AO) == models.ao_hamiltonian(3, 0)
    assert models.ep_parameter_name(ModelId.BH) == "z"
    assert models.ep_parameter_value(ModelId.AO) == 0


# ---------------------------------------------------------------------------
# spectral structure
# ---------------------------------------------------------------------------

def test_char_poly_coefficients_are_real_rational():
    rng = random.Random(8)
    for _ in range(10):
        n = rng.randint(2, 6)
        z = Fraction(rng.randint(-7, 7), 8)
        lam = Fraction(rng.randint(0, 3), 8)
        for h in (models.bh_hamiltonian(n, z), models.ao_hamiltonian(n, lam)):
            for c in h.char_poly().coefficients:
                g = c.as_gaussian()  # raises if a radical survived
                assert g.im == 0


def test_full_degeneracy_at_the_ep():
    for n in range(2, 7):
        assert models.bh_hamiltonian(n, 1).char_poly() == ExactPolynomial.power(n)
        assert models.ao_hamiltonian(n, 0).char_poly() == ExactPolynomial.power(n)


def test_ep_identities_sampled():
    for n in (2, 5, 8):
        j = models.jordan_block(n, 0)
        for model in ModelId:
            h = models.ep_hamiltonian(n, model)
            q = models.transition(n, model)
            assert h @ q == q @ j
