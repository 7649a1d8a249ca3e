"""Constructors for the model matrices.

Two tridiagonal Hamiltonian families live here -- the complex-symmetric
Bose-Hubbard chain H_BH(z) with exceptional points at z = +-1 and the real
asymmetric anharmonic-oscillator chain H_AO(lambda) with its exceptional
point at lambda = 0 -- together with the Jordan block, the binomial
(Pascal-triangle) matrix, and the closed-form transition machinery:

* ``bh_transition`` / ``ao_transition``: the matrices Q that carry each EP
  Hamiltonian to the nilpotent Jordan block, built as diagonal * pascal *
  diagonal products,
* ``intertwiner``: the upper-triangular matrix S with S @ H_BH(1) =
  H_AO(0) @ S, built as diagonal * core * diagonal with a real
  square-root-of-binomials core,
* exact inverses of all three, obtained through the factorizations, and
* the similarity-transformed Hamiltonian families used by the crossing
  scenarios (Jordan-basis and swapped-frame versions of both models).

All constructors are pure and exact; parameters are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from enum import Enum
from math import comb, factorial

from .matrices import ExactMatrix, similarity
from .radicals import GaussianRational, RadicalSum, invert_monomial

_ZERO = RadicalSum()
_I_UNIT = GaussianRational(0, 1)


class DimensionError(ValueError):
    """Matrix dimension below the model's minimum."""


class NonPositiveRadicand(ValueError):
    """A coupling radicand left the positive domain."""


class DomainError(ValueError):
    """Parameter outside the model's exact domain."""


class ModelId(Enum):
    BH = "bh"
    AO = "ao"


def _check_dimension(n: int):
    if n < 2:
        raise DimensionError(f"model dimension must be >= 2, got {n}")


def _as_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise DomainError(f"parameters must be exact rationals, got {type(x).__name__}")


@dataclass(frozen=True)
class CouplingSchedule:
    """Coupling-damping schedule of the anharmonic-oscillator family.

    N = 2K or 2K + 1; with the optional per-site constants dropped, the
    damping is site-independent:  lambda + lambda^2 + ... + lambda^(K-1).
    At K = 1 that sum is empty, which would freeze the family at its
    exceptional point for every lambda, so the schedule uses the linear
    damping lambda there instead (the N = 2, 3 special case).
    """

    N: int

    @property
    def K(self) -> int:
        return self.N // 2

    def damping(self, n: int, lam: Fraction) -> Fraction:
        if not 1 <= n <= self.K:
            raise DomainError(f"site index must lie in 1..{self.K}, got {n}")
        lam = _as_fraction(lam)
        if self.K == 1:
            return lam
        return sum((lam ** j for j in range(1, self.K)), Fraction(0))


def coupling_damping(n: int, lam) -> Fraction:
    """Site-independent damping for dimension N = n (module-level shortcut)."""
    return CouplingSchedule(n).damping(1, lam)


# ---------------------------------------------------------------------------
# Hamiltonian families
# ---------------------------------------------------------------------------

def bh_hamiltonian(n: int, z) -> ExactMatrix:
    """Complex-symmetric tridiagonal family, dimension n, parameter z.

    Diagonal i*(2k - n + 1)*z for k = 0..n-1; couplings sqrt(k*(n-k))
    between rows k-1 and k on both off-diagonals.
    """
    _check_dimension(n)
    z = _as_fraction(z)
    rows = [[_ZERO] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = RadicalSum.gaussian(0, (2 * k - n + 1) * z)
    for k in range(1, n):
        g = RadicalSum.sqrt_int(k * (n - k))
        rows[k - 1][k] = g
        rows[k][k - 1] = g
    return ExactMatrix(rows)


def ao_hamiltonian(n: int, lam) -> ExactMatrix:
    """Real asymmetric tridiagonal family, dimension n, parameter lambda >= 0.

    Diagonal 2k - n + 1; coupling sqrt(k*(n-k)*(1 - damping)) appears with a
    plus sign on the superdiagonal and a minus sign on the subdiagonal.  The
    damping must stay below 1 so every radicand is positive.
    """
    _check_dimension(n)
    lam = _as_fraction(lam)
    if lam < 0:
        raise DomainError(f"lambda must be >= 0, got {lam}")
    schedule = CouplingSchedule(n)
    rows = [[_ZERO] * n for _ in range(n)]
    for k in range(n):
        rows[k][k] = RadicalSum.of(Fraction(2 * k - n + 1))
    for k in range(1, n):
        site = min(k, n - k)
        radicand = k * (n - k) * (1 - schedule.damping(site, lam))
        if radicand <= 0:
            raise NonPositiveRadicand(
                f"coupling radicand {radicand} at row pair ({k - 1},{k}); "
                f"lambda = {lam} is outside the model domain")
        g = RadicalSum.sqrt_rational(radicand)
        rows[k - 1][k] = g
        rows[k][k - 1] = -g
    return ExactMatrix(rows)


def jordan_block(n: int, eta=0) -> ExactMatrix:
    """Jordan block: eta on the diagonal, 1 on the superdiagonal."""
    if n < 1:
        raise DimensionError(f"Jordan block needs n >= 1, got {n}")
    eta = RadicalSum.of(eta)
    one = RadicalSum.of(1)
    return ExactMatrix([
        [eta if i == j else one if j == i + 1 else _ZERO for j in range(n)]
        for i in range(n)])


@lru_cache(maxsize=None)
def pascal_matrix(n: int) -> ExactMatrix:
    """Binomial matrix with entry (m, q) = C(n-1-m, q); zero above the
    anti-diagonal, so the last row is (1, 0, ..., 0)."""
    if n < 1:
        raise DimensionError(f"Pascal matrix needs n >= 1, got {n}")
    return ExactMatrix([
        [comb(n - 1 - m, q) for q in range(n)] for m in range(n)])


# ---------------------------------------------------------------------------
# Transition matrices and their factorizations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bh_pre_factor(n: int) -> ExactMatrix:
    """Diagonal i^k * sqrt(C(n-1, k)), k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.sqrt_int(comb(n - 1, k)) * RadicalSum.of(_I_UNIT ** k)
        for k in range(n))


@lru_cache(maxsize=None)
def bh_post_factor(n: int) -> ExactMatrix:
    """Diagonal (-i)^(n-1-k) * (n-1-k)!, k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.of((-_I_UNIT) ** (n - 1 - k) * factorial(n - 1 - k))
        for k in range(n))


@lru_cache(maxsize=None)
def bh_transition(n: int) -> ExactMatrix:
    """Transition matrix of the complex-symmetric family at its z = 1
    exceptional point: pre_factor @ pascal @ post_factor."""
    return bh_pre_factor(n) @ pascal_matrix(n) @ bh_post_factor(n)


@lru_cache(maxsize=None)
def ao_pre_factor(n: int) -> ExactMatrix:
    """Diagonal sqrt(C(n-1, k)), k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.sqrt_int(comb(n - 1, k)) for k in range(n))


@lru_cache(maxsize=None)
def ao_post_factor(n: int) -> ExactMatrix:
    """Diagonal (-1)^(n-1-k) * (n-1-k)!, k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.of(Fraction((-1) ** (n - 1 - k) * factorial(n - 1 - k)))
        for k in range(n))


@lru_cache(maxsize=None)
def ao_transition(n: int) -> ExactMatrix:
    """Transition matrix of the real asymmetric family at its lambda = 0
    exceptional point: pre_factor @ pascal @ post_factor."""
    return ao_pre_factor(n) @ pascal_matrix(n) @ ao_post_factor(n)


# The complex unit of the intertwiner factor diagonals.
_BETA = GaussianRational(-1, 1)


@lru_cache(maxsize=None)
def intertwiner_pre_factor(n: int) -> ExactMatrix:
    """Diagonal (1 - i)^(-k), k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.of((-_BETA) ** (-k)) for k in range(n))


@lru_cache(maxsize=None)
def intertwiner_post_factor(n: int) -> ExactMatrix:
    """Diagonal (-1 + i)^k, k = 0..n-1."""
    _check_dimension(n)
    return ExactMatrix.diagonal(
        RadicalSum.of(_BETA ** k) for k in range(n))


@lru_cache(maxsize=None)
def intertwiner_core(n: int) -> ExactMatrix:
    """Real upper-triangular core with entries sqrt(C(r+q, r) * C(n-1-r, q))
    at (r, r+q); unit diagonal, binomial square roots above it."""
    _check_dimension(n)
    rows = [[_ZERO] * n for _ in range(n)]
    for r in range(n):
        for q in range(n - r):
            rows[r][r + q] = RadicalSum.sqrt_int(comb(r + q, r) * comb(n - 1 - r, q))
    return ExactMatrix(rows)


@lru_cache(maxsize=None)
def intertwiner(n: int) -> ExactMatrix:
    """Upper-triangular matrix S mapping the complex-symmetric EP Hamiltonian
    to the real asymmetric one: S @ bh_hamiltonian(n, 1) =
    ao_hamiltonian(n, 0) @ S.  Diagonal entries are (-1)^k."""
    return (intertwiner_pre_factor(n) @ intertwiner_core(n)
            @ intertwiner_post_factor(n))


def _diagonal_inverse(d: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.diagonal(
        invert_monomial(d[k, k]) for k in range(d.n_rows))


@lru_cache(maxsize=None)
def bh_transition_inverse(n: int) -> ExactMatrix:
    """Exact inverse through the factorization: post^-1 @ pascal^-1 @ pre^-1."""
    return (_diagonal_inverse(bh_post_factor(n))
            @ pascal_matrix(n).inverse_rational()
            @ _diagonal_inverse(bh_pre_factor(n)))


@lru_cache(maxsize=None)
def ao_transition_inverse(n: int) -> ExactMatrix:
    """Exact inverse through the factorization: post^-1 @ pascal^-1 @ pre^-1."""
    return (_diagonal_inverse(ao_post_factor(n))
            @ pascal_matrix(n).inverse_rational()
            @ _diagonal_inverse(ao_pre_factor(n)))


@lru_cache(maxsize=None)
def intertwiner_inverse(n: int) -> ExactMatrix:
    """Exact inverse through the factorization: post^-1 @ core^-1 @ pre^-1."""
    return (_diagonal_inverse(intertwiner_post_factor(n))
            @ intertwiner_core(n).inverse_upper_triangular()
            @ _diagonal_inverse(intertwiner_pre_factor(n)))


# ---------------------------------------------------------------------------
# Similarity-transformed Hamiltonian families
# ---------------------------------------------------------------------------

def bh_in_jordan_basis(n: int, z) -> ExactMatrix:
    """The complex-symmetric Hamiltonian conjugated into the basis of its own
    EP transition matrix: Q^-1 @ H(z) @ Q.  Equals the nilpotent Jordan block
    at z = 1."""
    return similarity(bh_hamiltonian(n, z), bh_transition(n),
                      bh_transition_inverse(n))


def ao_in_jordan_basis(n: int, lam) -> ExactMatrix:
    """The real asymmetric Hamiltonian conjugated into the basis of its own
    EP transition matrix: Q^-1 @ H(lambda) @ Q.  Equals the nilpotent Jordan
    block at lambda = 0."""
    return similarity(ao_hamiltonian(n, lam), ao_transition(n),
                      ao_transition_inverse(n))


def bh_in_ao_frame(n: int, z) -> ExactMatrix:
    """S @ H_BH(z) @ S^-1: the complex-symmetric dynamics written in the real
    asymmetric model's frame.  Equals ao_hamiltonian(n, 0) at z = 1."""
    return similarity(bh_hamiltonian(n, z), intertwiner_inverse(n),
                      intertwiner(n))


def ao_in_bh_frame(n: int, lam) -> ExactMatrix:
    """S^-1 @ H_AO(lambda) @ S: the real asymmetric dynamics written in the
    complex-symmetric model's frame.  Equals bh_hamiltonian(n, 1) at
    lambda = 0."""
    return similarity(ao_hamiltonian(n, lam), intertwiner(n),
                      intertwiner_inverse(n))


def ep_hamiltonian(n: int, model: ModelId) -> ExactMatrix:
    """The exceptional-point member of a family (z = 1 or lambda = 0)."""
    if model is ModelId.BH:
        return bh_hamiltonian(n, 1)
    return ao_hamiltonian(n, 0)


def transition(n: int, model: ModelId) -> ExactMatrix:
    """The transition matrix of a family's exceptional point."""
    return bh_transition(n) if model is ModelId.BH else ao_transition(n)


def transition_inverse(n: int, model: ModelId) -> ExactMatrix:
    return (bh_transition_inverse(n) if model is ModelId.BH
            else ao_transition_inverse(n))


def ep_parameter_name(model: ModelId) -> str:
    return "z" if model is ModelId.BH else "lambda"


def ep_parameter_value(model: ModelId) -> Fraction:
    return Fraction(1) if model is ModelId.BH else Fraction(0)
