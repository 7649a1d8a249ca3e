"""Numeric layer: tridiagonal characteristic polynomials, polynomial root
finding, spectral-reality and degeneracy-approach reports, conditioning.

The characteristic polynomial of either Hamiltonian family is computed
exactly through the three-term minor recurrence

    p_k(E) = (E - d_(k-1)) p_(k-1)(E) - sub*sup * p_(k-2)(E),

where the sub*sup product of paired couplings is +-k(N-k)(1-damping) -- a
plain rational -- so the recurrence never leaves Gaussian-rational
coefficients even though the matrix entries are radicals.  Roots are then
located in floating point with a simultaneous Aberth-Ehrlich iteration from
a fixed, deterministic circle of starting points: identical inputs give
bit-identical reports.

Spectral reality is certified in two stages: exactly at the coefficient
level (real rational coefficients for every rational parameter), and
numerically at the root level.  Exact root-reality certification would need
real-root-counting machinery, which this package deliberately omits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import models
from .matrices import ExactMatrix, ExactPolynomial, StructureError
from .models import DomainError, ModelId
from .radicals import RadicalSum


class ConvergenceError(RuntimeError):
    """Root iteration hit the cap; ``best`` holds the last iterate."""

    def __init__(self, message: str, best: list[complex]):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class FloatPolynomial:
    """Monic polynomial with complex double coefficients, degree ascending."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise ValueError("need degree >= 1")
        if self.coefficients[-1] != 1:
            raise ValueError("coefficients must be monic")

    @classmethod
    def from_exact(cls, p: ExactPolynomial) -> "FloatPolynomial":
        if not p.is_monic:
            raise ValueError("exact polynomial is not monic")
        return cls(tuple(p.to_complex_coefficients()))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class SpectrumReport:
    N: int
    model: ModelId
    param: float
    roots: tuple[complex, ...]
    max_imag: float
    max_pair_gap: float
    min_pair_gap: float


@dataclass(frozen=True)
class ConditionEntry:
    """Frobenius condition estimate kappa = |Q|_F * |Q^-1|_F for one
    transition-matrix family at one dimension."""

    N: int
    family: str
    kappa: float


def char_poly_tridiagonal(n: int, model: ModelId, param) -> ExactPolynomial:
    """Exact monic characteristic polynomial of a model Hamiltonian,
    specialized to its tridiagonal form."""
    param = Fraction(param)
    h = (models.bh_hamiltonian(n, param) if model is ModelId.BH
         else models.ao_hamiltonian(n, param))
    return _tridiagonal_char_poly(h)


def _tridiagonal_char_poly(h: ExactMatrix) -> ExactPolynomial:
    n = h.n_rows
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and h[i, j]:
                raise StructureError(f"matrix is not tridiagonal at ({i},{j})")
    one = ExactPolynomial([1])
    prev2 = one
    prev1 = ExactPolynomial([-h[0, 0], RadicalSum.of(1)])
    for k in range(2, n + 1):
        lin = ExactPolynomial([-h[k - 1, k - 1], RadicalSum.of(1)])
        offdiag = h[k - 2, k - 1] * h[k - 1, k - 2]
        prev1, prev2 = lin * prev1 - offdiag * prev2, prev1
    return prev1


def find_roots(p: FloatPolynomial, tol: float = 1e-12,
               max_iter: int = 1000) -> list[complex]:
    """All roots of a monic polynomial by simultaneous Aberth-Ehrlich
    iteration.

    Starting points sit on a fixed circle of radius 1 + max|coeff| with a
    fixed angular offset, so results are deterministic.  Convergence is
    declared when every residual satisfies |p(z)| <= tol * (1 + sum|coeff|),
    which also covers multiple roots (no separation is claimed for them).
    Returns roots sorted by (real, imag).
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    deg = p.degree
    coeffs_desc = np.array(p.coefficients[::-1], dtype=complex)
    deriv_desc = np.polyder(coeffs_desc)
    radius = 1.0 + float(np.max(np.abs(coeffs_desc[1:])))
    angles = 2.0 * np.pi * np.arange(deg) / deg + 0.4
    z = radius * np.exp(1j * angles)
    scale = 1.0 + float(np.sum(np.abs(coeffs_desc)))
    best = z
    best_res = np.inf
    for _ in range(max_iter):
        pv = np.polyval(coeffs_desc, z)
        res = float(np.max(np.abs(pv)))
        if res < best_res:
            best, best_res = z.copy(), res
        if res <= tol * scale:
            return _sorted_roots(z)
        dv = np.polyval(deriv_desc, z)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = np.sum(1.0 / diff, axis=1) - 1.0  # undo the diagonal fill
        denom = 1.0 - newton * repulsion
        denom = np.where(denom == 0, 1.0, denom)
        z = z - newton / denom
    raise ConvergenceError(
        f"no convergence after {max_iter} iterations (best residual "
        f"{best_res:.3e})", _sorted_roots(best))


def _sorted_roots(z: np.ndarray) -> list[complex]:
    order = np.lexsort((z.imag, z.real))
    return [complex(v) for v in z[order]]


def _spectrum_report(n: int, model: ModelId, param: Fraction,
                     tol: float) -> SpectrumReport:
    exact = char_poly_tridiagonal(n, model, param)
    roots = find_roots(FloatPolynomial.from_exact(exact), tol=tol)
    arr = np.array(roots)
    gaps = np.abs(arr[:, None] - arr[None, :])
    iu = np.triu_indices(len(roots), k=1)
    return SpectrumReport(
        N=n, model=model, param=float(param), roots=tuple(roots),
        max_imag=float(np.max(np.abs(arr.imag))),
        max_pair_gap=float(np.max(gaps[iu])),
        min_pair_gap=float(np.min(gaps[iu])))


def reality_scan(n: int, model: ModelId, params,
                 tol: float = 1e-10) -> list[SpectrumReport]:
    """Spectrum reports over a parameter list inside the real-spectrum
    regime; reports come back ordered by parameter value."""
    fracs = sorted(Fraction(p) for p in params)
    return [_spectrum_report(n, model, p, tol) for p in fracs]


def degeneracy_scan(n: int, model: ModelId, params,
                    tol: float = 1e-10) -> list[SpectrumReport]:
    """Spectrum reports along a parameter sequence approaching the
    exceptional point, in the order given; the max pairwise root gap is the
    quantity expected to shrink."""
    return [_spectrum_report(n, model, Fraction(p), tol) for p in params]


_FAMILIES = (
    ("q-bh", models.bh_transition, models.bh_transition_inverse),
    ("q-ao", models.ao_transition, models.ao_transition_inverse),
    ("s-rc", models.intertwiner, models.intertwiner_inverse),
)


def condition_report(n_values) -> list[ConditionEntry]:
    """Frobenius condition estimates for the three transition-matrix
    families, one entry per (family, N), N ascending within each family."""
    n_list = sorted(set(int(n) for n in n_values))
    out = []
    for family, fwd, inv in _FAMILIES:
        for n in n_list:
            if n < 2:
                raise DomainError(f"condition report needs N >= 2, got {n}")
            kappa = fwd(n).frobenius_norm() * inv(n).frobenius_norm()
            out.append(ConditionEntry(N=n, family=family, kappa=kappa))
    return out
