"""Time-parametrized families crossing the exceptional point.

Six scenario rows pair a t < 0 Hamiltonian family with a t > 0 family so
that both one-sided limits at t = 0 coincide exactly with a designated
interface matrix.  Rows 1-3 run the complex-symmetric model into the real
asymmetric one (z = 1 + t on the left, lambda = t on the right); rows 4-6
are their time reversals (lambda = -t, z = 1 - t), so
``hamiltonian_at(row, n, t) == hamiltonian_at(7 - row, n, -t)``.

The affine parametrizations are one representative of an equivalence class
of monotone reparametrizations; they are fixed here for determinism.
Limits are evaluated by exact substitution at t = 0, which is the limit
because every family is continuous in its parameter there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import models, spectra
from .matrices import ExactMatrix, ExactPolynomial
from .models import DomainError

ROW_LABELS = {
    1: "BH to AO-like",
    2: "Jordan-block match",
    3: "BH-like to AO",
    4: "AO to BH-like",
    5: "Jordan-block match",
    6: "AO-like to BH",
}


@dataclass(frozen=True)
class Parametrization:
    """Affine maps from scenario time to the model parameters."""

    left_name: str
    left: Callable[[Fraction], Fraction]
    right_name: str
    right: Callable[[Fraction], Fraction]


@dataclass(frozen=True)
class ScenarioPath:
    """One scenario row at a fixed dimension: two one-parameter families
    glued at an exceptional-point interface matrix."""

    row: int
    N: int
    label: str
    ep_matrix: ExactMatrix
    left_family: Callable[[Fraction], ExactMatrix]
    right_family: Callable[[Fraction], ExactMatrix]
    parametrization: Parametrization


@dataclass(frozen=True)
class PathSample:
    t: Fraction
    matrix: ExactMatrix
    char_poly: ExactPolynomial
    roots: tuple[complex, ...]


def _check_row(row: int):
    if row not in ROW_LABELS:
        raise DomainError(f"scenario row must be 1..6, got {row}")


def _z_forward(t: Fraction) -> Fraction:
    z = 1 + t
    if z < -1 or z > 1:
        raise DomainError(f"t = {t} leaves the unit parameter interval "
                          "(the opposite exceptional point sits at z = -1)")
    return z


def _z_backward(t: Fraction) -> Fraction:
    return _z_forward(-t)


def _lam_forward(t: Fraction) -> Fraction:
    if t < 0:
        raise DomainError(f"t = {t} gives a negative oscillator parameter")
    return t


def _lam_backward(t: Fraction) -> Fraction:
    return _lam_forward(-t)


def _in_domain(build: Callable[[], ExactMatrix]) -> ExactMatrix:
    # the oscillator constructor rejects over-damped parameters on its own;
    # at scenario level that is a time outside the row's domain
    try:
        return build()
    except models.NonPositiveRadicand as exc:
        raise DomainError(str(exc)) from exc


def scenario_path(row: int, n: int,
                  literal_zero_ep: bool = False) -> ScenarioPath:
    """Build one scenario row at dimension n.

    ``literal_zero_ep`` replaces the interface matrix of rows 1 and 6 by the
    z = 0 member of the complex-symmetric family (the non-EP literal reading
    of the interface tables); with it the matching identity fails by design.
    """
    _check_row(row)
    if row == 1:
        param = Parametrization("z", _z_forward, "lambda", _lam_forward)
        ep = models.bh_hamiltonian(n, 0 if literal_zero_ep else 1)
        left = lambda t: models.bh_hamiltonian(n, _z_forward(t))
        right = lambda t: _in_domain(lambda: models.ao_in_bh_frame(n, _lam_forward(t)))
    elif row == 2:
        param = Parametrization("z", _z_forward, "lambda", _lam_forward)
        ep = models.jordan_block(n, 0)
        left = lambda t: models.bh_in_jordan_basis(n, _z_forward(t))
        right = lambda t: _in_domain(lambda: models.ao_in_jordan_basis(n, _lam_forward(t)))
    elif row == 3:
        param = Parametrization("z", _z_forward, "lambda", _lam_forward)
        ep = models.ao_hamiltonian(n, 0)
        left = lambda t: models.bh_in_ao_frame(n, _z_forward(t))
        right = lambda t: _in_domain(lambda: models.ao_hamiltonian(n, _lam_forward(t)))
    elif row == 4:
        param = Parametrization("lambda", _lam_backward, "z", _z_backward)
        ep = models.ao_hamiltonian(n, 0)
        left = lambda t: _in_domain(lambda: models.ao_hamiltonian(n, _lam_backward(t)))
        right = lambda t: models.bh_in_ao_frame(n, _z_backward(t))
    elif row == 5:
        param = Parametrization("lambda", _lam_backward, "z", _z_backward)
        ep = models.jordan_block(n, 0)
        left = lambda t: _in_domain(lambda: models.ao_in_jordan_basis(n, _lam_backward(t)))
        right = lambda t: models.bh_in_jordan_basis(n, _z_backward(t))
    else:
        param = Parametrization("lambda", _lam_backward, "z", _z_backward)
        ep = models.bh_hamiltonian(n, 0 if literal_zero_ep else 1)
        left = lambda t: _in_domain(lambda: models.ao_in_bh_frame(n, _lam_backward(t)))
        right = lambda t: models.bh_hamiltonian(n, _z_backward(t))
    return ScenarioPath(row=row, N=n, label=ROW_LABELS[row], ep_matrix=ep,
                        left_family=left, right_family=right,
                        parametrization=param)


def hamiltonian_at(row: int, n: int, t) -> ExactMatrix:
    """The scenario Hamiltonian at time t: the left family for t < 0, the
    interface matrix at t = 0, the right family for t > 0."""
    t = Fraction(t)
    path = scenario_path(row, n)
    if t < 0:
        return path.left_family(t)
    if t > 0:
        return path.right_family(t)
    return path.ep_matrix


def sample_path(row: int, n: int, t_values,
                tol: float = 1e-10) -> list[PathSample]:
    """Sample a scenario at the given times: exact matrix, exact
    characteristic polynomial, and numeric roots per sample."""
    samples = []
    for t in t_values:
        t = Fraction(t)
        matrix = hamiltonian_at(row, n, t)
        poly = matrix.char_poly()
        roots = spectra.find_roots(spectra.FloatPolynomial.from_exact(poly),
                                   tol=tol)
        samples.append(PathSample(t=t, matrix=matrix, char_poly=poly,
                                  roots=tuple(roots)))
    return samples
