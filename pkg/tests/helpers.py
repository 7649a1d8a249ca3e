"""Shared test fixtures: hand-frozen golden matrices, random element
generators, and independent brute-force oracles."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from epgate.matrices import ExactMatrix
from epgate.radicals import GaussianRational, RadicalSum


def T(m: int, re, im=0) -> RadicalSum:
    """Single term (re + im*i) * sqrt(m)."""
    return RadicalSum({m: GaussianRational(Fraction(re), Fraction(im))})


def G(re, im=0) -> RadicalSum:
    return RadicalSum.gaussian(Fraction(re), Fraction(im))


def M(rows) -> ExactMatrix:
    return ExactMatrix(rows)


# ---------------------------------------------------------------------------
# Golden matrices, transcribed by hand from the printed closed forms.
# Products of two printed radicals (e.g. sqrt(5)*sqrt(2)) are entered with
# their canonical single radicand (sqrt(10)).
# ---------------------------------------------------------------------------

GOLDEN_H_BH = {
    2: M([[G(0, -1), 1], [1, G(0, 1)]]),
    3: M([[G(0, -2), T(2, 1), 0],
          [T(2, 1), 0, T(2, 1)],
          [0, T(2, 1), G(0, 2)]]),
    6: M([[G(0, -5), T(5, 1), 0, 0, 0, 0],
          [T(5, 1), G(0, -3), T(2, 2), 0, 0, 0],
          [0, T(2, 2), G(0, -1), 3, 0, 0],
          [0, 0, 3, G(0, 1), T(2, 2), 0],
          [0, 0, 0, T(2, 2), G(0, 3), T(5, 1)],
          [0, 0, 0, 0, T(5, 1), G(0, 5)]]),
}

GOLDEN_Q_BH = {
    2: M([[G(0, -1), 1], [1, 0]]),
    3: M([[-2, G(0, -2), 1],
          [T(2, 0, -2), T(2, 1), 0],
          [2, 0, 0]]),
    6: M([[G(0, -120), 120, G(0, 60), -20, G(0, -5), 1],
          [T(5, 120), T(5, 0, 96), T(5, -36), T(5, 0, -8), T(5, 1), 0],
          [T(10, 0, 120), T(10, -72), T(10, 0, -18), T(10, 2), 0, 0],
          [T(10, -120), T(10, 0, -48), T(10, 6), 0, 0, 0],
          [T(5, 0, -120), T(5, 24), 0, 0, 0, 0],
          [120, 0, 0, 0, 0, 0]]),
}

GOLDEN_H_AO = {
    2: M([[-1, 1], [-1, 1]]),
    3: M([[-2, T(2, 1), 0],
          [T(2, -1), 0, T(2, 1)],
          [0, T(2, -1), 2]]),
}

GOLDEN_Q_AO = {
    2: M([[-1, 1], [-1, 0]]),
    3: M([[2, -2, 1],
          [T(2, 2), T(2, -1), 0],
          [2, 0, 0]]),
    4: M([[-6, 6, -3, 1],
          [T(3, -6), T(3, 4), T(3, -1), 0],
          [T(3, -6), T(3, 2), 0, 0],
          [-6, 0, 0, 0]]),
    5: M([[24, -24, 12, -4, 1],
          [48, -36, 12, -2, 0],
          [T(6, 24), T(6, -12), T(6, 2), 0, 0],
          [48, -12, 0, 0, 0],
          [24, 0, 0, 0, 0]]),
}

GOLDEN_S = {
    2: M([[1, G(-1, 1)], [0, -1]]),
    3: M([[1, T(2, -1, 1), G(0, -2)],
          [0, -1, T(2, 1, -1)],
          [0, 0, 1]]),
    4: M([[1, T(3, -1, 1), T(3, 0, -2), G(2, 2)],
          [0, -1, G(2, -2), T(3, 0, 2)],
          [0, 0, 1, T(3, -1, 1)],
          [0, 0, 0, -1]]),
    5: M([[1, G(-2, 2), T(6, 0, -2), G(4, 4), -4],
          [0, -1, T(6, 1, -1), G(0, 6), G(-4, -4)],
          [0, 0, 1, T(6, -1, 1), T(6, 0, -2)],
          [0, 0, 0, -1, G(2, -2)],
          [0, 0, 0, 0, 1]]),
}

GOLDEN_R = {
    2: M([[1, 1], [0, 1]]),
    3: M([[1, T(2, 1), 1],
          [0, 1, T(2, 1)],
          [0, 0, 1]]),
    4: M([[1, T(3, 1), T(3, 1), 1],
          [0, 1, 2, T(3, 1)],
          [0, 0, 1, T(3, 1)],
          [0, 0, 0, 1]]),
    5: M([[1, 2, T(6, 1), 2, 1],
          [0, 1, T(6, 1), 3, 2],
          [0, 0, 1, T(6, 1), T(6, 1)],
          [0, 0, 0, 1, 2],
          [0, 0, 0, 0, 1]]),
    6: M([[1, T(5, 1), T(10, 1), T(10, 1), T(5, 1), 1],
          [0, 1, T(2, 2), T(2, 3), 4, T(5, 1)],
          [0, 0, 1, 3, T(2, 3), T(10, 1)],
          [0, 0, 0, 1, T(2, 2), T(10, 1)],
          [0, 0, 0, 0, 1, T(5, 1)],
          [0, 0, 0, 0, 0, 1]]),
}

GOLDEN_P = {
    4: M([[1, 3, 3, 1], [1, 2, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]),
    5: M([[1, 4, 6, 4, 1], [1, 3, 3, 1, 0], [1, 2, 1, 0, 0],
          [1, 1, 0, 0, 0], [1, 0, 0, 0, 0]]),
}


# ---------------------------------------------------------------------------
# Random generators
# ---------------------------------------------------------------------------

def random_radical(rng: random.Random, max_terms: int = 3,
                   max_radicand: int = 50, max_num: int = 1000,
                   max_den: int = 30) -> RadicalSum:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = rng.randint(1, max_radicand)
        coeff = GaussianRational(
            Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)),
            Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)))
        terms[m] = coeff
    return RadicalSum(terms)


def random_matrix(rng: random.Random, n: int, **kw) -> ExactMatrix:
    return ExactMatrix([[random_radical(rng, **kw) for _ in range(n)]
                        for _ in range(n)])


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def trial_division_squarefree(n: int) -> tuple[int, int]:
    """Reference squarefree split: largest square divisor by brute force."""
    best_f = 1
    for f in range(1, n + 1):
        if f * f > n:
            break
        if n % (f * f) == 0:
            best_f = f
    return n // (best_f * best_f), best_f


def _poly_add(a: list[RadicalSum], b: list[RadicalSum]) -> list[RadicalSum]:
    out = list(a) + [RadicalSum()] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


def _poly_mul(a: list[RadicalSum], b: list[RadicalSum]) -> list[RadicalSum]:
    out = [RadicalSum()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _perm_sign(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def leibniz_char_poly(m: ExactMatrix) -> list[RadicalSum]:
    """det(E*I - A) by the full permutation expansion; coefficients E-degree
    ascending.  Exponential cost -- only usable for n <= 4."""
    n = m.n_rows
    one = RadicalSum.of(1)
    total = [RadicalSum()] * (n + 1)
    for perm in itertools.permutations(range(n)):
        poly = [RadicalSum.of(_perm_sign(perm))]
        for i in range(n):
            cell = [-m[i, perm[i]]]
            if i == perm[i]:
                cell.append(one)
            poly = _poly_mul(poly, cell)
        total = _poly_add(total, poly)
    return total


def perturb_constructor(fn, where="corner", delta=1):
    """Wrap a matrix constructor so its result has one entry shifted by
    ``delta``: fault injection for sensitivity tests."""
    def wrapper(*args, **kwargs):
        m = fn(*args, **kwargs)
        if where == "corner":
            i, j = 0, m.n_cols - 1
        elif where == "diag":
            i, j = 0, 0
        else:
            i, j = where
        return m.with_entry(i, j, m[i, j] + delta)
    return wrapper
