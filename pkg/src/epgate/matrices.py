"""Dense matrices and polynomials over the exact radical field.

Everything here is exact: products, structural inverses, similarity
transforms, and the Faddeev-LeVerrier characteristic polynomial.  The only
floating-point bridge is the Frobenius norm.  Inversion is deliberately
structural -- back substitution for triangular matrices with monomially
invertible diagonals, Gauss-Jordan over Gaussian rationals for radical-free
matrices -- because every inverse needed downstream decomposes into these
cases; there is no elimination over general multi-term pivots.
"""

from __future__ import annotations

from fractions import Fraction
from math import sqrt

from .radicals import (
    DivisionByZero,
    GaussianRational,
    MultiTermInverse,
    RadicalSum,
    invert_monomial,
)

_ZERO = RadicalSum()
_ONE = RadicalSum.of(1)


class ShapeError(ValueError):
    """Operand shapes are incompatible."""


class StructureError(ValueError):
    """Matrix lacks the structure (triangularity, rational entries) an
    operation relies on."""


class SingularError(ValueError):
    """Exact inversion hit a non-invertible pivot."""


class NotInverseError(ValueError):
    """A claimed inverse failed the exact two-sided check."""


class ExactMatrix:
    """Immutable dense matrix with RadicalSum entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        table = tuple(tuple(RadicalSum.of(e) for e in row) for row in rows)
        if not table or not table[0]:
            raise ShapeError("matrix needs at least one row and one column")
        width = len(table[0])
        if any(len(r) != width for r in table):
            raise ShapeError("ragged rows")
        self._rows = table

    @classmethod
    def _raw(cls, rows: tuple[tuple[RadicalSum, ...], ...]) -> "ExactMatrix":
        out = object.__new__(cls)
        out._rows = rows
        return out

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.scalar(n, _ONE)

    @classmethod
    def scalar(cls, n: int, value) -> "ExactMatrix":
        v = RadicalSum.of(value)
        return cls._raw(tuple(
            tuple(v if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "ExactMatrix":
        return cls._raw(tuple(
            tuple(_ZERO for _ in range(n_cols)) for _ in range(n_rows)))

    @classmethod
    def diagonal(cls, entries) -> "ExactMatrix":
        entries = [RadicalSum.of(e) for e in entries]
        n = len(entries)
        return cls._raw(tuple(
            tuple(entries[i] if i == j else _ZERO for j in range(n))
            for i in range(n)))

    # -- inspection ---------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def n_cols(self) -> int:
        return len(self._rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, key) -> RadicalSum:
        i, j = key
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[RadicalSum, ...], ...]:
        return self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def is_zero(self) -> bool:
        return all(not e for row in self._rows for e in row)

    # -- arithmetic ---------------------------------------------------------

    def _require_same_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return ExactMatrix._raw(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)))

    def __sub__(self, other) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._require_same_shape(other)
        return ExactMatrix._raw(tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self._rows, other._rows)))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(tuple(-e for e in r) for r in self._rows))

    def __mul__(self, other) -> "ExactMatrix":
        """Entrywise scaling by an exact scalar."""
        if isinstance(other, (int, Fraction, GaussianRational, RadicalSum)):
            s = RadicalSum.of(other)
            return ExactMatrix._raw(tuple(
                tuple(e * s for e in r) for r in self._rows))
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise ShapeError(
                f"cannot multiply {self.shape} by {other.shape}")
        bt = tuple(zip(*other._rows))  # columns of other
        out = []
        for row in self._rows:
            out_row = []
            for col in bt:
                acc = _ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return ExactMatrix._raw(tuple(out))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(zip(*self._rows)))

    def trace(self) -> RadicalSum:
        if not self.is_square:
            raise ShapeError("trace needs a square matrix")
        acc = _ZERO
        for i in range(self.n_rows):
            acc = acc + self._rows[i][i]
        return acc

    def with_entry(self, i: int, j: int, value) -> "ExactMatrix":
        """Copy with one entry replaced (handy for sensitivity experiments)."""
        v = RadicalSum.of(value)
        return ExactMatrix._raw(tuple(
            tuple(v if (r == i and c == j) else e for c, e in enumerate(row))
            for r, row in enumerate(self._rows)))

    # -- structural inverses -------------------------------------------------

    def inverse_upper_triangular(self) -> "ExactMatrix":
        """Exact inverse of an upper-triangular matrix by back substitution.

        Each diagonal entry must be a monomial c*sqrt(m) with an exact
        field-level inverse (unit diagonals and +-1 diagonals included).
        """
        if not self.is_square:
            raise StructureError("inverse needs a square matrix")
        n = self.n_rows
        if any(self._rows[i][j] for i in range(n) for j in range(i)):
            raise StructureError("matrix is not upper triangular")
        try:
            diag_inv = [invert_monomial(self._rows[i][i]) for i in range(n)]
        except (DivisionByZero, MultiTermInverse) as exc:
            raise SingularError(f"diagonal is not monomially invertible: {exc}")
        cols = [[_ZERO] * n for _ in range(n)]  # cols[j][i] = X[i][j]
        for j in range(n):
            col = cols[j]
            for i in range(j, -1, -1):
                rhs = _ONE if i == j else _ZERO
                for k in range(i + 1, j + 1):
                    aik = self._rows[i][k]
                    if aik and col[k]:
                        rhs = rhs - aik * col[k]
                col[i] = rhs * diag_inv[i]
        return ExactMatrix._raw(tuple(
            tuple(cols[j][i] for j in range(n)) for i in range(n)))

    def inverse_rational(self) -> "ExactMatrix":
        """Exact inverse of a radical-free matrix by Gauss-Jordan elimination
        over the Gaussian rationals."""
        if not self.is_square:
            raise StructureError("inverse needs a square matrix")
        n = self.n_rows
        try:
            a = [[self._rows[i][j].as_gaussian() for j in range(n)]
                 for i in range(n)]
        except ValueError:
            raise StructureError("matrix has radical entries; use the "
                                 "factorized inversion route")
        x = [[GaussianRational(1) if i == j else GaussianRational(0)
              for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = next((r for r in range(col, n) if a[r][col]), None)
            if pivot_row is None:
                raise SingularError(f"no pivot in column {col}")
            if pivot_row != col:
                a[col], a[pivot_row] = a[pivot_row], a[col]
                x[col], x[pivot_row] = x[pivot_row], x[col]
            inv = a[col][col].reciprocal()
            a[col] = [v * inv for v in a[col]]
            x[col] = [v * inv for v in x[col]]
            for r in range(n):
                if r == col or not a[r][col]:
                    continue
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
                x[r] = [v - factor * w for v, w in zip(x[r], x[col])]
        return ExactMatrix._raw(tuple(
            tuple(RadicalSum.of(v) for v in row) for row in x))

    # -- spectral data -------------------------------------------------------

    def char_poly(self) -> "ExactPolynomial":
        """Exact monic characteristic polynomial via Faddeev-LeVerrier.

        Uses only ring operations plus division by the integers 1..N, so the
        result stays in the radical field with no growth of the radicand set
        beyond products of the entries'.
        """
        if not self.is_square:
            raise ShapeError("characteristic polynomial needs a square matrix")
        n = self.n_rows
        coeffs: list[RadicalSum] = [_ZERO] * (n + 1)
        coeffs[n] = _ONE
        m = ExactMatrix.identity(n)
        am = self @ m
        for k in range(1, n + 1):
            c = (-am.trace()) / k
            coeffs[n - k] = c
            if k < n:
                m = am + ExactMatrix.scalar(n, c)
                am = self @ m
        return ExactPolynomial(coeffs)

    def frobenius_norm(self) -> float:
        """Floating-point Frobenius norm of the exact matrix."""
        return sqrt(sum(abs(complex(e)) ** 2 for row in self._rows for e in row))

    def to_complex(self) -> list[list[complex]]:
        return [[complex(e) for e in row] for row in self._rows]

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return "\n".join("  ".join(str(e) for e in row) for row in self._rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.n_rows}x{self.n_cols})"


def similarity(h: ExactMatrix, q: ExactMatrix, q_inv: ExactMatrix) -> ExactMatrix:
    """Exact similarity transform q_inv @ h @ q.

    The pair (q, q_inv) is required to be an exact two-sided inverse pair;
    anything else raises NotInverseError rather than silently producing a
    non-similar matrix.
    """
    if not (h.is_square and q.is_square and q_inv.is_square):
        raise ShapeError("similarity needs square matrices")
    if not h.shape == q.shape == q_inv.shape:
        raise ShapeError("similarity needs matching sizes")
    ident = ExactMatrix.identity(h.n_rows)
    if q @ q_inv != ident or q_inv @ q != ident:
        raise NotInverseError("q_inv is not an exact two-sided inverse of q")
    return q_inv @ h @ q


class ExactPolynomial:
    """Polynomial with RadicalSum coefficients, stored degree-ascending.

    Trailing zero coefficients are trimmed (the constant term survives), so
    structural equality is value equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients):
        coeffs = [RadicalSum.of(c) for c in coefficients]
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            coeffs = [_ZERO]
        self._coeffs = tuple(coeffs)

    @classmethod
    def power(cls, n: int) -> "ExactPolynomial":
        """The monic monomial E**n."""
        return cls([_ZERO] * n + [_ONE])

    @property
    def coefficients(self) -> tuple[RadicalSum, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self._coeffs[-1] == _ONE

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other) -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            other = ExactPolynomial([other])
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ExactPolynomial(out)

    def __sub__(self, other) -> "ExactPolynomial":
        if not isinstance(other, ExactPolynomial):
            other = ExactPolynomial([other])
        return self + ExactPolynomial([-c for c in other._coeffs])

    def __mul__(self, other) -> "ExactPolynomial":
        if isinstance(other, (int, Fraction, GaussianRational, RadicalSum)):
            s = RadicalSum.of(other)
            return ExactPolynomial([c * s for c in self._coeffs])
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x) -> RadicalSum:
        """Exact Horner evaluation at a point in the radical field."""
        x = RadicalSum.of(x)
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def to_complex_coefficients(self) -> list[complex]:
        """Degree-ascending double-precision mirror of the coefficients."""
        return [complex(c) for c in self._coeffs]

    def __str__(self) -> str:
        return " , ".join(str(c) for c in self._coeffs)

    def __repr__(self) -> str:
        return f"ExactPolynomial(degree={self.degree})"
