"""Exact arithmetic in the field of finite sums  sum_k c_k * sqrt(m_k).

Coefficients c_k are Gaussian rationals (exact complex rationals on top of
arbitrary-precision ``fractions.Fraction``) and the radicands m_k are distinct
squarefree positive integers, with m = 1 holding the rational part.  The
representation is canonical -- no zero coefficients, no non-squarefree keys --
so structural equality is value equality and every identity downstream can be
checked with zero tolerance.

All values are immutable and every operation is a pure function; instances may
be shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, sqrt


class InvalidRadicand(ValueError):
    """Radicand is zero, negative, or otherwise outside the supported ring."""


class DivisionByZero(ZeroDivisionError):
    """Exact division by an exactly-zero value."""


class MultiTermInverse(ArithmeticError):
    """Monomial inversion was asked of a sum with more than one term."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Split a positive integer as n = f**2 * s with s squarefree.

    Returns (s, f).  Trial division; n here never exceeds products of a few
    binomial-sized integers, so this is far from the bottleneck.
    """
    if n < 1:
        raise InvalidRadicand(f"radicand must be a positive integer, got {n}")
    s, f = 1, 1
    rem = n
    d = 2
    while d * d <= rem:
        if rem % d == 0:
            e = 0
            while rem % d == 0:
                rem //= d
                e += 1
            f *= d ** (e // 2)
            if e % 2:
                s *= d
        d += 1 if d == 2 else 2
    return s * rem, f


class GaussianRational:
    """Exact complex rational a + b*i with reduced-fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other) -> "GaussianRational":
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = _as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return _as_gaussian(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        return self * _as_gaussian(other).reciprocal()

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return self.reciprocal() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def reciprocal(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise DivisionByZero("reciprocal of exact zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Gaussian rational")


_GAUSS_ZERO = GaussianRational(0)
_GAUSS_ONE = GaussianRational(1)


class RadicalSum:
    """Canonical finite sum of Gaussian-rational multiples of square roots.

    Terms map squarefree radicands to nonzero Gaussian-rational coefficients;
    the radicand 1 carries the rational part.  Any mapping passed to the
    constructor is canonicalized (radicands reduced to squarefree form, zero
    coefficients dropped), so two equal values always compare equal
    structurally.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canon: dict[int, GaussianRational] = {}
        if terms:
            for m, c in dict(terms).items():
                c = _as_gaussian(c)
                if not c:
                    continue
                s, f = squarefree_decompose(m)
                if f != 1:
                    c = c * f
                acc = canon.get(s)
                c = c if acc is None else acc + c
                if c:
                    canon[s] = c
                elif s in canon:
                    del canon[s]
        self._terms = canon

    @classmethod
    def _raw(cls, canon: dict[int, GaussianRational]) -> "RadicalSum":
        # internal fast path: caller guarantees canonical content
        out = object.__new__(cls)
        out._terms = canon
        return out

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, x) -> "RadicalSum":
        """Coerce an int, Fraction, GaussianRational, or RadicalSum."""
        if isinstance(x, RadicalSum):
            return x
        g = _as_gaussian(x)
        return cls._raw({1: g} if g else {})

    @classmethod
    def rational(cls, num, den=1) -> "RadicalSum":
        return cls.of(Fraction(num, den))

    @classmethod
    def gaussian(cls, re, im) -> "RadicalSum":
        return cls.of(GaussianRational(_as_fraction(re), _as_fraction(im)))

    @classmethod
    def sqrt_int(cls, n: int) -> "RadicalSum":
        """Exact sqrt(n) for positive integer n, canonicalized to f*sqrt(s)."""
        s, f = squarefree_decompose(n)
        return cls._raw({s: GaussianRational(f)})

    @classmethod
    def sqrt_rational(cls, q) -> "RadicalSum":
        """Exact sqrt(p/d) for a positive rational, as (1/d)*sqrt(p*d)."""
        q = _as_fraction(q)
        if q <= 0:
            raise InvalidRadicand(f"square root domain is positive rationals, got {q}")
        p, d = q.numerator, q.denominator
        s, f = squarefree_decompose(p * d)
        return cls._raw({s: GaussianRational(Fraction(f, d))})

    # -- inspection ---------------------------------------------------------

    def items(self) -> tuple[tuple[int, GaussianRational], ...]:
        """Terms as (radicand, coefficient) pairs, radicand ascending."""
        return tuple(sorted(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_gaussian_rational(self) -> bool:
        """True when the value has no radical part (only radicand 1)."""
        return not self._terms or set(self._terms) == {1}

    def as_gaussian(self) -> GaussianRational:
        """The value as a Gaussian rational; ValueError if radicals remain."""
        if not self._terms:
            return _GAUSS_ZERO
        if set(self._terms) != {1}:
            raise ValueError(f"{self} has irrational terms")
        return self._terms[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == RadicalSum.of(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- field operations ---------------------------------------------------

    def __add__(self, other) -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            try:
                other = RadicalSum.of(other)
            except TypeError:
                return NotImplemented
        a, b = self._terms, other._terms
        if not a:
            return other
        if not b:
            return self
        out = dict(a)
        for m, c in b.items():
            acc = out.get(m)
            s = c if acc is None else acc + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return RadicalSum._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            try:
                other = RadicalSum.of(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RadicalSum":
        return RadicalSum.of(other) - self

    def __mul__(self, other) -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            try:
                other = RadicalSum.of(other)
            except TypeError:
                return NotImplemented
        if not self._terms or not other._terms:
            return _ZERO
        out: dict[int, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                # sqrt(m1)*sqrt(m2) = g*sqrt(s) with g = gcd: both squarefree,
                # so m1*m2 = g^2 * (m1/g)*(m2/g) and the cofactor is squarefree.
                if m1 == m2:
                    key = 1
                    c = c1 * c2 * m1
                else:
                    g = gcd(m1, m2)
                    key = (m1 // g) * (m2 // g)
                    c = c1 * c2 * g if g != 1 else c1 * c2
                acc = out.get(key)
                c = c if acc is None else acc + c
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
        return RadicalSum._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RadicalSum":
        """Exact division by a rational or Gaussian-rational scalar."""
        if isinstance(other, (int, Fraction, GaussianRational)):
            g = _as_gaussian(other)
            if not g:
                raise DivisionByZero("exact division by zero")
            inv = g.reciprocal()
            return RadicalSum._raw({m: c * inv for m, c in self._terms.items()})
        return NotImplemented

    def __complex__(self) -> complex:
        return sum((complex(c) * sqrt(m) for m, c in self._terms.items()),
                   complex(0))

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_term_str(m, c) for m, c in self.items())

    def __repr__(self) -> str:
        return f"RadicalSum<{self}>"


def _coeff_str(c: GaussianRational) -> str:
    if c.im == 0:
        return str(c.re)
    if c.re == 0:
        return f"{c.im}*I"
    sign = "+" if c.im > 0 else "-"
    return f"({c.re}{sign}{abs(c.im)}*I)"


def _term_str(m: int, c: GaussianRational) -> str:
    s = _coeff_str(c)
    if m == 1:
        return s
    if not s.startswith("("):
        if s == "1":
            return f"sqrt({m})"
        if s == "-1":
            return f"-sqrt({m})"
        if s.endswith("*I"):
            s = f"({s})"
    return f"{s}*sqrt({m})"


def invert_monomial(a: RadicalSum) -> RadicalSum:
    """Exact inverse of a single-term value c*sqrt(m): (1/(c*m))*sqrt(m)."""
    terms = a._terms
    if not terms:
        raise DivisionByZero("inverse of exact zero")
    if len(terms) > 1:
        raise MultiTermInverse(
            f"{a} has {len(terms)} terms; only monomials invert at field level")
    ((m, c),) = terms.items()
    return RadicalSum._raw({m: (c * m).reciprocal()})


def eval_complex(a: RadicalSum) -> complex:
    """Double-precision value of the exact sum."""
    return complex(a)


ZERO = RadicalSum()
ONE = RadicalSum.of(1)
I = RadicalSum.gaussian(0, 1)

_ZERO = ZERO
