"""Exact univariate polynomial and rational-function arithmetic.

This is the algebra substrate for the rest of the package: impedances are
reduced rational functions in s, realizability conditions are polynomial
sign/zero tests, and the seven-element syntheses need resultants and exact
real-root counting.

Coefficients are duck-typed.  Exact work uses ``fractions.Fraction`` (or
:class:`QuadraticRational` for values in a real quadratic extension such as
2 + sqrt(2)); numeric work uses ``mpmath.mpf``; and Poly-valued coefficients
turn :func:`resultant` into a bivariate elimination, which is how the
condition-polynomial identities are checked symbolically.

Conventions:

* coefficients are stored in ascending degree order;
* the zero polynomial is the empty coefficient list, so the leading
  coefficient of any nonzero polynomial is nonzero;
* the resultant uses the Sylvester matrix with the rows of the *first*
  polynomial on top (resultant comparisons elsewhere in the package are
  made up to overall sign, since sign conventions vary across definitions);
* polynomials serialize as JSON arrays of rational strings, ascending degree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import mpmath
from mpmath import mpf

__all__ = [
    "Poly",
    "RationalFn",
    "QuadraticRational",
    "gcd",
    "resultant",
    "sturm_sequence",
    "sturm_count",
    "isolate_root",
    "scalar_to_str",
    "scalar_from_str",
    "is_exact_scalar",
    "to_mpf",
]


# ---------------------------------------------------------------------------
# scalars


class QuadraticRational:
    """Exact element a + b*sqrt(d) of a real quadratic extension of Q.

    a, b, d are Fractions with d > 0.  Values with the same d form a field,
    so these can be used as Poly coefficients and as network element values;
    that is what makes boundary points like p = (3 + 2*sqrt(2))z and the
    closed-form synthesis constants exactly representable.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=2):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if self.d <= 0:
            raise ValueError("radicand d must be positive")

    # -- helpers

    def _coerce(self, other):
        if isinstance(other, QuadraticRational):
            if other.b != 0 and self.b != 0 and other.d != self.d:
                raise ValueError("cannot mix sqrt(%s) with sqrt(%s)" % (self.d, other.d))
            d = self.d if self.b != 0 else other.d
            return QuadraticRational(other.a, other.b, d)
        if isinstance(other, (int, Fraction)):
            return QuadraticRational(other, 0, self.d)
        return NotImplemented

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return (self.b > 0) - (self.b < 0)
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        big_is_rational = lhs > rhs
        if self.a > 0:
            return 1 if big_is_rational else -1
        return -1 if big_is_rational else 1

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.d if (self.b != 0 or o.b == 0) else o.d
        return QuadraticRational(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticRational(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.d if (self.b != 0 or o.b == 0) else o.d
        return QuadraticRational(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d
        )

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("zero QuadraticRational")
        return QuadraticRational(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadraticRational(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() == 0

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def to_mpf(self) -> mpf:
        return mpf(self.a.numerator) / self.a.denominator + (
            mpf(self.b.numerator) / self.b.denominator
        ) * mpmath.sqrt(mpf(self.d.numerator) / self.d.denominator)

    def __repr__(self):
        if self.b == 0:
            return "QuadraticRational(%s)" % (self.a,)
        return "QuadraticRational(%s, %s, d=%s)" % (self.a, self.b, self.d)


def is_exact_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QuadraticRational))


def to_mpf(x) -> mpf:
    """Convert an exact or numeric scalar to an mpf at working precision."""
    if isinstance(x, mpf):
        return x
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, QuadraticRational):
        return x.to_mpf()
    if isinstance(x, (int, float, str)):
        return mpf(x)
    raise TypeError("cannot convert %r to mpf" % (x,))


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def scalar_to_str(x) -> str:
    """Stable string form: 'n/d' for exact rationals, decimal otherwise."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, QuadraticRational):
        if x.b == 0:
            return scalar_to_str(x.a)
        return mpmath.nstr(x.to_mpf(), 50)
    if isinstance(x, (mpf, float)):
        return mpmath.nstr(mpf(x), 50)
    raise TypeError("cannot serialize %r" % (x,))


def scalar_from_str(s: str):
    """Parse 'n/d' or an integer as Fraction, anything else as mpf."""
    s = s.strip()
    if _RATIONAL_RE.match(s):
        return Fraction(s)
    return mpf(s)


def _is_zero(c) -> bool:
    if isinstance(c, Poly):
        return c.is_zero
    return c == 0


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Univariate polynomial, coefficients ascending, canonical trimmed form."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots, leading=Fraction(1)) -> "Poly":
        p = cls.constant(leading)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- basic queries

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_exact(self) -> bool:
        return all(is_exact_scalar(c) for c in self.coeffs)

    # -- ring operations

    def _pad(self, n: int) -> list:
        return list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(a + b for a, b in zip(self._pad(n), other._pad(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.constant(Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; exact when x and the coefficients are exact."""
        if self.is_zero:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(c * i for i, c in enumerate(self.coeffs) if i >= 1)

    def reversed(self, degree: int = None) -> "Poly":
        """Coefficient reversal x**n * p(1/x), padded to the given degree."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise ValueError("reversal degree below actual degree")
        return Poly(reversed(self._pad(n + 1)))

    # -- division (field coefficients)

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(), self
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [Fraction(0)] * (dq + 1)
        dlead = other.leading
        for k in range(dq, -1, -1):
            c = rem[other.degree + k]
            if _is_zero(c):
                continue
            q = c / dlead
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[j + k] = rem[j + k] - q * b
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient; raises if the division leaves a remainder.

        Works over coefficient rings as well as fields provided every leading
        coefficient step divides exactly (true in the fraction-free
        elimination this backs).
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return Poly.zero()
        if self.degree < other.degree:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [Fraction(0)] * (dq + 1)
        dlead = other.leading
        for k in range(dq, -1, -1):
            c = rem[other.degree + k]
            if _is_zero(c):
                continue
            q = _exact_scalar_div(c, dlead)
            quo[k] = q
            for j, b in enumerate(other.coeffs):
                rem[j + k] = rem[j + k] - q * b
        if any(not _is_zero(c) for c in rem):
            raise ValueError("inexact polynomial division")
        return Poly(quo)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        return Poly(c / lead for c in self.coeffs)

    # -- comparisons / misc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(_is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> List[str]:
        return [scalar_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Union[str, int, float]]) -> "Poly":
        out = []
        for item in data:
            if isinstance(item, str):
                out.append(scalar_from_str(item))
            elif isinstance(item, int):
                out.append(Fraction(item))
            else:
                out.append(mpf(item))
        return cls(out)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = scalar_to_str(c) if not isinstance(c, Poly) else "(%r)" % (c,)
            terms.append(cs if i == 0 else "%s*x^%d" % (cs, i))
        return "Poly(%s)" % " + ".join(terms)


def _exact_scalar_div(a, b):
    if isinstance(a, Poly) or isinstance(b, Poly):
        a = a if isinstance(a, Poly) else Poly.constant(a)
        b = b if isinstance(b, Poly) else Poly.constant(b)
        return a.divexact(b)
    return a / b


# ---------------------------------------------------------------------------
# gcd / resultant / root counting


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (Euclid); field coefficients required."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _det_bareiss(rows: List[list]):
    """Fraction-free determinant; entries from any integral domain with
    exact division (Fractions, mpf, Poly)."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0) * m[0][0] if isinstance(m[0][0], Poly) else Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_scalar_div(num, prev)
            m[i][k] = Fraction(0)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(a: Poly, b: Poly) -> List[list]:
    """Sylvester matrix with the rows of ``a`` on top, descending powers."""
    m, n = a.degree, b.degree
    size = m + n
    acoe = list(reversed(a.coeffs))
    bcoe = list(reversed(b.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + acoe + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + bcoe + [Fraction(0)] * (size - i - n - 1))
    return rows


def resultant(a: Poly, b: Poly):
    """Sylvester resultant of a and b in their (shared) variable.

    Rejects degree-zero inputs: eliminating a variable that is absent is
    almost always a caller bug in this package.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    if a.degree < 1 or b.degree < 1:
        raise ValueError("resultant requires degree >= 1 in the elimination variable")
    return _det_bareiss(sylvester_matrix(a, b))


def squarefree_part(a: Poly) -> Poly:
    """a / gcd(a, a'), monic: same distinct roots, all simple."""
    if a.is_zero:
        raise ValueError("zero polynomial")
    if a.degree == 0:
        return a.monic()
    g = gcd(a, a.derivative())
    return (a // g).monic()


def sturm_sequence(a: Poly) -> List[Poly]:
    seq = [a, a.derivative()]
    while not seq[-1].is_zero and seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    if seq[-1].is_zero:
        seq.pop()
    return seq


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if (x > 0) != (y > 0))


def sturm_count(a: Poly, lo, hi) -> int:
    """Number of distinct real roots of ``a`` in (lo, hi], exactly.

    The square-free reduction is performed internally, so repeated roots are
    counted once.  Exact rational endpoints and coefficients required.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if a.is_zero:
        raise ValueError("zero polynomial")
    sf = squarefree_part(a)
    if sf.degree == 0:
        return 0
    seq = sturm_sequence(sf)
    v_lo = _sign_changes([p.eval(lo) for p in seq])
    v_hi = _sign_changes([p.eval(hi) for p in seq])
    return v_lo - v_hi


def isolate_root(a: Poly, lo, hi, width) -> Tuple[Fraction, Fraction]:
    """Shrink (lo, hi) around the unique root of ``a`` to the given width.

    Requires sturm_count(a, lo, hi) == 1; pure rational bisection on the
    square-free part, so the returned interval is an exact certificate.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if sturm_count(a, lo, hi) != 1:
        raise ValueError("interval does not isolate exactly one root")
    sf = squarefree_part(a)
    flo = sf.eval(lo)
    if flo == 0:
        # root at the open endpoint is excluded by the (lo, hi] convention
        raise ValueError("left endpoint is a root; shrink the interval")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = sf.eval(mid)
        if fmid == 0:
            # land exactly on the root: return a tight bracket around it
            half = width / 2
            return mid - half, mid + half
        if (flo > 0) != (fmid > 0):
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


# ---------------------------------------------------------------------------
# rational functions


class RationalFn:
    """Reduced rational function with a monic denominator.

    For exact coefficients the gcd is divided out, so ``num`` and ``den`` are
    coprime; for inexact (mpf) coefficients reduction is skipped and only the
    monic normalization is applied.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly, reduce: bool = None):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if reduce is None:
            reduce = num.is_exact() and den.is_exact()
        if reduce and not num.is_zero:
            g = gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.leading

        def div(c):
            try:
                return c / lead
            except TypeError:
                # exact-by-mpf division is unsupported on the Fraction side
                return to_mpf(c) / lead

        self.den = Poly(div(c) for c in den.coeffs)
        self.num = Poly(div(c) for c in num.coeffs)

    @classmethod
    def constant(cls, c) -> "RationalFn":
        return cls(Poly.constant(c), Poly.constant(Fraction(1)))

    @classmethod
    def x(cls) -> "RationalFn":
        return cls(Poly.x(), Poly.constant(Fraction(1)))

    @property
    def degree_pair(self) -> Tuple[int, int]:
        return self.num.degree, self.den.degree

    def is_exact(self) -> bool:
        return self.num.is_exact() and self.den.is_exact()

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return RationalFn(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFn":
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def eval(self, x):
        return self.num.eval(x) / self.den.eval(x)

    def substitute_inverse(self) -> "RationalFn":
        """Return R(1/s) with powers of s cleared, as a reduced rational fn."""
        n, d = self.num.degree, self.den.degree
        k = max(n, d)
        num = self.num.reversed(k)
        den = self.den.reversed(k)
        return RationalFn(num, den)

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn.constant(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFn":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def __repr__(self):
        return "RationalFn(%r, %r)" % (self.num, self.den)
