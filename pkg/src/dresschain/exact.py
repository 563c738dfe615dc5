"""Exact arithmetic substrate: dense polynomials over Q, reduced rational
functions, and fraction-free determinants of polynomial matrices.

No floats appear anywhere in this package.  Polynomials are dense ascending
coefficient tuples of ``fractions.Fraction``; rational functions keep a monic
denominator and a gcd-reduced numerator, so structural equality coincides
with mathematical equality.

Determinants and polynomial gcds internally clear denominators and run over
plain integer coefficient lists, which is dramatically faster than Fraction
arithmetic for the matrix sizes that show up in pseudo-Wronskian ladders.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd, lcm as _lcm
from typing import Iterable, Optional, Sequence


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial received the zero one."""


def frac_str(q: Fraction) -> str:
    """Serialize a rational as the exact "p/q" form used in all I/O."""
    return "%d/%d" % (q.numerator, q.denominator)


def parse_frac(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer string) into a Fraction."""
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# Integer coefficient lists: the private fast path shared by det and gcd.
# Lists are ascending, with no trailing zeros; [] is the zero polynomial.


def _itrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _ineg(a: list) -> list:
    return [-x for x in a]


def _iadd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] += x
    return _itrim(out)


def _isub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] -= x
    return _itrim(out)


def _imul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _itrim(out)


def _ider(a: list) -> list:
    return _itrim([i * x for i, x in enumerate(a)][1:])


def _iscale(a: list, s: int) -> list:
    return [] if s == 0 else [s * x for x in a]


def _iexact_quo(a: list, b: list) -> list:
    """Quotient a / b when the division is known exact in Z[x]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    if len(a) < len(b):
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for t in range(len(q) - 1, -1, -1):
        h = r[t + len(b) - 1]
        if h % lead:
            raise ArithmeticError("inexact polynomial division")
        qt = h // lead
        q[t] = qt
        if qt:
            for s, bs in enumerate(b):
                r[t + s] -= qt * bs
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _itrim(q)


def _icontent(a: list) -> int:
    g = 0
    for x in a:
        g = _gcd(g, x)
        if g == 1:
            return 1
    return g


def _iprim(a: list) -> list:
    g = _icontent(a)
    return a if g in (0, 1) else [x // g for x in a]


def _iprem(a: list, b: list) -> list:
    """Pseudo-remainder of a by b over Z (content growth handled by caller)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        top = r[-1]
        r = [lead * x for x in r]
        for s, bs in enumerate(b):
            r[shift + s] -= top * bs
        _itrim(r)
    return r


def _idet_cofactor(rows: list) -> list:
    """Cofactor-expansion determinant over Z[x] (first column)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc: list = []
    sign = 1
    for i in range(n):
        if rows[i][0]:
            minor = [rows[r][1:] for r in range(n) if r != i]
            term = _imul(rows[i][0], _idet_cofactor(minor))
            acc = _iadd(acc, term) if sign > 0 else _isub(acc, term)
        sign = -sign
    return acc


# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are ascending; the zero polynomial is the empty tuple and
    otherwise the leading coefficient is nonzero, so degree == len - 1.
    Instances are immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "Polynomial":
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Polynomial":
        return cls(parse_frac(s) for s in items)

    # -- basic structure ----------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading(self) -> Fraction:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        n = max(len(self._c), len(other._c))
        out = [Fraction(0)] * n
        for i, x in enumerate(self._c):
            out[i] = x
        for i, x in enumerate(other._c):
            out[i] += x
        return Polynomial(out)

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-x for x in self._c))

    def __sub__(self, other) -> "Polynomial":
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            s = Fraction(other)
            if s == 0:
                return Polynomial()
            return Polynomial(tuple(x * s for x in self._c))
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    if y:
                        out[i + j] += x * y
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = Polynomial()
        r = self
        d = other.degree
        inv_lead = 1 / other.leading
        while not r.is_zero and r.degree >= d:
            t = Polynomial.monomial(r.degree - d, r.leading * inv_lead)
            q = q + t
            r = r - t * other
        return q, r

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    @staticmethod
    def _coerce(value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return Polynomial((value,))

    # -- calculus & transforms ----------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * x for i, x in enumerate(self._c))[1:])

    def eval_at(self, x0) -> Fraction:
        """Exact Horner evaluation."""
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x0 + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial()
        for c in reversed(self._c):
            acc = acc * inner + Polynomial((c,))
        return acc

    def shifted(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero or k == 0:
            return self
        return Polynomial((Fraction(0),) * k + self._c)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.leading)

    def split_lowest(self) -> tuple:
        """Write self = x**v * q with q(0) != 0; returns (v, q)."""
        if self.is_zero:
            return 0, self
        v = 0
        while self._c[v] == 0:
            v += 1
        return v, Polynomial(self._c[v:])

    def decompress_even(self) -> "Polynomial":
        """Given p with only even-power terms, return q with p(x) = q(x**2)."""
        if any(self._c[i] for i in range(1, len(self._c), 2)):
            raise ValueError("polynomial has odd-degree terms")
        return Polynomial(self._c[0::2])

    # -- serialization & dunders ---------------------------------------------

    def to_strings(self) -> list:
        return [frac_str(c) for c in self._c]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return "Polynomial(%r)" % (self.to_strings(),)

    def format(self, var: str = "z") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xs = var if i == 1 else "%s^%d" % (var, i)
                body = xs if mag == 1 else "%s*%s" % (mag, xs)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self) -> str:
        return self.format()

    # -- integer bridge (module-private use) ---------------------------------

    def _int_cleared(self) -> tuple:
        """Return (int coeff list, denominator d) with self == intpoly / d."""
        if self.is_zero:
            return [], 1
        d = 1
        for c in self._c:
            d = _lcm(d, c.denominator)
        return [int(c * d) for c in self._c], d


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, via a primitive pseudo-remainder sequence over Z."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    ia = _iprim(a._int_cleared()[0])
    ib = _iprim(b._int_cleared()[0])
    while ib:
        ia, ib = ib, _iprim(_iprem(ia, ib))
    return Polynomial(ia).monic()


def det_poly_matrix(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Fraction-free (Bareiss) elimination over Z[x] after clearing each
    column's coefficient denominators; every pivot division is exact.  When
    a pivot column vanishes the trailing block falls back to cofactor
    expansion, rescaled through Sylvester's identity.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("determinant of an empty matrix is not defined")
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n == 1:
        return rows[0][0]

    scale = 1
    cols = []
    for j in range(n):
        d = 1
        for i in range(n):
            d = _lcm(d, rows[i][j]._int_cleared()[1])
        scale *= d
        cols.append(d)
    mat = [
        [[int(c * cols[j]) for c in rows[i][j].coeffs] for j in range(n)]
        for i in range(n)
    ]

    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not mat[k][k]:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                # pivot column vanished: cofactor-expand the trailing block,
                # then undo the Bareiss scaling (Sylvester identity)
                trailing = [[mat[i][j] for j in range(k, n)] for i in range(k, n)]
                t = _idet_cofactor(trailing)
                for _ in range(n - k - 1):
                    t = _iexact_quo(t, prev) if t else []
                return Polynomial(t) * Fraction(sign, scale)
        piv = mat[k][k]
        for i in range(k + 1, n):
            row_i = mat[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = _isub(_imul(piv, row_i[j]), _imul(lead, mat[k][j]))
                row_i[j] = _iexact_quo(num, prev) if num else []
            row_i[k] = []
        prev = piv
    return Polynomial(mat[n - 1][n - 1]) * Fraction(sign, scale)


def det_poly_matrix_cofactor(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Naive cofactor-expansion determinant; the oracle for det_poly_matrix."""
    n = len(rows)
    if n == 0:
        raise ValueError("determinant of an empty matrix is not defined")
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n == 1:
        return rows[0][0]
    acc = Polynomial()
    sign = 1
    for j in range(n):
        if not rows[0][j].is_zero:
            minor = [[rows[i][m] for m in range(n) if m != j] for i in range(1, n)]
            acc = acc + rows[0][j] * det_poly_matrix_cofactor(minor) * sign
        sign = -sign
    return acc


class RationalFunction:
    """Quotient of polynomials in normal form: monic denominator, gcd 1.

    With this normal form, == on the (num, den) pair is exactly equality in
    the rational function field, so residual checks are plain comparisons.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        if den is None:
            den = Polynomial.one()
        if not isinstance(num, Polynomial):
            num = Polynomial._coerce(num)
        if not isinstance(den, Polynomial):
            den = Polynomial._coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self._n = Polynomial()
            self._d = Polynomial.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        self._n = num
        self._d = den

    @classmethod
    def from_const(cls, value) -> "RationalFunction":
        return cls(Polynomial.constant(value))

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial())

    @property
    def num(self) -> Polynomial:
        return self._n

    @property
    def den(self) -> Polynomial:
        return self._d

    @property
    def is_zero(self) -> bool:
        return self._n.is_zero

    def constant_value(self) -> Optional[Fraction]:
        """The value as a Fraction if this is a constant, else None."""
        if self._d.degree == 0 and self._n.degree <= 0:
            return self._n.coeff(0)
        return None

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(
            self._n * other._d + other._n * self._d, self._d * other._d
        )

    def __radd__(self, other) -> "RationalFunction":
        return self.__add__(other)

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out._n = -self._n
        out._d = self._d
        return out

    def __sub__(self, other) -> "RationalFunction":
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self._n * other._n, self._d * other._d)

    def __rmul__(self, other) -> "RationalFunction":
        return self.__mul__(other)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._n * other._d, self._d * other._n)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other).__truediv__(self)

    @staticmethod
    def _coerce(value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return RationalFunction(value)
        return RationalFunction(Polynomial._coerce(value))

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self._n.derivative() * self._d - self._n * self._d.derivative(),
            self._d * self._d,
        )

    def eval_at(self, x0) -> Fraction:
        d = self._d.eval_at(x0)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self._n.eval_at(x0) / d

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash((self._n, self._d))

    def __repr__(self) -> str:
        return "RationalFunction(%r, %r)" % (self._n, self._d)

    def format(self, var: str = "x") -> str:
        if self._d == Polynomial.one():
            return self._n.format(var)
        return "(%s)/(%s)" % (self._n.format(var), self._d.format(var))


def log_derivative_ratio(p: Polynomial, q: Polynomial) -> RationalFunction:
    """d/dx log(p/q) = (p'q - pq')/(pq), fully reduced."""
    if p.is_zero or q.is_zero:
        raise ZeroPolynomial("log-derivative of a zero polynomial")
    return RationalFunction(p.derivative() * q - p * q.derivative(), p * q)


def ratfunc_is_constant(r: RationalFunction) -> Optional[Fraction]:
    """The constant value of r if it reduces to one, else None."""
    return r.constant_value()


def eval_at(p: Polynomial, x0) -> Fraction:
    """Exact Horner evaluation of p at the rational point x0."""
    return p.eval_at(x0)
