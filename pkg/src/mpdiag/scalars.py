"""Exact coefficients: rationals and polynomials in one indeterminate x."""

from fractions import Fraction
from math import lcm

Rational = Fraction


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class RationalPolynomial:
    """Dense polynomial in x with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return X

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return RationalPolynomial(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial(c / other for c in self.coeffs)
        if isinstance(other, RationalPolynomial) and other.is_constant() and not other.is_zero():
            return self / other.coeffs[0]
        return NotImplemented

    def __pow__(self, m):
        out = ONE
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial((other,))
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __call__(self, n):
        return evaluate(self, n)

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        return format_poly(self)

    def to_json(self):
        return {"num": [c.numerator for c in self.coeffs],
                "den": [c.denominator for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        num, den = data["num"], data["den"]
        if len(num) != len(den):
            raise ValueError("num and den lengths differ")
        return cls(Fraction(p, q) for p, q in zip(num, den))


ZERO = RationalPolynomial()
ONE = RationalPolynomial((1,))
X = RationalPolynomial((0, 1))


def poly(value):
    """Coerce an int, Fraction or polynomial to a RationalPolynomial."""
    if isinstance(value, RationalPolynomial):
        return value
    return RationalPolynomial((value,))


def falling_factorial(p, m):
    """p (p-1) ... (p-m+1); the empty product is 1."""
    p = poly(p)
    out = ONE
    for i in range(m):
        out = out * (p - i)
    return out


def evaluate(p, n):
    acc = Fraction(0)
    for c in reversed(poly(p).coeffs):
        acc = acc * n + c
    return acc


def _format_int_poly(ints):
    terms = []
    for d in range(len(ints) - 1, -1, -1):
        c = ints[d]
        if c == 0:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            mono = "x" if d == 1 else f"x^{d}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0", 0
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out, len(terms)


def format_poly(p):
    """Human form such as `(x^2 - x)/2`, `x/4`, `-1/3` or `0`."""
    p = poly(p)
    if p.is_zero():
        return "0"
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    text, nterms = _format_int_poly(ints)
    if den == 1:
        return text
    if nterms > 1:
        return f"({text})/{den}"
    return f"{text}/{den}"


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    return Fraction(text.strip())


def format_coeff(p):
    """format_poly, parenthesized when it is a sum, for use in front of a basis element."""
    text = format_poly(p)
    if (" + " in text or " - " in text) and not text.startswith("("):
        return f"({text})"
    return text
