"""Exact integer polynomials and rational functions N(x)/D(x)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        out = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                ci = int(c)
                if ci != c:
                    raise ValueError(f"non-integer coefficient {c!r}")
                c = ci
            out.append(int(c))
        self.coeffs = _trim(out)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Sequence[int]) -> "IntPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = ("" if mag == 1 and k else str(mag)) + ("x" if k else "") + (f"^{k}" if k > 1 else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def shifted(self, a: int) -> "IntPolynomial":
        """The polynomial x -> p(x - a)."""
        out = IntPolynomial()
        lin = IntPolynomial((-a, 1))
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    def to_float(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, d: dict) -> "IntPolynomial":
        return cls([int(c) for c in d["coeffs"]])


# -- rational-coefficient helpers (lists of Fractions, ascending) ------------

def _q(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _q_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(_trim(a))
    b = list(_trim(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        quot[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] -= f * bi
        a = list(_trim(a))
    return list(_trim(quot)), a


def _from_q(p: list[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial to its primitive integer multiple."""
    p = list(_trim(p))
    if not p:
        return IntPolynomial()
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPolynomial([c * den for c in p]).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, returned primitive with positive lead."""
    x, y = _q(a), _q(b)
    while _trim(y):
        _, r = _q_divmod(x, y)
        x, y = y, [Fraction(c) for c in _from_q(r).coeffs] if r else []
    return _from_q(x)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b, which must divide exactly with an integer quotient."""
    quot, rem = _q_divmod(_q(a), _q(b))
    if rem:
        raise ArithmeticError(f"{b} does not divide {a}")
    return IntPolynomial(quot)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: p = c * prod f_i^i with f_i squarefree and coprime.

    Returns ``[(f_1, 1), (f_2, 2), ...]`` skipping constant factors.
    """
    if p.degree < 1:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_quotient(p, a)
    c = exact_quotient(dp, a)
    d = c - b.derivative()
    i = 1
    while b.degree >= 1:
        a = poly_gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = c - b.derivative()
        i += 1
    return out


@dataclass(frozen=True)
class RationalFunction:
    """N(x)/D(x) with integer polynomials; ``reduced`` marks gcd(N, D) = 1."""

    numerator: IntPolynomial
    denominator: IntPolynomial
    reduced: bool = False

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def reduce(self) -> "RationalFunction":
        num, den = self.numerator, self.denominator
        if num.is_zero():
            return RationalFunction(IntPolynomial(), IntPolynomial((1,)), True)
        g = poly_gcd(num, den)
        num, den = exact_quotient(num, g), exact_quotient(den, g)
        # normalize so that D is monic when possible, else lead > 0
        lead = den.leading
        if lead < 0:
            num, den, lead = -num, -den, -lead
        if lead != 1 and all(c % lead == 0 for c in num.coeffs + den.coeffs):
            num = IntPolynomial([c // lead for c in num.coeffs])
            den = IntPolynomial([c // lead for c in den.coeffs])
        return RationalFunction(num, den, True)

    def equals(self, other: "RationalFunction") -> bool:
        """Exact equality by cross-multiplication."""
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __call__(self, x):
        d = self.denominator(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {x}")
        n = self.numerator(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self.numerator.coeffs],
            "den": [str(c) for c in self.denominator.coeffs],
        }

    @classmethod
    def from_json(cls, d: dict) -> "RationalFunction":
        return cls(IntPolynomial([int(c) for c in d["num"]]),
                   IntPolynomial([int(c) for c in d["den"]]))
