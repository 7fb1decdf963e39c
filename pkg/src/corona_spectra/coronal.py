"""The M-coronal: the sum of all entries of (xI - M)^-1 as an exact N(x)/D(x)."""

from __future__ import annotations

from fractions import Fraction
from itertools import count

import numpy as np

from .polynomial import IntPolynomial, RationalFunction, poly_gcd
from .spectral import char_poly_exact


def _solve_ones(b: list[list[int]]) -> list[Fraction]:
    """Exact solution of B y = 1 by Gauss-Jordan over Q."""
    n = len(b)
    aug = [[Fraction(v) for v in row] + [Fraction(1)] for row in b]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[col])]
    return [row[-1] for row in aug]


def coronal_value(m, x0) -> Fraction:
    """1^T (x0 I - M)^-1 1 by an exact rational linear solve."""
    a = [[int(v) for v in row] for row in np.asarray(m)]
    n = len(a)
    b = [[(x0 if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
    return sum(_solve_ones(b), Fraction(0))


def _nodes():
    yield 0
    for k in count(1):
        yield k
        yield -k


def _interpolate(xs: list[int], ys: list[Fraction]) -> IntPolynomial:
    """Newton divided differences, expanded to an integer polynomial."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for j in range(n):
        for i, b in enumerate(basis):
            poly[i] += coef[j] * b
        if j < n - 1:
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i + 1] += b
                nxt[i] -= xs[j] * b
            basis = nxt
    return IntPolynomial(poly)


def coronal_exact(m) -> tuple[RationalFunction, RationalFunction]:
    """Unreduced coronal (N, D = char poly of M) and its reduced copy.

    N has degree < n and is recovered by interpolating D(x0) * coronal(x0)
    at n integer nodes 0, 1, -1, 2, -2, ... that are not eigenvalues.
    """
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    d = char_poly_exact(arr)
    xs, ys = [], []
    for x0 in _nodes():
        dx = d(x0)
        if dx == 0:
            continue
        xs.append(x0)
        ys.append(dx * coronal_value(arr, x0))
        if len(xs) == n:
            break
    num = _interpolate(xs, ys)
    unreduced = RationalFunction(num, d, reduced=False)
    return unreduced, unreduced.reduce()


def coronal_closed_form(shape: str, *params: int) -> RationalFunction:
    """Known coronals: ``constant-row-sum`` (n, t), ``kpq-A`` / ``kpq-Q`` (p, q)."""
    x = IntPolynomial.x()
    if shape == "constant-row-sum":
        if len(params) != 2 or params[0] < 1:
            raise ValueError("constant-row-sum takes (n >= 1, t)")
        n, t = params
        return RationalFunction(IntPolynomial((n,)), x - t, reduced=True)
    if shape in ("kpq-A", "kpq-Q"):
        if len(params) != 2 or min(params) < 1:
            raise ValueError(f"{shape} takes (p >= 1, q >= 1)")
        p, q = params
        if shape == "kpq-A":
            rf = RationalFunction((p + q) * x + 2 * p * q, x * x - p * q)
        else:
            rf = RationalFunction((p + q) * x - (p - q) ** 2, x * x - (p + q) * x)
        return RationalFunction(rf.numerator, rf.denominator, poly_gcd(rf.numerator, rf.denominator).degree == 0)
    raise ValueError(f"unknown coronal shape {shape!r}")
