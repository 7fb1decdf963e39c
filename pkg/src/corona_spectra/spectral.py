"""Characteristic polynomials, the dense eigen-oracle, and root extraction."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .polynomial import IntPolynomial, squarefree_decomposition

DEFAULT_CLUSTER_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Sorted (value, multiplicity) pairs, merged at ``tolerance``."""

    entries: tuple[tuple[float, int], ...]
    tolerance: float = DEFAULT_CLUSTER_TOL

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> np.ndarray:
        """The multiset expanded and sorted."""
        return np.array([v for v, m in self.entries for _ in range(m)], dtype=float)

    def multiplicity(self, value: float, tol: float | None = None) -> int:
        tol = self.tolerance if tol is None else tol
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for v, m in self.entries:
            w.writerow([_fmt(v), m])
        return buf.getvalue()

    def __len__(self):
        return len(self.entries)


def _fmt(v: float) -> str:
    # float noise around an exact zero eigenvalue
    if abs(v) < 1e-12:
        return "0"
    return f"{v:.15g}"


def cluster_spectrum(values: Sequence[float], tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """Merge sorted values whose consecutive gaps are <= tol, at their mean."""
    if tol <= 0:
        raise ValueError("cluster tolerance must be positive")
    vals = np.sort(np.asarray(values, dtype=float))
    entries = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > tol:
            group = vals[start:i]
            entries.append((float(group.mean()) + 0.0, int(len(group))))
            start = i
    return Spectrum(tuple(entries), tol)


# -- exact characteristic polynomial ------------------------------------------

def _square_int_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


def char_poly_exact(m) -> IntPolynomial:
    """det(xI - M) over the integers by Faddeev-LeVerrier.

    Every division by k in the recurrence is exact for integer input, and
    object arrays keep the coefficient growth in Python ints.
    """
    a = _square_int_matrix(m)
    n = a.shape[0]
    coeffs = [1]
    mk = np.zeros((n, n), dtype=object)
    eye = np.identity(n, dtype=object)
    for k in range(1, n + 1):
        mk = a.dot(mk + coeffs[-1] * eye)
        tr = int(np.trace(mk))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-tr // k)
    # coeffs[k] multiplies x^(n-k)
    return IntPolynomial(coeffs[::-1])


def adjugate_coeffs(m) -> list[np.ndarray]:
    """Matrices B_0..B_{n-1} with adj(xI - M) = sum_k B_k x^(n-1-k).

    Same recurrence as :func:`char_poly_exact`, kept separate because the
    intermediate matrices are needed.
    """
    a = _square_int_matrix(m)
    n = a.shape[0]
    eye = np.identity(n, dtype=object)
    bs = [eye]
    c = 1
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n):
        mk = a.dot(mk + c * eye)
        c = -int(np.trace(mk)) // k
        bs.append(mk + c * eye)
    return bs


def det_exact(m) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in _square_int_matrix(m)]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- floating-point oracle ------------------------------------------------------

class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray
    vectors: np.ndarray
    spectrum: Spectrum
    max_residual: float


def eigensolve_sym(m, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> EigenDecomposition:
    """Dense symmetric eigensolve with a residual check on every pair."""
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > 1e-12:
        raise SymmetryError("matrix is not symmetric within 1e-12")
    vals, vecs = np.linalg.eigh(a)
    norm = np.max(np.sum(np.abs(a), axis=1)) if a.size else 0.0
    resid = np.max(np.abs(a @ vecs - vecs * vals)) if a.size else 0.0
    if resid > 1e-9 * (1 + norm):
        raise ArithmeticError(f"eigensolver residual {resid:.3g} too large")
    return EigenDecomposition(vals, vecs, cluster_spectrum(vals, cluster_tol), float(resid))


def eigenvalues(m) -> np.ndarray:
    return eigensolve_sym(m).values


# -- polynomial roots -----------------------------------------------------------

class Roots(NamedTuple):
    real: list[float]
    complex: list[complex]


def _companion_roots(coeffs: np.ndarray) -> np.ndarray:
    """Eigenvalues of the companion matrix of a polynomial (ascending coeffs,
    nonzero lead and nonzero constant term).  LAPACK's geev balances."""
    deg = len(coeffs) - 1
    if deg == 1:
        return np.array([-coeffs[0] / coeffs[1]], dtype=complex)
    comp = np.zeros((deg, deg))
    comp[1:, :-1] = np.eye(deg - 1)
    comp[:, -1] = -coeffs[:-1] / coeffs[-1]
    return np.linalg.eigvals(comp)


def _newton(coeffs: np.ndarray, r):
    desc = coeffs[::-1]
    p = np.polyval(desc, r)
    dp = np.polyval(np.polyder(desc), r)
    if dp == 0:
        return r
    step = p / dp
    # a polishing step, not a search: reject anything that moves far
    if abs(step) > 1e-6 * (1 + abs(r)):
        return r
    return r - step


def poly_real_roots(coeffs, imag_tol: float = 1e-7) -> Roots:
    """Roots of a real polynomial given by ascending coefficients.

    Exact zero roots are split off first; the rest come from the companion
    matrix followed by one Newton step.  Roots whose imaginary part exceeds
    ``imag_tol * (1 + |z|)`` are returned separately in ``complex``.
    """
    if isinstance(coeffs, IntPolynomial):
        coeffs = coeffs.to_float()
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    if c.size == 0:
        raise ValueError("zero polynomial has no well-defined roots")
    zeros = 0
    while c[zeros] == 0:
        zeros += 1
    c = c[zeros:]
    real = [0.0] * zeros
    cplx = []
    if len(c) > 1:
        for z in _companion_roots(c):
            if abs(z.imag) <= imag_tol * (1 + abs(z)):
                real.append(float(_newton(c, z.real)))
            else:
                cplx.append(complex(z))
    return Roots(sorted(real), sorted(cplx, key=lambda z: (z.real, z.imag)))


def int_poly_real_roots(p: IntPolynomial, imag_tol: float = 1e-7) -> Roots:
    """Roots of an integer polynomial, with multiplicities resolved exactly.

    The squarefree decomposition is computed in exact arithmetic so every
    call into the companion solver sees only simple roots.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined roots")
    real, cplx = [], []
    for factor, mult in squarefree_decomposition(p):
        r = poly_real_roots(factor.to_float(), imag_tol)
        real += r.real * mult
        cplx += r.complex * mult
    return Roots(sorted(real), sorted(cplx, key=lambda z: (z.real, z.imag)))
