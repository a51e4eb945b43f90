"""Numerical kernel: second-order jets, small symmetric eigenproblems,
adaptive quadrature, and form-orthogonal unit vectors.

Jets propagate value, gradient and Hessian exactly through elementary
operations, so first and second fundamental forms downstream carry no
truncation error beyond machine rounding.  Anything of third differential
order is obtained elsewhere by finite differences of jet-exact quantities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NonConvergence, RankDeficient

__all__ = [
    "Jet2",
    "SymMatrix",
    "jet_apply",
    "jacobi_eigh",
    "sym_eigenvalues",
    "adaptive_quadrature",
    "nullspace_unit",
]


# --------------------------------------------------------------------------
# second-order jets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Jet2:
    """Truncated second-order Taylor data of a scalar quantity.

    ``value`` is the quantity itself, ``grad`` its gradient with respect to
    the chart variables and ``hess`` the (exactly symmetric) Hessian.
    Arithmetic combines jets by the exact product/chain rules; the Hessian
    stays bit-symmetric because every update is built from symmetric terms.
    """

    value: float
    grad: np.ndarray
    hess: np.ndarray

    @staticmethod
    def constant(value: float, nvars: int) -> "Jet2":
        return Jet2(float(value), np.zeros(nvars), np.zeros((nvars, nvars)))

    @staticmethod
    def variable(value: float, index: int, nvars: int) -> "Jet2":
        g = np.zeros(nvars)
        g[index] = 1.0
        return Jet2(float(value), g, np.zeros((nvars, nvars)))

    @property
    def nvars(self) -> int:
        return self.grad.shape[0]

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(float(other), self.nvars)

    def __add__(self, other) -> "Jet2":
        o = self._coerce(other)
        return Jet2(self.value + o.value, self.grad + o.grad, self.hess + o.hess)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.grad, -self.hess)

    def __sub__(self, other) -> "Jet2":
        o = self._coerce(other)
        return Jet2(self.value - o.value, self.grad - o.grad, self.hess - o.hess)

    def __rsub__(self, other) -> "Jet2":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other) -> "Jet2":
        o = self._coerce(other)
        cross = np.outer(self.grad, o.grad)
        return Jet2(
            self.value * o.value,
            self.value * o.grad + o.value * self.grad,
            self.value * o.hess + o.value * self.hess + cross + cross.T,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet2":
        return self * self._coerce(other)._reciprocal()

    def __rtruediv__(self, other) -> "Jet2":
        return self._coerce(other) * self._reciprocal()

    # -- elementary functions -----------------------------------------------

    def _chain(self, f0: float, f1: float, f2: float) -> "Jet2":
        """Jet of f(self) given f, f', f'' at self.value."""
        outer = np.outer(self.grad, self.grad)
        return Jet2(f0, f1 * self.grad, f1 * self.hess + f2 * outer)

    def _reciprocal(self) -> "Jet2":
        v = self.value
        if v == 0.0:
            raise DomainError("division by a jet with zero value")
        return self._chain(1.0 / v, -1.0 / v**2, 2.0 / v**3)

    def sqrt(self) -> "Jet2":
        v = self.value
        if v <= 0.0:
            raise DomainError(f"sqrt of a jet with non-positive value {v}")
        r = math.sqrt(v)
        return self._chain(r, 0.5 / r, -0.25 / (v * r))

    def sin(self) -> "Jet2":
        s, c = math.sin(self.value), math.cos(self.value)
        return self._chain(s, c, -s)

    def cos(self) -> "Jet2":
        s, c = math.sin(self.value), math.cos(self.value)
        return self._chain(c, -s, -c)

    def sinh(self) -> "Jet2":
        s, c = math.sinh(self.value), math.cosh(self.value)
        return self._chain(s, c, s)

    def cosh(self) -> "Jet2":
        s, c = math.sinh(self.value), math.cosh(self.value)
        return self._chain(c, s, c)

    def pow_int(self, exponent: int) -> "Jet2":
        m = int(exponent)
        v = self.value
        if m < 0 and v == 0.0:
            raise DomainError("negative integer power of a jet with zero value")
        f1 = m * v ** (m - 1) if m != 0 else 0.0
        f2 = m * (m - 1) * v ** (m - 2) if m not in (0, 1) else 0.0
        return self._chain(v**m, f1, f2)


_BINARY = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}

_UNARY = {
    "sin": Jet2.sin,
    "cos": Jet2.cos,
    "sqrt": Jet2.sqrt,
    "sinh": Jet2.sinh,
    "cosh": Jet2.cosh,
}


def jet_apply(tag: str, args: Sequence[Jet2], *, exponent: int | None = None,
              value: float | None = None, nvars: int | None = None) -> Jet2:
    """Apply an elementary operation, named by tag, to jets.

    Tags: add, sub, mul, div (two jets); sin, cos, sqrt, sinh, cosh (one
    jet); pow_int (one jet plus ``exponent``); const (``value`` plus either
    ``nvars`` or a model jet to copy the variable count from).
    """
    if tag in _BINARY:
        a, b = args
        return _BINARY[tag](a, b)
    if tag in _UNARY:
        (a,) = args
        return _UNARY[tag](a)
    if tag == "pow_int":
        (a,) = args
        if exponent is None:
            raise ValueError("pow_int requires an exponent")
        return a.pow_int(exponent)
    if tag == "const":
        if value is None:
            raise ValueError("const requires a value")
        n = nvars if nvars is not None else args[0].nvars
        return Jet2.constant(value, n)
    raise ValueError(f"unknown jet operation {tag!r}")


# --------------------------------------------------------------------------
# small symmetric matrices
# --------------------------------------------------------------------------

_MAX_DIM = 16


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix stored as its packed upper triangle (row-major)."""

    dim: int
    upper: np.ndarray

    def __post_init__(self):
        if not 1 <= self.dim <= _MAX_DIM:
            raise ValueError(f"dimension {self.dim} outside [1, {_MAX_DIM}]")
        expected = self.dim * (self.dim + 1) // 2
        if self.upper.shape != (expected,):
            raise ValueError("packed length does not match dimension")

    @classmethod
    def from_full(cls, arr: np.ndarray) -> "SymMatrix":
        a = np.asarray(arr, dtype=float)
        d = a.shape[0]
        idx = np.triu_indices(d)
        return cls(d, a[idx].copy())

    def full(self) -> np.ndarray:
        a = np.zeros((self.dim, self.dim))
        idx = np.triu_indices(self.dim)
        a[idx] = self.upper
        a[(idx[1], idx[0])] = self.upper
        return a

    def trace(self) -> float:
        d = self.dim
        pos = np.cumsum(np.r_[0, np.arange(d, 1, -1)])
        return float(self.upper[pos].sum())


def jacobi_eigh(matrix, off_tol: float = 1e-13) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors of a small symmetric matrix
    by cyclic Jacobi rotations.

    Sweeps continue until the largest off-diagonal entry is at most
    ``off_tol`` times the largest entry of the input.  Dimensions here are
    tiny, so robustness is worth more than speed.
    """
    a = np.array(matrix.full() if isinstance(matrix, SymMatrix) else matrix,
                 dtype=float)
    d = a.shape[0]
    v = np.eye(d)
    scale = float(np.max(np.abs(a)))
    if scale == 0.0 or d == 1:
        w = np.diag(a).copy()
        order = np.argsort(w, kind="stable")
        return w[order], v[:, order]

    threshold = off_tol * scale
    for _ in range(64):
        off = 0.0
        for p in range(d - 1):
            for q in range(p + 1, d):
                off = max(off, abs(a[p, q]))
        if off <= threshold:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app, aqq = a[p, p], a[q, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                for i in range(d):
                    if i == p or i == q:
                        continue
                    aip, aiq = a[i, p], a[i, q]
                    a[i, p] = a[p, i] = c * aip - s * aiq
                    a[i, q] = a[q, i] = s * aip + c * aiq
                vip = v[:, p].copy()
                v[:, p] = c * vip - s * v[:, q]
                v[:, q] = s * vip + c * v[:, q]
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def sym_eigenvalues(matrix) -> np.ndarray:
    """Ascending eigenvalues of a symmetric matrix (SymMatrix or array)."""
    w, _ = jacobi_eigh(matrix)
    return w


# --------------------------------------------------------------------------
# adaptive quadrature
# --------------------------------------------------------------------------

def _simpson(a: float, b: float, fa: float, fm: float, fb: float) -> float:
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _eval(f: Callable[[float], float], x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise DomainError(f"integrand not finite at {x}")
    return y


def adaptive_quadrature(f: Callable[[float], float], a: float, b: float,
                        tol: float, max_subdivisions: int = 1_000_000) -> float:
    """Integrate f over [a, b] by adaptive Simpson bisection.

    An interval is accepted when the Richardson error estimate is below its
    tolerance share; otherwise it splits, each half inheriting half the
    tolerance.  Raises NonConvergence once ``max_subdivisions`` splits have
    been spent (rough integrands), DomainError on non-finite values.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if a > b:
        raise ValueError("requires a <= b")
    if a == b:
        return 0.0

    fa, fb = _eval(f, a), _eval(f, b)
    m = 0.5 * (a + b)
    fm = _eval(f, m)
    stack = [(a, b, fa, fm, fb, _simpson(a, b, fa, fm, fb), tol)]
    total = 0.0
    splits = 0
    while stack:
        x0, x1, f0, fmid, f1, s_whole, t = stack.pop()
        xm = 0.5 * (x0 + x1)
        xl, xr = 0.5 * (x0 + xm), 0.5 * (xm + x1)
        fl, fr = _eval(f, xl), _eval(f, xr)
        s_left = _simpson(x0, xm, f0, fl, fmid)
        s_right = _simpson(xm, x1, fmid, fr, f1)
        err = s_left + s_right - s_whole
        if abs(err) <= 15.0 * t:
            total += s_left + s_right + err / 15.0
        else:
            splits += 1
            if splits > max_subdivisions:
                raise NonConvergence(
                    f"no convergence after {max_subdivisions} subdivisions")
            half = 0.5 * t
            stack.append((x0, xm, f0, fl, fmid, s_left, half))
            stack.append((xm, x1, fmid, fr, f1, s_right, half))
    return total


# --------------------------------------------------------------------------
# form-orthogonal unit vectors
# --------------------------------------------------------------------------

_PIVOT_RTOL = 1e-10


def _form_weights(dim: int, form: str) -> np.ndarray:
    w = np.ones(dim)
    if form == "lorentzian":
        w[0] = -1.0
    elif form != "euclidean":
        raise ValueError(f"unknown bilinear form {form!r}")
    return w


def nullspace_unit(rows: Sequence[np.ndarray], form: str = "euclidean") -> np.ndarray:
    """Unit vector orthogonal, under the given bilinear form, to every row.

    The rows must span a codimension-one subspace; otherwise RankDeficient
    is raised (smallest accepted elimination pivot is 1e-10 of the largest).
    The result v has form(v, v) = +1 and its sign is fixed by requiring a
    positive determinant of [rows; v], computed with the time coordinate
    negated in the Lorentzian case.
    """
    mat = np.array(rows, dtype=float)
    if mat.ndim != 2:
        raise ValueError("rows must form a 2-d array")
    nrows, dim = mat.shape
    weights = _form_weights(dim, form)

    # Gauss-Jordan with full pivoting on the form-weighted rows.
    a = mat * weights
    pivot_cols: list[int] = []
    free = list(range(dim))
    row = 0
    largest = 0.0
    while row < nrows and free:
        sub = np.abs(a[np.ix_(range(row, nrows), free)])
        i_rel, j_rel = np.unravel_index(np.argmax(sub), sub.shape)
        piv = sub[i_rel, j_rel]
        largest = max(largest, piv)
        if piv <= _PIVOT_RTOL * largest or piv == 0.0:
            break
        i, j = row + i_rel, free[j_rel]
        a[[row, i]] = a[[i, row]]
        a[row] /= a[row, j]
        for k in range(nrows):
            if k != row and a[k, j] != 0.0:
                a[k] -= a[k, j] * a[row]
        pivot_cols.append(j)
        free.remove(j)
        row += 1

    if dim - len(pivot_cols) != 1:
        raise RankDeficient(
            f"rows span codimension {dim - len(pivot_cols)}, expected 1")

    j_free = free[0]
    v = np.zeros(dim)
    v[j_free] = 1.0
    for r, j in enumerate(pivot_cols):
        v[j] = -a[r, j_free]

    norm2 = float(np.sum(weights * v * v))
    if norm2 <= 0.0:
        raise DomainError("orthogonal complement is not spacelike")
    v /= math.sqrt(norm2)

    square = np.vstack([mat, v])
    if form == "lorentzian":
        square = square.copy()
        square[:, 0] = -square[:, 0]
    if np.linalg.det(square) < 0.0:
        v = -v
    return v
