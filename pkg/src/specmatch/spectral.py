"""Spectral radius via power iteration, equitable quotients, characteristic polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, GraphError, components
from .halfint import HalfIntegral
from .roots import largest_real_root

DEFAULT_TOL = 1e-10
RAYLEIGH_PERIOD = 16
CHARPOLY_CAP = 16


class ConvergenceError(RuntimeError):
    """Power iteration missed the residual target; carries the best estimate."""

    def __init__(self, message: str, best: float, residual: float, iterations: int):
        super().__init__(f"{message}: best estimate {best!r}, residual {residual!r} after {iterations} iterations")
        self.best = best
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class RhoResult:
    value: float
    residual: float
    iterations: int
    component_index: int
    vector: tuple[float, ...]


def _power_iteration(a: np.ndarray, tol: float, cap: int) -> tuple[float, float, int, np.ndarray]:
    # Iterates A+I so that bipartite components (eigenvalues +-rho) still
    # converge; the shift leaves the Perron vector and the residual of A alone.
    x = np.ones(a.shape[0], dtype=np.float64)
    best_r, best_resid = 0.0, math.inf
    it = 0
    while it < cap:
        ax = a @ x
        it += 1
        if it % RAYLEIGH_PERIOD == 1 or it == cap:
            r = float(x @ ax) / float(x @ x)
            resid = float(np.max(np.abs(ax - r * x)))
            if resid < best_resid:
                best_r, best_resid = r, resid
            if resid <= tol:
                return r, resid, it, x
        y = ax + x
        x = y / y.max()
    raise ConvergenceError("power iteration did not converge", best_r, best_resid, cap)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> RhoResult:
    """Largest adjacency eigenvalue, computed per connected component.

    Deterministic: all-ones start vector, Rayleigh quotient refreshed every
    16 iterations, convergence on the infinity-norm residual of the returned
    (inf-norm one) vector.
    """
    if g.n == 0:
        raise GraphError("spectral radius undefined for the empty graph")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    cap = 200 * g.n + 10000
    best: tuple[float, float, int, int, list[int], np.ndarray] | None = None
    for idx, comp in enumerate(components(g)):
        verts = sorted(comp)
        if len(verts) == 1:
            cand = (0.0, 0.0, 0, idx, verts, np.ones(1))
        else:
            k = len(verts)
            pos = {v: i for i, v in enumerate(verts)}
            a = np.zeros((k, k), dtype=np.float64)
            for v in verts:
                nb = g.rows[v]
                while nb:
                    u = (nb & -nb).bit_length() - 1
                    nb &= nb - 1
                    a[pos[v], pos[u]] = 1.0
            value, resid, iters, vec = _power_iteration(a, tol, cap)
            cand = (value, resid, iters, idx, verts, vec)
        if best is None or cand[0] > best[0]:
            best = cand
    assert best is not None
    value, resid, iters, idx, verts, vec = best
    full = [0.0] * g.n
    for v, xv in zip(verts, vec):
        full[v] = float(xv)
    return RhoResult(value, resid, iters, idx, tuple(full))


# ---------------------------------------------------------------------------
# equitable partitions


@dataclass(frozen=True)
class QuotientMatrix:
    k: int
    entries: tuple[tuple[int, ...], ...]
    cell_sizes: tuple[int, ...]

    def __post_init__(self):
        if self.k != len(self.entries) or self.k != len(self.cell_sizes):
            raise GraphError("quotient matrix shape mismatch")
        for i, row in enumerate(self.entries):
            if len(row) != self.k:
                raise GraphError("quotient matrix must be square")
            for j, b in enumerate(row):
                if b < 0 or b > self.cell_sizes[j]:
                    raise GraphError(f"entry b[{i}][{j}]={b} exceeds cell size {self.cell_sizes[j]}")
        # edge double count between distinct cells
        for i in range(self.k):
            for j in range(self.k):
                if i != j and self.cell_sizes[i] * self.entries[i][j] != self.cell_sizes[j] * self.entries[j][i]:
                    raise GraphError(f"inconsistent edge counts between cells {i} and {j}")


def adjacency_quotient(g: Graph, partition: Iterable[Iterable[int]]) -> QuotientMatrix:
    """Verify equitability and return the quotient matrix; empty cells are dropped."""
    cells = [tuple(sorted(set(c))) for c in partition]
    cells = [c for c in cells if c]
    seen = 0
    for c in cells:
        for v in c:
            if not 0 <= v < g.n:
                raise GraphError(f"partition vertex {v} out of range")
            if seen >> v & 1:
                raise GraphError(f"partition cells overlap at vertex {v}")
            seen |= 1 << v
    if seen != (1 << g.n) - 1:
        raise GraphError("partition does not cover the vertex set")
    masks = [sum(1 << v for v in c) for c in cells]
    entries = []
    for i, cell in enumerate(cells):
        row0 = [(g.rows[cell[0]] & masks[j]).bit_count() for j in range(len(cells))]
        for v in cell[1:]:
            for j in range(len(cells)):
                bij = (g.rows[v] & masks[j]).bit_count()
                if bij != row0[j]:
                    raise GraphError(
                        f"partition not equitable: vertex {v} has {bij} neighbours in cell {j}, "
                        f"cell {i} requires {row0[j]}"
                    )
        entries.append(tuple(row0))
    return QuotientMatrix(len(cells), tuple(entries), tuple(len(c) for c in cells))


def quotient_spectral_radius(q: QuotientMatrix, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of the quotient; equals the graph's spectral radius."""
    if q.k == 0:
        raise GraphError("empty quotient matrix")
    if q.k <= 3:
        return largest_real_root(charpoly_int([list(r) for r in q.entries]))
    # cell-size similarity D^{1/2} Q D^{-1/2} is symmetric for equitable quotients
    d = np.sqrt(np.asarray(q.cell_sizes, dtype=np.float64))
    s = np.asarray(q.entries, dtype=np.float64) * (d[:, None] / d[None, :])
    s = 0.5 * (s + s.T)
    return float(np.linalg.eigvalsh(s)[-1])


# ---------------------------------------------------------------------------
# characteristic polynomials


def charpoly_int(mat: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Exact integer coefficients of det(xI - M), descending powers.

    Faddeev-LeVerrier recursion; every division is exact over the integers.
    """
    k = len(mat)
    for row in mat:
        if len(row) != k:
            raise ValueError("matrix must be square")
    coeffs = [1]
    m = [[0] * k for _ in range(k)]
    c = 1
    for j in range(1, k + 1):
        for i in range(k):
            m[i][i] += c
        m = [[sum(mat[i][l] * m[l][r] for l in range(k)) for r in range(k)] for i in range(k)]
        tr = sum(m[i][i] for i in range(k))
        if tr % j:
            raise ArithmeticError("non-exact division in characteristic polynomial recursion")
        c = -tr // j
        coeffs.append(c)
    return tuple(coeffs)


def exact_char_poly(g: Graph) -> tuple[int, ...]:
    """Exact coefficients of det(xI - A(G)), descending powers; n <= 16."""
    if g.n > CHARPOLY_CAP:
        raise GraphError(f"exact characteristic polynomial capped at n <= {CHARPOLY_CAP}, got {g.n}")
    mat = [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    return charpoly_int(mat)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Divide integer polynomials (descending coefficients); den must be monic."""
    den = list(den)
    if not den or den[0] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    quo: list[int] = []
    dn = len(den) - 1
    while len(rem) - 1 >= dn and rem:
        lead = rem[0]
        quo.append(lead)
        for i in range(dn + 1):
            rem[i] -= lead * den[i]
        assert rem[0] == 0
        rem.pop(0)
    while rem and rem[0] == 0:
        rem.pop(0)
    return tuple(quo), tuple(rem)


def char_poly_f_coeffs(n: int, beta_star: HalfIntegral, s: int) -> tuple[int, int, int, int]:
    """Integer coefficients of the hub-family quotient cubic, descending powers."""
    d = beta_star.doubled
    c2 = -(d - s - 2)
    c1 = d * s - s * s - d + s - s * n + 1
    c0 = -d * d * s + d * n * s + 3 * d * s * s - 2 * n * s * s - 2 * s**3 + d * s - s * n - s * s
    return (1, c2, c1, c0)


def char_poly_f(x, n: int, beta_star: HalfIntegral, s: int):
    """Evaluate the hub-family cubic at x; exact when x is int/Fraction."""
    coeffs = char_poly_f_coeffs(n, beta_star, s)
    if isinstance(x, float):
        acc = 0.0
        for c in coeffs:
            acc = acc * x + c
        return acc
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def char_poly_g_coeffs(n: int, b: int) -> tuple[int, int, int]:
    return (1, -(b - 1), -b * (n - b))


def char_poly_g(x, n: int, b: int):
    """Evaluate the split-join quadratic x^2 - (b-1)x - b(n-b); 0 <= b <= n."""
    if not 0 <= b <= n:
        raise ValueError(f"requires 0 <= b <= n, got b={b}, n={n}")
    coeffs = char_poly_g_coeffs(n, b)
    if isinstance(x, float):
        acc = 0.0
        for c in coeffs:
            acc = acc * x + c
        return acc
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc
