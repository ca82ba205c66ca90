"""Exact rational linear algebra.

Vectors are tuples of :class:`fractions.Fraction`; a matrix is a sequence of
such rows.  Nothing in this module ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from math import lcm
from typing import Iterable, Sequence

Vec = tuple[Q, ...]
Matrix = Sequence[Vec]


class DimensionError(ValueError):
    """Vectors from different ambient frames were combined."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def parse_rational(x: object) -> Q:
    """Accept ints, Fractions and ``"num/den"`` strings."""
    if isinstance(x, Q):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        return Q(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_rational(x: Q) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(*xs: object) -> Vec:
    if len(xs) == 1 and not isinstance(xs[0], (int, Q, str)):
        xs = tuple(xs[0])  # type: ignore[arg-type]
    return tuple(parse_rational(x) for x in xs)


def zeros(n: int) -> Vec:
    return (Q(0),) * n


def unit(n: int, i: int, scale: object = 1) -> Vec:
    """``scale`` times the i-th basis vector (0-based) of Q^n."""
    v = [Q(0)] * n
    v[i] = parse_rational(scale)
    return tuple(v)


def _same_frame(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionError(f"frame mismatch: {len(u)} vs {len(v)}")


def add(u: Vec, v: Vec) -> Vec:
    _same_frame(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    _same_frame(u, v)
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(c: object, u: Vec) -> Vec:
    c = parse_rational(c)
    return tuple(c * a for a in u)


def dot(u: Sequence[Q], v: Sequence[Q]) -> Q:
    _same_frame(u, v)
    return sum((a * b for a, b in zip(u, v)), Q(0))


def lincomb(coeffs: Iterable[object], vectors: Sequence[Vec], dim: int | None = None) -> Vec:
    """Return sum(c_i * v_i); ``dim`` is needed only when ``vectors`` is empty."""
    vectors = list(vectors)
    if not vectors:
        if dim is None:
            raise DimensionError("empty combination needs an explicit dimension")
        return zeros(dim)
    acc = [Q(0)] * len(vectors[0])
    coeffs = list(coeffs)
    if len(coeffs) != len(vectors):
        raise DimensionError("coefficient count does not match vector count")
    for c, v in zip(coeffs, vectors):
        _same_frame(acc, v)
        c = parse_rational(c)
        if c:
            for i, a in enumerate(v):
                acc[i] += c * a
    return tuple(acc)


def matvec(rows: Matrix, x: Vec) -> Vec:
    return tuple(dot(r, x) for r in rows)


def transpose(rows: Matrix, ncols: int | None = None) -> list[Vec]:
    if not rows:
        return [()] * (ncols or 0)
    return [tuple(col) for col in zip(*rows)]


# ---------------------------------------------------------------------------
# elimination


def rank(rows: Matrix) -> int:
    """Exact rank, using fraction-free (Bareiss) elimination on integer rows."""
    mat = []
    for row in rows:
        den = lcm(*(x.denominator for x in row)) if row else 1
        mat.append([int(x * den) for x in row])
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                # Bareiss step; the division is exact
                mat[i][j] = (mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j]) // prev
            mat[i][c] = 0
        prev = mat[r][c]
        r += 1
        if r == nrows:
            break
    return r


def rref(rows: Matrix) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        mat[r] = [x / p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Matrix, ncols: int) -> list[Vec]:
    """A basis of {x : rows . x = 0} inside Q^ncols."""
    if not rows:
        return [unit(ncols, i) for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Q(0)] * ncols
        x[f] = Q(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_linear(columns: Sequence[Vec], target: Vec) -> Vec | None:
    """Some exact solution c of sum(c_i * columns_i) = target, or None."""
    if not columns:
        return () if all(x == 0 for x in target) else None
    for col in columns:
        _same_frame(col, target)
    n = len(columns)
    aug = [tuple(col[d] for col in columns) + (target[d],) for d in range(len(target))]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Q(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


# ---------------------------------------------------------------------------
# simplex


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Vec | None = None
    value: Q | None = None


class _Tableau:
    """Dense tableau for max c.x, A x = b, x >= 0 with Bland's rule."""

    def __init__(self, rows: list[list[Q]], rhs: list[Q], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            self.rows[r] = prow = [x / p for x in prow]
            self.rhs[r] /= p
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, prow)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def optimize(self, cost: list[Q], allowed: set[int]) -> str:
        while True:
            # reduced cost of column j: cost_j - c_B . B^-1 A_j
            cb = [cost[b] for b in self.basis]
            entering = None
            for j in sorted(allowed):
                if j in self.basis:
                    continue
                red = cost[j] - sum((cb[i] * self.rows[i][j] for i in range(len(self.rows))), Q(0))
                if red > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def lp_maximize(A: Sequence[Sequence[object]], b: Sequence[object], c: Sequence[object]) -> LPResult:
    """Maximise c.x subject to A x = b, x >= 0, exactly (two-phase simplex)."""
    nvar = len(c)
    cost = [parse_rational(v) for v in c]
    rows: list[list[Q]] = []
    rhs: list[Q] = []
    for arow, bi in zip(A, b):
        row = [parse_rational(v) for v in arow]
        if len(row) != nvar:
            raise DimensionError("constraint row has the wrong number of variables")
        bi = parse_rational(bi)
        if bi < 0:
            row, bi = [-v for v in row], -bi
        rows.append(row)
        rhs.append(bi)
    m = len(rows)
    # phase 1 with one artificial per row
    for i, row in enumerate(rows):
        row.extend(Q(1) if k == i else Q(0) for k in range(m))
    tab = _Tableau(rows, rhs, [nvar + i for i in range(m)])
    phase1 = [Q(0)] * nvar + [Q(-1)] * m
    tab.optimize(phase1, set(range(nvar + m)))
    if any(tab.rhs[i] != 0 for i, bv in enumerate(tab.basis) if bv >= nvar):
        return LPResult("infeasible")
    # drive degenerate artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1
    tab.rows = [row[:nvar] for row in tab.rows]
    status = tab.optimize(cost, set(range(nvar)))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Q(0)] * nvar
    for i, bv in enumerate(tab.basis):
        x[bv] = tab.rhs[i]
    return LPResult("optimal", tuple(x), sum((a * v for a, v in zip(cost, x)), Q(0)))


def lp_feasible(A: Sequence[Sequence[object]], b: Sequence[object], nvar: int) -> Vec | None:
    res = lp_maximize(A, b, [0] * nvar)
    return res.x if res.status == "optimal" else None


# ---------------------------------------------------------------------------
# positivity and cones


def solve_strict_positive(columns: Sequence[Vec], target: Vec) -> tuple[Vec, Q] | None:
    """Find m with sum(m_i * columns_i) = target and every m_i > 0.

    Maximises the slack t subject to m_i >= t, with t capped at 1 so the
    program is always bounded.  Returns ``(m, min(m))`` or None when no
    strictly positive solution exists.
    """
    if not columns:
        raise DomainError("need at least one column")
    for col in columns:
        _same_frame(col, target)
    k = len(columns)
    # variables: u_0..u_{k-1}, t+, t-, s   with m = u + (t+ - t-)
    nvar = k + 3
    A: list[list[Q]] = []
    b: list[Q] = []
    for d in range(len(target)):
        row = [col[d] for col in columns]
        total = sum(row, Q(0))
        A.append(row + [total, -total, Q(0)])
        b.append(target[d])
    A.append([Q(0)] * k + [Q(1), Q(-1), Q(1)])
    b.append(Q(1))
    c = [Q(0)] * k + [Q(1), Q(-1), Q(0)]
    res = lp_maximize(A, b, c)
    if res.status != "optimal" or res.value <= 0:
        return None
    t = res.value
    m = tuple(res.x[i] + t for i in range(k))
    return m, min(m)


def cone_is_trivial(rows: Matrix, dim: int | None = None) -> bool:
    """True iff X = 0 is the only solution of rows . X <= 0."""
    if dim is None:
        if not rows:
            raise DimensionError("empty row set needs an explicit dimension")
        dim = len(rows[0])
    if dim == 0:
        return True
    if not rows or rank(rows) < dim:
        return False
    for r in rows:
        _same_frame(r, range(dim))
    # Stiemke: with full column rank, the cone is {0} iff some y > 0 has y . rows = 0
    return solve_strict_positive(list(rows), zeros(dim)) is not None


def restrict_to_kernel(rows: Matrix, form: Vec, basis: Sequence[Vec] | None = None) -> tuple[list[Vec], int]:
    """Restrict linear forms to {X in span(basis) : form . X = 0}.

    Returns the restricted rows, expressed in an exact basis of that
    subspace, and its dimension.  ``basis`` defaults to the whole space.
    """
    dim = len(form)
    if basis is None:
        basis = [unit(dim, i) for i in range(dim)]
    basis = list(basis)
    ker = nullspace([tuple(dot(form, e) for e in basis)], len(basis))
    sub_basis = [lincomb(y, basis) for y in ker]
    restricted = [tuple(dot(r, x) for x in sub_basis) for r in rows]
    return restricted, len(sub_basis)
