"""Independent brute-force oracles used by the tests.

Nothing here calls the LP code under test: cones are decided by enumerating
candidate extreme rays, positivity by enumerating small rational grids, and
root systems are regenerated from simple roots by reflections.
"""

from fractions import Fraction as Q
from itertools import combinations, product


def dot(u, v, gram=None):
    if gram is None:
        return sum((a * b for a, b in zip(u, v)), Q(0))
    return sum((u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v))), Q(0))


def det(m):
    m = [[Q(x) for x in row] for row in m]
    n, sign, acc = len(m), 1, Q(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Q(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        acc *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return sign * acc


def rank(rows):
    m = [[Q(x) for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# cones in dimension <= 3


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def candidate_rays(rows, dim):
    """Directions containing every extreme ray or line of {rows . X <= 0}."""
    out = []
    if dim == 1:
        out = [(Q(1),), (Q(-1),)]
    elif dim == 2:
        out = [(Q(1), Q(0)), (Q(0), Q(1))]
        out += [(-r[1], r[0]) for r in rows]
    elif dim == 3:
        out = [(Q(1), Q(0), Q(0)), (Q(0), Q(1), Q(0)), (Q(0), Q(0), Q(1))]
        out += [_cross(a, b) for a, b in combinations(rows, 2)]
        out += [_cross(a, e) for a in rows for e in out[:3]]
    rays = []
    for v in out:
        if any(v):
            rays += [tuple(v), tuple(-x for x in v)]
    return rays


def cone_has_nonzero_point(rows, dim, grid=4):
    """Exact for dim <= 3: search extreme-ray candidates and an integer grid."""
    def inside(x):
        return all(dot(r, x) <= 0 for r in rows)

    for v in candidate_rays(rows, dim):
        if inside(v):
            return True
    for x in product(range(-grid, grid + 1), repeat=dim):
        if any(x) and inside(tuple(Q(c) for c in x)):
            return True
    return False


def cone_trivial_by_row_lps(rows, dim):
    """The textbook test: kernel check plus one feasibility LP per row."""
    from rootcert.arith import lp_feasible

    if rank(rows) < dim:
        return False
    nr = len(rows)
    nvar = 2 * dim + nr
    base = [list(r) + [-x for x in r] + [Q(int(k == i)) for k in range(nr)] for i, r in enumerate(rows)]
    for r in rows:
        A = base + [list(r) + [-x for x in r] + [Q(0)] * nr]
        if lp_feasible(A, [Q(0)] * nr + [Q(-1)], nvar) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# positivity


def positive_grid(max_den=8, max_val=2):
    vals = {Q(a, b) for b in range(1, max_den + 1) for a in range(1, max_val * b + 1)}
    return sorted(vals)


def brute_strict_positive(columns, target, values):
    """First m over the value grid with sum(m_i * columns_i) == target."""
    dim = len(target)
    for m in product(values, repeat=len(columns)):
        if all(sum(mi * c[d] for mi, c in zip(m, columns)) == target[d] for d in range(dim)):
            return m
    return None


def brute_contracting(reals, l, span=2, max_den=3):
    vals = sorted({Q(a, b) for b in range(1, max_den + 1) for a in range(-span * b, span * b + 1)})
    for xi in product(vals, repeat=l):
        if all(dot(r, xi) < 0 for r in reals):
            return xi
    return None


# ---------------------------------------------------------------------------
# root systems


G2_GRAM = ((Q(1), Q(-3, 2)), (Q(-3, 2), Q(3)))


def reflect(v, a, gram=None):
    c = 2 * dot(v, a, gram) / dot(a, a, gram)
    return tuple(x - c * y for x, y in zip(v, a))


def weyl_closure(simple, gram=None):
    """All roots generated from ``simple`` by simple reflections."""
    seen = set(tuple(s) for s in simple)
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = reflect(v, a, gram)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def cartan(simple, gram=None):
    return [[2 * dot(a, b, gram) / dot(b, b, gram) for b in simple] for a in simple]
