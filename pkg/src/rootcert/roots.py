"""Positive root systems in Bourbaki's explicit coordinates.

Classical families and E6/E7/E8/F4 live in Euclidean coordinates on the
basis e_1, ..., e_n.  A_l sits in R^{l+1} on the hyperplane sum(x) = 0, E6
inside R^8 on x6 = x7 = -x8, E7 inside R^8 on x7 = -x8.  G2 is stored in
simple-root coordinates (a1, a2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations, product

from .arith import DimensionError, DomainError, Vec, add, dot, neg, rank, solve_linear, unit, vec, zeros

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")
FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}

# norm classes keyed by squared length
CLASS_BY_SQNORM = {Q(1): "tau", Q(2): "sigma", Q(4): "kappa"}
CLASS_ALIASES = {
    "σ": "sigma", "sigma": "sigma", "s": "sigma",
    "τ": "tau", "tau": "tau", "t": "tau",
    "κ": "kappa", "kappa": "kappa", "k": "kappa",
    "short": "short", "long": "long",
}

_G2_SHORT = (vec(1, 0), vec(1, 1), vec(2, 1))
_G2_LONG = (vec(0, 1), vec(3, 1), vec(3, 2))

H = Q(1, 2)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    positive_roots: tuple[Vec, ...]
    simple_roots: tuple[Vec, ...]
    classes: dict[str, tuple[Vec, ...]] = field(compare=False)
    _members: frozenset = field(repr=False, compare=False)

    @property
    def label(self) -> str:
        return self.family if self.family in FIXED_RANK else f"{self.family}{self.rank}"

    def index(self, v: Vec) -> int:
        return self.positive_roots.index(tuple(v))

    def class_of(self, v: Vec) -> str:
        v = tuple(v)
        for name, members in self.classes.items():
            if v in members:
                return name
        raise DomainError(f"{v} is not a positive root of {self.label}")

    def simple_coefficients(self, v: Vec) -> tuple[Q, ...]:
        return _simple_coeffs(self, tuple(v))


def _normalize_family(family: str) -> str:
    f = family.strip().upper().replace("_", "")
    if f in ("E", "F", "G"):
        raise DomainError(f"family {family!r} needs its rank, e.g. E8, F4, G2")
    if f not in FAMILIES:
        raise DomainError(f"unknown root system family {family!r}")
    return f


def _lex(roots) -> tuple[Vec, ...]:
    return tuple(sorted(set(tuple(r) for r in roots)))


def _pm_pairs(n: int, upto: int | None = None, e_type: bool = False):
    """e_i +- e_j (or +-e_i + e_j for the E series) for i < j <= upto in R^n."""
    upto = n if upto is None else upto
    for i, j in combinations(range(upto), 2):
        if e_type:
            yield add(unit(n, i, -1), unit(n, j))
        else:
            yield add(unit(n, i), unit(n, j, -1))
        yield add(unit(n, i), unit(n, j))


def _half_spin(n: int, fixed: dict[int, Q], free: range, parity: int):
    """Vectors 1/2(sum +-e_i) over ``free`` with fixed entries and sign-count parity."""
    for signs in product((1, -1), repeat=len(free)):
        if sum(1 for s in signs if s < 0) % 2 != parity:
            continue
        v = [Q(0)] * n
        for i, x in fixed.items():
            v[i] = x
        for i, s in zip(free, signs):
            v[i] = s * H
        yield tuple(v)


def _enumerate(family: str, l: int) -> tuple[list[Vec], list[Vec]]:
    if family == "A":
        n = l + 1
        pos = [add(unit(n, i), unit(n, j, -1)) for i, j in combinations(range(n), 2)]
        simple = [add(unit(n, i), unit(n, i + 1, -1)) for i in range(l)]
    elif family in ("B", "C", "BC", "D"):
        n = l
        pos = list(_pm_pairs(n))
        if family in ("B", "BC"):
            pos += [unit(n, i) for i in range(n)]
        if family in ("C", "BC"):
            pos += [unit(n, i, 2) for i in range(n)]
        simple = [add(unit(n, i), unit(n, i + 1, -1)) for i in range(l - 1)]
        if family in ("B", "BC"):
            simple.append(unit(n, l - 1))
        elif family == "C":
            simple.append(unit(n, l - 1, 2))
        else:
            simple.append(add(unit(n, l - 2), unit(n, l - 1)))
    elif family == "E8":
        n = 8
        pos = list(_pm_pairs(8, e_type=True))
        pos += list(_half_spin(8, {7: H}, range(7), 0))
        simple = _e_simple(8)
    elif family == "E7":
        n = 8
        pos = list(_pm_pairs(8, upto=6, e_type=True))
        pos.append(add(unit(8, 7), unit(8, 6, -1)))
        pos += list(_half_spin(8, {6: -H, 7: H}, range(6), 1))
        simple = _e_simple(7)
    elif family == "E6":
        n = 8
        pos = list(_pm_pairs(8, upto=5, e_type=True))
        pos += list(_half_spin(8, {5: -H, 6: -H, 7: H}, range(5), 0))
        simple = _e_simple(6)
    elif family == "F4":
        n = 4
        pos = list(_pm_pairs(4)) + [unit(4, i) for i in range(4)]
        pos += list(_half_spin(4, {0: H}, range(1, 4), 0))
        pos += list(_half_spin(4, {0: H}, range(1, 4), 1))
        simple = [vec(0, 1, -1, 0), vec(0, 0, 1, -1), vec(0, 0, 0, 1), vec(H, -H, -H, -H)]
    elif family == "G2":
        pos = list(_G2_SHORT + _G2_LONG)
        simple = [vec(1, 0), vec(0, 1)]
    else:  # pragma: no cover - guarded by _normalize_family
        raise DomainError(family)
    return pos, simple


def _e_simple(r: int) -> list[Vec]:
    a1 = vec(H, -H, -H, -H, -H, -H, -H, H)
    a2 = vec(1, 1, 0, 0, 0, 0, 0, 0)
    rest = [add(unit(8, i), unit(8, i - 1, -1)) for i in range(1, 7)]
    return [a1, a2] + rest[: r - 2]


@lru_cache(maxsize=None)
def build(family: str, rank_: int | None = None) -> RootSystem:
    """Construct the positive system of ``family`` at ``rank_``."""
    fam = _normalize_family(family)
    if fam in FIXED_RANK:
        if rank_ is not None and rank_ != FIXED_RANK[fam]:
            raise DomainError(f"{fam} has fixed rank {FIXED_RANK[fam]}")
        l = FIXED_RANK[fam]
    else:
        if rank_ is None:
            raise DomainError(f"family {fam} needs a rank")
        l = int(rank_)
        if l < MIN_RANK[fam]:
            raise DomainError(f"{fam}_{l}: rank must be at least {MIN_RANK[fam]}")
    pos, simple = _enumerate(fam, l)
    pos = _lex(pos)
    if fam == "G2":
        classes = {"short": _lex(_G2_SHORT), "long": _lex(_G2_LONG)}
    else:
        grouped: dict[str, list[Vec]] = {}
        for r in pos:
            grouped.setdefault(CLASS_BY_SQNORM[dot(r, r)], []).append(r)
        order = ("tau", "sigma", "kappa")
        classes = {c: tuple(grouped[c]) for c in order if c in grouped}
    ambient = len(pos[0])
    return RootSystem(fam, l, ambient, pos, tuple(simple), classes, frozenset(pos))


def is_root(sys: RootSystem, v: Vec) -> bool:
    v = tuple(v)
    if len(v) != sys.ambient_dim:
        raise DimensionError(f"expected a vector of length {sys.ambient_dim}")
    return v in sys._members or neg(v) in sys._members


def norm_class_sum(sys: RootSystem, cls: str) -> Vec:
    name = CLASS_ALIASES.get(cls.strip().lower() if cls.isascii() else cls, cls)
    if name not in sys.classes:
        raise DomainError(f"{sys.label} has no norm class {cls!r}")
    acc = zeros(sys.ambient_dim)
    for r in sys.classes[name]:
        acc = add(acc, r)
    return acc


def positive_root_sum(sys: RootSystem) -> Vec:
    acc = zeros(sys.ambient_dim)
    for r in sys.positive_roots:
        acc = add(acc, r)
    return acc


@lru_cache(maxsize=None)
def _coeff_table(family: str, rank_: int) -> dict[Vec, tuple[Q, ...]]:
    sys = build(family, None if family in FIXED_RANK else rank_)
    return {r: solve_linear(sys.simple_roots, r) for r in sys.positive_roots}


def _simple_coeffs(sys: RootSystem, v: Vec) -> tuple[Q, ...]:
    table = _coeff_table(sys.family, sys.rank)
    c = table[v] if v in table else solve_linear(sys.simple_roots, v)
    if c is None:
        raise DomainError(f"{v} is not in the span of the simple roots of {sys.label}")
    return c


def span_dimension(sys: RootSystem) -> int:
    """dim V, the dimension of the space the roots span."""
    return rank(sys.simple_roots)


def to_dict(sys: RootSystem) -> dict:
    from .io import vec_to_json

    return {
        "kind": "root-system",
        "family": sys.family,
        "rank": sys.rank,
        "ambient_dim": sys.ambient_dim,
        "coordinates": "simple-root" if sys.family == "G2" else "euclidean",
        "simple_roots": [vec_to_json(r) for r in sys.simple_roots],
        "classes": {
            name: {"roots": [vec_to_json(r) for r in members], "sum": vec_to_json(norm_class_sum(sys, name))}
            for name, members in sys.classes.items()
        },
    }
