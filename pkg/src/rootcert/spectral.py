"""Spectral data of -ad(xi) for solvable groups A x N and the L^p exponent ranges.

A :class:`SolvableDatum` lists the weights of A on the complexified
nilradical: each weight has a real part and an imaginary part (linear forms
on the Lie algebra a, written in a fixed basis of a) and a multiplicity.
Everything is exact; +infinity is represented by ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from .arith import (
    DimensionError,
    DomainError,
    Vec,
    dot,
    lp_feasible,
    lp_maximize,
    parse_rational,
    rank,
    restrict_to_kernel,
    cone_is_trivial,
    solve_linear,
    zeros,
)
from .real_forms import RealFormClass, weighted_datum


@dataclass(frozen=True)
class WeightEntry:
    real_part: Vec
    imag_part: Vec
    multiplicity: int = 1

    def __post_init__(self):
        if len(self.real_part) != len(self.imag_part):
            raise DimensionError("real and imaginary parts live in different frames")
        if self.multiplicity < 1:
            raise DomainError("multiplicity must be at least 1")


@dataclass(frozen=True)
class SolvableDatum:
    l: int
    weights: tuple[WeightEntry, ...]
    basis: tuple[str, ...] = ()
    default_xi: Vec | None = None
    rho: Vec | None = None  # the trace form sum(mult * real_part), when known from roots

    def __post_init__(self):
        if not self.weights:
            raise DomainError("a solvable datum needs at least one weight")
        for w in self.weights:
            if len(w.real_part) != self.l:
                raise DimensionError(f"weight {w.real_part} is not a form on a {self.l}-dimensional a")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"x{i + 1}" for i in range(self.l)))

    @property
    def n(self) -> int:
        return sum(w.multiplicity for w in self.weights)

    @property
    def D(self) -> int:
        return self.l + self.n

    def trace_form(self) -> Vec:
        """X -> trace(ad X): the multiplicity-weighted sum of real parts."""
        acc = [Q(0)] * self.l
        for w in self.weights:
            for i, x in enumerate(w.real_part):
                acc[i] += w.multiplicity * x
        return tuple(acc)


@dataclass(frozen=True)
class SpectralProfile:
    l: int
    lambdas: tuple[Q, ...]
    w: tuple[Q, ...]   # w[k] = lambda_1 + ... + lambda_{k+1}, k = 0..D-1
    W: tuple[Q, ...]   # W[k] = sum of the k largest, k = 0..D
    h: Q
    xi: Vec

    @property
    def D(self) -> int:
        return len(self.lambdas)

    @property
    def n(self) -> int:
        return self.D - self.l

    @property
    def contracting(self) -> bool:
        """0 = lambda_1 = ... = lambda_l < lambda_{l+1}."""
        lam = self.lambdas
        return all(x == 0 for x in lam[: self.l]) and self.D > self.l and lam[self.l] > 0


def _cone_generators(forms: list[Vec]) -> list[Vec]:
    """Drop forms that are nonnegative combinations of the remaining ones.

    A form dropped this way is negative wherever all the kept forms are, so
    the contraction problem is unchanged.
    """
    present = set(forms)
    # cheap pass: sums of two kept forms (enough to reduce roots to simple roots)
    for w in sorted(present, key=lambda v: (sum(abs(x) for x in v), v), reverse=True):
        others = present - {w}
        if any(tuple(a - b for a, b in zip(w, u)) in others for u in others):
            present = others
    kept = [f for f in dict.fromkeys(forms) if f in present]
    i = len(kept) - 1
    while i >= 0 and len(kept) > 1:
        others = kept[:i] + kept[i + 1:]
        A = [[o[d] for o in others] for d in range(len(kept[i]))]
        if lp_feasible(A, list(kept[i]), len(others)) is not None:
            kept = others
        i -= 1
    return kept


def check_nC(datum: SolvableDatum) -> Vec | None:
    """A xi in a with Re(w)(xi) < 0 for every weight, or None if there is none."""
    l = datum.l
    if any(not any(w.real_part) for w in datum.weights):
        return None
    reals = _cone_generators([w.real_part for w in datum.weights])
    # variables: p (l), q (l), t, s_i (one per weight), u_j (one per coordinate)
    nw = len(reals)
    nvar = 2 * l + 1 + nw + l
    A, b = [], []
    for i, r in enumerate(reals):
        row = list(r) + [-x for x in r] + [Q(1)] + [Q(int(k == i)) for k in range(nw)] + [Q(0)] * l
        A.append(row)
        b.append(Q(0))
    for j in range(l):
        row = [Q(0)] * nvar
        row[j] = row[l + j] = Q(1)
        row[2 * l + 1 + nw + j] = Q(1)
        A.append(row)
        b.append(Q(1))
    c = [Q(0)] * nvar
    c[2 * l] = Q(1)
    res = lp_maximize(A, b, c)
    if res.status != "optimal" or res.value <= 0:
        return None
    xi = tuple(res.x[j] - res.x[l + j] for j in range(l))
    if not all(dot(w.real_part, xi) < 0 for w in datum.weights):
        raise ArithmeticError("nC witness failed re-verification")
    return xi


def check_nT(datum: SolvableDatum) -> bool:
    """The real parts of the weights span a*."""
    return rank([w.real_part for w in datum.weights]) == datum.l


def spectral_profile(datum: SolvableDatum, xi: Vec) -> SpectralProfile:
    xi = tuple(parse_rational(x) for x in xi)
    if len(xi) != datum.l:
        raise DimensionError(f"xi must have {datum.l} coordinates")
    lam = [Q(0)] * datum.l
    for w in datum.weights:
        lam.extend([-dot(w.real_part, xi)] * w.multiplicity)
    lam.sort()
    D = len(lam)
    w_, acc = [], Q(0)
    for x in lam:
        acc += x
        w_.append(acc)
    W, acc = [Q(0)], Q(0)
    for x in reversed(lam):
        acc += x
        W.append(acc)
    return SpectralProfile(datum.l, tuple(lam), tuple(w_), tuple(W), sum(lam, Q(0)), xi)


def violating_weights(datum: SolvableDatum, xi: Vec) -> list[int]:
    return [i for i, w in enumerate(datum.weights) if dot(w.real_part, tuple(xi)) >= 0]


def dual_exponent(p: object) -> Q:
    """The Hoelder conjugate p / (p - 1)."""
    p = parse_rational(p)
    if p <= 1:
        raise DomainError("the dual exponent needs p > 1")
    return p / (p - 1)


def _conj(x: Q | None) -> Q | None:
    """Hoelder conjugate on (1, +inf], with conj(+inf) = 1."""
    if x is None:
        return Q(1)
    return None if x == 1 else dual_exponent(x)


def _ratio(h: Q, s: Q) -> Q | None:
    return None if s == 0 else h / s


@dataclass(frozen=True)
class Interval:
    lo: Q
    hi: Q | None  # None is +inf
    lo_open: bool = True
    hi_open: bool = True

    def contains(self, p: Q) -> bool:
        above = p > self.lo if self.lo_open else p >= self.lo
        below = True if self.hi is None else (p < self.hi if self.hi_open else p <= self.hi)
        return above and below

    @property
    def empty(self) -> bool:
        return self.hi is not None and self.hi <= self.lo


@dataclass(frozen=True)
class Statement:
    degree: int
    kind: str      # vanishing | hausdorff | nonvanishing | reduced-nonvanishing
    interval: Interval
    basis: str     # which argument licenses it


@dataclass(frozen=True)
class ExponentReport:
    D: int
    l: int
    h: Q
    statements: tuple[Statement, ...]
    dual_pairs: tuple[tuple[int, int], ...]
    contracting: bool
    vanishing_bound: Q | None = None        # h / W_{n-1}
    nonvanishing_threshold: Q | None = None  # h / w_l
    flags: dict = field(default_factory=dict)

    def by_degree(self, k: int, kind: str | None = None) -> list[Statement]:
        return [s for s in self.statements if s.degree == k and (kind is None or s.kind == kind)]


def exponent_report(profile: SpectralProfile, certified: bool = False, flags: dict | None = None) -> ExponentReport:
    """Collect the exponent intervals licensed by the spectral profile.

    For each degree k the flow estimate gives vanishing of H^k and a
    Hausdorff H^{k+1} for 1 < p < h/W_k, and non-vanishing of H^{k+1} for
    h/w_{k+1} < p < h/W_k whenever h/w_{k+1} >= 1.  Poincare duality pairs
    degree k at p with degree D-k at p/(p-1).  With a contracting xi the
    degree-l threshold h/w_l is reported; ``certified`` adds the reduced
    non-vanishing of degree l beyond it.
    """
    h, D, l = profile.h, profile.D, profile.l
    if h <= 0:
        raise DomainError("the trace h of -ad(xi) must be positive")
    w, W = profile.w, profile.W
    out: list[Statement] = []
    for k in range(D):
        top = _ratio(h, W[k])
        if top is None or top > 1:
            iv = Interval(Q(1), top)
            out.append(Statement(k, "vanishing", iv, "flow"))
            out.append(Statement(k + 1, "hausdorff", iv, "flow"))
            # H^k = 0 and H^{k+1} Hausdorff at p give H^{D-k} = 0 at p/(p-1)
            out.append(Statement(D - k, "vanishing", Interval(_conj(top), None), "duality"))
            if k + 1 <= D - 1 and w[k + 1] > 0:
                low = h / w[k + 1]
                if low >= 1 and (top is None or low < top):
                    out.append(Statement(k + 1, "nonvanishing", Interval(low, top), "flow"))
                    out.append(Statement(D - k - 1, "reduced-nonvanishing",
                                         Interval(_conj(top), _conj(low)), "duality"))
    contracting = profile.contracting
    v_bound = threshold = None
    if contracting:
        n = D - l
        v_bound = _ratio(h, W[n - 1])
        threshold = h / w[l]
        if l == 1 and W[D - 2] > 0:
            out.append(Statement(D - 1, "nonvanishing", Interval(Q(1), h / W[D - 2]), "rank-one"))
        if certified:
            out.append(Statement(l, "reduced-nonvanishing", Interval(threshold, None), "root-certificate"))
    out = [s for s in out if not s.interval.empty and 0 <= s.degree <= D]
    pairs = tuple((k, D - k) for k in range(D + 1) if k <= D - k)
    return ExponentReport(D, l, h, tuple(out), pairs, contracting, v_bound, threshold, dict(flags or {}))


def check_condition1(datum: SolvableDatum, J, rho: Vec) -> bool:
    """Every nonzero X with rho(X) = 0 has Re(w_j)(X) > 0 for some j in J."""
    J = list(J)
    if not J:
        raise DomainError("J must be nonempty")
    rho = tuple(parse_rational(x) for x in rho)
    if not any(rho):
        raise DomainError("rho must be nonzero")
    rows = [datum.weights[j].real_part for j in J]
    # X in b with Re(w_j)(X) <= 0 for all j must vanish
    restricted, dim = restrict_to_kernel(rows, rho)
    if dim == 0:
        return True
    return cone_is_trivial(restricted, dim)


def iwasawa_datum(cls: RealFormClass) -> SolvableDatum:
    """Weights of A on n for the Iwasawa group of ``cls``.

    a is written in the basis of fundamental coweights, so a root's real part
    is its vector of simple-root coefficients and xi = (-1, ..., -1) makes
    every simple root equal to -1.
    """
    datum = weighted_datum(cls)
    sys = datum.system
    l = sys.rank
    weights = []
    for root in sys.positive_roots:
        coeffs = sys.simple_coefficients(root)
        weights.append(WeightEntry(coeffs, zeros(l), datum.mult(root)))
    basis = tuple(f"w{i + 1}" for i in range(l))
    rho = tuple(sum((w.multiplicity * w.real_part[i] for w in weights), Q(0)) for i in range(l))
    return SolvableDatum(l, tuple(weights), basis, (Q(-1),) * l, rho)


def coweight_to_ambient(cls_or_system, x: Vec) -> Vec:
    """The vector X in V with alpha_i . X = x_i for each simple root."""
    sys = getattr(cls_or_system, "system", cls_or_system)
    rows = list(sys.simple_roots)
    # X = sum c_k alpha_k; alpha_i . X = sum_k (alpha_i . alpha_k) c_k
    gram_cols = [tuple(dot(a, b) for a in rows) for b in rows]
    c = solve_linear(gram_cols, tuple(x))
    acc = zeros(sys.ambient_dim)
    for ck, a in zip(c, rows):
        acc = tuple(u + ck * v for u, v in zip(acc, a))
    return acc


# ---------------------------------------------------------------------------
# documents


def datum_from_json(doc: dict) -> SolvableDatum:
    from .io import vec_from_json

    l = int(doc["l"])
    weights = []
    for w in doc["weights"]:
        real = vec_from_json(w["real"])
        imag = vec_from_json(w["imag"]) if w.get("imag") is not None else zeros(len(real))
        weights.append(WeightEntry(real, imag, int(w.get("mult", 1))))
    return SolvableDatum(l, tuple(weights), tuple(doc.get("basis") or ()))


def datum_to_json(d: SolvableDatum) -> dict:
    from .io import vec_to_json

    return {
        "kind": "solvable-datum",
        "l": d.l,
        "basis": list(d.basis),
        "weights": [
            {"real": vec_to_json(w.real_part), "imag": vec_to_json(w.imag_part), "mult": w.multiplicity}
            for w in d.weights
        ],
    }


def interval_to_json(iv: Interval) -> dict:
    from .io import rat_to_json

    return {"lo": rat_to_json(iv.lo), "hi": rat_to_json(iv.hi), "lo_open": iv.lo_open, "hi_open": iv.hi_open}


def profile_to_json(p: SpectralProfile) -> dict:
    from .io import rat_to_json, vec_to_json

    return {
        "D": p.D, "l": p.l, "h": rat_to_json(p.h), "xi": vec_to_json(p.xi),
        "lambdas": vec_to_json(p.lambdas), "w": vec_to_json(p.w), "W": vec_to_json(p.W),
    }


def report_to_json(r: ExponentReport) -> dict:
    from .io import rat_to_json

    return {
        "kind": "exponent-report",
        "D": r.D, "l": r.l, "h": rat_to_json(r.h),
        "contracting": r.contracting,
        "vanishing_bound": rat_to_json(r.vanishing_bound) if r.contracting else None,
        "nonvanishing_threshold": None if r.nonvanishing_threshold is None else rat_to_json(r.nonvanishing_threshold),
        "flags": r.flags,
        "dual_pairs": [list(p) for p in r.dual_pairs],
        "statements": [
            {"degree": s.degree, "kind": s.kind, "basis": s.basis, "interval": interval_to_json(s.interval)}
            for s in r.statements
        ],
    }
