"""Root-subset certificates for 2 rho.

A certificate is a set Psi of positive roots with strictly positive
coefficients m such that

* (i)   sum(m_b * b) equals the target 2 rho,
* (ii)  Psi spans V,
* (iii) no two members of Psi (a root with itself included) sum to a root,
        or, in the relaxed form, exactly one such pair exists.

Verification also runs the cone test: no nonzero X with 2 rho(X) = 0 makes
every member of Psi non-positive.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import combinations, combinations_with_replacement

from .arith import (
    DimensionError,
    DomainError,
    Vec,
    add,
    cone_is_trivial,
    lincomb,
    rank,
    restrict_to_kernel,
    solve_strict_positive,
    sub,
    unit,
    vec,
)
from .real_forms import RealFormClass, two_rho
from .roots import RootSystem, build, is_root, norm_class_sum, span_dimension

STRICT, RELAXED, FAIL = "strict", "relaxed", "fail"


@dataclass(frozen=True)
class PsiCertificate:
    family: str
    rank: int
    target: Vec
    roots: tuple[Vec, ...]
    coeffs: tuple[Q, ...]
    strictness: str
    offending_pair: tuple[int, int] | None = None
    cls: RealFormClass | None = None

    def __post_init__(self):
        if len(self.roots) != len(self.coeffs):
            raise DomainError("roots and coefficients differ in number")
        if len(set(self.roots)) != len(self.roots):
            raise DomainError("roots must be pairwise distinct")
        if any(c <= 0 for c in self.coeffs):
            raise DomainError("coefficients must be strictly positive")
        if self.strictness not in (STRICT, RELAXED):
            raise DomainError(f"unknown strictness {self.strictness!r}")
        if (self.strictness == RELAXED) != (self.offending_pair is not None):
            raise DomainError("an offending pair is recorded iff the certificate is relaxed")

    @property
    def system(self) -> RootSystem:
        return _system_for(self.family, self.rank)

    def as_dict(self) -> dict[Vec, Q]:
        return dict(zip(self.roots, self.coeffs))


def _system_for(family: str, rank_: int) -> RootSystem:
    from .roots import FIXED_RANK

    return build(family, None if family in FIXED_RANK else rank_)


@dataclass(frozen=True)
class VerificationReport:
    cond_i: bool
    residual: Vec
    cond_ii: bool
    span_rank: int
    expected_rank: int
    cond_iii: str
    root_sum_pairs: tuple[tuple[int, int], ...]
    cond_1: bool

    @property
    def ok(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii != FAIL and self.cond_1

    def matches(self, strictness: str) -> bool:
        return self.ok and self.cond_iii == strictness


def root_sum_pairs(sys: RootSystem, roots) -> list[tuple[int, int]]:
    """All index pairs i <= j with roots[i] + roots[j] a root."""
    return [(i, j) for i, j in combinations_with_replacement(range(len(roots)), 2)
            if is_root(sys, add(roots[i], roots[j]))]


def cond_1_holds(sys: RootSystem, target: Vec, roots) -> bool:
    """Cone test on b = {X in V : target(X) = 0} against the forms in ``roots``."""
    if not any(target):
        raise DomainError("the cone test needs a nonzero target")
    rows, dim = restrict_to_kernel(list(roots), target, basis=sys.simple_roots)
    if dim == 0:
        return True
    return cone_is_trivial(rows, dim) if rows else False


def verify_certificate(sys: RootSystem, target: Vec, cert: PsiCertificate) -> VerificationReport:
    if len(target) != sys.ambient_dim:
        raise DimensionError("target does not live in the system's frame")
    for r in cert.roots:
        if tuple(r) not in sys.positive_roots:
            raise DomainError(f"{r} is not a positive root of {sys.label}")
    residual = sub(lincomb(cert.coeffs, cert.roots, dim=sys.ambient_dim), target)
    span = rank(cert.roots) if cert.roots else 0
    expected = span_dimension(sys)
    pairs = root_sum_pairs(sys, cert.roots)
    level = STRICT if not pairs else RELAXED if len(pairs) == 1 else FAIL
    c1 = cond_1_holds(sys, target, cert.roots) if any(target) else False
    return VerificationReport(
        cond_i=not any(residual),
        residual=residual,
        cond_ii=span == expected,
        span_rank=span,
        expected_rank=expected,
        cond_iii=level,
        root_sum_pairs=tuple(pairs),
        cond_1=c1,
    )


# ---------------------------------------------------------------------------
# decompositions by family; each returns {root: coefficient}


def _e(n: int, *idx: int, signs=None) -> Vec:
    """Sum of +-e_i over 1-based indices."""
    v = [Q(0)] * n
    signs = signs or [1] * len(idx)
    for i, s in zip(idx, signs):
        v[i - 1] += s
    return tuple(v)


def _pair(n: int, i: int, j: int, sign: int = 1) -> Vec:
    return _e(n, i, j, signs=[1, sign])


def _lemma_terms(l: int) -> dict[Vec, Q]:
    """S as a combination of the roots e_i + e_{i+1}."""
    out: dict[Vec, Q] = defaultdict(Q)
    for m in range(1, (l - 2) // 2 + 1):
        out[_pair(l, l - 2 * m, l - 2 * m + 1)] += m
        out[_pair(l, l - 2 * m - 1, l - 2 * m)] += m
    return out


def lemma_S(l: int) -> tuple[Vec, bool]:
    """The vector S and whether the parity identity for sigma holds exactly.

    Even l: sigma = 2S + l e_1.  Odd l: sigma = 2S + (l-1)(e_1 + e_2) + (l-1) e_1.
    """
    if l < 3:
        raise DomainError("the identity is stated for l >= 3")
    terms = _lemma_terms(l)
    S = lincomb(terms.values(), list(terms), dim=l)
    two_s = tuple(2 * x for x in S)
    if l % 2 == 0:
        rhs = add(two_s, unit(l, 0, l))
    else:
        rhs = add(add(two_s, _e(l, 1, 2, signs=[l - 1, l - 1])), unit(l, 0, l - 1))
    return S, rhs == sigma_sum(l)


def sigma_sum(l: int) -> Vec:
    """Closed form of the sigma class sum in B_l, C_l and D_l: sum of 2(l - i) e_i."""
    return tuple(Q(2 * (l - i)) for i in range(1, l + 1))


def _merge(*parts: tuple[object, dict[Vec, Q]]) -> dict[Vec, Q]:
    out: dict[Vec, Q] = defaultdict(Q)
    for c, d in parts:
        for root, m in d.items():
            out[root] += Q(c) * m
    return {k: v for k, v in out.items() if v != 0}


def _sigma_b(l: int) -> dict[Vec, Q]:
    """sigma over {e_1} u {e_j + e_{j+1}}."""
    d = {k: 2 * v for k, v in _lemma_terms(l).items()}
    if l % 2 == 0:
        return _merge((1, d), (l, {unit(l, 0): Q(1)}))
    return _merge((1, d), (l - 1, {_pair(l, 1, 2): Q(1)}), (l - 1, {unit(l, 0): Q(1)}))


def _tau_b(l: int) -> dict[Vec, Q]:
    if l % 2 == 0:
        return {_pair(l, 2 * m - 1, 2 * m): Q(1) for m in range(1, l // 2 + 1)}
    d = {_pair(l, 2 * m, 2 * m + 1): Q(1) for m in range(1, (l - 1) // 2 + 1)}
    d[unit(l, 0)] = Q(1)
    return d


def _sigma_d(l: int) -> dict[Vec, Q]:
    """sigma over {e_j + e_{j+1}} u {e_1 +- e_l}."""
    d = {k: 2 * v for k, v in _lemma_terms(l).items()}
    plus, minus = _pair(l, 1, l), _pair(l, 1, l, -1)
    if l % 2 == 0:
        return _merge((1, d), (Q(l, 2), {plus: Q(1), minus: Q(1)}))
    return _merge((1, d), (l - 1, {_pair(l, 1, 2): Q(1)}), (Q(l - 1, 2), {plus: Q(1), minus: Q(1)}))


def _two_rho_a(l: int) -> dict[Vec, Q]:
    n = l + 1
    out: dict[Vec, Q] = {}
    if l % 2 == 1:
        k = (l + 1) // 2
        for i, j in combinations(range(1, n + 1), 2):
            if j - i > k:
                out[_pair(n, i, j, -1)] = Q(2)
        for i in range(1, k + 1):
            out[_pair(n, i, i + k, -1)] = Q(1)
    else:
        k = l // 2
        for i, j in combinations(range(1, n + 1), 2):
            if k < j - i < l:
                out[_pair(n, i, j, -1)] = Q(2)
        out[_pair(n, 1, k + 1, -1)] = Q(2)
        out[_pair(n, k + 1, l + 1, -1)] = Q(2)
    return out


def _e6_betas() -> list[Vec]:
    h = Q(1, 2)
    v = (0, 0, 0, 0, 0, -1, -1, 1)
    signs = [(1, 1, 1, 1, 1), (-1, -1, 1, 1, 1), (-1, 1, 1, 1, -1), (1, -1, -1, 1, 1), (-1, -1, -1, -1, 1)]
    return [tuple(h * x for x in (s + v[5:])) for s in signs]


def _two_rho_e6() -> dict[Vec, Q]:
    b = _e6_betas()
    m = [6, 2, 4, 2, 2]
    out = {beta: Q(c) for beta, c in zip(b, m)}
    out[_e(8, 1, 5, signs=[-1, 1])] = Q(2)
    out[_e(8, 1, 5)] = Q(2)
    return out


def _two_rho_e7() -> dict[Vec, Q]:
    return {
        _e(8, 2, 3): Q(2), _e(8, 3, 4): Q(2), _e(8, 4, 5): Q(4), _e(8, 5, 6): Q(4),
        _e(8, 1, 6): Q(3), _e(8, 1, 6, signs=[-1, 1]): Q(3), _e(8, 7, 8, signs=[-1, 1]): Q(17),
    }


def _two_rho_e8() -> dict[Vec, Q]:
    return {
        _e(8, 2, 3): Q(2), _e(8, 3, 4): Q(2), _e(8, 4, 5): Q(4), _e(8, 5, 6): Q(4),
        _e(8, 6, 7): Q(6), _e(8, 7, 8): Q(6),
        _e(8, 1, 8, signs=[-1, 1]): Q(20), _e(8, 1, 8): Q(20),
    }


def _f4_parts() -> dict[str, dict[Vec, Q]]:
    e1, e12, e23, e34 = _e(4, 1), _e(4, 1, 2), _e(4, 2, 3), _e(4, 3, 4)
    return {
        "sigma": {e12: Q(2), e23: Q(2), e1: Q(4)},
        "tau": {e12: Q(1), e34: Q(1), e1: Q(4)},
    }


def _g2_parts() -> dict[str, dict[Vec, Q]]:
    a1, long_ = vec(1, 0), vec(3, 2)
    # short sum (4,2) = a1 + (3a1+2a2); long sum (6,4) = 2 (3a1+2a2)
    return {"short": {a1: Q(1), long_: Q(1)}, "long": {long_: Q(2)}}


def _relaxed_pair(cls: RealFormClass) -> tuple[Vec, Vec] | None:
    fam, l = cls.family, cls.l
    if fam == "D":
        return _pair(l, 1, l, -1), _pair(l, l - 1, l)
    if fam == "E6":
        return _e6_betas()[2], _e(8, 1, 5)
    if fam == "A" and l % 2 == 0:
        k = l // 2
        return _pair(l + 1, 1, k + 1, -1), _pair(l + 1, k + 1, l + 1, -1)
    return None


def _solved(cls: RealFormClass, roots: list[Vec]) -> dict[Vec, Q]:
    solved = solve_strict_positive(roots, two_rho(cls))
    if solved is None:
        raise DomainError(f"{cls.describe()}: no strictly positive combination over Psi")
    return dict(zip(roots, solved[0]))


def _decomposition(cls: RealFormClass) -> dict[Vec, Q]:
    fam, l, mults = cls.family, cls.l, cls.multiplicities
    if fam == "A":
        return _merge((mults["sigma"], _two_rho_a(l)))
    if fam == "B":
        return _merge((mults["sigma"], _sigma_b(l)), (mults["tau"], _tau_b(l)))
    if fam == "D":
        # the displayed combination leaves e_{l-1} + e_l at weight 0; re-solve over the same Psi
        roots = sorted(set(_sigma_d(l)) | {_pair(l, l - 1, l)})
        return _solved(cls, roots)
    if fam in ("C", "BC"):
        return _solved(cls, [unit(l, i, 2) for i in range(l)])
    if fam == "E6":
        return _merge((mults["sigma"], _two_rho_e6()))
    if fam == "E7":
        return _merge((mults["sigma"], _two_rho_e7()))
    if fam == "E8":
        return _merge((mults["sigma"], _two_rho_e8()))
    if fam == "F4":
        parts = _f4_parts()
        return _merge((mults["sigma"], parts["sigma"]), (mults["tau"], parts["tau"]))
    if fam == "G2":
        parts = _g2_parts()
        return _merge((mults["short"], parts["short"]), (mults["long"], parts["long"]))
    raise DomainError(f"no construction for family {fam}")


def construct_certificate(cls: RealFormClass) -> PsiCertificate:
    """Build the certificate for ``cls`` from the type-by-type recipes."""
    decomposition = _decomposition(cls)
    roots = tuple(sorted(decomposition))
    coeffs = tuple(decomposition[r] for r in roots)
    pair = _relaxed_pair(cls)
    offending = None
    if pair is not None:
        i, j = sorted((roots.index(pair[0]), roots.index(pair[1])))
        offending = (i, j)
    sys = cls.system
    return PsiCertificate(
        family=sys.family,
        rank=sys.rank,
        target=two_rho(cls),
        roots=roots,
        coeffs=coeffs,
        strictness=RELAXED if offending else STRICT,
        offending_pair=offending,
        cls=cls,
    )


def search_certificate(sys: RootSystem, target: Vec, max_size: int, allow_one_pair: bool = False,
                       limit: int | None = None) -> list[PsiCertificate]:
    """Exhaustive search over subsets of the positive roots.

    Subsets are visited by size, then lexicographically in root order.  A
    subset is kept when it spans V, meets the pair condition, and admits a
    strictly positive exact solution.
    """
    if max_size > len(sys.positive_roots):
        raise DomainError("max_size exceeds the number of positive roots")
    roots = sys.positive_roots
    n = len(roots)
    dim_v = span_dimension(sys)
    budget = 1 if allow_one_pair else 0
    sums = {(i, j) for i in range(n) for j in range(i, n) if is_root(sys, add(roots[i], roots[j]))}
    found: list[PsiCertificate] = []
    for size in range(max(dim_v, 1), max_size + 1):
        for idx in combinations(range(n), size):
            pairs = [(a, b) for ai, a in enumerate(idx) for b in idx[ai:] if (a, b) in sums]
            if len(pairs) > budget:
                continue
            subset = [roots[i] for i in idx]
            if rank(subset) != dim_v:
                continue
            solved = solve_strict_positive(subset, target)
            if solved is None:
                continue
            offending = None
            if pairs:
                a, b = pairs[0]
                offending = (idx.index(a), idx.index(b))
            found.append(PsiCertificate(
                family=sys.family, rank=sys.rank, target=tuple(target), roots=tuple(subset),
                coeffs=solved[0], strictness=RELAXED if pairs else STRICT, offending_pair=offending,
            ))
            if limit is not None and len(found) >= limit:
                return found
    return found


def e6_displayed_check() -> tuple[Vec, list[tuple[int, int]]]:
    """Residual of the displayed E6 combination and its root-sum pairs."""
    sys = build("E6")
    d = _two_rho_e6()
    roots = list(d)
    return sub(lincomb(d.values(), roots), norm_class_sum(sys, "sigma")), root_sum_pairs(sys, roots)


def certificate_to_json(cert: PsiCertificate) -> dict:
    from .io import vec_to_json, format_rational

    return {
        "kind": "psi-certificate",
        "class": cert.cls.to_json() if cert.cls else None,
        "system": {"family": cert.family, "rank": cert.rank},
        "target": vec_to_json(cert.target),
        "roots": [vec_to_json(r) for r in cert.roots],
        "coeffs": [format_rational(c) for c in cert.coeffs],
        "strictness": cert.strictness,
        "offending_pair": list(cert.offending_pair) if cert.offending_pair else None,
    }


def certificate_from_json(doc: dict) -> PsiCertificate:
    from .arith import parse_rational
    from .io import vec_from_json
    from .real_forms import make_class

    if not isinstance(doc, dict) or doc.get("kind") != "psi-certificate":
        raise ValueError("not a psi-certificate document")
    cls = None
    if doc.get("class"):
        c = doc["class"]
        cls = make_class(c["label"], c.get("l"), c.get("r"), c.get("variant"), c.get("j"))
    pair = doc.get("offending_pair")
    return PsiCertificate(
        family=doc["system"]["family"],
        rank=int(doc["system"]["rank"]),
        target=vec_from_json(doc["target"]),
        roots=tuple(vec_from_json(r) for r in doc["roots"]),
        coeffs=tuple(parse_rational(c) for c in doc["coeffs"]),
        strictness=doc["strictness"],
        offending_pair=tuple(pair) if pair else None,
        cls=cls,
    )


def report_to_json(rep: VerificationReport) -> dict:
    from .io import vec_to_json

    return {
        "kind": "verification-report",
        "cond_i": {"pass": rep.cond_i, "residual": vec_to_json(rep.residual)},
        "cond_ii": {"pass": rep.cond_ii, "span_rank": rep.span_rank, "expected_rank": rep.expected_rank},
        "cond_iii": {"level": rep.cond_iii, "pairs": [list(p) for p in rep.root_sum_pairs]},
        "cond_1": {"pass": rep.cond_1},
        "ok": rep.ok,
    }
