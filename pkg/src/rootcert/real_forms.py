"""Catalog of simple real Lie algebras by restricted root system.

Each class is a restricted root family plus one multiplicity per norm class.
``two_rho`` evaluates the closed-form expression for the weighted sum of
positive roots; ``weighted_datum`` pairs the enumerated system with the
multiplicities, so the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable

from .arith import DomainError, Vec, add, scale, vec, zeros
from .roots import FIXED_RANK, RootSystem, build, norm_class_sum

Mults = dict[str, int]


@dataclass(frozen=True)
class ClassSpec:
    label: str
    variant: str | None
    family: str
    min_rank: int
    mults: Callable[[int, int | None, int | None], Mults]
    mult_text: str
    uses_r: bool = False
    r_ok: Callable[[int, int], bool] | None = None
    r_text: str = ""
    note: str = ""

    @property
    def key(self) -> str:
        return self.label if self.variant is None else f"{self.label}/{self.variant}"

    @property
    def fixed_rank(self) -> int | None:
        if self.family in FIXED_RANK:
            return FIXED_RANK[self.family]
        if self.label == "E VII":
            return 3
        return None


def _const(**m: int) -> Callable[[int, int | None, int | None], Mults]:
    return lambda l, r, j: dict(m)


_E_VII_NOTE = (
    "E VII is listed both with restricted system C3 and among the F4-restricted "
    "classes (E II, E VII, E IX, F I); the F4 occurrence is most likely E VI."
)

_SPECS: list[ClassSpec] = [
    ClassSpec("A I", None, "A", 1, _const(sigma=1), "sigma: 1"),
    ClassSpec("A II", None, "A", 1, _const(sigma=4), "sigma: 4 (rho = 4 rho_{A I})"),
    ClassSpec("A III", "C", "C", 2, _const(sigma=2, kappa=1), "sigma: 2, kappa: 1"),
    ClassSpec(
        "A III", "BC", "BC", 2,
        lambda l, r, j: {"tau": 2 * (r - 2 * l + 1), "sigma": 2, "kappa": 1},
        "tau: 2(r-2l+1), sigma: 2, kappa: 1",
        uses_r=True, r_ok=lambda l, r: r >= 2 * l, r_text="r >= 2l",
    ),
    ClassSpec(
        "B I", None, "B", 2,
        lambda l, r, j: {"tau": 2 * (r - l) + 1, "sigma": 1},
        "tau: 2(r-l)+1, sigma: 1",
        uses_r=True, r_ok=lambda l, r: r >= l, r_text="r >= l",
    ),
    ClassSpec("C I", None, "C", 2, _const(sigma=1, kappa=1), "sigma: 1, kappa: 1"),
    ClassSpec("C II", "C", "C", 2, _const(sigma=4, kappa=3), "sigma: 4, kappa: 3"),
    ClassSpec(
        "C II", "BC", "BC", 2,
        lambda l, r, j: {"tau": 4 * (r - 2 * l), "sigma": 4, "kappa": 3},
        "tau: 4(r-2l), sigma: 4, kappa: 3",
        uses_r=True, r_ok=lambda l, r: r >= 2 * l + 1, r_text="r >= 2l+1",
    ),
    ClassSpec("D I", "D", "D", 4, _const(sigma=1), "sigma: 1 (r = l)"),
    ClassSpec(
        "D I", "B", "B", 2,
        lambda l, r, j: {"tau": 2 * (r - l), "sigma": 1},
        "tau: 2(r-l), sigma: 1",
        uses_r=True, r_ok=lambda l, r: r >= l + 1, r_text="r >= l+1",
    ),
    ClassSpec("D III", "C", "C", 2, _const(sigma=4, kappa=1), "sigma: 4, kappa: 1"),
    ClassSpec("D III", "BC", "BC", 2, _const(tau=4, sigma=4, kappa=1), "tau: 4, sigma: 4, kappa: 1"),
    ClassSpec("E I", None, "E6", 6, _const(sigma=1), "sigma: 1"),
    ClassSpec("E V", None, "E7", 7, _const(sigma=1), "sigma: 1"),
    ClassSpec("E VII", None, "C", 3, _const(sigma=8, kappa=1), "sigma: 8, kappa: 1", note=_E_VII_NOTE),
    ClassSpec("E VIII", None, "E8", 8, _const(sigma=1), "sigma: 1"),
    ClassSpec(
        "F4", "j", "F4", 4,
        lambda l, r, j: {"tau": 2 ** j, "sigma": 1},
        "tau: 2^j (j = 0..3), sigma: 1",
        note="members listed as E II, E VII, E IX, F I; the j <-> label match is not fixed. " + _E_VII_NOTE,
    ),
    ClassSpec("G", None, "G2", 2, _const(short=1, long=1), "short: 1, long: 1"),
]

_COMPLEX_MIN = {"A": 1, "B": 2, "C": 2, "D": 4, "E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_SPLIT_MIN = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1, "E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


def _uniform(m: int, family: str) -> Callable[[int, int | None, int | None], Mults]:
    def f(l, r, j):
        return {c: m for c in build(family, l if family not in FIXED_RANK else None).classes}

    return f


for _fam, _min in _COMPLEX_MIN.items():
    _SPECS.append(ClassSpec(f"complex-{_fam}", None, _fam, _min, _uniform(2, _fam), "all: 2"))
for _fam, _min in _SPLIT_MIN.items():
    _SPECS.append(ClassSpec(f"split-{_fam}", None, _fam, _min, _uniform(1, _fam), "all: 1"))

CATALOG: dict[str, ClassSpec] = {s.key: s for s in _SPECS}
_DEFAULT_VARIANT = {"A III": "C", "C II": "C", "D I": "D", "D III": "C", "F4": "j"}


@dataclass(frozen=True)
class RealFormClass:
    label: str
    variant: str | None
    l: int
    r: int | None = None
    j: int | None = None

    @property
    def spec(self) -> ClassSpec:
        return CATALOG[self.key]

    @property
    def key(self) -> str:
        return self.label if self.variant is None else f"{self.label}/{self.variant}"

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def system(self) -> RootSystem:
        fam = self.family
        return build(fam, None if fam in FIXED_RANK else self.l)

    @property
    def multiplicities(self) -> Mults:
        return self.spec.mults(self.l, self.r, self.j)

    @property
    def expected_strictness(self) -> str:
        fam = self.family
        if fam in ("D", "E6") or (fam == "A" and self.l % 2 == 0):
            return "relaxed"
        return "strict"

    def describe(self) -> str:
        parts = [self.key, f"l={self.l}"]
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.j is not None:
            parts.append(f"j={self.j}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"label": self.label, "variant": self.variant, "l": self.l, "r": self.r, "j": self.j}


# the split G2 form is the only real form with restricted system G2
_LABEL_ALIASES = {"G2": "G"}


def _canonical_label(text: str) -> tuple[str, str | None]:
    raw = text.strip()
    variant = None
    if "/" in raw:
        raw, variant = raw.split("/", 1)
        variant = variant.strip().upper()
    norm = " ".join(raw.replace("-", " ").replace("_", " ").split()).upper()
    norm = _LABEL_ALIASES.get(norm, norm)
    for spec in _SPECS:
        cand = " ".join(spec.label.replace("-", " ").split()).upper()
        if norm == cand or norm == cand.replace(" ", ""):
            return spec.label, variant
    raise DomainError(f"unknown Cartan class {text!r}")


def make_class(label: str, l: int | None = None, r: int | None = None,
               variant: str | None = None, j: int | None = None) -> RealFormClass:
    """Resolve a label (Cartan or slug form) and validate its parameters."""
    name, v_from_label = _canonical_label(label)
    variant = (variant or v_from_label or _DEFAULT_VARIANT.get(name))
    if variant is not None:
        variant = variant.strip()
        variant = "j" if name == "F4" else variant.upper()
    key = name if variant is None else f"{name}/{variant}"
    if key not in CATALOG:
        raise DomainError(f"class {name!r} has no variant {variant!r}")
    spec = CATALOG[key]
    fixed = spec.fixed_rank
    if fixed is not None:
        if l is not None and l != fixed:
            raise DomainError(f"{key} has fixed real rank {fixed}")
        l = fixed
    if l is None:
        raise DomainError(f"{key} needs a real rank l")
    if l < spec.min_rank:
        raise DomainError(f"{key} requires l >= {spec.min_rank}")
    if spec.uses_r:
        if r is None:
            raise DomainError(f"{key} needs the complex rank r ({spec.r_text})")
        if not spec.r_ok(l, r):
            raise DomainError(f"{key}: (l, r) = ({l}, {r}) violates {spec.r_text}")
    else:
        r = None
    if name == "F4":
        if j is None or j not in (0, 1, 2, 3):
            raise DomainError("the F4 family needs j in {0, 1, 2, 3}")
    else:
        j = None
    return RealFormClass(name, variant, l, r, j)


# ---------------------------------------------------------------------------
# closed forms


def _sigma_closed(l: int) -> Vec:
    return tuple(Q(2 * (l - i)) for i in range(1, l + 1))


def _class_sum_closed(family: str, l: int, cls: str) -> Vec:
    if family == "F4":
        return {"sigma": vec(6, 4, 2, 0), "tau": vec(5, 1, 1, 1)}[cls]
    if cls == "sigma":
        return _sigma_closed(l)
    if cls == "tau":
        return (Q(1),) * l
    if cls == "kappa":
        return (Q(2),) * l
    raise DomainError(f"no closed form for class {cls} of {family}")


def _split_two_rho(family: str, l: int) -> Vec:
    if family == "A":
        return tuple(Q(l - 2 * i) for i in range(l + 1))
    if family == "E6":
        v = vec(0, 0, 0, 0, 0, -1, -1, 1)
        return add(vec(0, 2, 4, 6, 8, 0, 0, 0), scale(8, v))
    if family == "E7":
        return vec(0, 2, 4, 6, 8, 10, -17, 17)
    if family == "E8":
        return vec(0, 2, 4, 6, 8, 10, 12, 46)
    if family == "G2":
        return vec(10, 6)
    raise DomainError(family)


def two_rho(cls: RealFormClass) -> Vec:
    """The weighted sum of positive restricted roots, from closed formulas."""
    fam, l = cls.family, cls.l
    mults = cls.multiplicities
    if fam in ("A", "E6", "E7", "E8", "G2"):
        (m,) = set(mults.values())
        return scale(m, _split_two_rho(fam, l))
    acc = zeros(len(_class_sum_closed(fam, l, "sigma")))
    for name, m in mults.items():
        acc = add(acc, scale(m, _class_sum_closed(fam, l, name)))
    return acc


@dataclass(frozen=True)
class WeightedRootDatum:
    system: RootSystem
    multiplicity: dict[str, int]

    def mult(self, root: Vec) -> int:
        return self.multiplicity[self.system.class_of(root)]

    def weighted_sum(self) -> Vec:
        acc = zeros(self.system.ambient_dim)
        for name, m in self.multiplicity.items():
            acc = add(acc, scale(m, norm_class_sum(self.system, name)))
        return acc

    @property
    def nilradical_dim(self) -> int:
        return sum(self.multiplicity[c] * len(rs) for c, rs in self.system.classes.items())


def weighted_datum(cls: RealFormClass) -> WeightedRootDatum:
    mults = cls.multiplicities
    sys = cls.system
    if set(mults) != set(sys.classes):
        raise DomainError(f"{cls.key}: multiplicities {sorted(mults)} do not match classes {sorted(sys.classes)}")
    if any(m < 1 for m in mults.values()):
        raise DomainError(f"{cls.describe()}: multiplicities must be positive")
    return WeightedRootDatum(sys, dict(mults))


def legal_instances(l_range=range(3, 11), r_offsets=(lambda l: l, lambda l: l + 1,
                                                     lambda l: 2 * l, lambda l: 2 * l + 3)):
    """Every catalog class at each legal l in ``l_range`` (fixed ranks once)."""
    out: list[RealFormClass] = []
    for spec in _SPECS:
        ranks = [spec.fixed_rank] if spec.fixed_rank is not None else [l for l in l_range if l >= spec.min_rank]
        for l in ranks:
            js = [0, 1, 2, 3] if spec.label == "F4" else [None]
            rs = sorted({f(l) for f in r_offsets}) if spec.uses_r else [None]
            for j in js:
                for r in rs:
                    if spec.uses_r and not spec.r_ok(l, r):
                        continue
                    out.append(RealFormClass(spec.label, spec.variant, l, r, j))
    return out


def catalog_table() -> list[dict]:
    rows = []
    for spec in _SPECS:
        rows.append({
            "label": spec.label,
            "variant": spec.variant,
            "restricted_family": spec.family,
            "rank": (f"l = {spec.fixed_rank}" if spec.fixed_rank is not None else f"l >= {spec.min_rank}"),
            "r": spec.r_text or None,
            "multiplicities": spec.mult_text,
            "note": spec.note or None,
        })
    return rows
