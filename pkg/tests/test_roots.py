from fractions import Fraction as Q

import pytest

from rootcert.arith import DomainError, DimensionError, add, vec
from rootcert.roots import build, is_root, norm_class_sum, positive_root_sum, span_dimension, to_dict
from rootcert.psi import sigma_sum

import oracles

COUNTS = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
CARTAN_DET = {"E6": 3, "E7": 2, "E8": 1, "F4": 1, "G2": 1}


def classical_count(family, l):
    return {"A": l * (l + 1) // 2, "B": l * l, "C": l * l, "D": l * (l - 1), "BC": 2 * l + l * (l - 1)}[family]


def classical_det(family, l):
    return {"A": l + 1, "B": 2, "C": 2, "D": 4}[family]


def all_systems(max_rank=6):
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3), ("BC", 1)):
        for l in range(lo, max_rank + 1):
            yield build(fam, l)
    for fam in COUNTS:
        yield build(fam)


def gram(sys):
    return oracles.G2_GRAM if sys.family == "G2" else None


# --- examples


def test_b3_roots():
    b3 = build("B", 3)
    assert len(b3.positive_roots) == 9
    assert b3.classes["tau"] == (vec(0, 0, 1), vec(0, 1, 0), vec(1, 0, 0))
    assert len(b3.classes["sigma"]) == 6
    assert vec(1, 1, 0) in b3.classes["sigma"] and vec(1, -1, 0) in b3.classes["sigma"]


def test_a1_and_e8():
    assert build("A", 1).positive_roots == (vec(1, -1),)
    assert len(build("E8").positive_roots) == 120


def test_is_root_examples():
    b3, bc3 = build("B", 3), build("BC", 3)
    assert is_root(b3, vec(1, 1, 0))
    assert not is_root(b3, vec(2, 0, 0))
    assert is_root(bc3, vec(2, 0, 0))
    assert is_root(b3, vec(-1, 0, 0))
    with pytest.raises(DimensionError):
        is_root(b3, vec(1, 0))


def test_norm_class_sum_examples():
    assert norm_class_sum(build("B", 4), "sigma") == vec(6, 4, 2, 0)
    assert norm_class_sum(build("F4"), "tau") == vec(5, 1, 1, 1)
    assert norm_class_sum(build("C", 2), "kappa") == vec(2, 2)
    assert norm_class_sum(build("B", 4), "σ") == vec(6, 4, 2, 0)
    with pytest.raises(DomainError):
        norm_class_sum(build("D", 4), "tau")


@pytest.mark.parametrize("family,rank_", [("B", 1), ("C", 1), ("D", 2), ("A", 0), ("E8", 7), ("X", 3), ("E", None)])
def test_illegal_ranks(family, rank_):
    with pytest.raises(DomainError):
        build(family, rank_)


# --- structural properties


@pytest.mark.parametrize("sys", list(all_systems(8)), ids=lambda s: s.label)
def test_counts_and_distinctness(sys):
    expected = COUNTS.get(sys.family) or classical_count(sys.family, sys.rank)
    assert len(sys.positive_roots) == expected
    assert len(set(sys.positive_roots)) == expected
    assert sum(len(v) for v in sys.classes.values()) == expected


@pytest.mark.parametrize("sys", list(all_systems(6)), ids=lambda s: s.label)
def test_simple_coefficients_are_nonnegative_integers(sys):
    for r in sys.positive_roots:
        c = sys.simple_coefficients(r)
        assert all(x >= 0 and x.denominator == 1 for x in c), r


@pytest.mark.parametrize("sys", [s for s in all_systems(6) if s.family != "BC"], ids=lambda s: s.label)
def test_weyl_closure_reproduces_the_system(sys):
    g = gram(sys)
    everything = oracles.weyl_closure(sys.simple_roots, g)
    positive = {r for r in everything if all(x >= 0 for x in sys.simple_coefficients(r))}
    assert positive == set(sys.positive_roots)
    assert len(everything) == 2 * len(sys.positive_roots)
    want = CARTAN_DET.get(sys.family) or classical_det(sys.family, sys.rank)
    assert oracles.det(oracles.cartan(sys.simple_roots, g)) == want


@pytest.mark.parametrize("l", range(1, 7))
def test_bc_is_the_union_of_b_and_c(l):
    bc = set(build("BC", l).positive_roots)
    b = set(build("B", l).positive_roots) if l >= 2 else {vec(1)}
    c = set(build("C", l).positive_roots) if l >= 2 else {vec(2)}
    assert bc == b | c


@pytest.mark.parametrize("sys", list(all_systems(6)), ids=lambda s: s.label)
def test_root_sum_closure(sys):
    roots = sys.positive_roots
    full = set(roots) | {tuple(-x for x in r) for r in roots}
    for a in roots:
        for b in roots:
            s = add(a, b)
            assert is_root(sys, s) == (s in full)


def test_ambient_frames():
    a3 = build("A", 3)
    assert a3.ambient_dim == 4 and all(sum(r) == 0 for r in a3.positive_roots)
    e6 = build("E6")
    assert e6.ambient_dim == 8
    assert all(r[5] == r[6] == -r[7] for r in e6.positive_roots)
    e7 = build("E7")
    assert all(r[6] == -r[7] for r in e7.positive_roots)
    assert span_dimension(a3) == 3 and span_dimension(e6) == 6 and span_dimension(e7) == 7


@pytest.mark.parametrize("family", ["B", "C", "D"])
@pytest.mark.parametrize("l", [*range(3, 13), 20, 33])
def test_sigma_identity(family, l):
    expected = tuple(Q(2 * (l - i)) for i in range(1, l + 1))
    assert norm_class_sum(build(family, l), "sigma") == expected == sigma_sum(l)


@pytest.mark.parametrize("l", range(2, 13))
def test_a_positive_root_sum(l):
    assert positive_root_sum(build("A", l)) == tuple(Q(l - 2 * i) for i in range(l + 1))


def test_exceptional_class_sums():
    assert positive_root_sum(build("E8")) == vec(0, 2, 4, 6, 8, 10, 12, 46)
    f4 = build("F4")
    assert norm_class_sum(f4, "sigma") == vec(6, 4, 2, 0)
    g2 = build("G2")
    assert positive_root_sum(g2) == vec(10, 6)
    assert len(g2.classes["short"]) == len(g2.classes["long"]) == 3


def test_to_dict_lists_every_class():
    doc = to_dict(build("B", 3))
    assert doc["classes"]["sigma"]["sum"] == ["4", "2", "0"]
    assert doc["classes"]["tau"]["sum"] == ["1", "1", "1"]
    assert to_dict(build("G2"))["coordinates"] == "simple-root"
