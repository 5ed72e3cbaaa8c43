import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symmpair import build_root_system, gl, inner_product, standard_parabolic, standard_parabolics
from symmpair.errors import CartanError, DimensionMismatch
from symmpair.rootsys import cartan_matrix

LABELS = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "A1xA1"]


def _reflect(rs, x, a):
    c = 2 * rs.inner(x, a) / rs.inner(a, a)
    return tuple(xi - c * ai for xi, ai in zip(x, a))


def test_a1():
    rs = build_root_system("A1")
    assert len(rs.all_roots) == 2 and rs.n_positive == 1
    (a,) = rs.simple_roots
    assert rs.all_roots == {a, tuple(-x for x in a)}


@pytest.mark.parametrize("label,count", [("A2", 6), ("G2", 12), ("B3", 18), ("F4", 48), ("E8", 240)])
def test_root_counts(label, count):
    assert len(build_root_system(label).all_roots) == count


def test_g2_long_and_short():
    rs = build_root_system("G2")
    lengths = sorted(rs.inner(r, r) for r in rs.roots)
    assert lengths == [Fraction(2, 3)] * 6 + [2] * 6


@pytest.mark.parametrize("label", LABELS[:-2])
def test_closed_under_all_reflections(label):
    rs = build_root_system(label)
    for a in rs.roots:
        assert {_reflect(rs, r, a) for r in rs.roots} == rs.all_roots


@pytest.mark.parametrize("label", LABELS)
def test_positive_negative_split_and_integrality(label):
    rs = build_root_system(label)
    pos = set(rs.positive_roots)
    neg = {tuple(-x for x in r) for r in pos}
    assert pos.isdisjoint(neg) and pos | neg == rs.all_roots
    for c in rs.coefficients[: rs.n_positive]:
        assert all(isinstance(x, int) and x >= 0 for x in c)
    for a in rs.roots:
        for b in rs.roots:
            q = 2 * rs.inner(a, b) / rs.inner(b, b)
            assert q.denominator == 1


@pytest.mark.parametrize("label", LABELS)
def test_rho2_positive_on_simple_roots(label):
    rs = build_root_system(label)
    assert all(rs.inner(rs.rho2, a) > 0 for a in rs.simple_roots)


def test_normalization_long_roots_length_two():
    for label in ("A3", "D4", "E6"):
        rs = build_root_system(label)
        assert all(rs.inner(r, r) == 2 for r in rs.roots)
    rs = build_root_system("B3")
    assert max(rs.inner(r, r) for r in rs.roots) == 2


def test_inner_product_examples():
    rs = gl(3)
    a12, a23 = rs.simple_roots
    assert a12 == (1, -1, 0) and a23 == (0, 1, -1)
    assert inner_product(rs, a12, a23) == -1
    rs = build_root_system("A1xA1")
    assert inner_product(rs, *rs.simple_roots) == 0
    with pytest.raises(DimensionMismatch):
        inner_product(rs, (1, 0, 0), (1, 0))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_gl_positive_count(n):
    rs = gl(n)
    assert rs.ambient_dim == n and rs.rank == n - 1
    assert rs.n_positive == n * (n - 1) // 2
    assert {r for r in rs.positive_roots} == {
        tuple(1 if k == i else -1 if k == j else 0 for k in range(n)) for i in range(n) for j in range(i + 1, n)
    }


def test_document_specs_agree():
    a = build_root_system(("A", 2))
    b = build_root_system([[2, -1], [-1, 2]])
    assert a.cartan == b.cartan and a.all_roots == b.all_roots


@pytest.mark.parametrize("bad", [
    [[2, -1], [0, 2]],          # asymmetric zero pattern
    [[2, Fraction(1, 2)], [-1, 2]],
    [[1, -1], [-1, 2]],         # wrong diagonal
    [[2, -2], [-2, 2]],         # affine
    [[2, 1], [1, 2]],           # positive off-diagonal
])
def test_invalid_cartan(bad):
    with pytest.raises(CartanError):
        build_root_system(bad)


def test_bad_labels():
    for spec in ("H3", "B1", "E5", "A0", "D2"):
        with pytest.raises(CartanError):
            build_root_system(spec)


def test_cartan_conventions():
    # a_ij = 2(a_i, a_j)/(a_i, a_i); Bourbaki numbering
    assert cartan_matrix("B", 2)[1][0] == -2
    assert cartan_matrix("C", 2)[0][1] == -2
    assert cartan_matrix("G", 2)[0][1] == -3


def test_parabolic_examples():
    rs = build_root_system("A2")
    empty = standard_parabolic(rs, [])
    assert empty.sigma_F == frozenset() and empty.n_F == frozenset(rs.positive_roots)
    full = standard_parabolic(rs, [1, 2])
    assert full.n_F == frozenset() and full.sigma_F == rs.all_roots
    one = standard_parabolic(rs, [1])
    assert (len(one.sigma_F), len(one.n_F), one.a_F_dim) == (2, 2, 1)
    with pytest.raises(IndexError):
        standard_parabolic(rs, [3])


def test_parabolics_gl_span():
    rs = gl(4)
    data = standard_parabolics(rs)
    assert len(data) == 8
    assert all(d.a_F_dim + d.a_MF_dim == 3 for d in data)
