from fractions import Fraction

import pytest

from bkcohom import liealg
from bkcohom.liealg import DoubleElement, build_chevalley, double_bracket
from bkcohom.rootsys import build_root_system, neg

from conftest import parabolic


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4"])
def test_jacobi_exhaustive(t):
    assert build_chevalley(build_root_system(t)).jacobi_violations(limit=1) == []


def test_jacobi_f4():
    assert build_chevalley(build_root_system("F4")).jacobi_violations(limit=1) == []


@pytest.mark.parametrize("t", ["A1", "A2", "B2", "G2", "A3", "C3"])
def test_root_vector_normalization(t):
    rs = build_root_system(t)
    cb = build_chevalley(rs)
    for a in rs.positive_roots:
        assert cb.killing(cb.e(a), cb.e(neg(a))) == 1


def test_a1_bracket_is_coroot_multiple():
    rs = build_root_system("A1")
    cb = build_chevalley(rs)
    br = cb.bracket(cb.e((1,)), cb.e((-1,)))
    assert set(br) == {0}
    assert cb.killing(cb.e((1,)), cb.e((-1,))) == 1


def test_a2_simply_laced_constant():
    rs = build_root_system("A2")
    cb = build_chevalley(rs)
    raw = cb.N[((1, 0), (0, 1))]
    assert abs(raw) == 1
    assert cb.structure_constant((1, 0), (0, 1)) != 0


def test_a2_killing_on_cartan():
    # independent: kappa(h_i, h_j) = sum over all roots of <a, a_i^vee><a, a_j^vee>
    rs = build_root_system("A2")
    cb = build_chevalley(rs)
    expect = [[sum(rs.pairing(a, i) * rs.pairing(a, j) for a in rs.roots) for j in range(2)] for i in range(2)]
    assert expect == [[12, -6], [-6, 12]]
    got = [[cb.killing(cb.h(i + 1), cb.h(j + 1)) for j in range(2)] for i in range(2)]
    assert got == expect


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_killing_invariance(t):
    cb = build_chevalley(build_root_system(t))
    basis = [{k: Fraction(1)} for k in range(cb.dim)]
    for x in basis:
        for y in basis:
            xy = cb.bracket(x, y)
            for z in basis:
                assert cb.killing(xy, z) + cb.killing(y, cb.bracket(x, z)) == 0


def test_double_bracket_rules():
    rs = build_root_system("A2")
    cb = build_chevalley(rs)
    x = DoubleElement.make(cb.e((1, 0)), {})
    y = DoubleElement.make({}, cb.e((-1, 0)))
    assert double_bracket(cb, x, y).is_zero()
    a, b = cb.e((1, 0)), cb.e((0, 1))
    d = double_bracket(cb, DoubleElement.diagonal(a), DoubleElement.diagonal(b))
    assert d == DoubleElement.diagonal(cb.bracket(a, b))


def test_family_basis_special_points():
    P = parabolic("A3", (2,))
    cb = build_chevalley(P.rs)
    one = liealg.family_basis(P, (1, 1))
    for v, (kind, a) in zip(one.vectors, one.labels):
        if kind == "E":
            assert v == DoubleElement.diagonal(cb.e(a))
    zero = liealg.family_basis(P, (0, 0))
    for v, (kind, a) in zip(zero.vectors, zero.labels):
        if kind == "E" and a in P.nilradical_roots:
            assert v == DoubleElement.make({}, cb.e(a))
        if kind == "E" and P.is_levi_root(a):
            assert v == DoubleElement.diagonal(cb.e(a))


def test_verify_subalgebra_detects_failure():
    P = parabolic("A2")
    fb = liealg.family_basis(P, (2, 3))
    assert liealg.verify_subalgebra(fb)
    cb = build_chevalley(P.rs)
    broken = liealg.FamilyBasis(P, fb.t, [DoubleElement.diagonal(cb.e((1, 0))),
                                                DoubleElement.diagonal(cb.e((0, 1)))], fb.labels[:2])
    assert not liealg.verify_subalgebra(broken)


@pytest.mark.parametrize("t", [(1, 1), (0, 0), (2, Fraction(1, 3)), (0, 5), (Fraction(-3, 2), 4)])
def test_subalgebra_and_levi_containment(t):
    for P in (parabolic("A2"), parabolic("B2"), parabolic("G2")):
        fb = liealg.family_basis(P, t)
        assert liealg.verify_subalgebra(fb)
        assert liealg.contains_span(fb.vectors, liealg.levi_diagonal(P), build_chevalley(P.rs).dim)


def test_pj_decomposition(small_case):
    P = small_case
    dim = build_chevalley(P.rs).dim
    for J in P.all_J():
        fb = liealg.family_basis(P, P.p_J(J))
        assert liealg.same_span(fb.vectors, liealg.pj_decomposition(P, J), dim)


@pytest.mark.parametrize("s", [(2, 3), (Fraction(-1, 2), 5)])
def test_torus_conjugate_of_diagonal(s):
    for P in (parabolic("A2"), parabolic("B2")):
        dim = build_chevalley(P.rs).dim
        fb = liealg.family_basis(P, s)
        assert liealg.same_span(fb.vectors, liealg.torus_conjugate_diagonal(P, s), dim)


def test_gamma_s():
    P = parabolic("A2")
    assert set(liealg.gamma_s(P, (1, 1)).values()) == {1}
    g = liealg.gamma_s(P, (7, 1))
    assert g[("p", (1, 0))] == 7 and g[("p", (0, 1))] == 1 and g[("p", (1, 1))] == 7
    s, s2 = (2, 3), (Fraction(1, 5), -1)
    a, b = liealg.gamma_s(P, s), liealg.gamma_s(P, s2)
    c = liealg.gamma_s(P, (Fraction(2, 5), -3))
    assert all(a[k] * b[k] == c[k] for k in a)
    with pytest.raises(ValueError):
        liealg.gamma_s(P, (0, 1))


def test_bracket_table_json():
    import json

    d = build_chevalley(build_root_system("B2")).to_json()
    assert json.loads(json.dumps(d)) == d and d["dim"] == 10
