from fractions import Fraction
from itertools import product

import pytest

from bkcohom import rootsys
from bkcohom.rootsys import CartanType, ParabolicData, build_root_system

from conftest import parabolic


@pytest.mark.parametrize("t,n", [("A2", 3), ("G2", 6), ("B2", 4), ("A3", 6), ("C3", 9), ("D4", 12), ("F4", 24)])
def test_positive_root_counts(t, n):
    assert len(build_root_system(t).positive_roots) == n


@pytest.mark.parametrize("t,n", [("A2", 6), ("B2", 8), ("A3", 24), ("G2", 12), ("D3", 24)])
def test_weyl_group_orders(t, n):
    rs = build_root_system(t)
    W = rs.weyl_elements
    assert len(W) == n
    assert W[0].is_identity()
    assert rs.longest_element in W and rs.longest_element.length == rs.npos


@pytest.mark.parametrize("bad", ["A0", "B1", "D2", "E5", "F3", "G3", "X2", "A"])
def test_invalid_types(bad):
    with pytest.raises(rootsys.RootSystemError):
        CartanType.parse(bad)


def test_cartan_matrix_b2_g2():
    # cartan[i][j] = <alpha_j, alpha_i^vee>
    b2 = build_root_system("B2").cartan
    g2 = build_root_system("G2").cartan
    assert sorted([b2[0][1], b2[1][0]]) == [-2, -1]
    assert sorted([g2[0][1], g2[1][0]]) == [-3, -1]


def test_root_order_simple_first():
    rs = build_root_system("B3")
    assert rs.positive_roots[:3] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    heights = [sum(a) for a in rs.positive_roots]
    assert heights == sorted(heights)


def test_inversion_sets():
    rs = build_root_system("A2")
    assert rs.identity.inversion_set == frozenset()
    for i in (1, 2):
        s = rs.simple_reflection(i)
        assert s.inversion_set == {tuple(int(k == i - 1) for k in range(2))}
    assert rs.longest_element.inversion_set == set(rs.positive_roots)


def test_inversion_size_equals_length(case):
    for w in case.rs.weyl_elements:
        assert len(w.inversion_set) == w.length == len(w.word)
        assert case.rs.from_word(w.word) == w
        for a in w.inversion_set:
            assert not rootsys.is_positive(w.act(a))


def test_min_coset_reps_examples():
    assert len(parabolic("A3", (1, 3)).min_coset_reps) == 6
    assert len(parabolic("A2").min_coset_reps) == 6
    for t in ("A2", "B2", "G2"):
        P = parabolic(t, (1, 2))
        assert P.min_coset_reps == [P.rs.identity]


def test_min_coset_reps_are_minimal(case):
    P = case
    W = P.rs.weyl_elements
    WP = [w for w in W if all(i in P.I for i in w.word)]
    reps = P.min_coset_reps
    assert len(reps) * len(WP) == len(W)
    cosets = {}
    for w in W:
        key = frozenset((w * x).perm for x in WP)
        cosets.setdefault(key, []).append(w)
    for members in cosets.values():
        shortest = min(members, key=lambda w: w.length)
        assert [m for m in members if m in reps] == [shortest]


def test_dual_element(case):
    P = case
    for w in P.min_coset_reps:
        ws = P.dual(w)
        assert P.in_WP(ws)
        assert P.dual(ws) == w
        assert w.length + ws.length == P.N
    assert P.dual(P.rs.identity) == P.top_element
    assert P.top_element.length == P.N


def test_dual_in_A2():
    P = parabolic("A2")
    s1 = P.rs.simple_reflection(1)
    assert P.dual(s1) == P.rs.longest_element * s1
    assert P.dual(s1).length == 2


def test_dual_rejects_non_minimal():
    P = parabolic("A3", (2,))
    with pytest.raises(rootsys.RootSystemError):
        P.dual(P.rs.simple_reflection(2))


def test_t_alpha():
    P = parabolic("A2")
    assert P.t_alpha((1, 0)) == (1, 0)
    assert P.t_alpha(P.rs.highest_root) == (1, 1)
    Q = parabolic("A3", (2,))
    assert Q.deform_order == (1, 3)
    assert Q.t_alpha((0, 1, 0)) == (0, 0)
    assert Q.t_alpha((1, 1, 1)) == (1, 1)
    with pytest.raises(rootsys.RootSystemError):
        P.t_alpha((-1, 0))


def test_F_examples():
    P = parabolic("A2")
    assert P.F_w(P.rs.identity) == (0, 0)
    assert P.F_w(P.rs.simple_reflection(1)) == (2, 0)
    # F_{w0}: 2 * (alpha1 + alpha2 + (alpha1 + alpha2)) coefficients, from the 3 inversions
    assert P.F_w(P.rs.longest_element) == (4, 4)
    assert P.F_B([], []) == (0, 0)
    assert P.F_B([(1, 0)], [(1, 0)]) == (2, 0)
    assert P.F_B([(1, 0)], [(0, 1)]) == (1, 1)


def test_F_even_nonnegative(case):
    for w in case.min_coset_reps:
        f = case.F_w(w)
        assert all(x >= 0 and x % 2 == 0 for x in f)
        inv = w.inversion_set
        assert case.F_B(inv, inv) == f


def test_chi_eta(case):
    P = case
    for w in P.min_coset_reps:
        s = tuple(a + b for a, b in zip(P.chi_w(w), P.eta_w(w)))
        assert s == P.rho_u
        assert tuple(P.chi_w(w)) == tuple(P.w0P.act(P.eta_w(P.dual(w))))
    assert P.chi_w(P.rs.identity) == P.rho_u
    assert not any(P.eta_w(P.rs.identity))


def test_z_rho_examples():
    P = parabolic("A2")
    z = P.z_rho(())
    assert [P.weight_on_coroot_vector((1, 0), z), P.weight_on_coroot_vector((0, 1), z)] == [1, 1]
    assert not any(P.z_rho((1, 2)))
    Q = parabolic("A3", (2,))
    z = Q.z_rho((1,))
    vals = [Q.weight_on_coroot_vector(tuple(int(k == i) for k in range(3)), z) for i in range(3)]
    assert vals == [0, 0, 1]


def test_z_rho_defining_property(case):
    P = case
    n = P.rs.rank
    for J in P.all_J():
        z = P.z_rho(J)
        for i in range(1, n + 1):
            a = tuple(int(k == i - 1) for k in range(n))
            expect = 0 if (i in P.I or i in J) else 1
            assert P.weight_on_coroot_vector(a, z) == expect


def test_p_J_and_check_J():
    P = parabolic("A3", (2,))
    assert P.p_J(()) == (0, 0)
    assert P.p_J((3,)) == (0, 1)
    with pytest.raises(rootsys.RootSystemError):
        P.p_J((2,))


def test_evaluate_monomial_conventions():
    assert rootsys.evaluate_monomial((0, 2), (Fraction(0), Fraction(3))) == 9
    assert rootsys.evaluate_monomial((1, 0), (Fraction(0), Fraction(3))) == 0
    with pytest.raises(ZeroDivisionError):
        rootsys.evaluate_monomial((-1,), (Fraction(0),))


def test_weyl_size_guard(monkeypatch):
    monkeypatch.setattr(rootsys, "WEYL_SIZE_LIMIT", 10)
    rs = rootsys.RootSystem(CartanType.parse("A3"))
    with pytest.raises(rootsys.RootSystemError):
        rs.weyl_elements


def test_json_roundtrip():
    import json

    d = rootsys.root_system_to_json(build_root_system("B2"))
    assert json.loads(json.dumps(d)) == d
    assert len(d["weyl_group"]) == 8 and len(d["positive_roots"]) == 4
