from fractions import Fraction
from itertools import product

import pytest

from bkcohom import cohomology, schubert
from bkcohom.cohomology import BettiTable, betti, engine_table, kostant_expected, wedge_masks
from bkcohom.extcomplex import get_complex
from bkcohom.verify import sample_points

from conftest import parabolic

GENERIC = (Fraction(3, 2), Fraction(-2, 5), Fraction(7, 3))


def gen(P):
    return GENERIC[: P.m]


def test_kostant_expected_examples():
    assert kostant_expected(parabolic("A2", (1, 2))).dims == (1,)
    assert kostant_expected(parabolic("B2")).dims == (1, 0, 2, 0, 2, 0, 2, 0, 1)
    assert kostant_expected(parabolic("G2")).total == 12
    assert kostant_expected(parabolic("A3", (1, 3))).dims == (1, 0, 1, 0, 2, 0, 1, 0, 1)


def test_betti_table_helpers():
    b = BettiTable((1, 0, 2, 0, 1))
    assert b.total == 4 and b.odd_vanishes() and b.even() == [(0, 1), (2, 2), (4, 1)]
    assert not BettiTable((1, 1)).odd_vanishes()


def test_betti_matches_kostant_at_samples(case):
    exp = kostant_expected(case)
    for t in sample_points(case):
        assert betti(case, t) == exp


def test_betti_levi_only_case():
    P = parabolic("A2", (1, 2))
    assert betti(P, ()).dims == (1,)


def test_betti_rejects_wrong_length():
    with pytest.raises(ValueError):
        betti(parabolic("A2"), (1,))


def test_wedge_masks():
    assert wedge_masks(0b01, 0b01) == (0, 0)
    assert wedge_masks(0b01, 0b10) == (0b11, 1)
    assert wedge_masks(0b10, 0b01) == (0b11, -1)
    assert wedge_masks(0, 0b101) == (0b101, 1)


def test_wedge_graded_commutativity():
    cx = get_complex(parabolic("B2"))
    a = {i: Fraction(1) for i, m in enumerate(cx.v0) if bin(m).count("1") == 1}
    b = {i: Fraction(i + 1) for i, m in enumerate(cx.v0) if bin(m).count("1") == 2}
    x = cohomology.wedge(cx, a, b)
    y = cohomology.wedge(cx, b, a)
    assert x == y


def test_unit_and_commutativity(small_case):
    P = small_case
    tab = engine_table(P, gen(P))
    e = P.rs.identity
    for v in P.min_coset_reps:
        assert tab.get((e, v, v)) == 1
        assert tab.get((v, e, v)) == 1
    for (u, v, w), c in tab.items():
        assert tab.get((v, u, w)) == c


def test_top_degree_pairing(small_case):
    P = small_case
    tab = engine_table(P, gen(P))
    top = P.top_element
    for u in P.min_coset_reps:
        assert tab.get((u, P.dual(u), top), 0) != 0


def test_engine_associative(small_case):
    P = small_case
    tab = engine_table(P, gen(P))
    idx = schubert.pair_index(tab)
    reps = P.min_coset_reps
    for a, b, c in product(reps, repeat=3):
        if a.length + b.length + c.length > P.N:
            continue
        left = schubert.table_product(idx, schubert.table_product(idx, {a: 1}, {b: 1}), {c: 1})
        right = schubert.table_product(idx, {a: 1}, schubert.table_product(idx, {b: 1}, {c: 1}))
        assert left == right


def test_ratio_law(case):
    assert cohomology.ratio_law_violations(case, gen(case)) == []
    with pytest.raises(ValueError):
        cohomology.ratio_law_violations(case, (0,) * case.m)


def test_support_matches_oracle_at_one(case):
    tab = engine_table(case, [1] * case.m)
    assert cohomology.support(tab) == frozenset(schubert.structure_constants(case).entries)


def test_cup_product_degree_mismatch_raises():
    P = parabolic("A2")
    basis = cohomology.global_basis(P, gen(P))
    with pytest.raises(cohomology.CohomologyError):
        basis.expand(1, {0: Fraction(1)})


def test_disjointness(small_case):
    for t in sample_points(small_case):
        rep = cohomology.disjointness_suite(small_case, t)
        assert rep.ok and rep.dim_ker_S == rep.expected == len(small_case.min_coset_reps)
