from fractions import Fraction
from itertools import product

import pytest

from bkcohom import levi
from bkcohom.levi import MovabilityError, codim, cross_check_corollary, levi_movable

from conftest import parabolic


def test_codim():
    P = parabolic("A2")
    assert codim(P, P.rs.identity) == 3 and codim(P, P.rs.longest_element) == 0


def test_unit_tuple_is_movable():
    # (top, top, e): Lambda_top is the unit, Lambda_e the point class
    for P in (parabolic("A2"), parabolic("B2"), parabolic("A3", (2,))):
        top, e = P.top_element, P.rs.identity
        for J in P.all_J():
            cert = levi_movable(P, (top, top, e), J)
            assert cert.decision and cert.top_coefficient == 1 and not any(cert.chi_defect)


def test_lambda_product_pairing():
    P = parabolic("B2")
    for w in P.min_coset_reps:
        assert levi.lambda_product(P, (w, P.dual(w))) == {P.rs.identity: 1}


def test_full_J_reduces_to_classical(small_case):
    P = small_case
    J = frozenset(P.deform_order)
    assert levi.center_basis_indices(P, J) == []
    rep = cross_check_corollary(P, J)
    assert rep.ok and rep.movable == rep.classical


def test_strict_degeneration_a2():
    # DERIVED: frozen counts for J = empty
    rep = cross_check_corollary(parabolic("A2"), ())
    assert (rep.checked, rep.classical, rep.movable) == (35, 21, 15)
    assert rep.ok


def test_grassmannian_everything_movable():
    rep = cross_check_corollary(parabolic("A3", (1, 3)), ())
    assert rep.ok and rep.classical == rep.movable == 21


def test_corollary_all_J(small_case):
    for J in small_case.all_J():
        assert cross_check_corollary(small_case, J).ok


def test_rho_and_full_center_agree():
    P = parabolic("A3")
    reps = P.min_coset_reps
    for J in [(), (2,), (1, 3)]:
        for u, v, w in product(reps, repeat=3):
            if codim(P, u) + codim(P, v) + codim(P, w) == P.N:
                assert levi_movable(P, (u, v, w), J).conditions_agree


def test_monotonicity(case):
    assert levi.monotonicity_violations(case) == []


def test_argument_checks():
    P = parabolic("A3", (2,))
    rs = P.rs
    with pytest.raises(MovabilityError):
        levi_movable(P, (rs.simple_reflection(2),) * 3, ())
    with pytest.raises(MovabilityError):
        levi_movable(P, (P.top_element, P.top_element, P.top_element), ())
    with pytest.raises(Exception):
        levi_movable(P, (P.top_element, P.top_element, rs.identity), (2,))


def test_certificate_fields():
    P = parabolic("A2")
    x = P.rs.from_word((1, 2))
    cert = levi_movable(P, (x, x, P.rs.from_word((2, 1))), ())
    assert isinstance(cert.rho_value, Fraction)
    assert len(cert.chi_defect) == len(levi.center_basis_indices(P, ()))
    assert cert.conditions_agree
