"""Numerical Levi-movability criterion and its comparison with the tau_K product.

A tuple (w_1, ..., w_s) of W^P elements with sum of Lambda-codimensions dim G/P
is L_K-movable (K = I u J) iff the classical product Lambda_{w_1} ... Lambda_{w_s}
is a nonzero multiple of the point class and (sum chi_{w_j} - chi_1)(z) = 0
for every z in the center of l_K; equivalently for z = z_rho alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from . import bkproduct
from .rootsys import ParabolicData, WeylElement
from .schubert import relabeled_constants


class MovabilityError(ValueError):
    pass


@dataclass(frozen=True)
class MovabilityCertificate:
    tuple_: tuple
    J: frozenset
    decision: bool
    classical_nonvanishing: bool
    top_coefficient: Fraction
    chi_defect: tuple  # (sum chi - chi_1)(x_i) for i not in K
    rho_value: Fraction  # (sum chi - chi_1)(z_rho)
    rho_decision: bool

    @property
    def conditions_agree(self) -> bool:
        return self.decision == self.rho_decision


def codim(P: ParabolicData, w: WeylElement) -> int:
    """Codimension of Lambda_w (the class of the cell closure of dimension l(w))."""
    return P.N - w.length


def center_basis_indices(P: ParabolicData, J: Iterable[int]) -> list[int]:
    """Center of l_K is spanned by the fundamental coweights x_i, i not in K."""
    K = set(P.I) | set(P.check_J(J))
    return [i for i in range(1, P.rs.rank + 1) if i not in K]


def lambda_product(P: ParabolicData, ws: Sequence[WeylElement]) -> dict:
    """Classical product Lambda_{w_1} ... Lambda_{w_s} by iterated table products."""
    d = relabeled_constants(P)
    # the unit of the Lambda basis is Lambda_top
    cur = {P.top_element: Fraction(1)}
    for w in ws:
        cur = d.product(cur, {w: Fraction(1)})
    return cur


def levi_movable(P: ParabolicData, ws: Sequence[WeylElement], J: Iterable[int]) -> MovabilityCertificate:
    J = P.check_J(J)
    ws = tuple(ws)
    for w in ws:
        if not P.in_WP(w):
            raise MovabilityError(f"{w!r} is not in W^P")
    if sum(codim(P, w) for w in ws) != P.N:
        raise MovabilityError("codimension condition fails")
    prod_ = lambda_product(P, ws)
    top = prod_.get(P.rs.identity, Fraction(0))
    classical = top != 0
    total = [0] * P.rs.rank
    for w in ws:
        for i, x in enumerate(P.chi_w(w)):
            total[i] += x
    defect_weight = [a - b for a, b in zip(total, P.chi_w(P.rs.identity))]
    idx = center_basis_indices(P, J)
    chi_defect = tuple(Fraction(defect_weight[i - 1]) for i in idx)
    z = P.z_rho(J)
    rho_value = P.weight_on_coroot_vector(defect_weight, z)
    decision = classical and not any(chi_defect)
    rho_decision = classical and rho_value == 0
    cert = MovabilityCertificate(ws, J, decision, classical, top, chi_defect, rho_value, rho_decision)
    if not cert.conditions_agree:
        raise MovabilityError(f"full-center and z_rho tests disagree on {ws!r}, J={sorted(J)}")
    return cert


@dataclass
class CorollaryReport:
    J: frozenset
    checked: int
    mismatches: list
    movable: int
    classical: int

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check_corollary(P: ParabolicData, J: Iterable[int]) -> CorollaryReport:
    """Lambda_u (.)_{tau_K} Lambda_v has a nonzero Lambda_w term iff (u, v, w*) is L_K-movable."""
    J = P.check_J(J)
    tau = P.p_J(J)  # p_J^2 = p_J
    table = bkproduct.bk_table(P, tau, "lambda")
    reps = P.min_coset_reps
    mism, n, nmov, ncl = [], 0, 0, 0
    for u, v, w in product(reps, repeat=3):
        if u.length + v.length != P.N + w.length:
            continue
        n += 1
        lhs = bool(table.entries.get((u, v, w)))
        cert = levi_movable(P, (u, v, P.dual(w)), J)
        nmov += cert.decision
        ncl += cert.classical_nonvanishing
        if lhs != cert.decision:
            mism.append((u, v, w))
    return CorollaryReport(J, n, mism, nmov, ncl)


def monotonicity_violations(P: ParabolicData) -> list:
    """(tuple, J, J') with J <= J' where movable for J but not for J'."""
    reps = P.min_coset_reps
    Js = P.all_J()
    bad = []
    for u, v, w in product(reps, repeat=3):
        if codim(P, u) + codim(P, v) + codim(P, w) != P.N:
            continue
        dec = {J: levi_movable(P, (u, v, w), J).decision for J in Js}
        for J1, J2 in combinations(Js, 2):
            for a, b in ((J1, J2), (J2, J1)):
                if a <= b and dec[a] and not dec[b]:
                    bad.append(((u, v, w), a, b))
    return bad
