"""The deformed products: coefficients c_{uv}^w t^{F_w - F_u - F_v} and their tau form.

A product is stored as (integer constant, exponent vector); evaluating at a
parameter, including one with zero coordinates, is exact with 0^0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Sequence

from . import cohomology
from .rootsys import ParabolicData, WeylElement, evaluate_monomial, exps_sub
from .schubert import StructureTable, pair_index, structure_constants, table_product


class RegularityError(RuntimeError):
    pass


@dataclass(frozen=True)
class BKCoefficient:
    u: WeylElement
    v: WeylElement
    w: WeylElement
    c: Fraction
    ratio: tuple[int, ...]  # exponents of F_w / (F_u F_v) in t

    @property
    def tau_ratio(self) -> tuple[int, ...]:
        """Exponents in tau = t^2."""
        if any(x % 2 for x in self.ratio):
            raise ValueError("odd exponent in an F-ratio")
        return tuple(x // 2 for x in self.ratio)


def bk_coefficient(u: WeylElement, v: WeylElement, w: WeylElement, P: ParabolicData,
                   table: StructureTable | None = None) -> BKCoefficient:
    for x in (u, v, w):
        if not P.in_WP(x):
            raise ValueError(f"{x!r} is not in W^P")
    if u.length + v.length != w.length:
        raise ValueError("lengths do not add up")
    table = table or structure_constants(P)
    c = table.get(u, v, w)
    ratio = exps_sub(P.F_w(w), exps_add2(P.F_w(u), P.F_w(v)))
    if c and any(x < 0 for x in ratio):
        raise RegularityError(f"negative exponent for a nonzero constant at {(u, v, w)!r}")
    return BKCoefficient(u, v, w, c, ratio)


def exps_add2(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def all_coefficients(P: ParabolicData) -> list[BKCoefficient]:
    table = structure_constants(P)
    reps = P.min_coset_reps
    out = []
    for u, v, w in product(reps, repeat=3):
        if u.length + v.length == w.length:
            out.append(bk_coefficient(u, v, w, P, table))
    return out


def regularity_violations(P: ParabolicData) -> list[tuple]:
    """Triples with c != 0 whose F-ratio has a negative entry (checked without raising)."""
    table = structure_constants(P)
    bad = []
    reps = P.min_coset_reps
    for u, v, w in product(reps, repeat=3):
        if u.length + v.length == w.length and table.get(u, v, w):
            ratio = exps_sub(P.F_w(w), exps_add2(P.F_w(u), P.F_w(v)))
            if any(x < 0 for x in ratio):
                bad.append((u, v, w))
    return bad


@dataclass
class BKTable:
    P: ParabolicData
    tau: tuple
    indexing: str  # "epsilon" or "lambda"
    entries: dict = field(default_factory=dict)  # (u, v, w) -> Fraction, nonzero only

    @cached_property
    def pairs(self) -> dict:
        return pair_index(self.entries)

    def product(self, x: dict, y: dict) -> dict:
        return table_product(self.pairs, x, y)

    def is_associative(self) -> bool:
        reps = self.P.min_coset_reps
        for a, b, c in product(reps, repeat=3):
            left = self.product(self.product({a: 1}, {b: 1}), {c: 1})
            right = self.product({a: 1}, self.product({b: 1}, {c: 1}))
            if left != right:
                return False
        return True

    def is_commutative(self) -> bool:
        return all(self.entries.get((v, u, w)) == c for (u, v, w), c in self.entries.items())


def _tau_point(P: ParabolicData, tau: Sequence) -> tuple[Fraction, ...]:
    tau = tuple(Fraction(x) for x in tau)
    if len(tau) != P.m:
        raise ValueError(f"tau has length {len(tau)}, expected {P.m}")
    return tau


def bk_table(P: ParabolicData, tau: Sequence, indexing: str = "epsilon") -> BKTable:
    """Structure constants of the product at tau.

    epsilon: eps_u . eps_v = sum c_{uv}^w tau^{(F_w - F_u - F_v)/2} eps_w.
    lambda:  Lambda_u . Lambda_v = sum d_{uv}^w tau^{(chi_w - chi_u - chi_v)} Lambda_w,
             with d_{uv}^w = c_{u*v*}^{w*} and chi read on the deformation roots.
    """
    tau = _tau_point(P, tau)
    out = {}
    if indexing == "epsilon":
        for bc in all_coefficients(P):
            if bc.c:
                val = bc.c * evaluate_monomial(bc.tau_ratio, tau)
                if val:
                    out[(bc.u, bc.v, bc.w)] = val
    elif indexing == "lambda":
        table = structure_constants(P)
        d = P.dual
        reps = P.min_coset_reps
        for u, v, w in product(reps, repeat=3):
            if u.length + v.length != w.length + P.N:
                continue
            c = table.get(d(u), d(v), d(w))
            if not c:
                continue
            cu, cv, cw = (P.deform_coords(P.chi_w(x)) for x in (u, v, w))
            e = tuple(z - x - y for x, y, z in zip(cu, cv, cw))
            val = c * evaluate_monomial(e, tau)
            if val:
                out[(u, v, w)] = val
    else:
        raise ValueError(f"unknown indexing {indexing!r}")
    return BKTable(P, tau, indexing, out)


def tables_agree_under_duality(P: ParabolicData, tau: Sequence) -> bool:
    """The epsilon table equals the lambda table after w -> w*."""
    eps = bk_table(P, tau, "epsilon")
    lam = bk_table(P, tau, "lambda")
    d = P.dual
    return {(d(u), d(v), d(w)): c for (u, v, w), c in eps.entries.items()} == lam.entries


def verify_exponent_identity(P: ParabolicData) -> dict:
    """2 chi_w = F_{w*} on the deformation coordinates, and chi_w = w0P(eta_{w*})."""
    bad_F, bad_chi = [], []
    for w in P.min_coset_reps:
        ws = P.dual(w)
        lhs = tuple(2 * x for x in P.deform_coords(P.chi_w(w)))
        if lhs != P.F_w(ws):
            bad_F.append(w)
        if tuple(P.chi_w(w)) != tuple(P.w0P.act(P.eta_w(ws))):
            bad_chi.append(w)
    return {"ok": not bad_F and not bad_chi, "F_mismatches": bad_F, "chi_mismatches": bad_chi,
            "checked": len(P.min_coset_reps)}


@dataclass
class CrossValidation:
    t: tuple
    support_equal: bool
    ratio_law: bool | None  # None at points with zero coordinates
    mismatches: list

    @property
    def ok(self) -> bool:
        return self.support_equal and self.ratio_law is not False


def cross_validate(P: ParabolicData, t: Sequence) -> CrossValidation:
    """Engine table at t against the formula table at tau = t^2."""
    t = tuple(Fraction(x) for x in t)
    eng = cohomology.engine_table(P, t)
    formula = bk_table(P, [x * x for x in t], "epsilon")
    se = cohomology.support(eng)
    sf = frozenset(formula.entries)
    ratio = None
    if all(x != 0 for x in t):
        ratio = not cohomology.ratio_law_violations(P, t)
    return CrossValidation(t, se == sf, ratio, sorted(se ^ sf, key=repr))
