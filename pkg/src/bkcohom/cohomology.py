"""Cohomology of (C(r), d_t): Betti numbers, classes of G_w(t), cup products.

Products are computed by wedging representatives inside Lambda r (both factors
are L-invariant, so the result is too) and reducing modulo im(d_t) against the
classes [G_w(t)] of the global basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import exactla
from .exactla import SparseMatrix
from .extcomplex import RComplex, get_complex, sort_sign, mask_to_slots
from .harmonic import get_engine
from .rootsys import ParabolicData, WeylElement, exps_sub, evaluate_monomial


class CohomologyError(RuntimeError):
    pass


def _frac_point(P: ParabolicData, t: Sequence) -> tuple[Fraction, ...]:
    t = tuple(Fraction(x) for x in t)
    if len(t) != P.m:
        raise ValueError(f"parameter has length {len(t)}, expected {P.m}")
    return t


# ---------------------------------------------------------------------------
# Betti numbers

@dataclass(frozen=True)
class BettiTable:
    dims: tuple[int, ...]  # dims[i] = dim H^i, i = 0..2N

    @property
    def total(self) -> int:
        return sum(self.dims)

    def even(self) -> list[tuple[int, int]]:
        return [(i, d) for i, d in enumerate(self.dims) if i % 2 == 0]

    def odd_vanishes(self) -> bool:
        return all(d == 0 for i, d in enumerate(self.dims) if i % 2)


def kostant_expected(P: ParabolicData) -> BettiTable:
    dims = [0] * (2 * P.N + 1)
    for w in P.min_coset_reps:
        dims[2 * w.length] += 1
    return BettiTable(tuple(dims))


def d_ranks(P: ParabolicData, t: Sequence) -> list[int]:
    """rank of d_t: C^k -> C^{k+1} for every k."""
    cx = get_complex(P)
    d = cx.d_family.evaluate(_frac_point(P, t))
    return [exactla.rank(d[k]) if d[k].nrows else 0 for k in cx.degrees()]


def betti(P: ParabolicData, t: Sequence) -> BettiTable:
    cx = get_complex(P)
    r = d_ranks(P, t)
    dims = []
    for k in cx.degrees():
        rin = r[k - 1] if k > 0 else 0
        dims.append(cx.dim(k) - r[k] - rin)
    return BettiTable(tuple(dims))


# ---------------------------------------------------------------------------
# wedge product on V0 vectors

def wedge_masks(m1: int, m2: int) -> tuple[int, int]:
    """e_{m1} ^ e_{m2} = sign * e_{m1|m2}; sign 0 when the monomials overlap."""
    if m1 & m2:
        return 0, 0
    return m1 | m2, sort_sign(mask_to_slots(m1) + mask_to_slots(m2))


def wedge(cx: RComplex, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Wedge of two V0-vectors (keys are V0 indices)."""
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        m1 = cx.v0[i]
        for j, b in y.items():
            m, s = wedge_masks(m1, cx.v0[j])
            if s:
                k = cx.v0_index[m]
                out[k] = out.get(k, 0) + s * a * b
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# global basis at a point and products

@dataclass
class CohomologyBasis:
    P: ParabolicData
    t: tuple
    reps: dict  # w -> coordinates of G_w(t) over C^{2l(w)}
    image: dict  # k -> basis of im(d_t) in C^k
    solvers: dict = field(default_factory=dict)  # k -> (ColumnSolver, [w...])

    def classes_in_degree(self, k: int) -> list[WeylElement]:
        return [w for w in self.P.min_coset_reps if 2 * w.length == k]

    def solver(self, k: int):
        s = self.solvers.get(k)
        if s is None:
            ws = self.classes_in_degree(k)
            cols = [self.reps[w] for w in ws] + list(self.image[k])
            dim = get_complex(self.P).dim(k)
            try:
                solver = exactla.ColumnSolver(cols, dim)
            except ValueError as exc:
                raise CohomologyError(f"classes in degree {k} are dependent modulo coboundaries") from exc
            s = self.solvers[k] = (solver, ws)
        return s

    def expand(self, k: int, vec: Mapping[int, Fraction]) -> dict[WeylElement, Fraction]:
        """Coefficients of the class of a d_t-closed vector in C^k."""
        if k % 2 or k > 2 * self.P.N:
            if vec:
                raise CohomologyError(f"nonzero vector in degree {k} without classes")
            return {}
        solver, ws = self.solver(k)
        sol = solver.solve(vec)
        if sol is None:
            raise CohomologyError("vector is not closed: no expansion modulo coboundaries")
        return {w: c for w, c in zip(ws, sol) if c}


def image_bases(P: ParabolicData, t: Sequence) -> dict[int, list[dict]]:
    cx = get_complex(P)
    d = cx.d_family.evaluate(_frac_point(P, t))
    out = {0: []}
    for k in cx.degrees():
        if k + 1 <= cx.nslots:
            out[k + 1] = exactla.column_space_basis(d[k]) if d[k].nrows else []
    return out


def global_basis(P: ParabolicData, t: Sequence) -> CohomologyBasis:
    """Classes [G_w(t)], checked closed and independent modulo im(d_t)."""
    t = _frac_point(P, t)
    cx = get_complex(P)
    eng = get_engine(P)
    d = cx.d_family.evaluate(t)
    reps = {}
    for w in P.min_coset_reps:
        g = eng.sections[w].evaluate(t)
        k = 2 * w.length
        if k < cx.nslots and d[k].apply(g):
            raise CohomologyError(f"G_w(t) is not d_t-closed for {w!r}")
        reps[w] = g
    basis = CohomologyBasis(P, t, reps, image_bases(P, t))
    for k in range(0, 2 * P.N + 1, 2):
        basis.solver(k)  # raises on dependence
    return basis


def cup_product(basis: CohomologyBasis, x: Mapping[int, Fraction], kx: int,
                y: Mapping[int, Fraction], ky: int) -> dict[WeylElement, Fraction]:
    """Class of x ^ y for closed x in C^kx, y in C^ky, over the basis [G_w(t)]."""
    cx = get_complex(basis.P)
    prod = wedge(cx, cx.expand(kx, x), cx.expand(ky, y))
    k = kx + ky
    if not prod:
        return {}
    return basis.expand(k, cx.coords(k, prod))


def product_table(basis: CohomologyBasis) -> dict[tuple, Fraction]:
    """C-hat_{uv}^w(t): coefficient of [G_w(t)] in [G_u(t)] [G_v(t)]."""
    P = basis.P
    out = {}
    reps = P.min_coset_reps
    for u in reps:
        for v in reps:
            if u.length + v.length > P.N:
                continue
            coeffs = cup_product(basis, basis.reps[u], 2 * u.length, basis.reps[v], 2 * v.length)
            for w, c in coeffs.items():
                out[(u, v, w)] = c
    return out


@lru_cache(maxsize=None)
def _cached_table(P: ParabolicData, t: tuple) -> tuple:
    return tuple(product_table(global_basis(P, t)).items())


def engine_table(P: ParabolicData, t: Sequence) -> dict[tuple, Fraction]:
    return dict(_cached_table(P, _frac_point(P, t)))


def ratio_law_violations(P: ParabolicData, t: Sequence) -> list[tuple]:
    """Triples where C(t) F_u(t) F_v(t) != C(1) F_w(t); t must have no zero coordinate."""
    t = _frac_point(P, t)
    if any(x == 0 for x in t):
        raise ValueError("ratio law needs nonzero coordinates")
    ct = engine_table(P, t)
    c1 = engine_table(P, [1] * P.m)
    bad = []
    reps = P.min_coset_reps
    for u in reps:
        for v in reps:
            for w in reps:
                if u.length + v.length != w.length:
                    continue
                a = ct.get((u, v, w), Fraction(0))
                b = c1.get((u, v, w), Fraction(0))
                fu = evaluate_monomial(P.F_w(u), t)
                fv = evaluate_monomial(P.F_w(v), t)
                fw = evaluate_monomial(P.F_w(w), t)
                if a * fu * fv != b * fw:
                    bad.append((u, v, w))
    return bad


def support(table: Mapping[tuple, Fraction]) -> frozenset:
    return frozenset(k for k, v in table.items() if v)


# ---------------------------------------------------------------------------
# disjointness of d_t and the boundary

@dataclass
class DisjointnessReport:
    t: tuple
    checks: dict  # name -> bool
    dim_ker_S: int
    expected: int

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _kernel(m: SparseMatrix, ncols: int) -> list[dict]:
    if m.nrows == 0:
        return [{j: Fraction(1)} for j in range(ncols)]
    return exactla.kernel_basis(m)


def disjointness_suite(P: ParabolicData, t: Sequence) -> DisjointnessReport:
    t = _frac_point(P, t)
    cx = get_complex(P)
    d = cx.d_family.evaluate(t)
    bd = cx.boundary_matrices
    top = cx.nslots
    checks = {
        "im_d_meets_ker_boundary_trivially": True,
        "im_boundary_meets_ker_d_trivially": True,
        "ker_S_equals_ker_d_cap_ker_boundary": True,
        "dim_ker_S_equals_W_P": True,
        "ker_S_inside_ker_d_and_ker_boundary": True,
        "ker_S_projections_are_isomorphisms": True,
    }
    total = 0
    for k in cx.degrees():
        n = cx.dim(k)
        d_in = d[k - 1] if k > 0 else SparseMatrix(n, 0)
        d_out = d[k] if k < top else SparseMatrix(0, n)
        b_out = bd[k] if k > 0 else SparseMatrix(0, n)
        b_in = bd[k + 1] if k < top else SparseMatrix(n, 0)
        S = SparseMatrix(n, n)
        if k > 0:
            S = S + d[k - 1] @ bd[k]
        if k < top:
            S = S + bd[k + 1] @ d[k]
        im_d = exactla.column_space_basis(d_in) if d_in.ncols else []
        im_b = exactla.column_space_basis(b_in) if b_in.ncols else []
        ker_d = _kernel(d_out, n)
        ker_b = _kernel(b_out, n)
        ker_S = _kernel(S, n)
        total += len(ker_S)
        if exactla.intersection_dimension(im_d, ker_b, n):
            checks["im_d_meets_ker_boundary_trivially"] = False
        if exactla.intersection_dimension(im_b, ker_d, n):
            checks["im_boundary_meets_ker_d_trivially"] = False
        both = exactla.intersection_dimension(ker_d, ker_b, n)
        inside = all(not d_out.apply(v) and not b_out.apply(v) for v in ker_S)
        if not inside:
            checks["ker_S_inside_ker_d_and_ker_boundary"] = False
        if not inside or both != len(ker_S):
            checks["ker_S_equals_ker_d_cap_ker_boundary"] = False
        # ker S -> H(d_t) and -> H(boundary): injective and onto by dimension count
        h_d = len(ker_d) - len(im_d)
        h_b = len(ker_b) - len(im_b)
        inj_d = exactla.span_dimension(list(ker_S) + im_d, n) == len(ker_S) + len(im_d)
        inj_b = exactla.span_dimension(list(ker_S) + im_b, n) == len(ker_S) + len(im_b)
        if not (inj_d and inj_b and h_d == len(ker_S) == h_b):
            checks["ker_S_projections_are_isomorphisms"] = False
    expected = len(P.min_coset_reps)
    if total != expected:
        checks["dim_ker_S_equals_W_P"] = False
    return DisjointnessReport(t, checks, total, expected)
