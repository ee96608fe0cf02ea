"""Hodge-theoretic operators on C(r) and the global Schubert classes G_w(t).

All matrices act on coordinates over the invariant basis of ``RComplex``.
Every basis vector is homogeneous for (bidegree, Gamma-weight), so Gamma_s
acts diagonally and G_w(t) is obtained from s_w coordinate by coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import exactla
from .exactla import SparseMatrix
from .extcomplex import RComplex, apply_derivation, get_complex
from .rootsys import ParabolicData, WeylElement, evaluate_monomial, exps_sub, neg


class HarmonicError(RuntimeError):
    pass


def _mat_vec(m: SparseMatrix, v: dict) -> dict:
    return m.apply(v)


def green_operator(block: SparseMatrix) -> SparseMatrix:
    """Green's operator of a diagonalizable square block: inverse on the image, zero on the kernel."""
    n = block.nrows
    ker = exactla.kernel_basis(block)
    im = exactla.column_space_basis(block)
    if len(ker) + len(im) != n:
        raise HarmonicError("block is not square-consistent")
    q = SparseMatrix.from_columns(n, im + ker)
    qinv = exactla.inverse(q)  # raises if image and kernel are not complementary
    # block acts on the image part of the new basis by A = (qinv block q)[:r, :r]
    conj = qinv @ block @ q
    r = len(im)
    a = conj.submatrix(list(range(r)), list(range(r)))
    ainv = exactla.inverse(a) if r else SparseMatrix(0, 0)
    big = SparseMatrix(n, n, {i: {j + 0: x for j, x in row.items()} for i, row in ainv.rows.items()})
    return q @ big @ qinv


@dataclass
class HarmonicPackage:
    cx: RComplex
    laplacian: dict  # k -> SparseMatrix on C^k
    green: dict
    E_op: dict
    R_op: dict
    nilpotency_index: int
    scalar_blocks: bool  # L_r scalar on every H x H weight block of the monomial basis
    diagonal_green: bool  # L_0 diagonal in the invariant basis
    E_matches_S_difference: bool  # E equals S_0 - S_1 on C

    def R_power_apply(self, k: int, v: dict) -> list[dict]:
        """[v, Rv, R^2 v, ...] until zero."""
        out = [v]
        cur = v
        while True:
            cur = self.R_op[k].apply(cur)
            if not cur:
                return out
            out.append(cur)
            if len(out) > 4 * self.cx.nslots + 4:
                raise HarmonicError("R is not nilpotent")


def _block_indices(cx: RComplex, k: int) -> dict[tuple, list[int]]:
    out: dict[tuple, list[int]] = {}
    for j in range(cx.dim(k)):
        out.setdefault((cx.basis_bideg[k][j], cx.basis_z[k][j]), []).append(j)
    return out


def laplacian_matrices(cx: RComplex) -> dict[int, SparseMatrix]:
    bd = cx.boundary_matrices
    adj = cx.adjoint_boundary_matrices
    out = {}
    for k in cx.degrees():
        n = cx.dim(k)
        m = SparseMatrix(n, n)
        if k > 0:
            m = m + adj[k - 1] @ bd[k]
        if k < cx.nslots:
            m = m + bd[k + 1] @ adj[k]
        out[k] = m
    return out


def build_harmonic(P: ParabolicData) -> HarmonicPackage:
    cx = get_complex(P)
    lap = laplacian_matrices(cx)
    green = {}
    diag_green = True
    for k in cx.degrees():
        n = cx.dim(k)
        g = SparseMatrix(n, n)
        for _, idx in sorted(_block_indices(cx, k).items()):
            blk = lap[k].submatrix(idx, idx)
            # nothing may leak between (bidegree, Gamma-weight) blocks
            gb = green_operator(blk)
            for i, row in gb.rows.items():
                for j, x in row.items():
                    g.rows.setdefault(idx[i], {})[idx[j]] = x
                    if i != j:
                        diag_green = False
        green[k] = g
    for k in cx.degrees():
        outside = lap[k] - _block_restrict(lap[k], _block_indices(cx, k))
        if not outside.is_zero():
            raise HarmonicError("Laplacian mixes (bidegree, Gamma-weight) blocks")
    scalar = laplacian_scalar_on_weight_blocks(cx)
    if not P.I and not scalar:
        raise HarmonicError("Laplacian is not scalar on an H x H weight block")
    E = cx.E_matrices
    R = {k: (green[k] @ E[k]).scale(-1) for k in cx.degrees()}
    # nilpotency index: smallest p with R^p = 0 on all degrees
    idx = 0
    for k in cx.degrees():
        n = cx.dim(k)
        p = 0
        cur = SparseMatrix.identity(n)
        while not cur.is_zero():
            cur = R[k] @ cur
            p += 1
            if p > 4 * cx.nslots + 4:
                raise HarmonicError("R is not nilpotent")
        idx = max(idx, p)
    # compare E with S_0 - S_1 = (d_0 - d_1) d + d (d_0 - d_1)
    s_diff = _S_matrices(cx, [Fraction(0)] * P.m)
    s_one = _S_matrices(cx, [Fraction(1)] * P.m)
    match = all((s_diff[k] - s_one[k]) == E[k] for k in cx.degrees())
    return HarmonicPackage(cx, lap, green, E, R, idx, scalar, diag_green, match)


def _block_restrict(m: SparseMatrix, blocks: dict) -> SparseMatrix:
    keep = {}
    for idx in blocks.values():
        s = set(idx)
        for i in idx:
            row = m.rows.get(i)
            if row:
                r = {j: x for j, x in row.items() if j in s}
                if r:
                    keep[i] = r
    return SparseMatrix(m.nrows, m.ncols, keep)


def _S_matrices(cx: RComplex, t: Sequence[Fraction]) -> dict[int, SparseMatrix]:
    d = cx.d_family.evaluate(t)
    bd = cx.boundary_matrices
    out = {}
    for k in cx.degrees():
        n = cx.dim(k)
        m = SparseMatrix(n, n)
        if k > 0:
            m = m + d[k - 1] @ bd[k]
        if k < cx.nslots:
            m = m + bd[k + 1] @ d[k]
        out[k] = m
    return out


def S_matrices(P: ParabolicData, t: Sequence) -> dict[int, SparseMatrix]:
    return _S_matrices(get_complex(P), [Fraction(x) for x in t])


def laplacian_scalar_on_weight_blocks(cx: RComplex) -> bool:
    """L_r on the full weight-zero monomial span, tested for being scalar on H x H weight spaces."""
    groups: dict[tuple, list[int]] = {}
    for m in cx.v0:
        groups.setdefault((cx.bidegree(m), cx.hh_weight(m)), []).append(m)
    for masks in groups.values():
        scal = None
        members = set(masks)
        for m in masks:
            img: dict[int, Fraction] = {}
            for m1, c1 in cx.boundary_on_mask(m).items():
                for m2, c2 in cx.adjoint_boundary_on_mask(m1).items():
                    img[m2] = img.get(m2, 0) + c1 * c2
            for m1, c1 in cx.adjoint_boundary_on_mask(m).items():
                for m2, c2 in cx.boundary_on_mask(m1).items():
                    img[m2] = img.get(m2, 0) + c1 * c2
            img = {k: v for k, v in img.items() if v}
            if any(k != m for k in img):
                return False
            v = img.get(m, Fraction(0))
            if scal is None:
                scal = v
            elif v != scal:
                return False
    return True


# ---------------------------------------------------------------------------
# Kostant classes

@dataclass
class KostantClass:
    w: WeylElement
    degree: int
    coords: dict  # over the C^degree basis
    scalar_convention: str = "first nonzero coordinate in canonical monomial order is 1"


def _levi_closure(cx: RComplex, start: int, actions: list[dict]) -> list[dict[int, Fraction]]:
    """Span of U(l) applied to a monomial, as an echelon basis of weight vectors."""
    basis: list[dict[int, Fraction]] = []
    queue = [{start: Fraction(1)}]
    seen_rank = 0
    while queue:
        v = queue.pop()
        trial = basis + [v]
        dimv = exactla.span_dimension(trial, 1 << cx.nslots) if False else _span_dim_masks(trial)
        if dimv == seen_rank:
            continue
        basis.append(v)
        seen_rank = dimv
        for act in actions:
            img: dict[int, Fraction] = {}
            for m, c in v.items():
                for m2, c2 in apply_derivation(m, act).items():
                    img[m2] = img.get(m2, 0) + c * c2
            img = {k: x for k, x in img.items() if x}
            if img:
                queue.append(img)
    return basis


def _span_dim_masks(vecs: list[dict[int, Fraction]]) -> int:
    keys = sorted({m for v in vecs for m in v})
    pos = {m: i for i, m in enumerate(keys)}
    return exactla.span_dimension([{pos[m]: x for m, x in v.items()} for v in vecs], len(keys))


def kostant_class(P: ParabolicData, w: WeylElement) -> KostantClass:
    """The L-invariant line in U(l)e''(w) (x) U(l)e'(w).

    It is checked to be one-dimensional, of Gamma-weight F_w and d_0-closed.
    """
    if not P.in_WP(w):
        raise HarmonicError(f"{w!r} is not in W^P")
    cx = get_complex(P)
    inv = w.inversion_set
    l = w.length
    k = 2 * l
    target = cx.mask_of(inv, inv)
    low_mask = target & ((1 << cx.N) - 1)
    high_mask = target & ~((1 << cx.N) - 1)
    acts = cx.levi_actions
    # split each Levi action into its effect on the two factors
    low_acts = [{s: v for s, v in a.items() if s < cx.N} for a in acts]
    high_acts = [{s: v for s, v in a.items() if s >= cx.N} for a in acts]
    M = _levi_closure(cx, low_mask, low_acts)
    Nw = _levi_closure(cx, high_mask, high_acts)
    # products of weight vectors that land in V0
    prods = []
    for a in M:
        for b in Nw:
            v: dict[int, Fraction] = {}
            ok = True
            for m1, c1 in a.items():
                for m2, c2 in b.items():
                    idx = cx.v0_index.get(m1 | m2)
                    if idx is None:
                        ok = False
                        break
                    v[idx] = v.get(idx, 0) + c1 * c2
                if not ok:
                    break
            if ok and v:
                prods.append({i: x for i, x in v.items() if x})
    # intersect span(prods) with C^k
    nk = cx.dim(k)
    cvecs = cx.basis[k]
    dimv0 = len(cx.v0)
    cols = [dict(c) for c in cvecs] + [{i: -x for i, x in p.items()} for p in prods]
    mat = SparseMatrix.from_columns(dimv0, cols)
    ker = exactla.kernel_basis(mat)
    sols = []
    for kv in ker:
        coords = {j: x for j, x in kv.items() if j < nk and x}
        if coords:
            sols.append(coords)
    dim = exactla.span_dimension(sols, nk) if sols else 0
    if dim != 1:
        raise HarmonicError(f"Kostant class space for {w!r} has dimension {dim}, expected 1")
    vec = sols[0]
    # normalize: first nonzero coordinate in canonical monomial order
    full = cx.expand(k, vec)
    first = min(full)  # V0 indices are in canonical (degree, mask) order
    c = full[first]
    vec = {j: x / c for j, x in vec.items()}
    kc = KostantClass(w, k, vec)
    # checks of the defining properties
    fw = P.F_w(w)
    for j in vec:
        if cx.basis_z[k][j] != fw or cx.basis_bideg[k][j] != (l, l):
            raise HarmonicError("Kostant class has the wrong Gamma-weight or bidegree")
    d0 = cx.d_family.evaluate([0] * P.m)
    if k < cx.nslots and d0[k].apply(vec):
        raise HarmonicError("Kostant class is not d_0-closed")
    return kc


# ---------------------------------------------------------------------------
# sections

@dataclass
class GlobalSection:
    """G_w(t) = k^w + sum c_i (F_i / F_w)(t) b_i, terms as (basis index, coefficient, exponent)."""

    w: WeylElement
    degree: int
    terms: list  # [(index, Fraction, exps)]
    s_w: dict  # coordinates of s_w over C^degree

    def evaluate(self, t: Sequence) -> dict[int, Fraction]:
        t = tuple(Fraction(x) for x in t)
        out = {}
        for j, c, e in self.terms:
            v = c * evaluate_monomial(e, t)
            if v:
                out[j] = out.get(j, 0) + v
        return {j: v for j, v in out.items() if v}

    def correction_exponents(self) -> list[tuple]:
        return [e for _, _, e in self.terms if any(e)]


class HarmonicEngine:
    """Per (type, I): harmonic package, Kostant classes and global sections."""

    def __init__(self, P: ParabolicData):
        self.P = P
        self.cx = get_complex(P)

    @cached_property
    def package(self) -> HarmonicPackage:
        return build_harmonic(self.P)

    @cached_property
    def kostant(self) -> dict[WeylElement, KostantClass]:
        return {w: kostant_class(self.P, w) for w in self.P.min_coset_reps}

    def s_w(self, w: WeylElement) -> dict[int, Fraction]:
        return self.sections[w].s_w

    @cached_property
    def sections(self) -> dict[WeylElement, GlobalSection]:
        out = {}
        for w in self.P.min_coset_reps:
            out[w] = self._section(w)
        return out

    def _section(self, w: WeylElement) -> GlobalSection:
        P, cx = self.P, self.cx
        kc = self.kostant[w]
        k = kc.degree
        pkg = self.package
        powers = pkg.R_power_apply(k, kc.coords)
        fw = P.F_w(w)
        # grading check: every R-application moves strictly up in the divisibility order
        prev = {fw}
        for i, v in enumerate(powers[1:], start=1):
            for j in v:
                e = exps_sub(cx.basis_z[k][j], fw)
                if any(x < 0 for x in e) or not any(e):
                    raise HarmonicError(f"R^{i} k^w for {w!r} is not above F_w in the divisibility order")
        sw: dict[int, Fraction] = {}
        for v in powers:
            sw = exactla.vec_add(sw, v)
        # s_w is d_1-closed and a boundary cycle
        d1 = cx.d_family.evaluate([1] * P.m)
        if k < cx.nslots and d1[k].apply(sw):
            raise HarmonicError(f"s_w is not d_1-closed for {w!r}")
        if k > 0 and cx.boundary_matrices[k].apply(sw):
            raise HarmonicError(f"s_w is not in ker(boundary) for {w!r}")
        terms = []
        for j in sorted(sw):
            e = exps_sub(cx.basis_z[k][j], fw)
            if any(x < 0 for x in e):
                raise HarmonicError("divisibility by F_w fails")
            terms.append((j, sw[j], e))
        return GlobalSection(w, k, terms, sw)

    def section_S(self, w: WeylElement, t: Sequence) -> dict[int, Fraction]:
        """S_w(t) = Gamma_t s_w, coordinatewise F_i(t) scaling."""
        t = tuple(Fraction(x) for x in t)
        k = self.sections[w].degree
        out = {}
        for j, c in self.sections[w].s_w.items():
            v = c * evaluate_monomial(self.cx.basis_z[k][j], t)
            if v:
                out[j] = v
        return out

    def gamma_apply(self, k: int, s: Sequence, vec: dict) -> dict:
        s = tuple(Fraction(x) for x in s)
        return {j: c * evaluate_monomial(self.cx.basis_z[k][j], s) for j, c in vec.items()}


_ENGINES: dict[ParabolicData, HarmonicEngine] = {}


def get_engine(P: ParabolicData) -> HarmonicEngine:
    e = _ENGINES.get(P)
    if e is None:
        e = _ENGINES[P] = HarmonicEngine(P)
    return e
