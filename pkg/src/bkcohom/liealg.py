"""Chevalley basis of g, the double g x g, and the family of subalgebras g_t.

Basis of g: h_1..h_n (simple coroots) followed by e_alpha for every root in
``RootSystem.roots`` order (positive roots, then their negatives).  Structure
constants come from the extraspecial-pair recursion; signs are therefore a
convention, and the Jacobi identity is what certifies them.

After the Chevalley basis is built, each negative root vector is divided by
kappa(e_alpha, e_-alpha), so that the Killing pairing of e_alpha with
e_-alpha is exactly 1 while positive root vectors stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import exactla
from .rootsys import ParabolicData, RootSystem, evaluate_monomial, is_positive, neg, root_sort_key

Elem = dict  # {basis index: Fraction}


class ChevalleyError(RuntimeError):
    pass


def _structure_constants(rs: RootSystem) -> dict[tuple, int]:
    """N[(x, y)] with [e_x, e_y] = N e_{x+y}, for roots x, y with x+y a root."""
    order = {a: k for k, a in enumerate(sorted(rs.positive_roots, key=root_sort_key))}
    pos = set(rs.positive_roots)
    form = rs.form

    def p_value(a, b):
        # largest p with b - p a a root
        p = 0
        cur = tuple(y - x for x, y in zip(a, b))
        while rs.is_root(cur):
            p += 1
            cur = tuple(y - x for x, y in zip(a, cur))
        return p

    extraspecial: dict[tuple, tuple] = {}
    for xi in rs.positive_roots:
        if sum(xi) == 1:
            continue
        for a in sorted(pos, key=order.__getitem__):
            b = tuple(x - y for x, y in zip(xi, a))
            if b in pos:
                extraspecial[xi] = (a, b)
                break

    memo: dict[tuple, Fraction] = {}

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def N(x, y) -> Fraction:
        key = (x, y)
        if key in memo:
            return memo[key]
        z = add(x, y)
        if not rs.is_root(z):
            val = Fraction(0)
        elif is_positive(x) and is_positive(y):
            if order[x] > order[y]:
                val = -N(y, x)
            else:
                a1, b1 = extraspecial[z]
                if (x, y) == (a1, b1):
                    val = Fraction(p_value(x, y) + 1)
                else:
                    n1 = N(a1, b1)
                    term = Fraction(0)
                    d1 = sub(y, a1)
                    if rs.is_root(d1):
                        term += N(y, neg(a1)) * N(x, neg(b1)) / form(d1, d1)
                    d2 = sub(x, a1)
                    if rs.is_root(d2):
                        term += N(neg(a1), x) * N(y, neg(b1)) / form(d2, d2)
                    val = form(z, z) / n1 * term
        elif not is_positive(x) and not is_positive(y):
            val = -N(neg(x), neg(y))
        elif is_positive(x):
            if is_positive(z):
                val = form(z, z) / form(x, x) * N(z, neg(y))
            else:
                val = form(z, z) / form(y, y) * N(neg(z), x)
        else:
            val = -N(y, x)
        memo[key] = val
        return val

    out = {}
    for x in rs.roots:
        for y in rs.roots:
            if rs.is_root(add(x, y)):
                v = N(x, y)
                if v.denominator != 1 or v == 0:
                    raise ChevalleyError(f"non-integral structure constant N({x},{y}) = {v}")
                out[(x, y)] = int(v)
    return out


class ChevalleyBasis:
    """Lie algebra g with exact brackets and Killing form."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.n = n
        self.dim = n + len(rs.roots)
        self.N = _structure_constants(rs)
        raw = self._raw_table()
        self.raw_killing_pairs = self._root_pairings(raw)
        # scale of basis vector k: e_-alpha -> e_-alpha / kappa(e_alpha, e_-alpha)
        self.scales = [Fraction(1)] * self.dim
        for k in range(rs.npos):
            self.scales[n + rs.npos + k] = 1 / self.raw_killing_pairs[k]
        self.pairing_scalars = tuple(self.scales[n + rs.npos:])
        s = self.scales
        self.table: list[list[Elem]] = [
            [{k: s[i] * s[j] * c / s[k] for k, c in raw[i][j].items()} for j in range(self.dim)] for i in range(self.dim)
        ]
        self.killing_matrix = self._trace_form()

    # -- construction helpers ----------------------------------------------------
    def root_basis_index(self, a: Sequence[int]) -> int:
        return self.n + self.rs.root_index[tuple(a)]

    def basis_root(self, k: int):
        """Root of basis index k, or None for a Cartan element."""
        return None if k < self.n else self.rs.roots[k - self.n]

    def coroot(self, a: Sequence[int]) -> dict[int, Fraction]:
        """alpha^vee = sum_i c_i (alpha_i, alpha_i)/(alpha, alpha) alpha_i^vee."""
        rs = self.rs
        aa = rs.form(a, a)
        return {i: Fraction(c) * rs.gram[i][i] / aa for i, c in enumerate(a) if c}

    def _raw_table(self) -> list[list[Elem]]:
        rs, n = self.rs, self.n
        dim = self.dim
        tab: list[list[Elem]] = [[{} for _ in range(dim)] for _ in range(dim)]
        for k, a in enumerate(rs.roots):
            ka = n + k
            for i in range(n):
                c = rs.pairing(a, i)
                if c:
                    tab[i][ka] = {ka: Fraction(c)}
                    tab[ka][i] = {ka: Fraction(-c)}
        for kx, x in enumerate(rs.roots):
            for ky, y in enumerate(rs.roots):
                z = tuple(p + q for p, q in zip(x, y))
                if all(v == 0 for v in z):
                    tab[n + kx][n + ky] = self.coroot(x)
                elif (x, y) in self.N:
                    tab[n + kx][n + ky] = {self.root_basis_index(z): Fraction(self.N[(x, y)])}
        return tab

    def _root_pairings(self, tab) -> list[Fraction]:
        """kappa(e_alpha, e_-alpha) for the unscaled Chevalley basis."""
        rs, n = self.rs, self.n
        out = []
        for k in range(rs.npos):
            i, j = n + k, n + rs.npos + k
            out.append(_trace(tab, i, j, self.dim))
        return out

    def _trace_form(self) -> list[list[Fraction]]:
        dim = self.dim
        return [[_trace(self.table, i, j, dim) for j in range(dim)] for i in range(dim)]

    # -- operations ------------------------------------------------------------------
    def bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Elem:
        out: Elem = {}
        for i, a in x.items():
            if not a:
                continue
            row = self.table[i]
            for j, b in y.items():
                if not b:
                    continue
                for k, c in row[j].items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def killing(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Fraction:
        km = self.killing_matrix
        return sum((a * b * km[i][j] for i, a in x.items() for j, b in y.items()), Fraction(0))

    def e(self, a: Sequence[int]) -> Elem:
        return {self.root_basis_index(a): Fraction(1)}

    def h(self, i: int) -> Elem:
        """Simple coroot h_i, 1-based."""
        return {i - 1: Fraction(1)}

    def structure_constant(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """c_{x,y} with [e_x, e_y] = c_{x,y} e_{x+y} in the rescaled basis."""
        z = tuple(p + q for p, q in zip(x, y))
        if not self.rs.is_root(z):
            return Fraction(0)
        return self.table[self.root_basis_index(x)][self.root_basis_index(y)].get(self.root_basis_index(z), Fraction(0))

    def jacobi_violations(self, limit: int | None = None) -> list[tuple[int, int, int]]:
        bad = []
        basis = [{k: Fraction(1)} for k in range(self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                xy = self.bracket(basis[i], basis[j])
                for k in range(j + 1, self.dim):
                    t1 = self.bracket(xy, basis[k])
                    t2 = self.bracket(self.bracket(basis[j], basis[k]), basis[i])
                    t3 = self.bracket(self.bracket(basis[k], basis[i]), basis[j])
                    tot = exactla.vec_add(exactla.vec_add(t1, t2), t3)
                    if tot:
                        bad.append((i, j, k))
                        if limit and len(bad) >= limit:
                            return bad
        return bad

    def to_json(self) -> dict:
        return {
            "type": str(self.rs.cartan_type),
            "dim": self.dim,
            "brackets": [
                [i, j, {str(k): _qs(v) for k, v in sorted(self.table[i][j].items())}]
                for i in range(self.dim)
                for j in range(self.dim)
                if self.table[i][j]
            ],
            "pairing_scalars": [_qs(x) for x in self.pairing_scalars],
        }


def _qs(x: Fraction) -> str:
    return str(Fraction(x))


def _trace(tab, i: int, j: int, dim: int) -> Fraction:
    # tr(ad b_i ad b_j) = sum_k sum_l c^k_{i l} c^l_{j k}
    total = Fraction(0)
    ti, tj = tab[i], tab[j]
    for k in range(dim):
        for l, c in tj[k].items():
            v = ti[l].get(k)
            if v:
                total += v * c
    return total


_CB_CACHE: dict[str, ChevalleyBasis] = {}


def build_chevalley(rs: RootSystem) -> ChevalleyBasis:
    key = str(rs.cartan_type)
    cb = _CB_CACHE.get(key)
    if cb is None:
        cb = _CB_CACHE[key] = ChevalleyBasis(rs)
    return cb


# ---------------------------------------------------------------------------
# g x g

@dataclass(frozen=True)
class DoubleElement:
    left: tuple  # sorted ((index, Fraction), ...)
    right: tuple

    @classmethod
    def make(cls, left: Mapping[int, Fraction] | None = None, right: Mapping[int, Fraction] | None = None) -> "DoubleElement":
        return cls(_freeze(left or {}), _freeze(right or {}))

    @classmethod
    def diagonal(cls, x: Mapping[int, Fraction]) -> "DoubleElement":
        return cls.make(x, x)

    def parts(self) -> tuple[dict, dict]:
        return dict(self.left), dict(self.right)

    def vector(self, dim: int) -> dict[int, Fraction]:
        """Coordinates in g x g: left part first, right part shifted by dim."""
        out = dict(self.left)
        out.update({dim + k: v for k, v in self.right})
        return out

    def is_zero(self) -> bool:
        return not self.left and not self.right


def _freeze(x: Mapping[int, Fraction]) -> tuple:
    return tuple(sorted((k, Fraction(v)) for k, v in x.items() if v))


def double_bracket(cb: ChevalleyBasis, x: DoubleElement, y: DoubleElement) -> DoubleElement:
    xl, xr = x.parts()
    yl, yr = y.parts()
    return DoubleElement.make(cb.bracket(xl, yl), cb.bracket(xr, yr))


def double_from_vector(vec: Mapping[int, Fraction], dim: int) -> DoubleElement:
    return DoubleElement.make({k: v for k, v in vec.items() if k < dim}, {k - dim: v for k, v in vec.items() if k >= dim})


# ---------------------------------------------------------------------------
# the family g_t

@dataclass
class FamilyBasis:
    P: ParabolicData
    t: tuple
    vectors: list  # list of DoubleElement
    labels: list  # ("h", i) or ("E", root)

    def vector_coords(self, cb: ChevalleyBasis) -> list[dict[int, Fraction]]:
        return [v.vector(cb.dim) for v in self.vectors]


def family_basis(P: ParabolicData, t: Sequence) -> FamilyBasis:
    """h-diagonal plus E_alpha(t) = (t_alpha^2 e_alpha, e_alpha), E_-alpha(t) = (e_-alpha, t_alpha^2 e_-alpha)."""
    t = tuple(Fraction(x) for x in t)
    if len(t) != P.m:
        raise ValueError(f"parameter has length {len(t)}, expected {P.m}")
    rs = P.rs
    cb = build_chevalley(rs)
    vecs, labels = [], []
    for i in range(rs.rank):
        vecs.append(DoubleElement.diagonal({i: Fraction(1)}))
        labels.append(("h", i + 1))
    for a in rs.positive_roots:
        sq = evaluate_monomial([2 * x for x in P.t_alpha(a)], t)
        ka = cb.root_basis_index(a)
        kn = cb.root_basis_index(neg(a))
        vecs.append(DoubleElement.make({ka: sq}, {ka: Fraction(1)}))
        labels.append(("E", a))
        vecs.append(DoubleElement.make({kn: Fraction(1)}, {kn: sq}))
        labels.append(("E", neg(a)))
    return FamilyBasis(P, t, vecs, labels)


def verify_subalgebra(fb: FamilyBasis) -> bool:
    cb = build_chevalley(fb.P.rs)
    cols = fb.vector_coords(cb)
    solver = exactla.ColumnSolver(cols, 2 * cb.dim)
    for i, x in enumerate(fb.vectors):
        for y in fb.vectors[i + 1:]:
            z = double_bracket(cb, x, y)
            if z.is_zero():
                continue
            if solver.solve(z.vector(cb.dim)) is None:
                return False
    return True


def levi_diagonal(P: ParabolicData, K=None) -> list[DoubleElement]:
    """Basis of l_{K,Delta} (K defaults to I)."""
    K = P.I if K is None else frozenset(K)
    rs = P.rs
    cb = build_chevalley(rs)
    out = [DoubleElement.diagonal({i: Fraction(1)}) for i in range(rs.rank)]
    for a in rs.roots:
        if all(x == 0 for i, x in enumerate(a) if (i + 1) not in K):
            out.append(DoubleElement.diagonal(cb.e(a)))
    return out


def pj_decomposition(P: ParabolicData, J) -> list[DoubleElement]:
    """l_{K,Delta} + u'_{K,-} + u''_{K,+} with K = I u J."""
    J = P.check_J(J)
    K = P.I | J
    rs = P.rs
    cb = build_chevalley(rs)
    out = levi_diagonal(P, K)
    for a in rs.positive_roots:
        if any(x for i, x in enumerate(a) if (i + 1) not in K):
            out.append(DoubleElement.make(cb.e(neg(a)), {}))
            out.append(DoubleElement.make({}, cb.e(a)))
    return out


def torus_conjugate_diagonal(P: ParabolicData, s: Sequence) -> list[DoubleElement]:
    """Ad(s, s^{-1}) applied to the basis of g_Delta, s in the deformation torus."""
    s = tuple(Fraction(x) for x in s)
    if any(x == 0 for x in s):
        raise ValueError("torus element must have nonzero coordinates")
    rs = P.rs
    cb = build_chevalley(rs)
    out = [DoubleElement.diagonal({i: Fraction(1)}) for i in range(rs.rank)]
    for a in rs.roots:
        if is_positive(a):
            c = evaluate_monomial(P.t_alpha(a), s)
        else:
            c = 1 / evaluate_monomial(P.t_alpha(neg(a)), s)
        out.append(DoubleElement.make({cb.root_basis_index(a): c}, {cb.root_basis_index(a): 1 / c}))
    return out


def same_span(a: Sequence[DoubleElement], b: Sequence[DoubleElement], dim: int) -> bool:
    va = [x.vector(dim) for x in a]
    vb = [x.vector(dim) for x in b]
    ra = exactla.span_dimension(va, 2 * dim)
    rb = exactla.span_dimension(vb, 2 * dim)
    return ra == rb == exactla.span_dimension(va + vb, 2 * dim)


def contains_span(big: Sequence[DoubleElement], small: Sequence[DoubleElement], dim: int) -> bool:
    vb = [x.vector(dim) for x in big]
    vs = [x.vector(dim) for x in small]
    return exactla.span_dimension(vb, 2 * dim) == exactla.span_dimension(vb + vs, 2 * dim)


def gamma_s(P: ParabolicData, s: Sequence) -> dict:
    """Scalars of Gamma_s on the generators of r.

    Returns {("p", alpha): c} for e'_alpha and {("n", alpha): c} for e''_-alpha,
    alpha in R^+(u); both scalars equal the monomial t_alpha at s.
    """
    s = tuple(Fraction(x) for x in s)
    if any(x == 0 for x in s):
        raise ValueError("Gamma_s needs all coordinates of s nonzero")
    out = {}
    for a in P.nilradical_roots:
        c = evaluate_monomial(P.t_alpha(a), s)
        out[("p", a)] = c
        out[("n", a)] = c
    return out
