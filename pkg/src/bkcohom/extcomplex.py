"""The exterior algebra of r = u_-'' + u', its L-invariants, and the operators on it.

Generators of r are indexed by slots.  With beta_0, ..., beta_{N-1} the roots
of R^+(u) in the fixed enumeration, slot j < N is e''_{-beta_j} and slot N + j
is e'_{beta_j}.  A monomial is a bitmask over slots, its factors taken in
increasing slot order; this is exactly e(B1, B2) = e''(B1) ^ e'(B2).

The identification f_t sends e''_{-alpha} to the dual covector phi_alpha of
E_alpha(t) and e'_alpha to phi_{-alpha}; f_0 and f_1 are the same map on
generators, so d_t is computed on r directly.  Internally a signed root label
gamma names the generator X_gamma = f_t^{-1}(phi_gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import exactla
from .liealg import build_chevalley
from .rootsys import ParabolicData, Root, evaluate_monomial, exps_add, exps_sub, neg

MAX_NILRADICAL = 12  # |R+(u)|; the weight-zero search is exponential in it

Term = tuple  # (mask, Fraction)


class ComplexError(RuntimeError):
    pass


@dataclass(frozen=True)
class ExtMonomial:
    B1: frozenset  # roots beta with e''_{-beta}
    B2: frozenset  # roots beta with e'_{beta}

    @property
    def degree(self) -> int:
        return len(self.B1) + len(self.B2)


def popcount(x: int) -> int:
    return bin(x).count("1")


def sort_sign(slots: Sequence[int]) -> int:
    """Sign of the permutation sorting ``slots``; 0 if a slot repeats."""
    if len(set(slots)) != len(slots):
        return 0
    inv = 0
    for i in range(len(slots)):
        si = slots[i]
        for j in range(i + 1, len(slots)):
            if slots[j] < si:
                inv += 1
    return -1 if inv & 1 else 1


def mask_to_slots(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def slots_to_mask(slots: Iterable[int]) -> int:
    m = 0
    for s in slots:
        m |= 1 << s
    return m


def apply_derivation(mask: int, action: Mapping[int, Sequence[tuple[int, Fraction]]]) -> dict[int, Fraction]:
    """Degree-0 derivation acting slotwise: X_s -> sum c X_s'."""
    slots = mask_to_slots(mask)
    out: dict[int, Fraction] = {}
    for p, s in enumerate(slots):
        for s2, c in action.get(s, ()):
            new = slots[:p] + [s2] + slots[p + 1:]
            sg = sort_sign(new)
            if sg:
                m2 = slots_to_mask(new)
                out[m2] = out.get(m2, 0) + sg * c
    return {k: v for k, v in out.items() if v}


class RComplex:
    """Lambda r with the invariant subcomplex C(r) and the operators of the theory."""

    def __init__(self, P: ParabolicData):
        self.P = P
        rs = P.rs
        self.rs = rs
        self.cb = cb = build_chevalley(rs)
        self.roots: list[Root] = list(P.nilradical_roots)
        self.N = N = len(self.roots)
        if N > MAX_NILRADICAL:
            raise ComplexError(f"|R+(u)| = {N} exceeds the supported size {MAX_NILRADICAL}")
        self.nslots = 2 * N
        self.root_pos = {a: j for j, a in enumerate(self.roots)}
        # slot data
        self.slot_root: list[Root] = [neg(a) for a in self.roots] + list(self.roots)
        self.slot_z: list[tuple] = [P.t_alpha(a) for a in self.roots] * 2
        self.raw_pairing = [cb.raw_killing_pairs[rs.positive_roots.index(a)] for a in self.roots]

        self._build_monomials()
        self._build_invariants()

    # -- slots and labels --------------------------------------------------------------
    def slot_of_label(self, gamma: Root) -> int:
        """Generator X_gamma: gamma = +alpha is e''_{-alpha}, gamma = -alpha is e'_alpha."""
        gamma = tuple(gamma)
        if gamma in self.root_pos:
            return self.root_pos[gamma]
        return self.N + self.root_pos[neg(gamma)]

    def label_of_slot(self, s: int) -> Root:
        return self.roots[s] if s < self.N else neg(self.roots[s - self.N])

    def mono(self, mask: int) -> ExtMonomial:
        N = self.N
        return ExtMonomial(
            frozenset(self.roots[s] for s in range(N) if mask >> s & 1),
            frozenset(self.roots[s - N] for s in range(N, 2 * N) if mask >> s & 1),
        )

    def mask_of(self, B1: Iterable[Root], B2: Iterable[Root]) -> int:
        m = 0
        for a in B1:
            m |= 1 << self.root_pos[tuple(a)]
        for a in B2:
            m |= 1 << (self.N + self.root_pos[tuple(a)])
        return m

    def bidegree(self, mask: int) -> tuple[int, int]:
        low = (1 << self.N) - 1
        return popcount(mask & low), popcount(mask >> self.N)

    def z_weight(self, mask: int) -> tuple[int, ...]:
        z = [0] * self.P.m
        for s in mask_to_slots(mask):
            for k, x in enumerate(self.slot_z[s]):
                z[k] += x
        return tuple(z)

    def h_weight(self, mask: int) -> tuple[int, ...]:
        w = [0] * self.rs.rank
        for s in mask_to_slots(mask):
            for k, x in enumerate(self.slot_root[s]):
                w[k] += x
        return tuple(w)

    def hh_weight(self, mask: int) -> tuple:
        """H x H weight: (sum over B2, -sum over B1)."""
        N = self.N
        left = [0] * self.rs.rank
        right = [0] * self.rs.rank
        for s in mask_to_slots(mask):
            r = self.slot_root[s]
            tgt = right if s < N else left
            for k, x in enumerate(r):
                tgt[k] += x
        return tuple(left), tuple(right)

    def enumerate_monomials(self, k: int) -> list[ExtMonomial]:
        """All e(B1,B2) of degree k, in canonical listing order."""
        if not 0 <= k <= self.nslots:
            raise ValueError(f"degree {k} outside 0..{self.nslots}")
        masks = sorted(slots_to_mask(c) for c in combinations(range(self.nslots), k))
        return [self.mono(m) for m in masks]

    # -- weight-zero monomials -----------------------------------------------------------
    def _build_monomials(self):
        """Monomials of diagonal h-weight zero, found by a meet-in-the-middle on B1 / B2."""
        N = self.N
        by_sum: dict[tuple, list[int]] = {}
        for sub in range(1 << N):
            s = [0] * self.rs.rank
            for j in range(N):
                if sub >> j & 1:
                    for k, x in enumerate(self.roots[j]):
                        s[k] += x
            by_sum.setdefault(tuple(s), []).append(sub)
        masks = []
        for subs in by_sum.values():
            for b1 in subs:
                for b2 in subs:
                    masks.append(b1 | (b2 << N))
        masks.sort(key=lambda m: (popcount(m), m))
        self.v0: list[int] = masks
        self.v0_index = {m: i for i, m in enumerate(masks)}
        self.v0_z = [self.z_weight(m) for m in masks]
        self.v0_bideg = [self.bidegree(m) for m in masks]

    # -- generator-level maps ------------------------------------------------------------
    @cached_property
    def levi_actions(self) -> list[dict[int, list[tuple[int, Fraction]]]]:
        """Slot actions of e_{+-alpha_j}, j in I, through the diagonal adjoint action."""
        cb = self.cb
        out = []
        for j in sorted(self.P.I):
            aj = self.rs.simple_roots[j - 1]
            for x in (aj, neg(aj)):
                act: dict[int, list] = {}
                for s in range(self.nslots):
                    y = self.slot_root[s]
                    z = tuple(p + q for p, q in zip(x, y))
                    c = cb.structure_constant(x, y)
                    if c:
                        # z stays in the same factor (u or u_-)
                        s2 = self.root_pos[z] + self.N if s >= self.N else self.root_pos[neg(z)]
                        act[s] = [(s2, c)]
                out.append(act)
        return out

    def r_bracket(self, s1: int, s2: int) -> tuple[int, Fraction] | None:
        """[X, Y] in r for two slots: zero across factors."""
        N = self.N
        if (s1 < N) != (s2 < N):
            return None
        x, y = self.slot_root[s1], self.slot_root[s2]
        c = self.cb.structure_constant(x, y)
        if not c:
            return None
        z = tuple(p + q for p, q in zip(x, y))
        s3 = self.root_pos[neg(z)] if s1 < N else N + self.root_pos[z]
        return s3, c

    @cached_property
    def d_generators(self) -> dict[int, list[tuple[int, int, Fraction, tuple]]]:
        """d_t on generators: slot -> [(b, c, coef, t-exponent)] meaning coef t^e X_b ^ X_c.

        Built from the bracket identities for E_b(t), E_c(t) modulo l_Delta:
        same sign gives c_{b,c} E_{b+c}; [E_beta, E_-gamma] is t_gamma^2 c E_{beta-gamma}
        or t_beta^2 c E_{-(gamma-beta)}; anything landing in l_Delta is dropped.
        Then d phi_a = - sum over unordered pairs K^a_{bc} phi_b ^ phi_c.
        """
        P, cb = self.P, self.cb
        labels = [self.label_of_slot(s) for s in range(self.nslots)]
        upos = set(self.roots)
        out: dict[int, list] = {s: [] for s in range(self.nslots)}
        zero = (0,) * P.m
        for i in range(self.nslots):
            for j in range(i + 1, self.nslots):
                b, c = labels[i], labels[j]
                res = self._family_bracket(b, c, upos)
                if res is None:
                    continue
                target, coef, texp = res
                out[self.slot_of_label(target)].append((i, j, -coef, texp))
        return out

    def _family_bracket(self, b: Root, c: Root, upos) -> tuple[Root, Fraction, tuple] | None:
        """[E_b(t), E_c(t)] mod l_Delta as (label, coefficient, t-exponent)."""
        cb, P = self.cb, self.P
        zero = (0,) * P.m
        bpos = b in upos
        cpos = c in upos
        s = tuple(p + q for p, q in zip(b, c))
        k = cb.structure_constant(b, c)
        if not k:
            return None
        if bpos == cpos:
            if s in upos or neg(s) in upos:
                return s, k, zero
            return None
        if not bpos:
            res = self._family_bracket(c, b, upos)
            if res is None:
                return None
            return res[0], -res[1], res[2]
        beta, gamma = b, neg(c)
        if s in upos:  # beta - gamma in R+(u)
            return s, k, tuple(2 * x for x in P.t_alpha(gamma))
        if neg(s) in upos:  # gamma - beta in R+(u)
            return s, k, tuple(2 * x for x in P.t_alpha(beta))
        return None  # Levi root: lands in l_Delta

    # -- monomial-level operators -------------------------------------------------------------
    def d_on_mask(self, mask: int) -> list[tuple[int, Fraction, tuple]]:
        """d_t(monomial) as [(mask, coef, t-exponent)], grouped by target."""
        slots = mask_to_slots(mask)
        acc: dict[tuple, Fraction] = {}
        dg = self.d_generators
        for p, s in enumerate(slots):
            sign_p = -1 if p & 1 else 1
            for b, c, coef, texp in dg[s]:
                new = slots[:p] + [b, c] + slots[p + 1:]
                sg = sort_sign(new)
                if sg:
                    key = (slots_to_mask(new), texp)
                    acc[key] = acc.get(key, 0) + sign_p * sg * coef
        return [(m, v, e) for (m, e), v in sorted(acc.items()) if v]

    def boundary_on_mask(self, mask: int) -> dict[int, Fraction]:
        """Homology boundary: sum_{p<q} (-1)^{p+q} [x_p, x_q] ^ (rest)."""
        slots = mask_to_slots(mask)
        out: dict[int, Fraction] = {}
        for p in range(len(slots)):
            for q in range(p + 1, len(slots)):
                br = self.r_bracket(slots[p], slots[q])
                if br is None:
                    continue
                s3, c = br
                rest = slots[:p] + slots[p + 1:q] + slots[q + 1:]
                new = [s3] + rest
                sg = sort_sign(new)
                if sg:
                    m2 = slots_to_mask(new)
                    out[m2] = out.get(m2, 0) + (-1) ** (p + q) * sg * c
        return {k: v for k, v in out.items() if v}

    @cached_property
    def _E_actions(self) -> list[tuple[dict, dict]]:
        """For each alpha in R^+(u): slot actions of ad(e''_-alpha) and ad(e'_alpha)."""
        cb, N = self.cb, self.N
        out = []
        for a in self.roots:
            lo: dict[int, list] = {}
            hi: dict[int, list] = {}
            for j, b in enumerate(self.roots):
                c = cb.structure_constant(neg(a), neg(b))
                if c:
                    lo[j] = [(self.root_pos[tuple(x + y for x, y in zip(a, b))], c)]
                c = cb.structure_constant(a, b)
                if c:
                    hi[N + j] = [(N + self.root_pos[tuple(x + y for x, y in zip(a, b))], c)]
            out.append((lo, hi))
        return out

    def E_on_mask(self, mask: int) -> dict[int, Fraction]:
        """E = 2 sum_alpha ad(e''_-alpha) (x) ad(e'_alpha) on e''(B1) (x) e'(B2)."""
        low = mask & ((1 << self.N) - 1)
        high = mask & ~((1 << self.N) - 1)
        out: dict[int, Fraction] = {}
        for lo, hi in self._E_actions:
            a = apply_derivation(low, lo)
            if not a:
                continue
            b = apply_derivation(high, hi)
            for m1, c1 in a.items():
                for m2, c2 in b.items():
                    m = m1 | m2
                    out[m] = out.get(m, 0) + 2 * c1 * c2
        return {k: v for k, v in out.items() if v}

    def norm_sq(self, mask: int) -> Fraction:
        """Hermitian norm of e(B1,B2): e'_beta has norm c_beta, e''_-beta has 1/c_beta."""
        v = Fraction(1)
        for s in mask_to_slots(mask):
            c = self.raw_pairing[s % self.N]
            v = v / c if s < self.N else v * c
        return v

    def pairing_partner(self, mask: int) -> tuple[int, int]:
        """Killing-induced pairing: e(B1,B2) pairs with e(B2,B1) with sign (-1)^{|B1||B2|}."""
        N = self.N
        low = mask & ((1 << N) - 1)
        high = mask >> N
        b1, b2 = popcount(low), popcount(high)
        return high | (low << N), (-1) ** (b1 * b2)

    # -- invariants -------------------------------------------------------------------------
    def _build_invariants(self):
        N = self.N
        blocks: dict[tuple, list[int]] = {}
        for i, m in enumerate(self.v0):
            blocks.setdefault((self.v0_bideg[i], self.v0_z[i]), []).append(i)
        self.blocks = blocks
        actions = self.levi_actions
        basis: dict[int, list[dict[int, Fraction]]] = {k: [] for k in range(self.nslots + 1)}
        free: dict[int, list[int]] = {k: [] for k in range(self.nslots + 1)}
        bz: dict[int, list[tuple]] = {k: [] for k in range(self.nslots + 1)}
        bbd: dict[int, list[tuple]] = {k: [] for k in range(self.nslots + 1)}
        for key in sorted(blocks):
            (b1, b2), z = key
            idxs = blocks[key]
            k = b1 + b2
            if actions:
                rows: dict[int, dict[int, Fraction]] = {}
                row_id: dict[tuple, int] = {}
                for col, vi in enumerate(idxs):
                    for a_no, act in enumerate(actions):
                        for m2, c in apply_derivation(self.v0[vi], act).items():
                            r = row_id.setdefault((a_no, m2), len(row_id))
                            rows.setdefault(r, {})[col] = c
                mat = exactla.SparseMatrix(len(row_id), len(idxs), rows)
                kb = exactla.kernel_basis(mat)
                rr, piv = exactla.rref(mat)
                pivset = set(piv)
                frees = [c for c in range(len(idxs)) if c not in pivset]
            else:
                kb = [{c: Fraction(1)} for c in range(len(idxs))]
                frees = list(range(len(idxs)))
            for vec, f in zip(kb, frees):
                basis[k].append({idxs[c]: x for c, x in vec.items()})
                free[k].append(idxs[f])
                bz[k].append(z)
                bbd[k].append((b1, b2))
        self.basis = basis
        self.basis_free = free
        self.basis_z = bz
        self.basis_bideg = bbd
        self.free_pos = {k: {vi: j for j, vi in enumerate(free[k])} for k in free}

    def dim(self, k: int) -> int:
        return len(self.basis.get(k, ()))

    @property
    def total_dim(self) -> int:
        return sum(self.dim(k) for k in self.basis)

    def degrees(self) -> range:
        return range(self.nslots + 1)

    def coords(self, k: int, vec: Mapping[int, Fraction], check: bool = True) -> dict[int, Fraction]:
        """Coordinates in the C^k basis of a V0-vector known to lie in C^k."""
        fp = self.free_pos[k]
        out = {fp[vi]: x for vi, x in vec.items() if vi in fp and x}
        if check:
            recon: dict[int, Fraction] = {}
            for j, c in out.items():
                for vi, x in self.basis[k][j].items():
                    recon[vi] = recon.get(vi, 0) + c * x
            diff = exactla.vec_add(recon, vec, -1)
            if diff:
                raise ComplexError(f"vector is not in C^{k}")
        return out

    def expand(self, k: int, coords: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """V0-vector of a coordinate vector over the C^k basis."""
        out: dict[int, Fraction] = {}
        for j, c in coords.items():
            if c:
                for vi, x in self.basis[k][j].items():
                    out[vi] = out.get(vi, 0) + c * x
        return {k_: v for k_, v in out.items() if v}

    def in_invariants(self, k: int, vec: Mapping[int, Fraction]) -> bool:
        try:
            self.coords(k, vec)
        except ComplexError:
            return False
        return True

    # -- operators lifted to V0 vectors --------------------------------------------------------
    def apply_mask_op(self, op, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Apply an operator given on masks (mask -> {mask: coef}) to a V0-vector."""
        out: dict[int, Fraction] = {}
        for vi, x in vec.items():
            for m2, c in op(self.v0[vi]).items():
                j = self.v0_index[m2]
                out[j] = out.get(j, 0) + x * c
        return {k: v for k, v in out.items() if v}

    def d_eval_on_mask(self, t: Sequence[Fraction]):
        t = tuple(Fraction(x) for x in t)

        def op(mask: int) -> dict[int, Fraction]:
            out: dict[int, Fraction] = {}
            for m2, c, e in self.d_on_mask(mask):
                v = c * evaluate_monomial(e, t)
                if v:
                    out[m2] = out.get(m2, 0) + v
            return {k: v for k, v in out.items() if v}

        return op

    def adjoint_boundary_on_mask(self, mask: int) -> dict[int, Fraction]:
        """Hermitian adjoint of the boundary (Gram-weighted transpose)."""
        return self._adjoint_boundary_table.get(mask, {})

    @cached_property
    def _adjoint_boundary_table(self) -> dict[int, dict[int, Fraction]]:
        # {adj(a), b} = {a, d(b)}, so adj(a) has coefficient d_{ab} G_a / G_b on b
        table: dict[int, dict[int, Fraction]] = {}
        for b in self.v0:
            gb = self.norm_sq(b)
            for a, c in self.boundary_on_mask(b).items():
                table.setdefault(a, {})[b] = c * self.norm_sq(a) / gb
        return table

    # -- matrices on C -----------------------------------------------------------------------
    def restrict(self, op, k: int, shift: int) -> exactla.SparseMatrix:
        """Matrix of a V0 operator from C^k to C^{k+shift} in the invariant bases."""
        tgt = k + shift
        rows_n = self.dim(tgt) if 0 <= tgt <= self.nslots else 0
        cols = []
        for b in self.basis[k]:
            img = self.apply_mask_op(op, b)
            if img and rows_n == 0:
                raise ComplexError("operator leaves the complex")
            cols.append(self.coords(tgt, img) if img else {})
        return exactla.SparseMatrix.from_columns(rows_n, cols)

    @cached_property
    def boundary_matrices(self) -> dict[int, exactla.SparseMatrix]:
        """C^k -> C^{k-1}."""
        return {k: self.restrict(self.boundary_on_mask, k, -1) for k in self.degrees()}

    @cached_property
    def adjoint_boundary_matrices(self) -> dict[int, exactla.SparseMatrix]:
        """C^k -> C^{k+1}."""
        return {k: self.restrict(self.adjoint_boundary_on_mask, k, +1) for k in self.degrees()}

    @cached_property
    def E_matrices(self) -> dict[int, exactla.SparseMatrix]:
        return {k: self.restrict(self.E_on_mask, k, 0) for k in self.degrees()}

    @cached_property
    def d_family(self) -> "DifferentialFamily":
        return build_d_family(self)

    def gamma_weight(self, mono: ExtMonomial) -> tuple[int, ...]:
        return self.P.F_B(mono.B1, mono.B2)


@dataclass
class DifferentialFamily:
    """d_t on C(r): per degree, entries (row, col) -> (coefficient, t-exponent)."""

    cx: RComplex
    entries: dict  # k -> {(row, col): (Fraction, exps)}

    def evaluate(self, t: Sequence) -> dict[int, exactla.SparseMatrix]:
        t = tuple(Fraction(x) for x in t)
        if len(t) != self.cx.P.m:
            raise ValueError(f"parameter has length {len(t)}, expected {self.cx.P.m}")
        out = {}
        for k in self.cx.degrees():
            rows: dict[int, dict[int, Fraction]] = {}
            for (i, j), (c, e) in self.entries[k].items():
                v = c * evaluate_monomial(e, t)
                if v:
                    rows.setdefault(i, {})[j] = v
            n_out = self.cx.dim(k + 1) if k < self.cx.nslots else 0
            out[k] = exactla.SparseMatrix(n_out, self.cx.dim(k), rows)
        return out

    def square_is_zero(self) -> bool:
        """d_t o d_t = 0 as polynomial matrices."""
        for k in self.cx.degrees():
            if k + 1 > self.cx.nslots:
                continue
            first = self.entries[k]
            second = self.entries[k + 1]
            by_col: dict[int, list] = {}
            for (i, j), ce in second.items():
                by_col.setdefault(j, []).append((i, ce))
            acc: dict[tuple, Fraction] = {}
            for (i, j), (c1, e1) in first.items():
                for i2, (c2, e2) in by_col.get(i, ()):
                    key = (i2, j, exps_add(e1, e2))
                    acc[key] = acc.get(key, 0) + c1 * c2
            if any(acc.values()):
                return False
        return True


def build_d_family(cx: RComplex) -> DifferentialFamily:
    """Polynomial matrices of d_t on C(r), from the monomial-level bracket identities.

    Every monomial-level coefficient carries the exponent z(target) - z(source);
    this is checked, and it makes each C-level entry a single monomial.
    """
    entries: dict[int, dict] = {}
    for k in cx.degrees():
        ent: dict[tuple, tuple] = {}
        if k < cx.nslots:
            for j, b in enumerate(cx.basis[k]):
                zj = cx.basis_z[k][j]
                img: dict[int, Fraction] = {}
                for vi, x in b.items():
                    src = cx.v0[vi]
                    zsrc = cx.v0_z[vi]
                    for m2, c, e in cx.d_on_mask(src):
                        if exps_add(zsrc, e) != cx.z_weight(m2):
                            raise ComplexError("d_t coefficient is not Gamma-graded")
                        ti = cx.v0_index[m2]
                        img[ti] = img.get(ti, 0) + x * c
                img = {a: v for a, v in img.items() if v}
                if not img:
                    continue
                co = cx.coords(k + 1, img)
                for i, v in co.items():
                    e = exps_sub(cx.basis_z[k + 1][i], zj)
                    if any(x < 0 for x in e):
                        raise ComplexError("negative exponent in d_t")
                    ent[(i, j)] = (v, e)
        entries[k] = ent
    return DifferentialFamily(cx, entries)


_CX_CACHE: dict[ParabolicData, RComplex] = {}


def get_complex(P: ParabolicData) -> RComplex:
    cx = _CX_CACHE.get(P)
    if cx is None:
        cx = _CX_CACHE[P] = RComplex(P)
    return cx


def l_invariants(P: ParabolicData, k: int) -> list[dict[ExtMonomial, Fraction]]:
    """Basis of C^k(r) with vectors keyed by monomials."""
    cx = get_complex(P)
    return [{cx.mono(cx.v0[vi]): x for vi, x in b.items()} for b in cx.basis[k]]


def boundary(P: ParabolicData) -> dict[int, exactla.SparseMatrix]:
    return get_complex(P).boundary_matrices


def evaluate_d(df: DifferentialFamily, t: Sequence) -> dict[int, exactla.SparseMatrix]:
    return df.evaluate(t)
