"""Root systems, Weyl groups and parabolic bookkeeping.

Simple roots are numbered as in Bourbaki and every public index (simple
roots, the Levi subset ``I``, the parameter subset ``J``, reduced words) is
1-based.  Roots are integer coefficient tuples in the simple-root basis.

The symmetric form on the root lattice is normalized so that short roots
have squared length 2 (so all entries are integers); the form
actually used for weights and coroots is the one induced by the Killing form,
which is computed from the Cartan matrix (no per-type tables).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple  # tuple[int, ...]

WEYL_SIZE_LIMIT = 60000


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }
        if s not in ok or not ok[s]:
            raise RootSystemError(f"invalid Cartan type {s}{n}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _symmetric_form(ct: CartanType) -> list[list[int]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, Bourbaki numbering."""
    n, s = ct.rank, ct.series
    g = [[0] * n for _ in range(n)]

    def chain(lengths: Sequence[int]):
        for i, l in enumerate(lengths):
            g[i][i] = l
        for i in range(n - 1):
            # simple bond between equal lengths: -len/2; double bond: -short
            a, b = lengths[i], lengths[i + 1]
            g[i][i + 1] = g[i + 1][i] = -min(a, b) if a != b else -a // 2

    if s == "A":
        chain([2] * n)
    elif s == "B":
        chain([4] * (n - 1) + [2])
    elif s == "C":
        chain([2] * (n - 1) + [4])
    elif s == "F":
        chain([4, 4, 2, 2])
    elif s == "G":
        g[0][0], g[1][1] = 2, 6
        g[0][1] = g[1][0] = -3
    elif s == "D":
        for i in range(n):
            g[i][i] = 2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = -1
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    elif s == "E":
        for i in range(n):
            g[i][i] = 2
        for a, b in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]:
            g[a - 1][b - 1] = g[b - 1][a - 1] = -1
    return g


class RootSystem:
    """Roots, Cartan matrix, forms and the Weyl group of a simple type."""

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.rank = n = ct.rank
        self.gram = [[Fraction(x) for x in row] for row in _symmetric_form(ct)]
        # cartan[i][j] = <alpha_j, alpha_i^vee>
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if 2 * self.gram[i][j] != self.cartan[i][j] * self.gram[i][i]:
                    raise RootSystemError("non-integral Cartan matrix (bad form table)")
        self.simple_roots: list[Root] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        self.positive_roots: list[Root] = self._positive_roots()
        self.roots: list[Root] = self.positive_roots + [neg(a) for a in self.positive_roots]
        self.root_index: dict[Root, int] = {a: k for k, a in enumerate(self.roots)}
        self.npos = len(self.positive_roots)

    # -- roots --------------------------------------------------------------
    def pairing(self, beta: Sequence, i: int) -> int:
        """<beta, alpha_i^vee> for a lattice vector beta and 0-based i."""
        return sum(b * self.cartan[i][j] for j, b in enumerate(beta))

    def _positive_roots(self) -> list[Root]:
        n = self.rank
        found = set(self.simple_roots)
        layer = list(self.simple_roots)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    # length of the alpha_i-string below beta
                    p = 0
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    q = p - self.pairing(beta, i)
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        return sorted(found, key=root_sort_key)

    def is_root(self, beta: Sequence) -> bool:
        return tuple(beta) in self.root_index

    def form(self, a: Sequence, b: Sequence) -> Fraction:
        """Normalized symmetric form on the root lattice."""
        return sum((Fraction(x) * self.gram[i][j] * y for i, x in enumerate(a) for j, y in enumerate(b) if x and y), Fraction(0))

    @cached_property
    def killing_gram(self) -> list[list[Fraction]]:
        """Form on h* induced by the Killing form, on the simple roots.

        The Killing form on the coroots is K(h_i, h_j) = sum over roots of
        <alpha, alpha_i^vee><alpha, alpha_j^vee>; the induced form on h* is
        C^T K^{-1} C where C is the Cartan matrix.
        """
        from .exactla import SparseMatrix, inverse

        n = self.rank
        kk = [[Fraction(sum(self.pairing(a, i) * self.pairing(a, j) for a in self.roots)) for j in range(n)] for i in range(n)]
        kinv = inverse(SparseMatrix.from_dense(kk)).to_dense()
        c = self.cartan
        # alpha_j = sum_k c[k][j] * (dual of h_k); so (alpha_a, alpha_b) = sum c[k][a] Kinv[k][l] c[l][b]
        return [[sum(Fraction(c[k][a]) * kinv[k][l] * c[l][b] for k in range(n) for l in range(n)) for b in range(n)] for a in range(n)]

    def killing_form_roots(self, a: Sequence, b: Sequence) -> Fraction:
        kg = self.killing_gram
        return sum((Fraction(x) * kg[i][j] * y for i, x in enumerate(a) for j, y in enumerate(b) if x and y), Fraction(0))

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=lambda a: (sum(a), a))

    def reflect(self, i: int, beta: Sequence) -> Root:
        """s_i(beta) with 0-based i."""
        c = self.pairing(beta, i)
        out = list(beta)
        out[i] -= c
        return tuple(out)

    # -- Weyl group -----------------------------------------------------------
    @cached_property
    def _simple_perms(self) -> list[tuple[int, ...]]:
        return [tuple(self.root_index[self.reflect(i, a)] for a in self.roots) for i in range(self.rank)]

    @cached_property
    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(len(self.roots))))

    def simple_reflection(self, i: int) -> "WeylElement":
        """s_i for a 1-based index."""
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple reflection index {i} outside 1..{self.rank}")
        return WeylElement(self, self._simple_perms[i - 1])

    def from_word(self, word: Iterable[int]) -> "WeylElement":
        w = self.identity
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    @cached_property
    def weyl_elements(self) -> list["WeylElement"]:
        """All of W, breadth first by length."""
        seen = {self.identity.perm: self.identity}
        layer = [self.identity]
        out = [self.identity]
        while layer:
            nxt = []
            for w in layer:
                for i in range(1, self.rank + 1):
                    v = w * self.simple_reflection(i)
                    if v.perm not in seen:
                        seen[v.perm] = v
                        nxt.append(v)
                        if len(seen) > WEYL_SIZE_LIMIT:
                            raise RootSystemError(f"Weyl group of {self.cartan_type} exceeds size limit {WEYL_SIZE_LIMIT}")
            nxt.sort(key=lambda v: (v.length, v.word))
            out.extend(nxt)
            layer = nxt
        out.sort(key=lambda v: (v.length, v.word))
        return out

    @cached_property
    def longest_element(self) -> "WeylElement":
        return longest_in_subgroup(self, range(1, self.rank + 1))

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def neg(a: Sequence[int]) -> Root:
    return tuple(-x for x in a)


def root_sort_key(a: Sequence[int]):
    """Height first, then decreasing lexicographic coefficients.

    With this order the simple roots come first, in index order, and every
    root precedes the roots of larger height.
    """
    return (sum(a), tuple(-x for x in a))


def is_positive(a: Sequence[int]) -> bool:
    return any(x > 0 for x in a)


class WeylElement:
    """An element of W stored as a permutation of the root list."""

    __slots__ = ("rs", "perm", "__dict__")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p, q = self.perm, other.perm
        return WeylElement(self.rs, tuple(p[k] for k in q))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            inv[v] = k
        return WeylElement(self.rs, tuple(inv))

    def act(self, beta: Sequence) -> tuple:
        """w(beta) for an arbitrary lattice (or rational) vector."""
        out = [0] * self.rs.rank
        for i, b in enumerate(beta):
            if b:
                img = self.rs.roots[self.perm[i]]
                for j, x in enumerate(img):
                    out[j] += b * x
        return tuple(out)

    def act_root(self, beta: Root) -> Root:
        return self.rs.roots[self.perm[self.rs.root_index[tuple(beta)]]]

    @cached_property
    def inversion_set(self) -> frozenset:
        """{alpha > 0 : w(alpha) < 0}, i.e. R^+ intersected with w^{-1} R^-."""
        npos = self.rs.npos
        return frozenset(self.rs.roots[k] for k in range(npos) if self.perm[k] >= npos)

    @property
    def length(self) -> int:
        return len(self.inversion_set)

    @cached_property
    def word(self) -> tuple[int, ...]:
        """Reduced word (1-based) by greedy right descents, smallest index first."""
        rs = self.rs
        npos = rs.npos
        letters: list[int] = []
        w = self
        while True:
            for i in range(rs.rank):
                if w.perm[i] >= npos:  # w(alpha_i) < 0
                    letters.append(i + 1)
                    w = w * rs.simple_reflection(i + 1)
                    break
            else:
                break
        return tuple(reversed(letters))

    def is_identity(self) -> bool:
        return self.perm == self.rs.identity.perm

    def __repr__(self) -> str:
        return "e" if not self.word else "s" + "".join(map(str, self.word))


def longest_in_subgroup(rs: RootSystem, indices: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by s_i, i in indices (1-based)."""
    idx = sorted(set(indices))
    w = rs.identity
    npos = rs.npos
    changed = True
    while changed:
        changed = False
        for i in idx:
            if w.perm[i - 1] < npos:  # w(alpha_i) > 0: lengthen
                w = w * rs.simple_reflection(i)
                changed = True
    return w


# ---------------------------------------------------------------------------
# parabolic data

@dataclass(frozen=True)
class ParabolicData:
    """Levi subset I and the induced deformation coordinates.

    ``deform_order`` lists the simple roots not in I in increasing index;
    coordinate k of every exponent vector corresponds to ``deform_order[k]``.
    """

    rs: RootSystem = field(compare=False, repr=False)
    I: frozenset

    def __post_init__(self):
        bad = [i for i in self.I if not 1 <= i <= self.rs.rank]
        if bad:
            raise RootSystemError(f"parabolic indices {bad} out of range 1..{self.rs.rank}")

    @classmethod
    def make(cls, rs: RootSystem, I: Iterable[int] = ()) -> "ParabolicData":
        return cls(rs, frozenset(I))

    @property
    def deform_order(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rs.rank + 1) if i not in self.I)

    @property
    def m(self) -> int:
        return self.rs.rank - len(self.I)

    def __hash__(self) -> int:
        return hash((str(self.rs.cartan_type), self.I))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ParabolicData) and str(self.rs.cartan_type) == str(other.rs.cartan_type) and self.I == other.I

    def label(self) -> str:
        return f"{self.rs.cartan_type}/{{{','.join(map(str, sorted(self.I)))}}}"

    # -- roots of l and u ---------------------------------------------------------
    def is_levi_root(self, a: Sequence[int]) -> bool:
        return all(x == 0 for i, x in enumerate(a) if (i + 1) not in self.I)

    @cached_property
    def levi_positive_roots(self) -> list[Root]:
        return [a for a in self.rs.positive_roots if self.is_levi_root(a)]

    @cached_property
    def nilradical_roots(self) -> list[Root]:
        """R^+(u) in the fixed enumeration order."""
        return [a for a in self.rs.positive_roots if not self.is_levi_root(a)]

    @property
    def N(self) -> int:
        return len(self.nilradical_roots)

    @cached_property
    def w0P(self) -> WeylElement:
        return longest_in_subgroup(self.rs, self.I)

    def in_WP(self, w: WeylElement) -> bool:
        npos = self.rs.npos
        return all(w.perm[i - 1] < npos for i in self.I)

    @cached_property
    def min_coset_reps(self) -> list[WeylElement]:
        return [w for w in self.rs.weyl_elements if self.in_WP(w)]

    def dual(self, w: WeylElement) -> WeylElement:
        if not self.in_WP(w):
            raise RootSystemError(f"{w!r} is not a minimal coset representative")
        return self.rs.longest_element * w * self.w0P

    @cached_property
    def top_element(self) -> WeylElement:
        """Longest element of W^P, namely w0 w0P."""
        return self.rs.longest_element * self.w0P

    # -- exponent vectors --------------------------------------------------------------
    def t_alpha(self, a: Sequence[int]) -> tuple[int, ...]:
        a = tuple(a)
        if a not in self.rs.root_index or not is_positive(a):
            raise RootSystemError(f"{a} is not a positive root")
        return tuple(a[i - 1] for i in self.deform_order)

    def F_B(self, B1: Iterable[Root], B2: Iterable[Root]) -> tuple[int, ...]:
        out = [0] * self.m
        nil = set(self.nilradical_roots)
        for B in (B1, B2):
            for a in B:
                if tuple(a) not in nil:
                    raise RootSystemError(f"{a} is not in R+(u)")
                for k, x in enumerate(self.t_alpha(a)):
                    out[k] += x
        return tuple(out)

    def F_w(self, w: WeylElement) -> tuple[int, ...]:
        if not self.in_WP(w):
            raise RootSystemError(f"{w!r} is not in W^P")
        inv = w.inversion_set
        return self.F_B(inv, inv)

    @cached_property
    def rho_u(self) -> tuple[int, ...]:
        """Sum of the roots of R^+(u)."""
        out = [0] * self.rs.rank
        for a in self.nilradical_roots:
            for i, x in enumerate(a):
                out[i] += x
        return tuple(out)

    def chi_w(self, w: WeylElement) -> tuple[int, ...]:
        inv = w.inversion_set
        out = [0] * self.rs.rank
        for a in self.nilradical_roots:
            if a not in inv:
                for i, x in enumerate(a):
                    out[i] += x
        return tuple(out)

    def eta_w(self, w: WeylElement) -> tuple[int, ...]:
        inv = w.inversion_set
        out = [0] * self.rs.rank
        for a in self.nilradical_roots:
            if a in inv:
                for i, x in enumerate(a):
                    out[i] += x
        return tuple(out)

    def deform_coords(self, weight: Sequence) -> tuple:
        """Coefficients of a weight on the deformation simple roots."""
        return tuple(weight[i - 1] for i in self.deform_order)

    def p_J(self, J: Iterable[int]) -> tuple[Fraction, ...]:
        """Point with coordinate 1 on deformation roots in J, 0 elsewhere.

        J is given by original simple-root indices (a subset of deform_order).
        """
        J = self.check_J(J)
        return tuple(Fraction(int(i in J)) for i in self.deform_order)

    def check_J(self, J: Iterable[int]) -> frozenset:
        J = frozenset(J)
        bad = J - set(self.deform_order)
        if bad:
            raise RootSystemError(f"J contains {sorted(bad)}, which are not deformation indices {self.deform_order}")
        return J

    def all_J(self) -> list[frozenset]:
        from itertools import combinations

        d = self.deform_order
        return [frozenset(c) for k in range(len(d) + 1) for c in combinations(d, k)]

    def z_rho(self, J: Iterable[int]) -> tuple[Fraction, ...]:
        """z_rho in the simple coroot basis: alpha_j(z) = 0 on K = I u J, 1 on the rest.

        Coordinates are the coefficients of z in the basis h_1..h_n of simple
        coroots, so alpha_j(z) = sum_i z_i cartan[i][j].  With J the full set
        of deformation indices there are no unit conditions and zero is
        returned.
        """
        J = self.check_J(J)
        from .exactla import solve

        n = self.rs.rank
        target = {j - 1: Fraction(0 if (j in self.I or j in J) else 1) for j in range(1, n + 1)}
        target = {k: v for k, v in target.items() if v}
        # column i of the system is the functional values alpha_j(h_i) = cartan[i][j]
        cols = [{j: Fraction(self.rs.cartan[i][j]) for j in range(n) if self.rs.cartan[i][j]} for i in range(n)]
        sol = solve(cols, target, n)
        assert sol is not None
        return tuple(sol)

    def weight_on_coroot_vector(self, weight: Sequence, z: Sequence) -> Fraction:
        """lambda(z) for lambda in the simple-root basis and z in the coroot basis."""
        n = self.rs.rank
        return sum((Fraction(weight[j]) * z[i] * self.rs.cartan[i][j] for i in range(n) for j in range(n)), Fraction(0))


def exps_add(*vs: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x) for x in zip(*vs))


def exps_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def evaluate_monomial(exps: Sequence[int], t: Sequence[Fraction]) -> Fraction:
    """prod t_i^{e_i} with 0^0 = 1; negative exponents at zero raise."""
    out = Fraction(1)
    for e, x in zip(exps, t):
        if e == 0:
            continue
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative exponent at a zero coordinate")
            return Fraction(0)
        out *= Fraction(x) ** e
    return out


def build_root_system(ct: CartanType | str) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _cached_root_system(ct)


_RS_CACHE: dict[CartanType, RootSystem] = {}


def _cached_root_system(ct: CartanType) -> RootSystem:
    rs = _RS_CACHE.get(ct)
    if rs is None:
        rs = _RS_CACHE[ct] = RootSystem(ct)
    return rs


def root_system_to_json(rs: RootSystem) -> dict:
    return {
        "type": str(rs.cartan_type),
        "rank": rs.rank,
        "cartan_matrix": rs.cartan,
        "positive_roots": [list(a) for a in rs.positive_roots],
        "weyl_group": [list(w.word) for w in rs.weyl_elements],
    }
