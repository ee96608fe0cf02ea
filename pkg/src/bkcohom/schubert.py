"""Independent oracle for Schubert structure constants.

Equivariant classes xi^u are described by their restrictions to the torus
fixed points (Billey's subword formula).  Products are expanded by a
triangular solve over W ordered by length; for l(w) = l(u) + l(v) the
equivariant coefficient is a constant, so evaluating the whole recursion at a
point where no root vanishes already gives the ordinary constant.  Two such
points are used and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Sequence

from .polys import Poly
from .rootsys import ParabolicData, RootSystem, WeylElement


class OracleError(RuntimeError):
    pass


def pair_index(entries: dict) -> dict:
    """A (u, v, w) -> c table regrouped as (u, v) -> [(w, c)]."""
    idx: dict[tuple, list] = {}
    for (u, v, w), c in entries.items():
        idx.setdefault((u, v), []).append((w, c))
    return idx


def table_product(idx: dict, x: dict, y: dict) -> dict:
    """Product of {w: coefficient} classes, given a pair index of the table."""
    out: dict = {}
    for u, a in x.items():
        if not a:
            continue
        for v, b in y.items():
            if not b:
                continue
            for w, c in idx.get((u, v), ()):
                out[w] = out.get(w, 0) + a * b * c
    return {k: val for k, val in out.items() if val}


def reduced_words(w: WeylElement) -> list[tuple[int, ...]]:
    """All reduced words of w (small groups only)."""
    rs = w.rs

    @lru_cache(maxsize=None)
    def rec(x: WeylElement) -> tuple:
        if x.length == 0:
            return ((),)
        out = []
        for i in range(1, rs.rank + 1):
            s = rs.simple_reflection(i)
            y = x * s
            if y.length < x.length:
                out.extend(wd + (i,) for wd in rec(y))
        return tuple(sorted(set(out)))

    return list(rec(w))


def _word_roots(rs: RootSystem, word: Sequence[int]) -> list[tuple]:
    """beta_j = s_{i_1} ... s_{i_{j-1}} (alpha_{i_j}) over a word."""
    out = []
    prefix = rs.identity
    for i in word:
        a = tuple(int(k == i - 1) for k in range(rs.rank))
        out.append(prefix.act(a))
        prefix = prefix * rs.simple_reflection(i)
    return out


def restriction(u: WeylElement, v: WeylElement, word: Sequence[int] | None = None) -> Poly:
    """xi^u restricted to the fixed point v, as a polynomial in the simple roots."""
    rs = u.rs
    if word is None:
        word = v.word
    word = tuple(word)
    if rs.from_word(word) != v or len(word) != v.length:
        raise OracleError("word is not a reduced word of v")
    n = rs.rank
    betas = [Poly.linear(b) for b in _word_roots(rs, word)]
    total = Poly(n)
    l = u.length
    for sub in combinations(range(len(word)), l):
        if rs.from_word(word[j] for j in sub) != u:
            continue
        term = Poly.const(n, 1)
        for j in sub:
            term = term * betas[j]
        total = total + term
    return total


def _point_values(rs: RootSystem, point: Sequence[Fraction]) -> dict[tuple, Fraction]:
    """Values of xi^u(v) at a point of h (given by the values of the simple roots)."""
    vals = {}
    W = rs.weyl_elements
    for v in W:
        word = v.word
        bvals = [sum((Fraction(c) * p for c, p in zip(b, point)), Fraction(0)) for b in _word_roots(rs, word)]
        acc: dict[WeylElement, Fraction] = {}
        # enumerate subwords; keep those that are reduced
        for mask in range(1 << len(word)):
            sub = [word[j] for j in range(len(word)) if mask >> j & 1]
            x = rs.from_word(sub)
            if x.length != len(sub):
                continue
            prod_ = Fraction(1)
            for j in range(len(word)):
                if mask >> j & 1:
                    prod_ *= bvals[j]
            acc[x] = acc.get(x, Fraction(0)) + prod_
        for x, c in acc.items():
            if c:
                vals[(x, v)] = c
    return vals


def _products_at_point(rs: RootSystem, point: Sequence[Fraction]) -> dict[tuple, Fraction]:
    """Top-degree constants c_{uv}^w from the triangular solve at one point."""
    for a in rs.positive_roots:
        if not sum(Fraction(c) * p for c, p in zip(a, point)):
            raise OracleError("sample point lies on a root hyperplane")
    vals = _point_values(rs, point)
    W = sorted(rs.weyl_elements, key=lambda x: (x.length, x.word))
    out = {}
    for u in W:
        for v in W:
            if u.length + v.length > rs.npos:
                continue
            coef: dict[WeylElement, Fraction] = {}
            for w in W:
                if w.length > u.length + v.length:
                    break
                lhs = vals.get((u, w), Fraction(0)) * vals.get((v, w), Fraction(0))
                for x, c in coef.items():
                    lhs -= c * vals.get((x, w), Fraction(0))
                if lhs:
                    coef[w] = lhs / vals[(w, w)]
            for w, c in coef.items():
                if w.length == u.length + v.length:
                    out[(u, v, w)] = c
    return out


_POINTS = (
    (Fraction(3), Fraction(17), Fraction(101), Fraction(1009)),
    (Fraction(7), Fraction(-29), Fraction(211), Fraction(-2003)),
)


@dataclass
class StructureTable:
    P: ParabolicData
    entries: dict  # (u, v, w) -> Fraction, only nonzero, l(u) + l(v) = l(w)

    def get(self, u: WeylElement, v: WeylElement, w: WeylElement) -> Fraction:
        return self.entries.get((u, v, w), Fraction(0))

    @cached_property
    def pairs(self) -> dict:
        return pair_index(self.entries)

    def product(self, x: dict, y: dict) -> dict:
        """Product of two classes given as {w: coefficient}."""
        return table_product(self.pairs, x, y)


@lru_cache(maxsize=None)
def _gb_constants(rs: RootSystem) -> tuple:
    tabs = []
    for pt in _POINTS:
        p = pt[: rs.rank]
        tabs.append(_products_at_point(rs, p))
    a, b = tabs
    if {k: v for k, v in a.items() if v} != {k: v for k, v in b.items() if v}:
        raise OracleError("triangular solve depends on the sample point")
    return tuple((k, v) for k, v in a.items() if v)


@lru_cache(maxsize=None)
def structure_constants(P: ParabolicData) -> StructureTable:
    """c_{uv}^w for u, v, w in W^P (the G/B constants restricted to W^P)."""
    reps = set(P.min_coset_reps)
    entries = {}
    for (u, v, w), c in _gb_constants(P.rs):
        if u in reps and v in reps:
            if w not in reps:
                raise OracleError("product of W^P classes leaves the W^P span")
            if c.denominator != 1 or c < 0:
                raise OracleError(f"structure constant {c} is not a nonnegative integer")
            entries[(u, v, w)] = c
    return StructureTable(P, entries)


@lru_cache(maxsize=None)
def relabeled_constants(P: ParabolicData) -> StructureTable:
    """d_{uv}^w = c_{u* v*}^{w*}: constants of the Lambda basis."""
    c = structure_constants(P)
    d = P.dual
    return StructureTable(P, {(d(u), d(v), d(w)): x for (u, v, w), x in c.entries.items()})


def is_associative(table: StructureTable, reps: Sequence[WeylElement]) -> bool:
    for a, b, c in product(reps, repeat=3):
        if a.length + b.length + c.length > table.P.N:
            continue
        left = table.product(table.product({a: 1}, {b: 1}), {c: 1})
        right = table.product({a: 1}, table.product({b: 1}, {c: 1}))
        if left != right:
            return False
    return True


# ---------------------------------------------------------------------------
# Littlewood-Richardson brute force (Grassmannians of type A)

def one_line(w: WeylElement) -> tuple[int, ...]:
    """w as a permutation of 1..n+1 for type A_n (s_i swaps i and i+1)."""
    if w.rs.cartan_type.series != "A":
        raise ValueError("one-line notation is only defined in type A")
    n = w.rs.rank + 1
    perm = list(range(1, n + 1))
    for i in w.word:  # w = s_{i1} ... s_{ik}, applied to positions from the right
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def grassmannian_partition(w: WeylElement, k: int) -> tuple[int, ...]:
    """Partition of a Grassmannian permutation (descent at k): lambda_i = w(k+1-i) - (k+1-i)."""
    p = one_line(w)
    return tuple(p[k - i] - (k - i + 1) for i in range(1, k + 1))


def _ssyt_skew(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]):
    cells = [(r, c) for r in range(len(outer)) for c in range(inner[r] if r < len(inner) else 0, outer[r])]
    letters = len(content)
    for fill in product(range(1, letters + 1), repeat=len(cells)):
        if any(fill.count(i + 1) != content[i] for i in range(letters)):
            continue
        tab = dict(zip(cells, fill))
        ok = True
        for (r, c), x in tab.items():
            if (r, c + 1) in tab and tab[(r, c + 1)] < x:
                ok = False
                break
            if (r + 1, c) in tab and tab[(r + 1, c)] <= x:
                ok = False
                break
        if ok:
            yield tab


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Count LR tableaux of shape nu/lam and content mu by brute force."""
    lam, mu, nu = [list(x) for x in (lam, mu, nu)]
    rows = max(len(lam), len(nu))
    lam += [0] * (rows - len(lam))
    nu += [0] * (rows - len(nu))
    if any(a > b for a, b in zip(lam, nu)) or sum(nu) != sum(lam) + sum(mu):
        return 0
    mu = [x for x in mu if x]
    if not mu:
        return int(lam == nu)
    count = 0
    for tab in _ssyt_skew(nu, lam, mu):
        word = [tab[(r, c)] for r in range(rows) for c in sorted((c for (rr, c) in tab if rr == r), reverse=True)]
        seen = [0] * (len(mu) + 1)
        good = True
        for x in word:
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                good = False
                break
        if good:
            count += 1
    return count
