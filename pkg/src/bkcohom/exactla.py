"""Exact sparse linear algebra over the rationals.

Matrices are stored row-wise as ``{row: {col: Fraction}}`` with no stored
zeros.  Elimination runs on integer rows (denominators cleared, contents
divided out after every update) so intermediate growth stays bounded, and
pivots are chosen deterministically: we walk the columns left to right and
take the remaining row of smallest index with a nonzero entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Vector = dict  # sparse vector: {index: Fraction}


class DimensionError(ValueError):
    pass


def _clean(vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {k: Fraction(v) for k, v in vec.items() if v != 0}


class SparseMatrix:
    """Sparse exact rational matrix."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, Fraction]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, Fraction]] = {}
        if rows:
            for i, row in rows.items():
                if not 0 <= i < nrows:
                    raise DimensionError(f"row index {i} out of range")
                r = _clean(row)
                for j in r:
                    if not 0 <= j < ncols:
                        raise DimensionError(f"column index {j} out of range")
                if r:
                    self.rows[i] = r

    # -- construction -----------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "SparseMatrix":
        return cls(nrows, ncols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {i: {j: Fraction(x) for j, x in enumerate(r) if x} for i, r in enumerate(data)})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        rows: dict[int, dict[int, Fraction]] = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    rows.setdefault(i, {})[j] = Fraction(x)
        return cls(nrows, len(columns), rows)

    def copy(self) -> "SparseMatrix":
        m = SparseMatrix(self.nrows, self.ncols)
        m.rows = {i: dict(r) for i, r in self.rows.items()}
        return m

    # -- access -----------------------------------------------------------
    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.rows.get(i, {}).get(j, Fraction(0))

    def entries(self) -> Iterable[tuple[int, int, Fraction]]:
        for i in sorted(self.rows):
            row = self.rows[i]
            for j in sorted(row):
                yield i, j, row[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, j, x in self.entries():
            out[i][j] = x
        return out

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: r[j] for i, r in self.rows.items() if j in r}

    def columns(self) -> list[dict[int, Fraction]]:
        cols: list[dict[int, Fraction]] = [{} for _ in range(self.ncols)]
        for i, r in self.rows.items():
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- arithmetic -------------------------------------------------------
    def transpose(self) -> "SparseMatrix":
        rows: dict[int, dict[int, Fraction]] = {}
        for i, r in self.rows.items():
            for j, x in r.items():
                rows.setdefault(j, {})[i] = x
        m = SparseMatrix(self.ncols, self.nrows)
        m.rows = rows
        return m

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in addition")
        out = self.copy()
        for i, r in other.rows.items():
            tgt = out.rows.setdefault(i, {})
            for j, x in r.items():
                y = tgt.get(j, 0) + x
                if y:
                    tgt[j] = y
                else:
                    tgt.pop(j, None)
            if not tgt:
                del out.rows[i]
        return out

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = Fraction(c)
        m = SparseMatrix(self.nrows, self.ncols)
        if c:
            m.rows = {i: {j: c * x for j, x in r.items()} for i, r in self.rows.items()}
        return m

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        rows: dict[int, dict[int, Fraction]] = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: dict[int, Fraction] = {}
            for k, x in r.items():
                ok = orows.get(k)
                if not ok:
                    continue
                for j, y in ok.items():
                    acc[j] = acc.get(j, 0) + x * y
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        m = SparseMatrix(self.nrows, other.ncols)
        m.rows = rows
        return m

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Matrix times sparse column vector."""
        out: dict[int, Fraction] = {}
        for i, r in self.rows.items():
            s = Fraction(0)
            for j, x in r.items():
                y = vec.get(j)
                if y:
                    s += x * y
            if s:
                out[i] = s
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        out: dict[int, dict[int, Fraction]] = {}
        for r, a in rpos.items():
            row = self.rows.get(r)
            if not row:
                continue
            nr = {cpos[c]: x for c, x in row.items() if c in cpos}
            if nr:
                out[a] = nr
        m = SparseMatrix(len(rows), len(cols))
        m.rows = out
        return m


# ---------------------------------------------------------------------------
# fraction-free elimination

def _to_int_row(row: Mapping[int, Fraction]) -> dict[int, int]:
    den = 1
    for x in row.values():
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    irow = {j: int(Fraction(x) * den) for j, x in row.items() if x}
    return _primitive(irow)


def _primitive(irow: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in irow.values():
        g = gcd(g, x)
        if g == 1:
            return irow
    if g > 1:
        return {j: x // g for j, x in irow.items()}
    return irow


def _eliminate(piv_row: dict[int, int], col: int, row: dict[int, int]) -> dict[int, int]:
    """Return ``p*row - a*piv_row`` (made primitive), killing ``row[col]``."""
    p = piv_row[col]
    a = row[col]
    g = gcd(p, a)
    p //= g
    a //= g
    out = {j: p * x for j, x in row.items()}
    for j, x in piv_row.items():
        y = out.get(j, 0) - a * x
        if y:
            out[j] = y
        else:
            out.pop(j, None)
    return _primitive(out)


def rref(m: SparseMatrix) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows[k]`` has a 1 in column
    ``pivots[k]`` and zeros in every other pivot column.
    """
    work: dict[int, dict[int, int]] = {i: _to_int_row(r) for i, r in m.rows.items() if r}
    by_col: dict[int, set[int]] = {}
    for i, r in work.items():
        for j in r:
            by_col.setdefault(j, set()).add(i)

    pivot_rows: list[tuple[int, dict[int, int]]] = []
    for col in range(m.ncols):
        cands = by_col.get(col)
        if not cands:
            continue
        pi = min(cands)
        prow = work.pop(pi)
        for j in prow:
            by_col[j].discard(pi)
        for i in sorted(by_col.get(col, ())):
            old = work[i]
            new = _eliminate(prow, col, old)
            for j in old:
                if j not in new:
                    by_col[j].discard(i)
            for j in new:
                if j not in old:
                    by_col.setdefault(j, set()).add(i)
            if new:
                work[i] = new
            else:
                del work[i]
        pivot_rows.append((col, prow))

    # back substitution, last pivot first
    for k in range(len(pivot_rows) - 1, -1, -1):
        col, prow = pivot_rows[k]
        for k2 in range(k):
            c2, r2 = pivot_rows[k2]
            if col in r2:
                pivot_rows[k2] = (c2, _eliminate(prow, col, r2))

    rows: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for col, prow in pivot_rows:
        p = prow[col]
        rows.append({j: Fraction(x, p) for j, x in prow.items()})
        pivots.append(col)
    return rows, pivots


def rank(m: SparseMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: SparseMatrix) -> list[dict[int, Fraction]]:
    """Basis of the right kernel; vector ``k`` has a 1 at its free column."""
    rows, pivots = rref(m)
    pivset = set(pivots)
    out = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for r, p in zip(rows, pivots):
            x = r.get(f)
            if x:
                v[p] = -x
        out.append(v)
    return out


def column_space_basis(m: SparseMatrix) -> list[dict[int, Fraction]]:
    """Independent columns of ``m`` spanning its image (pivot columns)."""
    _, pivots = rref(m)
    cols = m.columns()
    return [cols[j] for j in pivots]


def span_dimension(vectors: Sequence[Mapping[int, Fraction]], dim: int) -> int:
    return rank(SparseMatrix.from_columns(dim, list(vectors)).transpose())


def in_span(v: Mapping[int, Fraction], basis: Sequence[Mapping[int, Fraction]], dim: int | None = None) -> bool:
    if dim is None:
        idx = [i for b in list(basis) + [v] for i in b]
        dim = (max(idx) + 1) if idx else 0
    _check_dim([v, *basis], dim)
    r0 = span_dimension(basis, dim)
    return span_dimension(list(basis) + [v], dim) == r0


def intersection_dimension(a: Sequence[Mapping[int, Fraction]], b: Sequence[Mapping[int, Fraction]], dim: int) -> int:
    return span_dimension(a, dim) + span_dimension(b, dim) - span_dimension(list(a) + list(b), dim)


def _check_dim(vectors: Iterable[Mapping[int, Fraction]], dim: int) -> None:
    for v in vectors:
        for i in v:
            if not 0 <= i < dim:
                raise DimensionError(f"coordinate {i} outside ambient dimension {dim}")


def solve(columns: Sequence[Mapping[int, Fraction]], rhs: Mapping[int, Fraction], dim: int) -> list[Fraction] | None:
    """One solution ``x`` of ``sum x_j columns[j] = rhs`` (free variables 0), or None."""
    _check_dim([rhs, *columns], dim)
    n = len(columns)
    aug = SparseMatrix.from_columns(dim, list(columns) + [rhs])
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, p in zip(rows, pivots):
        x[p] = r.get(n, Fraction(0))
    return x


def solve_affine(v: Mapping[int, Fraction], basis: Sequence[Mapping[int, Fraction]],
                 subspace: Sequence[Mapping[int, Fraction]], dim: int) -> list[Fraction] | None:
    """Coefficients ``a`` with ``v - sum a_w basis[w]`` in ``span(subspace)``, or None."""
    sol = solve(list(basis) + list(subspace), v, dim)
    if sol is None:
        return None
    return sol[: len(basis)]


class ColumnSolver:
    """Repeated solves against a fixed set of independent columns.

    The columns are restricted to a set of rows on which they are already
    independent; that square block is inverted once, and each right-hand side
    then costs a single matrix-vector product plus an exact membership check.
    """

    def __init__(self, columns: Sequence[Mapping[int, Fraction]], dim: int):
        self.columns = [dict(c) for c in columns]
        self.dim = dim
        n = len(self.columns)
        a = SparseMatrix.from_columns(dim, self.columns)
        _, rowsel = rref(a.transpose())
        if len(rowsel) != n:
            raise ValueError("columns are linearly dependent")
        self.rowsel = rowsel
        sq = a.submatrix(rowsel, list(range(n)))
        self.inverse = inverse(sq)

    def solve(self, rhs: Mapping[int, Fraction], check: bool = True) -> list[Fraction] | None:
        b = {k: rhs[r] for k, r in enumerate(self.rowsel) if r in rhs and rhs[r]}
        x = self.inverse.apply(b)
        sol = [x.get(j, Fraction(0)) for j in range(len(self.columns))]
        if check:
            acc: dict[int, Fraction] = {}
            for c, coef in zip(self.columns, sol):
                if coef:
                    for i, y in c.items():
                        acc[i] = acc.get(i, 0) + coef * y
            diff = {i: acc.get(i, 0) - rhs.get(i, 0) for i in set(acc) | set(rhs)}
            if any(diff.values()):
                return None
        return sol


def inverse(m: SparseMatrix) -> SparseMatrix:
    if m.nrows != m.ncols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.nrows
    aug_rows = {}
    for i in range(n):
        row = dict(m.rows.get(i, {}))
        row[n + i] = Fraction(1)
        aug_rows[i] = row
    rows, pivots = rref(SparseMatrix(n, 2 * n, aug_rows))
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    out = {p: {j - n: x for j, x in r.items() if j >= n} for r, p in zip(rows, pivots)}
    return SparseMatrix(n, n, out)


def vec_add(a: Mapping[int, Fraction], b: Mapping[int, Fraction], c=1) -> dict[int, Fraction]:
    out = {i: x for i, x in a.items() if x}
    for i, x in b.items():
        y = out.get(i, 0) + c * x
        if y:
            out[i] = y
        else:
            out.pop(i, None)
    return out


def vec_scale(a: Mapping[int, Fraction], c) -> dict[int, Fraction]:
    c = Fraction(c)
    return {i: c * x for i, x in a.items()} if c else {}
