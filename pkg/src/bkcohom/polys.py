"""Multivariate polynomials with rational coefficients.

A polynomial is a dict from exponent tuples to nonzero Fractions.  The class
is small on purpose: the engine only needs ring operations, evaluation at
rational points, and the Billey restrictions of the Schubert oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != nvars:
                        raise ValueError("exponent length mismatch")
                    self.terms[tuple(e)] = Fraction(c)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Poly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): Fraction(c) for i, c in enumerate(coeffs) if c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(self.nvars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = Poly(self.nvars)
        p.terms = out
        return p

    def __neg__(self) -> "Poly":
        p = Poly(self.nvars)
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Fraction(other)
            p = Poly(self.nvars)
            if c:
                p.terms = {e: c * x for e, x in self.terms.items()}
            return p
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        p = Poly(self.nvars)
        p.terms = {e: c for e, c in out.items() if c}
        return p

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def divmod_exact(self, divisor: "Poly") -> "Poly":
        """Exact quotient (raises if the division leaves a remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(divisor.terms)
        lc = divisor.terms[lead]
        rem = Poly(self.nvars, self.terms)
        quot = Poly(self.nvars)
        while not rem.is_zero():
            e = max(rem.terms)
            shift = tuple(a - b for a, b in zip(e, lead))
            if any(s < 0 for s in shift):
                raise ArithmeticError("polynomial division is not exact")
            q = Poly(self.nvars, {shift: rem.terms[e] / lc})
            quot = quot + q
            rem = rem - q * divisor
        return quot

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
