"""Multivariate polynomials with rational coefficients.

Sparse exponent-dict representation in a fixed number of ambient variables.
Supports the exact operations the tropical layer needs: arithmetic,
evaluation, partial and directional derivatives, and substitution of an
affine map (used to restrict to a cell's affine hull or pull back along an
integral affine map).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .util import frac


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        cleaned: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent vector length mismatch")
                c = frac(coeff)
                if c != 0:
                    cleaned[tuple(int(e) for e in exps)] = c
        self.terms = cleaned

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {tuple([0] * nvars): frac(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return Polynomial(nvars, {tuple(exps): Fraction(1)})

    @staticmethod
    def affine(coeffs: Sequence, constant) -> "Polynomial":
        n = len(coeffs)
        terms: dict[tuple[int, ...], Fraction] = {}
        for i, c in enumerate(coeffs):
            c = frac(c)
            if c != 0:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = c
        c0 = frac(constant)
        if c0 != 0:
            terms[tuple([0] * n)] = c0
        return Polynomial(n, terms)

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(tuple([0] * self.nvars), Fraction(0))

    def is_affine(self) -> bool:
        return self.degree() <= 1

    def linear_part(self) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.nvars
        for exps, coeff in self.terms.items():
            if sum(exps) == 1:
                out[exps.index(1)] = coeff
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e)
            parts.append(f"{coeff}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = frac(c)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    # -- calculus ------------------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e:
                new = list(exps)
                new[index] = e - 1
                key = tuple(new)
                terms[key] = terms.get(key, Fraction(0)) + coeff * e
        return Polynomial(self.nvars, terms)

    def directional(self, direction: Sequence) -> "Polynomial":
        """Derivative along a constant vector."""
        out = Polynomial.zero(self.nvars)
        for i, d in enumerate(direction):
            d = frac(d)
            if d != 0:
                out = out + self.partial(i).scale(d)
        return out

    def directional_field(self, field: Sequence["Polynomial"]) -> "Polynomial":
        """Derivative along a polynomial vector field (symbolic contraction)."""
        out = Polynomial.zero(self.nvars)
        for i, w in enumerate(field):
            if not w.is_zero():
                out = out + self.partial(i) * w
        return out

    def antiderivative(self, index: int) -> "Polynomial":
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            new[index] += 1
            terms[tuple(new)] = coeff / new[index]
        return Polynomial(self.nvars, terms)

    # -- evaluation / substitution --------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        pt = [frac(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(pt, exps):
                if e:
                    val *= x**e
            total += val
        return total

    def subs_affine(self, linear_rows: Sequence[Sequence], constants: Sequence) -> "Polynomial":
        """Substitute x_i = sum_j L[i][j] t_j + c_i; result lives in the t variables."""
        n_new = len(linear_rows[0]) if linear_rows else 0
        images = [
            Polynomial.affine([frac(v) for v in row], frac(c))
            for row, c in zip(linear_rows, constants)
        ]
        result = Polynomial.zero(n_new)
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(n_new, coeff)
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = term * images[i]
            result = result + term
        return result


def poly_vector_is_zero(polys: Iterable[Polynomial]) -> bool:
    return all(p.is_zero() for p in polys)
