"""Exact rational polyhedra in H-representation.

A polyhedron is stored canonically: implicit equalities extracted into a
primitive-integer RREF equality system, inequality normals reduced modulo
the equalities and scaled to primitive integer vectors, duplicates merged,
redundant constraints removed by exact LP, everything sorted.  Two polyhedra
are equal as sets iff their canonical forms coincide, so canonical tuples
double as dictionary keys throughout the complex machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from . import lattice, linalg, lp
from .util import dot, frac, vec

Constraint = tuple[tuple[Fraction, ...], Fraction]

YES = "YES"
NO = "NO"


class GeometryError(Exception):
    pass


class NotAFacet(GeometryError):
    pass


class NotMember(GeometryError):
    pass


def _normalize_ineq(a: Sequence[Fraction], b: Fraction) -> Optional[Constraint]:
    """Scale a.x >= b to a primitive integer normal; None when a = 0."""
    denom = reduce(lambda acc, x: acc * x.denominator // gcd(acc, x.denominator), a, 1)
    ints = [int(x * denom) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    scale = Fraction(denom, g)
    return tuple(Fraction(x // g) for x in ints), frac(b) * scale


class Polyhedron:
    """Canonical rational polyhedron {x : eqs hold, ineqs hold} in Q^rank."""

    __slots__ = ("rank", "eqs", "ineqs", "is_empty", "_dim", "_lattice", "_origin", "_relint")

    def __init__(self, rank: int, eqs: tuple, ineqs: tuple, is_empty: bool):
        self.rank = rank
        self.eqs = eqs
        self.ineqs = ineqs
        self.is_empty = is_empty
        self._dim: Optional[int] = None
        self._lattice = None
        self._origin = None
        self._relint = None

    # -- construction ---------------------------------------------------

    @staticmethod
    def empty(rank: int) -> "Polyhedron":
        return Polyhedron(rank, (), (), True)

    @staticmethod
    def whole_space(rank: int) -> "Polyhedron":
        return Polyhedron(rank, (), (), False)

    @staticmethod
    def from_constraints(rank: int, ineqs: Sequence[tuple], eqs: Sequence[tuple] = ()) -> "Polyhedron":
        raw_ineqs: list[Constraint] = []
        raw_eqs: list[Constraint] = []
        for a, b in eqs:
            c = _normalize_ineq(vec(a), frac(b))
            if c is None:
                if frac(b) != 0:
                    return Polyhedron.empty(rank)
                continue
            raw_eqs.append(c)
        for a, b in ineqs:
            c = _normalize_ineq(vec(a), frac(b))
            if c is None:
                if frac(b) > 0:
                    return Polyhedron.empty(rank)
                continue
            raw_ineqs.append(c)
        return _canonicalize(rank, raw_ineqs, raw_eqs)

    @staticmethod
    def halfspace(a: Sequence, b) -> "Polyhedron":
        return Polyhedron.from_constraints(len(a), [(a, b)])

    # -- identity --------------------------------------------------------

    def key(self):
        return (self.rank, self.is_empty, self.eqs, self.ineqs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyhedron) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if self.is_empty:
            return f"Polyhedron.empty({self.rank})"
        return f"Polyhedron(rank={self.rank}, dim={self.dim}, eqs={len(self.eqs)}, ineqs={len(self.ineqs)})"

    # -- basic geometry ----------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension of the affine hull; -1 for the empty polyhedron."""
        if self.is_empty:
            return -1
        if self._dim is None:
            self._dim = self.rank - len(self.eqs)
        return self._dim

    def direction_lattice(self) -> list[list[int]]:
        """Lattice basis rows of N_sigma = L_sigma cap Z^rank."""
        if self._lattice is None:
            normals = [[int(x) for x in a] for a, _ in self.eqs]
            self._lattice = lattice.saturated_kernel(normals, self.rank) if normals else lattice.identity_matrix(self.rank)
        return self._lattice

    def affine_origin(self) -> tuple[Fraction, ...]:
        """Some rational point on the affine hull."""
        if self._origin is None:
            if not self.eqs:
                self._origin = tuple(Fraction(0) for _ in range(self.rank))
            else:
                sol = linalg.solve([a for a, _ in self.eqs], [b for _, b in self.eqs])
                if sol is None:
                    raise GeometryError("inconsistent canonical equalities")
                self._origin = sol
        return self._origin

    def param(self) -> tuple[tuple[Fraction, ...], list[list[int]]]:
        """Affine-hull parameterization x = origin + sum_j t_j * basis[j]."""
        return self.affine_origin(), self.direction_lattice()

    def param_rows(self) -> tuple[list[list[Fraction]], tuple[Fraction, ...]]:
        """Rows L with x_i = sum_j L[i][j] t_j + origin_i, for Polynomial.subs_affine."""
        origin, basis = self.param()
        rows = [[Fraction(basis[j][i]) for j in range(len(basis))] for i in range(self.rank)]
        return rows, origin

    def contains(self, point: Sequence) -> bool:
        if self.is_empty:
            return False
        pt = vec(point)
        return all(dot(a, pt) == b for a, b in self.eqs) and all(dot(a, pt) >= b for a, b in self.ineqs)

    def relint_contains(self, point: Sequence) -> bool:
        if self.is_empty:
            return False
        pt = vec(point)
        return all(dot(a, pt) == b for a, b in self.eqs) and all(dot(a, pt) > b for a, b in self.ineqs)

    def relint_point(self) -> tuple[Fraction, ...]:
        if self.is_empty:
            raise GeometryError("empty polyhedron has no relative interior point")
        if self._relint is not None:
            return self._relint
        if not self.ineqs:
            self._relint = self.affine_origin()
            return self._relint
        n = self.rank
        obj = [Fraction(0)] * n + [Fraction(1)]
        ineqs = [(tuple(a) + (Fraction(-1),), b) for a, b in self.ineqs]
        ineqs.append((tuple([Fraction(0)] * n) + (Fraction(-1),), Fraction(-1)))
        eqs = [(tuple(a) + (Fraction(0),), b) for a, b in self.eqs]
        res = lp.lp_solve(obj, ineqs, eqs, lp.MAX)
        if res.status != lp.OPTIMAL or res.value <= 0:
            raise GeometryError("canonical polyhedron without strict interior")
        self._relint = res.witness[:n]
        return self._relint

    # -- derived polyhedra ---------------------------------------------

    def intersect(self, other: "Polyhedron") -> "Polyhedron":
        if self.is_empty or other.is_empty:
            return Polyhedron.empty(self.rank)
        return _canonicalize(
            self.rank,
            list(self.ineqs) + list(other.ineqs),
            list(self.eqs) + list(other.eqs),
        )

    def with_equality(self, a: Sequence[Fraction], b: Fraction) -> "Polyhedron":
        c = _normalize_ineq(vec(a), frac(b))
        if c is None:
            return self if frac(b) == 0 else Polyhedron.empty(self.rank)
        return _canonicalize(self.rank, list(self.ineqs), list(self.eqs) + [c])

    def split(self, a: Sequence, b) -> tuple["Polyhedron", "Polyhedron"]:
        """Closed pieces on both sides of the hyperplane a.x = b."""
        av = vec(a)
        bv = frac(b)
        plus = _canonicalize(self.rank, list(self.ineqs) + [_normalize_ineq(av, bv)], list(self.eqs))
        neg = _normalize_ineq(tuple(-x for x in av), -bv)
        minus = _canonicalize(self.rank, list(self.ineqs) + [neg], list(self.eqs))
        return plus, minus

    def translate(self, v: Sequence) -> "Polyhedron":
        if self.is_empty:
            return self
        vv = vec(v)
        return Polyhedron(
            self.rank,
            tuple((a, b + dot(a, vv)) for a, b in self.eqs),
            tuple((a, b + dot(a, vv)) for a, b in self.ineqs),
            False,
        )

    def recession_cone(self) -> "Polyhedron":
        if self.is_empty:
            return Polyhedron.empty(self.rank)
        return Polyhedron.from_constraints(
            self.rank,
            [(a, Fraction(0)) for a, _ in self.ineqs],
            [(a, Fraction(0)) for a, _ in self.eqs],
        )

    def is_bounded(self) -> bool:
        return self.is_empty or self.recession_cone().dim == 0

    def is_cone(self) -> bool:
        return not self.is_empty and all(b == 0 for _, b in self.eqs) and all(b == 0 for _, b in self.ineqs)

    def facets(self) -> list["Polyhedron"]:
        """All codimension-one faces (one per irredundant inequality)."""
        out = []
        seen = set()
        for a, b in self.ineqs:
            f = self.with_equality(a, b)
            if not f.is_empty and f.dim == self.dim - 1 and f.key() not in seen:
                seen.add(f.key())
                out.append(f)
        return out

    def faces(self, codim: int) -> list["Polyhedron"]:
        """Faces of the given codimension, canonicalized and deduplicated."""
        if self.is_empty:
            raise GeometryError("faces of the empty polyhedron are undefined")
        current = {self.key(): self}
        for _ in range(codim):
            nxt: dict = {}
            for cell in current.values():
                for f in cell.facets():
                    nxt[f.key()] = f
            current = nxt
        return list(current.values())

    def all_faces(self) -> list["Polyhedron"]:
        """The full face lattice, from the polyhedron itself downwards."""
        out = {self.key(): self}
        frontier = [self]
        while frontier:
            nxt = []
            for cell in frontier:
                for f in cell.facets():
                    if f.key() not in out:
                        out[f.key()] = f
                        nxt.append(f)
            frontier = nxt
        return list(out.values())

    def local_cone(self, omega: Sequence) -> "Polyhedron":
        """LC_omega: tight constraints at omega, recentred at the origin."""
        pt = vec(omega)
        if not self.contains(pt):
            raise NotMember("local cone base point is not in the polyhedron")
        ineqs = [(a, Fraction(0)) for a, b in self.ineqs if dot(a, pt) == b]
        eqs = [(a, Fraction(0)) for a, _ in self.eqs]
        return Polyhedron.from_constraints(self.rank, ineqs, eqs)

    def vertices(self) -> list[tuple[Fraction, ...]]:
        """All vertices, by exhausting tight inequality subsets (small cells only)."""
        import itertools

        if self.is_empty:
            return []
        d = self.dim
        if d == 0:
            return [self.affine_origin()]
        out = []
        seen = set()
        for combo in itertools.combinations(range(len(self.ineqs)), d):
            rows = [a for a, _ in self.eqs] + [self.ineqs[i][0] for i in combo]
            rhs = [b for _, b in self.eqs] + [self.ineqs[i][1] for i in combo]
            if linalg.rank(rows) != self.rank:
                continue
            sol = linalg.solve(rows, rhs)
            if sol is None or sol in seen:
                continue
            if self.contains(sol):
                seen.add(sol)
                out.append(sol)
        return sorted(out)

    def is_integral(self) -> bool:
        """Integral R-affine always holds here; integral Gamma-affine with Gamma = Q too."""
        return not self.is_empty


def _canonicalize(rank: int, ineqs: list, eqs: list) -> Polyhedron:
    ineqs = [c for c in ineqs if c is not None]
    eqs = [c for c in eqs if c is not None]

    if lp.feasible_point(ineqs, eqs, rank) is None:
        return Polyhedron.empty(rank)

    # Implicit equalities: an inequality tight on the whole polyhedron.
    pending = list(ineqs)
    strict: list[Constraint] = []
    eq_list = list(eqs)
    for a, b in pending:
        res = lp.lp_solve(a, pending, eq_list, lp.MAX)
        if res.status == lp.OPTIMAL and res.value == b:
            eq_list.append((a, b))
        else:
            strict.append((a, b))

    # Canonical equality system: RREF with primitive integer rows.
    eq_rows = []
    if eq_list:
        red, _ = linalg.rref([list(a) + [b] for a, b in eq_list])
        for row in red:
            c = _normalize_ineq(row[:rank], row[rank])
            if c is None:
                continue
            a, b = c
            if a[next(i for i, x in enumerate(a) if x != 0)] < 0:
                a = tuple(-x for x in a)
                b = -b
            eq_rows.append((a, b))
        eq_rows.sort()

    # Reduce inequality normals modulo the equality rows.
    reduced: dict[tuple, Fraction] = {}
    pivots = []
    for a, b in eq_rows:
        pivots.append((next(i for i, x in enumerate(a) if x != 0), (a, b)))
    for a, b in strict:
        av = list(map(Fraction, a))
        bv = b
        for piv, (ea, eb) in pivots:
            if av[piv] != 0:
                f = av[piv] / ea[piv]
                av = [x - f * y for x, y in zip(av, ea)]
                bv = bv - f * eb
        c = _normalize_ineq(av, bv)
        if c is None:
            continue
        na, nb = c
        if na in reduced:
            reduced[na] = max(reduced[na], nb)
        else:
            reduced[na] = nb

    # Remove redundant inequalities by exact LP.
    kept = sorted(reduced.items())
    irredundant: list[Constraint] = []
    for i, (a, b) in enumerate(kept):
        others = [c for c in irredundant] + [kept[j] for j in range(i + 1, len(kept))]
        res = lp.lp_solve(a, others, eq_rows, lp.MIN)
        if res.status == lp.OPTIMAL and res.value >= b:
            continue
        irredundant.append((a, b))

    return Polyhedron(rank, tuple(eq_rows), tuple(sorted(irredundant)), False)


def lp_optimize(objective: Sequence, region: Polyhedron, sense: str) -> lp.LPResult:
    """Exact rational optimum of a linear objective over a polyhedron."""
    if region.is_empty:
        return lp.LPResult(lp.INFEASIBLE)
    return lp.lp_solve(vec(objective), list(region.ineqs), list(region.eqs), sense)


def displaced_meets(sigma: Polyhedron, sigma_prime: Polyhedron, v: Sequence) -> str:
    """YES iff sigma cap (sigma' + eps*v) is nonempty for all small eps > 0.

    Decided exactly on E = {eps >= 0 : sigma cap (sigma' + eps v) nonempty},
    a closed interval: requires inf E = 0 and sup E > 0.
    """
    if sigma.is_empty or sigma_prime.is_empty:
        return NO
    r = sigma.rank
    vv = vec(v)
    # Variables (x, eps): x in sigma, x - eps*v in sigma'.
    ineqs = [(tuple(a) + (Fraction(0),), b) for a, b in sigma.ineqs]
    eqs = [(tuple(a) + (Fraction(0),), b) for a, b in sigma.eqs]
    for a, b in sigma_prime.ineqs:
        ineqs.append((tuple(a) + (-dot(a, vv),), b))
    for a, b in sigma_prime.eqs:
        eqs.append((tuple(a) + (-dot(a, vv),), b))
    eps_nonneg = tuple([Fraction(0)] * r) + (Fraction(1),)
    ineqs.append((eps_nonneg, Fraction(0)))
    obj = [Fraction(0)] * r + [Fraction(1)]
    low = lp.lp_solve(obj, ineqs, eqs, lp.MIN)
    if low.status != lp.OPTIMAL or low.value != 0:
        return NO
    high = lp.lp_solve(obj, ineqs, eqs, lp.MAX)
    if high.status == lp.UNBOUNDED or (high.status == lp.OPTIMAL and high.value > 0):
        return YES
    return NO
