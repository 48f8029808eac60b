"""Exact rational linear programming.

Two-phase primal simplex over ``Fraction`` with Bland's anti-cycling rule.
Free variables are split into differences of nonnegatives; equalities get
artificial variables in phase one.  Termination is guaranteed because every
pivot is exact and Bland's rule forbids cycles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "OPTIMAL"
UNBOUNDED = "UNBOUNDED"
INFEASIBLE = "INFEASIBLE"

MIN = "MIN"
MAX = "MAX"


class LPResult:
    __slots__ = ("status", "value", "witness")

    def __init__(self, status: str, value: Optional[Fraction] = None, witness: Optional[tuple] = None):
        self.status = status
        self.value = value
        self.witness = witness

    def __repr__(self) -> str:
        return f"LPResult({self.status}, {self.value}, {self.witness})"


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    inv = Fraction(1) / piv
    tableau[row] = [x * inv for x in tableau[row]]
    for i in range(len(tableau)):
        if i != row and tableau[i][col] != 0:
            f = tableau[i][col]
            tableau[i] = [x - f * y for x, y in zip(tableau[i], tableau[row])]
    basis[row] = col


def _simplex(tableau: list[list[Fraction]], basis: list[int], ncols: int) -> str:
    """Maximize the objective in the last tableau row (reduced costs negated)."""
    while True:
        obj = tableau[-1]
        col = None
        for j in range(ncols):
            if obj[j] < 0:
                col = j  # Bland: first improving column
                break
        if col is None:
            return OPTIMAL
        row = None
        best = None
        for i in range(len(tableau) - 1):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row is None:
            return UNBOUNDED
        _pivot(tableau, basis, row, col)


def lp_solve(
    objective: Sequence[Fraction],
    ineqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    eqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    sense: str = MAX,
) -> LPResult:
    """Optimize objective over {x : a.x >= b for ineqs, a.x = b for eqs}.

    Returns OPTIMAL with exact value and a witness point, UNBOUNDED, or
    INFEASIBLE.  Variables are free.
    """
    nvars = len(objective)
    c = [Fraction(x) for x in objective]
    if sense == MIN:
        c = [-x for x in c]
    elif sense != MAX:
        raise ValueError("sense must be MIN or MAX")

    # Standard form: x = u - w with u, w >= 0; a.x >= b becomes a.x - s = b, s >= 0.
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    n_slack = len(ineqs)
    for k, (a, b) in enumerate(ineqs):
        row = [Fraction(x) for x in a] + [-Fraction(x) for x in a] + [Fraction(0)] * n_slack
        row[2 * nvars + k] = Fraction(-1)
        rows.append(row)
        rhs.append(Fraction(b))
    for a, b in eqs:
        row = [Fraction(x) for x in a] + [-Fraction(x) for x in a] + [Fraction(0)] * n_slack
        rows.append(row)
        rhs.append(Fraction(b))

    ncols = 2 * nvars + n_slack
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # Phase one: artificial variable per row, minimize their sum.
    tableau = [rows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [ncols + i for i in range(m)]
    phase1_obj = [Fraction(0)] * (ncols + m) + [Fraction(0)]
    for j in range(ncols + m):
        phase1_obj[j] = Fraction(1) if j >= ncols else Fraction(0)
    # Express objective row in terms of nonbasic variables.
    obj_row = list(phase1_obj)
    for i in range(m):
        obj_row = [x - y for x, y in zip(obj_row, tableau[i] )]
    tableau.append(obj_row)
    _simplex(tableau, basis, ncols + m)
    if -tableau[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # Drive artificials out of the basis where possible; drop their columns.
    for i in range(m):
        if basis[i] >= ncols:
            pivot_col = None
            for j in range(ncols):
                if tableau[i][j] != 0:
                    pivot_col = j
                    break
            if pivot_col is not None:
                _pivot(tableau, basis, i, pivot_col)
    keep = [i for i in range(m) if basis[i] < ncols]
    tableau = [[tableau[i][j] for j in range(ncols)] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase two.
    obj_row = [-x for x in c] + [x for x in c] + [Fraction(0)] * n_slack + [Fraction(0)]
    for i, b in enumerate(basis):
        if obj_row[b] != 0:
            f = obj_row[b]
            obj_row = [x - f * y for x, y in zip(obj_row, tableau[i])]
    tableau.append(obj_row)
    status = _simplex(tableau, basis, ncols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        x[b] = tableau[i][-1]
    witness = tuple(x[j] - x[nvars + j] for j in range(nvars))
    value = tableau[-1][-1]
    if sense == MIN:
        value = -value
    return LPResult(OPTIMAL, value, witness)


def feasible_point(
    ineqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    eqs: Sequence[tuple[Sequence[Fraction], Fraction]],
    nvars: int,
) -> Optional[tuple]:
    result = lp_solve([Fraction(0)] * nvars, ineqs, eqs, MAX)
    if result.status == INFEASIBLE:
        return None
    return result.witness
