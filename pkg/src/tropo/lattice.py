"""Exact integer lattice algebra.

Normal forms (Hermite, Smith) with unimodular witnesses, saturated kernels,
lattice indices of sublattice sums, and the projection identity for lattice
indices that underpins the push-forward multiplicities.  All matrices are
lists of int rows; arithmetic never leaves the integers/rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import linalg

IntRow = list
IntMatrix = list

INFINITE = "INFINITE"


class LatticeError(Exception):
    pass


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return g, x, y


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hermite_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row HNF: returns (H, U) with H = U @ matrix and U unimodular.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced to the range [0, pivot).
    """
    h = [list(map(int, row)) for row in matrix]
    m = len(h)
    u = identity_matrix(m)
    if m == 0:
        return h, u
    n = len(h[0])
    r = 0
    for c in range(n):
        # Clear column c below row r with unimodular 2x2 row transforms.
        for i in range(r + 1, m):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            if a == 0:
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
                continue
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            h[r], h[i] = (
                [x * hr + y * hi for hr, hi in zip(h[r], h[i])],
                [-q * hr + p * hi for hr, hi in zip(h[r], h[i])],
            )
            u[r], u[i] = (
                [x * ur + y * ui for ur, ui in zip(u[r], u[i])],
                [-q * ur + p * ui for ur, ui in zip(u[r], u[i])],
            )
        if r < m and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            piv = h[r][c]
            for i in range(r):
                q = h[i][c] // piv
                if q:
                    h[i] = [hi - q * hr for hi, hr in zip(h[i], h[r])]
                    u[i] = [ui - q * ur for ui, ur in zip(u[i], u[r])]
            r += 1
            if r == m:
                break
    return h, u


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: (S, U, V) with S = U @ matrix @ V diagonal, d_i | d_{i+1}."""
    s = [list(map(int, row)) for row in matrix]
    m = len(s)
    n = len(s[0]) if m else 0
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_op(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        s[i], s[j] = (
            [a * si + b * sj for si, sj in zip(s[i], s[j])],
            [c * si + d * sj for si, sj in zip(s[i], s[j])],
        )
        u[i], u[j] = (
            [a * ui + b * uj for ui, uj in zip(u[i], u[j])],
            [c * ui + d * uj for ui, uj in zip(u[i], u[j])],
        )

    def col_op(i: int, j: int, a: int, b: int, c: int, d: int) -> None:
        for row in s:
            row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]
        for row in v:
            row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]

    def pivot_block(t: int) -> None:
        while True:
            # Move a nonzero entry to (t, t).
            pos = None
            for i in range(t, m):
                for j in range(t, n):
                    if s[i][j] != 0:
                        pos = (i, j)
                        break
                if pos:
                    break
            if pos is None:
                return
            i, j = pos
            if i != t:
                row_op(t, i, 0, 1, 1, 0)
            if j != t:
                col_op(t, j, 0, 1, 1, 0)
            # Clear column t and row t with gcd transforms.
            dirty = False
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    a, b = s[t][t], s[i][t]
                    g, x, y = _xgcd(a, b)
                    row_op(t, i, x, y, -(b // g), a // g)
                    dirty = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    a, b = s[t][t], s[t][j]
                    g, x, y = _xgcd(a, b)
                    col_op(t, j, x, y, -(b // g), a // g)
                    dirty = True
            if not dirty:
                return

    t = 0
    while t < min(m, n):
        pivot_block(t)
        if s[t][t] == 0:
            break
        t += 1

    k = t
    # Enforce the divisibility chain d_1 | d_2 | ... | d_k.
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = s[i][i], s[i + 1][i + 1]
            if b % a != 0:
                # Fold column i+1 into column i, then re-diagonalize the block.
                col_op(i, i + 1, 1, 0, 1, 1)
                g, x, y = _xgcd(s[i][i], s[i + 1][i])
                row_op(i, i + 1, x, y, -(s[i + 1][i] // g), s[i][i] // g)
                for j in (i, i + 1):
                    if s[i][j] != 0 and j != i:
                        a2, b2 = s[i][i], s[i][j]
                        g2, x2, y2 = _xgcd(a2, b2)
                        col_op(i, j, x2, y2, -(b2 // g2), a2 // g2)
                if s[i + 1][i] != 0:
                    a2, b2 = s[i][i], s[i + 1][i]
                    g2, x2, y2 = _xgcd(a2, b2)
                    row_op(i, i + 1, x2, y2, -(b2 // g2), a2 // g2)
                if s[i][i + 1] != 0:
                    a2, b2 = s[i][i], s[i][i + 1]
                    g2, x2, y2 = _xgcd(a2, b2)
                    col_op(i, i + 1, x2, y2, -(b2 // g2), a2 // g2)
                changed = True
    for i in range(k):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return s, u, v


def saturated_kernel(matrix: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[IntRow]:
    """Basis of ker(matrix : Z^cols -> Z^rows); automatically saturated."""
    rows = [list(map(int, row)) for row in matrix]
    if ncols is None:
        if not rows:
            raise LatticeError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if not rows or all(all(x == 0 for x in row) for row in rows):
        return [list(row) for row in identity_matrix(ncols)]
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    h, u = hermite_normal_form(transpose)
    kernel = [u[i] for i in range(ncols) if all(x == 0 for x in h[i])]
    return [list(row) for row in kernel]


def span_basis(gens: Sequence[Sequence[int]], ncols: int) -> list[IntRow]:
    """Lattice basis (HNF rows) of the integer span of the generators."""
    gens = [list(map(int, g)) for g in gens if any(g)]
    if not gens:
        return []
    h, _ = hermite_normal_form(gens)
    return [row for row in h if any(row)]


def saturate(gens: Sequence[Sequence[int]], ncols: int) -> list[IntRow]:
    """Basis of span_Q(gens) chosen to generate span_Q(gens) cap Z^ncols."""
    basis = span_basis(gens, ncols)
    if not basis:
        return []
    ann = saturated_kernel(basis, ncols)
    if not ann:
        return [list(row) for row in identity_matrix(ncols)]
    return saturated_kernel(ann, ncols)


def is_saturated(gens: Sequence[Sequence[int]], ncols: int) -> bool:
    basis = span_basis(gens, ncols)
    if not basis:
        return True
    s, _, _ = smith_normal_form(basis)
    return all(s[i][i] == 1 for i in range(len(basis)))


def lattice_index(ambient_rank: int, gens_a: Sequence[Sequence[int]], gens_b: Sequence[Sequence[int]]):
    """Group index [Z^r : <gens_a> + <gens_b>]; INFINITE when not finite."""
    stacked = [list(map(int, g)) for g in list(gens_a) + list(gens_b)]
    if not stacked:
        return INFINITE if ambient_rank > 0 else Fraction(1)
    s, _, _ = smith_normal_form(stacked)
    diag = [s[i][i] for i in range(min(len(s), ambient_rank))]
    if len(diag) < ambient_rank or any(d == 0 for d in diag):
        return INFINITE
    result = 1
    for d in diag:
        result *= d
    return Fraction(result)


def sublattice_index(big_gens: Sequence[Sequence[int]], small_gens: Sequence[Sequence[int]], ncols: int):
    """Index [B : S] for lattices S <= B of equal rank; INFINITE otherwise."""
    big = span_basis(big_gens, ncols)
    small = span_basis(small_gens, ncols)
    if len(small) < len(big):
        return INFINITE
    if len(small) > len(big):
        raise LatticeError("small lattice has larger rank than big lattice")
    if not big:
        return Fraction(1)
    coeffs = []
    for s_row in small:
        c = linalg.solve_in_span([tuple(map(Fraction, row)) for row in big], tuple(map(Fraction, s_row)))
        if c is None:
            return INFINITE
        if any(x.denominator != 1 for x in c):
            raise LatticeError("small lattice is not contained in big lattice")
        coeffs.append(list(c))
    d = linalg.det(coeffs)
    if d == 0:
        return INFINITE
    return abs(d)


def lattice_intersection(gens_a: Sequence[Sequence[int]], gens_b: Sequence[Sequence[int]], ncols: int) -> list[IntRow]:
    """Basis of <gens_a> cap <gens_b>."""
    a = span_basis(gens_a, ncols)
    b = span_basis(gens_b, ncols)
    if not a or not b:
        return []
    # x in both spans:  x = u A = w B; kernel of [A^T | -B^T], projected to u A.
    eqs = []
    for coord in range(ncols):
        row = [a[i][coord] for i in range(len(a))] + [-b[j][coord] for j in range(len(b))]
        eqs.append(row)
    kernel = saturated_kernel(eqs, len(a) + len(b))
    vectors = []
    for k in kernel:
        x = [sum(k[i] * a[i][c] for i in range(len(a))) for c in range(ncols)]
        vectors.append(x)
    return span_basis(vectors, ncols)


def preimage_lattice(f_rows: Sequence[Sequence[int]], q_gens: Sequence[Sequence[int]], domain_rank: int) -> list[IntRow]:
    """Basis of {x in Z^domain : F x in <q_gens>} for integer F (rows act on x)."""
    target_rank = len(f_rows)
    qb = span_basis(q_gens, target_rank)
    eqs = []
    for i in range(target_rank):
        row = [f_rows[i][j] for j in range(domain_rank)] + [-qb[k][i] for k in range(len(qb))]
        eqs.append(row)
    kernel = saturated_kernel(eqs, domain_rank + len(qb))
    vectors = [k[:domain_rank] for k in kernel]
    return span_basis(vectors, domain_rank)


def image_gens(f_rows: Sequence[Sequence[int]], gens: Sequence[Sequence[int]]) -> list[IntRow]:
    return [[sum(f_rows[i][j] * g[j] for j in range(len(g))) for i in range(len(f_rows))] for g in gens]


def lattice_projection_identity(
    f_rows: Sequence[Sequence[int]],
    p_prime_gens: Sequence[Sequence[int]],
    q_gens: Sequence[Sequence[int]],
) -> tuple[Fraction, Fraction]:
    """Both sides of the projection identity for lattice indices.

    For F : N' -> N and subgroups P' <= N', Q <= N with
    rk F(N') = rk N = rk(F(P') + Q), evaluates

        [span F(P') cap Q : F(P' cap F^-1 Q)] [N' : P' + F^-1 Q] [N : F(N') + Q]

    against

        [N : (span F(P') cap N) + Q] [span F(P') cap N : F(P')].

    Raises LatticeError when a rank hypothesis fails (an index is infinite).
    """
    target_rank = len(f_rows)
    domain_rank = len(f_rows[0]) if f_rows else 0
    fp = span_basis(image_gens(f_rows, p_prime_gens), target_rank)
    fn = span_basis(image_gens(f_rows, identity_matrix(domain_rank)), target_rank)
    q = span_basis(q_gens, target_rank)
    if linalg.rank([tuple(map(Fraction, r)) for r in fn]) != target_rank:
        raise LatticeError("PRECONDITION_VIOLATED: rk F(N') < rk N")
    if linalg.rank([tuple(map(Fraction, r)) for r in fp + q]) != target_rank:
        raise LatticeError("PRECONDITION_VIOLATED: rk (F(P') + Q) < rk N")

    fp_saturated = saturate(fp, target_rank)
    span_fp_cap_q = lattice_intersection(fp_saturated, q, target_rank)
    fp_cap_q = lattice_intersection(fp, q, target_rank)
    preimage_q = preimage_lattice(f_rows, q, domain_rank)

    lhs1 = sublattice_index(span_fp_cap_q, fp_cap_q, target_rank)
    lhs2 = sublattice_index(identity_matrix(domain_rank), span_basis(p_prime_gens + preimage_q, domain_rank), domain_rank)
    lhs3 = lattice_index(target_rank, fn, q)
    rhs1 = lattice_index(target_rank, fp_saturated, q)
    rhs2 = sublattice_index(fp_saturated, fp, target_rank)
    for value in (lhs1, lhs2, lhs3, rhs1, rhs2):
        if value == INFINITE:
            raise LatticeError("PRECONDITION_VIOLATED: an index in the identity is infinite")
    return lhs1 * lhs2 * lhs3, rhs1 * rhs2


def primitive_vector(v: Sequence[int]) -> list[int]:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    if g == 0:
        raise LatticeError("zero vector has no primitive form")
    return [int(x) // g for x in v]
