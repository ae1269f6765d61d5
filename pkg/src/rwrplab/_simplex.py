"""Small exact-arithmetic linear program solver.

All geometry questions in this package (cone membership, face
enumeration, separating vectors, l1 distances to faces) reduce to tiny
linear programs with rational data.  Floating point LP solutions would
need a-posteriori rational verification, so we solve exactly instead:
a dense two-phase simplex over ``fractions.Fraction`` with Bland's rule
(deterministic, no cycling; ties resolve to the lowest variable index,
which is the step order of the caller).

Problems here have at most a few dozen variables and constraints, so
the O(m*n) Fraction tableau work is never a bottleneck.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Frac = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _to_frac_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def solve_lp(
    objective: Sequence,
    *,
    maximize: bool = False,
    a_eq: Sequence[Sequence] | None = None,
    b_eq: Sequence | None = None,
    a_ub: Sequence[Sequence] | None = None,
    b_ub: Sequence | None = None,
    nonneg: Sequence[bool] | None = None,
) -> LPResult:
    """Solve min (or max) c.x subject to a_eq x = b_eq, a_ub x <= b_ub.

    Variables are nonnegative unless ``nonneg[i]`` is False, in which
    case variable i is free (internally split into a difference of two
    nonnegative variables).
    """
    c = [Fraction(v) for v in objective]
    n = len(c)
    aeq = _to_frac_matrix(a_eq) if a_eq is not None else []
    beq = [Fraction(v) for v in (b_eq or [])]
    aub = _to_frac_matrix(a_ub) if a_ub is not None else []
    bub = [Fraction(v) for v in (b_ub or [])]
    if nonneg is None:
        nonneg = [True] * n
    if len(nonneg) != n:
        raise ValueError("nonneg mask length mismatch")

    # Map original variables onto nonnegative columns: x_i -> y_k (and
    # y_k - y_{k+1} when free).
    col_of: list[tuple[int, int | None]] = []
    ncols = 0
    for i in range(n):
        if nonneg[i]:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2

    def expand_row(row: list[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * ncols
        for i, v in enumerate(row):
            pos, neg = col_of[i]
            out[pos] += v
            if neg is not None:
                out[neg] -= v
        return out

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for row, b in zip(aeq, beq):
        rows.append(expand_row(row))
        rhs.append(b)
    nslack = len(aub)
    for k, (row, b) in enumerate(zip(aub, bub)):
        r = expand_row(row) + [Fraction(0)] * nslack
        r[ncols + k] = Fraction(1)
        rows.append(r)
        rhs.append(b)
    # Pad equality rows with zero slack entries.
    for i in range(len(aeq)):
        rows[i] = rows[i] + [Fraction(0)] * nslack
    total = ncols + nslack

    # Make rhs nonnegative.
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    cost = [Fraction(0)] * total
    for i in range(n):
        pos, neg = col_of[i]
        ci = -c[i] if maximize else c[i]
        cost[pos] += ci
        if neg is not None:
            cost[neg] -= ci

    res = _two_phase(rows, rhs, cost)
    if res[0] != OPTIMAL:
        return LPResult(status=res[0])
    y, obj = res[1], res[2]
    x = []
    for i in range(n):
        pos, neg = col_of[i]
        xi = y[pos] - (y[neg] if neg is not None else Fraction(0))
        x.append(xi)
    value = -obj if maximize else obj
    return LPResult(status=OPTIMAL, x=tuple(x), value=value)


def _two_phase(rows, rhs, cost):
    m = len(rows)
    total = len(rows[0]) if m else 0
    if m == 0:
        # Unconstrained: optimum is 0 unless some cost is negative
        # (then unbounded, since all columns are nonnegative vars).
        if any(cj < 0 for cj in cost):
            return (UNBOUNDED, None, None)
        return (OPTIMAL, [Fraction(0)] * total, Fraction(0))

    # Phase 1 tableau with one artificial per row.
    T = [rows[i][:] + [Fraction(0)] * m + [rhs[i]] for i in range(m)]
    for i in range(m):
        T[i][total + i] = Fraction(1)
    basis = [total + i for i in range(m)]
    width = total + m

    phase1_cost = [Fraction(0)] * total + [Fraction(1)] * m
    _canonicalize(T, basis, phase1_cost, width)
    status = _iterate(T, basis, width)
    if status != OPTIMAL:  # phase 1 is bounded below by 0
        return (INFEASIBLE, None, None)
    if -T[m][width] > 0:
        return (INFEASIBLE, None, None)

    # Drive remaining artificials out of the basis.
    drop_rows = []
    for i in range(m):
        if basis[i] >= total:
            piv = next((j for j in range(total) if T[i][j] != 0), None)
            if piv is None:
                drop_rows.append(i)
            else:
                _pivot(T, basis, i, piv, width)
    for i in sorted(drop_rows, reverse=True):
        del T[i]
        del basis[i]
    m2 = len(basis)

    # Phase 2: restrict to real columns.
    T2 = [row[:total] + [row[width]] for row in T[:m2]]
    T2.append([Fraction(0)] * (total + 1))
    _canonicalize(T2, basis, cost, total)
    status = _iterate(T2, basis, total)
    if status != OPTIMAL:
        return (UNBOUNDED, None, None)
    y = [Fraction(0)] * total
    for i, bi in enumerate(basis):
        y[bi] = T2[i][total]
    return (OPTIMAL, y, -T2[m2][total])


def _canonicalize(T, basis, cost, width):
    """Rebuild the reduced-cost row for the given basis in place."""
    m = len(basis)
    if len(T) == m:
        T.append([Fraction(0)] * (width + 1))
    zrow = [cost[j] if j < len(cost) else Fraction(0) for j in range(width)]
    zrow.append(Fraction(0))
    for i, bi in enumerate(basis):
        cb = cost[bi] if bi < len(cost) else Fraction(0)
        if cb == 0:
            continue
        for j in range(width + 1):
            zrow[j] -= cb * T[i][j]
    T[m] = zrow


def _iterate(T, basis, width):
    m = len(basis)
    while True:
        enter = next((j for j in range(width) if T[m][j] < 0), None)
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(T, basis, leave, enter, width)


def _pivot(T, basis, row, col, width):
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i in range(len(T)):
        if i == row:
            continue
        f = T[i][col]
        if f != 0:
            T[i] = [a - f * b for a, b in zip(T[i], T[row])]
    basis[row] = col
