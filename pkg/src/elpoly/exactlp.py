"""Exact rational linear programming for convex-combination membership.

The only LP shape the hull engine needs is phase-one feasibility of

    sum_j lambda_j * p_j = x,   sum_j lambda_j = 1,   lambda >= 0,

solved by a dense primal simplex over Fraction with Bland's rule (smallest
index enters, smallest basic index leaves), which cannot cycle.  On success
the convex coefficients are returned; on failure a Farkas certificate
y in Q^(dim+1) with y.(p_j, 1) <= 0 for all j and y.(x, 1) > 0, i.e. a
hyperplane separating x from the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class MembershipResult:
    feasible: bool
    coefficients: tuple[Fraction, ...] | None = None
    separator: tuple[Fraction, ...] | None = None


def _to_fraction_rows(points: Sequence[Sequence], target: Sequence) -> tuple[list, list]:
    dim = len(target)
    cols = []
    for p in points:
        if len(p) != dim:
            raise ValueError(f"point {p} has dimension {len(p)}, expected {dim}")
        cols.append([Fraction(v) for v in p] + [ONE])
    rhs = [Fraction(v) for v in target] + [ONE]
    return cols, rhs


def convex_membership(points: Sequence[Sequence], target: Sequence) -> MembershipResult:
    """Decide whether target lies in the convex hull of the given points."""
    cols, rhs = _to_fraction_rows(points, target)
    m = len(rhs)
    n = len(cols)

    # rows of the equality system, sign-normalized so the rhs is nonnegative
    sign = [ONE] * m
    rows = [[cols[j][r] for j in range(n)] for r in range(m)]
    for r in range(m):
        if rhs[r] < 0:
            sign[r] = -ONE
            rhs[r] = -rhs[r]
            rows[r] = [-v for v in rows[r]]

    # tableau columns: n original, m artificial, 1 rhs
    width = n + m + 1
    tab = []
    for r in range(m):
        row = rows[r] + [ZERO] * m + [rhs[r]]
        row[n + r] = ONE
        tab.append(row)
    basis = [n + r for r in range(m)]

    # phase-one objective: minimize the artificial sum; reduced-cost row
    z = [ZERO] * width
    for j in range(n):
        z[j] = -sum(tab[r][j] for r in range(m))
    z[width - 1] = -sum(tab[r][width - 1] for r in range(m))

    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][width - 1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            raise AssertionError("phase-one objective is bounded; no unbounded ray exists")
        _pivot(tab, z, leave, enter, width)
        basis[leave] = enter

    infeasibility = -z[width - 1]
    if infeasibility == 0:
        lam = [ZERO] * n
        for r in range(m):
            if basis[r] < n:
                lam[basis[r]] = tab[r][width - 1]
        return MembershipResult(feasible=True, coefficients=tuple(lam))

    # dual y'_r = 1 - (reduced cost of artificial r); undo the row signs
    y = tuple(sign[r] * (ONE - z[n + r]) for r in range(m))
    return MembershipResult(feasible=False, separator=y)


def _pivot(tab: list, z: list, leave: int, enter: int, width: int) -> None:
    piv = tab[leave][enter]
    row = tab[leave]
    inv = ONE / piv
    for j in range(width):
        row[j] *= inv
    for r, other in enumerate(tab):
        if r == leave or other[enter] == 0:
            continue
        f = other[enter]
        for j in range(width):
            other[j] -= f * row[j]
    if z[enter] != 0:
        f = z[enter]
        for j in range(width):
            z[j] -= f * row[j]
