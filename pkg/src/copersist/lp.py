"""Exact feasibility of {x >= 0 : A x = b} over the rationals.

Phase I of the simplex method on a Fraction tableau, with Bland's rule so
that degenerate problems cannot cycle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def nonnegative_solution(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """A nonnegative rational x with A x = b, or None when there is none."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for r in range(m):
        sign = -1 if b[r] < 0 else 1
        rows.append([Fraction(sign * a) for a in A[r]] + [Fraction(sign * b[r])])

    # reuse unit columns as the starting basis, add artificials for the other rows
    basis = [-1] * m
    for j in range(n):
        col = [rows[r][j] for r in range(m)]
        nz = [r for r in range(m) if col[r] != 0]
        if len(nz) == 1 and col[nz[0]] == 1 and basis[nz[0]] < 0:
            basis[nz[0]] = j
    art = [r for r in range(m) if basis[r] < 0]
    width = n + len(art)
    for r in range(m):
        row = rows[r]
        rhs = row.pop()
        row.extend(Fraction(0) for _ in art)
        row.append(rhs)
    for k, r in enumerate(art):
        rows[r][n + k] = Fraction(1)
        basis[r] = n + k

    # reduced costs of the phase I objective: minimise the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for r in art:
        for j in range(width + 1):
            cost[j] -= rows[r][j]
    for k in range(len(art)):
        cost[n + k] = Fraction(0)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for r in range(m):
            a = rows[r][enter]
            if a > 0:
                ratio = rows[r][width] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    leave, best = r, ratio
        if leave is None:  # phase I is bounded below by 0
            break
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:  # -(sum of artificials) at optimum
        return None
    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        if j < n:
            x[j] = rows[r][width]
    return x


def _pivot(rows, cost, r, c):
    piv = rows[r][c]
    pr = [v / piv for v in rows[r]]
    rows[r] = pr
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [v - f * p for v, p in zip(row, pr)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [v - f * p for v, p in zip(cost, pr)]
