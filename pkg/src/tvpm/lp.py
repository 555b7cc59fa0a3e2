"""Exact rational linear programming.

A small two-phase simplex over ``fractions.Fraction`` with Bland's rule for
both the entering and the leaving variable, so the solver terminates on every
input and identical programs always produce identical answers.  Strict
inequalities never appear here; callers that need strictness encode a margin
into the right-hand side instead.

The problems this package generates are tiny (tens of rows and columns), so
the implementation favours exactness and determinism over sparse-matrix
cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InternalError
from .linalg import ONE, ZERO, dot

LESS_EQUAL = "<="
EQUAL = "="
GREATER_EQUAL = ">="

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

Bound = tuple[Optional[Fraction], Optional[Fraction]]


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """``num_vars`` variables, linear constraints, optional maximization.

    ``bounds`` holds one (lower, upper) pair per variable with ``None`` for an
    unbounded side; when ``bounds`` itself is ``None`` every variable is free.
    ``objective`` is maximized; leave it ``None`` for pure feasibility.
    """

    num_vars: int
    constraints: tuple[Constraint, ...]
    objective: Optional[tuple[Fraction, ...]] = None
    bounds: Optional[tuple[Bound, ...]] = None


@dataclass(frozen=True)
class LpResult:
    status: str
    point: Optional[tuple[Fraction, ...]] = None


def constraint(coeffs: Sequence, relation: str, rhs) -> Constraint:
    if relation not in (LESS_EQUAL, EQUAL, GREATER_EQUAL):
        raise ValueError(f"unknown relation: {relation!r}")
    return Constraint(tuple(Fraction(c) for c in coeffs), relation, Fraction(rhs))


def satisfies(lp: LinearProgram, point: Sequence[Fraction]) -> bool:
    """Exact re-substitution check of every bound and constraint."""
    if len(point) != lp.num_vars:
        return False
    if lp.bounds is not None:
        for x, (lo, hi) in zip(point, lp.bounds):
            if lo is not None and x < lo:
                return False
            if hi is not None and x > hi:
                return False
    for con in lp.constraints:
        value = dot(con.coeffs, point)
        if con.relation == LESS_EQUAL and value > con.rhs:
            return False
        if con.relation == GREATER_EQUAL and value < con.rhs:
            return False
        if con.relation == EQUAL and value != con.rhs:
            return False
    return True


def lp_solve(lp: LinearProgram) -> LpResult:
    """Solve ``lp`` exactly: a feasible (optimal, if asked) point, or the
    verdict ``infeasible`` / ``unbounded``."""
    _validate(lp)
    std = _standardize(lp)
    if std is None:
        return LpResult(INFEASIBLE)
    rows, rhs, col_var, base, width = std
    m = len(rows)

    # Phase one: minimize the sum of one artificial variable per row.
    tab = [
        rows[i] + [ONE if k == i else ZERO for k in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = [width + i for i in range(m)]
    cost1 = [ZERO] * width + [ONE] * m
    obj = _reduced_costs(tab, basis, cost1)
    if _minimize(tab, obj, basis) != "optimal":
        raise InternalError("phase-one objective is bounded below zero")
    if -obj[-1] != 0:
        return LpResult(INFEASIBLE)
    _drive_out_artificials(tab, basis, width)
    tab = [row[:width] + [row[-1]] for row in tab]

    if lp.objective is not None:
        cost2 = [ZERO] * width
        for c, (j, s) in enumerate(col_var):
            coeff = lp.objective[j]
            if coeff:
                cost2[c] = -coeff if s > 0 else coeff
        obj = _reduced_costs(tab, basis, cost2)
        if _minimize(tab, obj, basis) == "unbounded":
            return LpResult(UNBOUNDED)

    point = _extract(tab, basis, col_var, base, lp.num_vars)
    if not satisfies(lp, point):
        raise InternalError("simplex returned a point violating its own program")
    return LpResult(FEASIBLE, point)


def _validate(lp: LinearProgram) -> None:
    if lp.num_vars < 0:
        raise ValueError("negative variable count")
    for con in lp.constraints:
        if len(con.coeffs) != lp.num_vars:
            raise ValueError("constraint arity does not match variable count")
    if lp.objective is not None and len(lp.objective) != lp.num_vars:
        raise ValueError("objective arity does not match variable count")
    if lp.bounds is not None and len(lp.bounds) != lp.num_vars:
        raise ValueError("bounds arity does not match variable count")


def _standardize(lp: LinearProgram):
    """Rewrite as rows @ y = rhs with y >= 0 and rhs >= 0.

    Returns (rows, rhs, col_var, base, width) where col_var maps each
    structural column to (original variable, sign) and the original value is
    base[j] plus the signed column contributions.  Returns None when a bound
    pair is contradictory on its own.
    """
    n = lp.num_vars
    bounds = lp.bounds if lp.bounds is not None else ((None, None),) * n
    base: list[Fraction] = [ZERO] * n
    col_var: list[tuple[int, int]] = []
    cap_rows: list[tuple[int, Fraction]] = []
    for j, (lo, hi) in enumerate(bounds):
        if lo is None and hi is None:
            col_var.append((j, 1))
            col_var.append((j, -1))
        elif hi is None:
            base[j] = lo
            col_var.append((j, 1))
        elif lo is None:
            base[j] = hi
            col_var.append((j, -1))
        else:
            if lo > hi:
                return None
            base[j] = lo
            cap_rows.append((len(col_var), hi - lo))
            col_var.append((j, 1))

    nslack = sum(1 for c in lp.constraints if c.relation != EQUAL) + len(cap_rows)
    width = len(col_var) + nslack
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    k = len(col_var)
    for con in lp.constraints:
        row = [ZERO] * width
        for c, (j, s) in enumerate(col_var):
            a = con.coeffs[j]
            if a:
                row[c] = a if s > 0 else -a
        shift = sum(
            (con.coeffs[j] * base[j] for j in range(n) if base[j] and con.coeffs[j]),
            ZERO,
        )
        if con.relation == LESS_EQUAL:
            row[k] = ONE
            k += 1
        elif con.relation == GREATER_EQUAL:
            row[k] = -ONE
            k += 1
        rows.append(row)
        rhs.append(con.rhs - shift)
    for c, cap in cap_rows:
        row = [ZERO] * width
        row[c] = ONE
        row[k] = ONE
        k += 1
        rows.append(row)
        rhs.append(cap)
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    return rows, rhs, tuple(col_var), base, width


def _reduced_costs(tab, basis, cost):
    obj = list(cost) + [ZERO]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = tab[i]
            for j in range(len(obj)):
                if row[j]:
                    obj[j] -= cb * row[j]
    return obj


def _minimize(tab, obj, basis) -> str:
    """Bland's rule simplex loop; ``tab``, ``obj`` and ``basis`` mutate."""
    ncols = len(obj) - 1
    while True:
        pc = next((j for j in range(ncols) if obj[j] < 0), None)
        if pc is None:
            return "optimal"
        pr = None
        best = None
        for i, row in enumerate(tab):
            a = row[pc]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[pr])
                ):
                    best = ratio
                    pr = i
        if pr is None:
            return "unbounded"
        _pivot(tab, obj, basis, pr, pc)


def _pivot(tab, obj, basis, pr, pc) -> None:
    row = tab[pr]
    piv = row[pc]
    if piv != 1:
        inv = ONE / piv
        tab[pr] = row = [v * inv if v else v for v in row]
    for i, other in enumerate(tab):
        if i == pr:
            continue
        f = other[pc]
        if f:
            tab[i] = [a - f * b if b else a for a, b in zip(other, row)]
    if obj is not None:
        f = obj[pc]
        if f:
            obj[:] = [a - f * b if b else a for a, b in zip(obj, row)]
    basis[pr] = pc


def _drive_out_artificials(tab, basis, width) -> None:
    """Pivot zero-valued artificial variables out of the basis; rows that
    cannot be repaired are redundant and get dropped."""
    drop = []
    for i in range(len(tab)):
        if basis[i] < width:
            continue
        row = tab[i]
        pc = next((j for j in range(width) if row[j] != 0), None)
        if pc is None:
            drop.append(i)
        else:
            _pivot(tab, None, basis, i, pc)
    for i in reversed(drop):
        del tab[i]
        del basis[i]


def _extract(tab, basis, col_var, base, num_vars) -> tuple[Fraction, ...]:
    values = {}
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    x = list(base)
    for c, (j, s) in enumerate(col_var):
        v = values.get(c, ZERO)
        if v:
            x[j] = x[j] + v if s > 0 else x[j] - v
    return tuple(x)
