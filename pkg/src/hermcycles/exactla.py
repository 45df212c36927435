"""Exact rational linear algebra and strict-inequality feasibility.

Two independent feasibility routes are provided: a phase-1 simplex with
Bland's rule, and Fourier-Motzkin elimination (practical for small
dimension).  Both return primitive integer witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = tuple  # tuple[Fraction, ...]


def _fr(row) -> tuple:
    return tuple(Fraction(x) for x in row)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(_fr(r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def primitive(v: Sequence) -> tuple:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    v = _fr(v)
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass
class ConstraintSystem:
    """Equalities a.x = 0, strict s*(a.x) > 0, weak a.x >= 0 over Q^dim."""

    dim: int
    equalities: list = field(default_factory=list)
    strict: list = field(default_factory=list)  # (row, sign) with sign in {+1, -1}
    weak: list = field(default_factory=list)

    def __post_init__(self):
        self.equalities = [_fr(r) for r in self.equalities]
        self.strict = [(_fr(r), int(s)) for r, s in self.strict]
        self.weak = [_fr(r) for r in self.weak]
        for r in self.equalities + [r for r, _ in self.strict] + self.weak:
            if len(r) != self.dim:
                raise ValueError(f"row length {len(r)} != dim {self.dim}")
        for _, s in self.strict:
            if s not in (1, -1):
                raise ValueError("strict sign must be +1 or -1")

    def satisfied_by(self, x) -> bool:
        x = _fr(x)
        return (
            all(_dot(r, x) == 0 for r in self.equalities)
            and all(s * _dot(r, x) > 0 for r, s in self.strict)
            and all(_dot(r, x) >= 0 for r in self.weak)
        )


class InfeasibleSolveError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Phase-1 simplex, dense tableau, Bland's rule


def _phase1(A: list, b: list):
    """Find y >= 0 with A y = b (b >= 0 after sign flips) or return None."""
    m = len(A)
    n = len(A[0]) if m else 0
    A = [list(r) for r in A]
    b = list(b)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # tableau columns: n originals, m artificials, rhs
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    ncol = n + m
    # objective: minimise sum of artificials -> reduced costs
    while True:
        cost = [Fraction(0)] * ncol
        for j in range(n, ncol):
            cost[j] = Fraction(1)
        cb = [cost[k] for k in basis]
        entering = None
        for j in range(ncol):
            if j in basis:
                continue
            rc = cost[j] - sum((cb[i] * T[i][j] for i in range(m)), Fraction(0))
            if rc < 0:
                entering = j
                break
        if entering is None:
            break
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded cannot happen in phase 1
            raise InfeasibleSolveError("unbounded phase-1 objective")
        r = best[1]
        pv = T[r][entering]
        T[r] = [x / pv for x in T[r]]
        for i in range(m):
            if i != r and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        basis[r] = entering
    if any(basis[i] >= n and T[i][-1] != 0 for i in range(m)):
        return None
    y = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            y[basis[i]] = T[i][-1]
    return y


def _reduce(system: ConstraintSystem):
    """Parametrise the equality kernel; returns (basis, strict rows, weak rows) in kernel coords."""
    if system.equalities:
        basis = nullspace(system.equalities, system.dim)
    else:
        basis = [tuple(Fraction(int(i == j)) for j in range(system.dim)) for i in range(system.dim)]
    strict = [tuple(s * _dot(r, v) for v in basis) for r, s in system.strict]
    weak = [tuple(_dot(r, v) for v in basis) for r in system.weak]
    return basis, strict, weak


def _lift(basis, y, dim):
    x = [Fraction(0)] * dim
    for c, v in zip(y, basis):
        if c:
            for t in range(dim):
                x[t] += c * v[t]
    return x


def _trivial(system, basis):
    """Answer when there are no strict rows (convention: see README)."""
    if system.weak or not basis:
        return tuple(0 for _ in range(system.dim))
    return primitive(basis[0])


def _simplex_kernel(strict, weak, k):
    # y = u - v, u, v >= 0; rows a.y - s = 1 (strict) or a.y - s = 0 (weak), s >= 0
    rows = [(r, Fraction(1)) for r in strict] + [(r, Fraction(0)) for r in weak]
    m = len(rows)
    A, b = [], []
    for i, (r, rhs) in enumerate(rows):
        A.append(list(r) + [-x for x in r] + [Fraction(-int(i == j)) for j in range(m)])
        b.append(rhs)
    sol = _phase1(A, b)
    if sol is None:
        return None
    return [sol[i] - sol[k + i] for i in range(k)]


def _finish(system, basis, y):
    x = primitive(_lift(basis, y, system.dim))
    if not system.satisfied_by(x):
        raise AssertionError("feasibility witness fails its own constraints")
    return x


def feasible_strict_simplex(system: ConstraintSystem):
    basis, strict, weak = _reduce(system)
    if not system.strict:
        return _trivial(system, basis)
    if not basis:
        return None
    y = _simplex_kernel(strict, weak, len(basis))
    return None if y is None else _finish(system, basis, y)


# ---------------------------------------------------------------------------
# Fourier-Motzkin


def _normalise(row, strict):
    """Scale so the first nonzero entry has absolute value 1; dedupe key."""
    nz = next((x for x in row if x != 0), None)
    if nz is None:
        return tuple(row), strict
    s = abs(nz)
    return tuple(x / s for x in row), strict


def _dedupe(rows):
    best = {}
    for r, st in rows:
        r, st = _normalise(r, st)
        best[r] = best.get(r, False) or st
    return [(r, st) for r, st in best.items()]


def _fm_solve(rows, k):
    """rows: list of (coeffs, strict) meaning c.y > 0 or >= 0.  Returns y or None."""
    rows = _dedupe(rows)
    stages = []
    cur = rows
    for var in reversed(range(k)):
        pos = [(r, s) for r, s in cur if r[var] > 0]
        neg = [(r, s) for r, s in cur if r[var] < 0]
        zero = [(r, s) for r, s in cur if r[var] == 0]
        stages.append((var, pos, neg))
        new = list(zero)
        for rp, sp in pos:
            for rn, sn in neg:
                a, c = rp[var], -rn[var]
                comb = tuple(c * x + a * y for x, y in zip(rp, rn))
                new.append((comb, sp or sn))
        cur = _dedupe(new)
        for r, s in cur:
            if all(x == 0 for x in r) and s:
                return None
    # every row is now 0 >= 0; back-substitute
    y = [Fraction(0)] * k
    for var, pos, neg in reversed(stages):
        # row: r[var]*y_var + rest > or >= 0
        lo, lo_strict, hi, hi_strict = None, False, None, False
        for r, s in pos:
            rest = sum((r[j] * y[j] for j in range(var)), Fraction(0))
            bound = -rest / r[var]
            if lo is None or bound > lo:
                lo, lo_strict = bound, s
            elif bound == lo:
                lo_strict = lo_strict or s
        for r, s in neg:
            rest = sum((r[j] * y[j] for j in range(var)), Fraction(0))
            bound = -rest / r[var]
            if hi is None or bound < hi:
                hi, hi_strict = bound, s
            elif bound == hi:
                hi_strict = hi_strict or s
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and (lo_strict or hi_strict)):
                raise AssertionError("Fourier-Motzkin back-substitution found an empty interval")
            y[var] = (lo + hi) / 2 if lo != hi else lo
        elif lo is not None:
            y[var] = lo + 1
        elif hi is not None:
            y[var] = hi - 1
        else:
            y[var] = Fraction(0)
    return y


def feasible_strict_fm(system: ConstraintSystem):
    basis, strict, weak = _reduce(system)
    if not system.strict:
        return _trivial(system, basis)
    if not basis:
        return None
    rows = [(r, True) for r in strict] + [(r, False) for r in weak]
    y = _fm_solve(rows, len(basis))
    return None if y is None else _finish(system, basis, y)


def feasible_strict(system: ConstraintSystem, method: str = "simplex"):
    """A primitive integer witness of the system, or None if infeasible.

    method: "simplex", "fm", or "both" (runs both and insists they agree on
    feasibility).
    """
    if method == "simplex":
        return feasible_strict_simplex(system)
    if method == "fm":
        return feasible_strict_fm(system)
    if method == "both":
        a = feasible_strict_simplex(system)
        b = feasible_strict_fm(system)
        if (a is None) != (b is None):
            raise AssertionError(f"simplex and Fourier-Motzkin disagree: {a} vs {b}")
        return a
    raise ValueError(f"unknown method {method!r}")
