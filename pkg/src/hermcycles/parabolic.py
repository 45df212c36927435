"""theta-stable parabolic classes, Hodge types and the counts N(r).

A class is keyed by (U, D): the positive noncompact roots on which a
k-dominant lambda is positive (an up-closed filter U) or negative (a
down-closed ideal D).  Candidate pairs are enumerated from the poset and
tested for feasibility with exact linear programming.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .exactla import ConstraintSystem, feasible_strict
from .rootsys import (
    DominantVector,
    RootSystem,
    _ideals_by_mask,
    _mask_key,
    noncompact_poset,
    root_display,
)

THREADS_ENV = "HERMCYCLES_THREADS"


class NotDominantError(ValueError):
    pass


@dataclass(frozen=True)
class ParabolicClass:
    U: tuple
    D: tuple
    witness: DominantVector

    @property
    def r_plus(self) -> int:
        return len(self.U)

    @property
    def r_minus(self) -> int:
        return len(self.D)

    @property
    def degree(self) -> int:
        return len(self.U) + len(self.D)

    @property
    def key(self):
        return (frozenset(self.U), frozenset(self.D))

    def same_class(self, other: "ParabolicClass") -> bool:
        return self.key == other.key


def hodge_of_lambda(rs: RootSystem, lam: DominantVector) -> ParabolicClass:
    if len(lam.fw) != rs.rank:
        raise ValueError(f"expected {rs.rank} fundamental-weight coordinates, got {len(lam.fw)}")
    for i in rs.compact_simple:
        if lam.fw[i] < 0:
            raise NotDominantError(
                f"lambda is not k-dominant: coefficient {lam.fw[i]} at compact simple root psi{i + 1}"
            )
    poset = noncompact_poset(rs)
    U, D = [], []
    for a in poset.nodes:
        v = rs.pairing(lam, a)
        if v > 0:
            U.append(a)
        elif v < 0:
            D.append(a)
    assert poset.is_up_closed(U) and poset.is_down_closed(D), "sign sets lost their closure"
    return ParabolicClass(tuple(U), tuple(D), lam)


def constraint_system(rs: RootSystem, U, D) -> ConstraintSystem:
    """Linear conditions on fundamental-weight coordinates realising (U, D)."""
    Us, Ds = set(U), set(D)
    poset = noncompact_poset(rs)
    eqs, strict = [], []
    for a in poset.nodes:
        row = rs.pairing_row(a)
        if a in Us:
            strict.append((row, 1))
        elif a in Ds:
            strict.append((row, -1))
        else:
            eqs.append(row)
    weak = [tuple(Fraction(int(i == j)) for j in range(rs.rank)) for i in rs.compact_simple]
    return ConstraintSystem(rs.rank, eqs, strict, weak)


def _edge_test(edges, umask, dmask):
    """Necessary condition from the Hasse edges.

    Along an edge b -> b + psi the pairing grows by c_psi |psi|^2 / 2 >= 0, so
    the psi-edges are either all flat (c_psi = 0) or all strictly increasing.
    """
    flat, rising = set(), set()

    def cls(i):
        if umask >> i & 1:
            return 1
        if dmask >> i & 1:
            return -1
        return 0

    for lo, hi, psi in edges:
        a, b = cls(lo), cls(hi)
        if a == 0 and b == 0:
            flat.add(psi)
        elif a > b:
            return False
        elif a < b:
            rising.add(psi)
    return not (flat & rising)


def _check_pair(args):
    rs, umask, dmask, method = args
    poset = noncompact_poset(rs)
    if not _edge_test(poset.hasse_edges, umask, dmask):
        return None
    U, D = poset.roots_of(umask), poset.roots_of(dmask)
    w = feasible_strict(constraint_system(rs, U, D), method=method)
    if w is None:
        return None
    return (umask, dmask, w)


def _workers(workers):
    if workers is not None:
        return workers
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def candidate_pairs(rs: RootSystem, r_max: int, unbalanced=False, max_degree=None):
    """Disjoint (filter mask, ideal mask) pairs within the size bounds."""
    poset = noncompact_poset(rs)
    if unbalanced:
        bound = max_degree if max_degree is not None else len(poset)
        fmax = imax = bound
    else:
        fmax = imax = r_max
    filters = _ideals_by_mask(poset.upper_covers, fmax)
    ideals = _ideals_by_mask(poset.lower_covers, imax)
    by_size = {}
    for d in ideals:
        by_size.setdefault(bin(d).count("1"), []).append(d)
    out = []
    for u in filters:
        nu = bin(u).count("1")
        if unbalanced:
            sizes = [s for s in by_size if nu + s <= bound and nu + s > 0]
        else:
            sizes = [nu] if 1 <= nu <= r_max else []
        for s in sizes:
            for d in by_size.get(s, ()):
                if not u & d:
                    out.append((u, d))
    return out


def classify(
    rs: RootSystem,
    r_max: int,
    *,
    unbalanced: bool = False,
    max_degree: int | None = None,
    method: str = "simplex",
    workers: int | None = None,
) -> list:
    """Feasible classes with r_plus = r_minus in 1..r_max, sorted by (r, U, D).

    With ``unbalanced`` every feasible nontrivial class of degree at most
    ``max_degree`` is returned instead, sorted by (degree, U, D).
    """
    if r_max < 1 and not unbalanced:
        raise ValueError("r_max must be >= 1")
    poset = noncompact_poset(rs)
    pairs = candidate_pairs(rs, r_max, unbalanced, max_degree)
    jobs = [(rs, u, d, method) for u, d in pairs]
    n = _workers(workers)
    if n > 1 and len(jobs) > 64:
        with ProcessPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(_check_pair, jobs, chunksize=32))
    else:
        results = [_check_pair(j) for j in jobs]
    found = [r for r in results if r is not None]

    def key(item):
        u, d, _ = item
        deg = bin(u).count("1") + bin(d).count("1")
        return (deg, _mask_key(u), _mask_key(d))

    found.sort(key=key)
    out = []
    for u, d, w in found:
        cls = ParabolicClass(poset.roots_of(u), poset.roots_of(d), DominantVector(w))
        out.append(cls)
    return out


def counts_by_r(classes) -> dict:
    out = {}
    for c in classes:
        out[c.r_plus] = out.get(c.r_plus, 0) + 1
    return out


def n_of_r(rs: RootSystem, r: int, **kw) -> int:
    if r < 1:
        return 0
    return sum(1 for c in classify(rs, r, **kw) if c.r_plus == r)


def r_zero(rs: RootSystem, **kw) -> int | None:
    """Least r >= 1 with N(r) >= 1, searching up to #positive noncompact roots."""
    poset = noncompact_poset(rs)
    for r in range(1, len(poset) + 1):
        if n_of_r(rs, r, **kw):
            return r
    return None


def iota_dual(rs: RootSystem, cls: ParabolicClass) -> ParabolicClass:
    """Apply iota = -w_0 of the compact Weyl group to the witness."""
    lam = DominantVector(tuple(-x for x in rs.w0k_weight(cls.witness.fw)))
    out = hodge_of_lambda(rs, lam)
    assert (out.r_plus, out.r_minus) == (cls.r_plus, cls.r_minus)[::-1], "iota failed to swap Hodge type"
    return out


def class_label(cls: ParabolicClass) -> str:
    return "U={" + ", ".join(map(root_display, cls.U)) + "} D={" + ", ".join(map(root_display, cls.D)) + "}"
