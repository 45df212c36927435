"""Brute-force reference computations used by the test suite.

Nothing here imports the solver, the poset code or the classifier: roots
come from ambient coordinates, ideals from all subsets, feasibility from a
separate Fourier-Motzkin written over epsilon coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

HALF = Fraction(1, 2)


def _vec(dim, entries):
    v = [Fraction(0)] * dim
    for i, x in entries:
        v[i] += x
    return tuple(v)


def _classical_roots(letter, n):
    out = set()
    if letter == "A":
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    out.add(_vec(n + 1, [(i, 1), (j, -1)]))
        return out
    for i, j in combinations(range(n), 2):
        for s, t in product((1, -1), repeat=2):
            out.add(_vec(n, [(i, s), (j, t)]))
    for i in range(n):
        for s in (1, -1):
            if letter == "B":
                out.add(_vec(n, [(i, s)]))
            elif letter == "C":
                out.add(_vec(n, [(i, 2 * s)]))
    return out


def e8_roots():
    out = set()
    for i, j in combinations(range(8), 2):
        for s, t in product((1, -1), repeat=2):
            out.add(_vec(8, [(i, s), (j, t)]))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.add(tuple(HALF * s for s in signs))
    return out


def _solve_rows(rows, ncols):
    """Row-reduce; returns (reduced rows, pivot columns)."""
    m = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(m)) if m[i][c]), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return m[:r], piv


def span_complement(vectors, dim):
    """Basis of the orthogonal complement of span(vectors)."""
    red, piv = _solve_rows(vectors, dim)
    out = []
    for f in (c for c in range(dim) if c not in piv):
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, pc in zip(red, piv):
            v[pc] = -row[f]
        out.append(v)
    return out


def ambient_roots(letter, rank, simple_eps):
    """All roots as epsilon vectors, from the standard ambient models."""
    if letter in "ABCD":
        return _classical_roots(letter, rank)
    comp = span_complement(simple_eps, 8)
    return {r for r in e8_roots() if all(sum(a * b for a, b in zip(r, c)) == 0 for c in comp)}


def count_ideals(elements, leq):
    """Number of down-closed subsets, by checking every subset."""
    n = len(elements)
    below = [[j for j in range(n) if j != i and leq(elements[j], elements[i])] for i in range(n)]
    total = 0
    for mask in range(1 << n):
        if all(not (mask >> i & 1) or all(mask >> j & 1 for j in below[i]) for i in range(n)):
            total += 1
    return total


def ideal_size_histogram(elements, leq):
    n = len(elements)
    below = [[j for j in range(n) if j != i and leq(elements[j], elements[i])] for i in range(n)]
    hist = [0] * (n + 1)
    for mask in range(1 << n):
        if all(not (mask >> i & 1) or all(mask >> j & 1 for j in below[i]) for i in range(n)):
            hist[bin(mask).count("1")] += 1
    return hist


# ---------------------------------------------------------------------------
# Fourier-Motzkin over rows a.x >= b


def _norm(a, b):
    s = next((abs(x) for x in a if x), None)
    if s is None:
        return tuple(a), b
    return tuple(x / s for x in a), b / s


def fm_feasible(rows, dim):
    """True iff {x : a.x >= b for (a, b) in rows} is nonempty."""
    cur = {}
    for a, b in rows:
        a, b = _norm([Fraction(x) for x in a], Fraction(b))
        cur[a] = max(cur.get(a, b), b)
    for k in range(dim):
        pos = [(a, b) for a, b in cur.items() if a[k] > 0]
        neg = [(a, b) for a, b in cur.items() if a[k] < 0]
        nxt = {a: b for a, b in cur.items() if a[k] == 0}
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[k], ap[k]
                a = tuple(lp * x + ln * y for x, y in zip(ap, an))
                b = lp * bp + ln * bn
                a, b = _norm(a, b)
                nxt[a] = max(nxt.get(a, b), b)
        cur = nxt
    return all(b <= 0 for a, b in cur.items() if not any(a))


def root_vector(simple_eps, coeffs):
    dim = len(simple_eps[0])
    v = [Fraction(0)] * dim
    for c, s in zip(coeffs, simple_eps):
        for t in range(dim):
            v[t] += c * s[t]
    return v


def _ip(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sign_vector_classes(simple_eps, node, noncompact_roots):
    """All feasible {+,0,-} patterns on the given noncompact roots.

    A pattern is feasible when some lambda, dominant for the compact simple
    roots, pairs positively, to zero, or negatively as prescribed.  Returns
    a set of (frozenset U, frozenset D) including the zero pattern.
    """
    dim = len(simple_eps[0])
    vecs = [root_vector(simple_eps, a) for a in noncompact_roots]
    weak = [(list(s), 0) for i, s in enumerate(simple_eps) if i != node]
    out = set()
    for signs in product((1, 0, -1), repeat=len(vecs)):
        rows = list(weak)
        for s, v in zip(signs, vecs):
            if s == 0:
                rows.append((v, 0))
                rows.append(([-x for x in v], 0))
            else:
                # homogeneous system: strict > 0 may be scaled to >= 1
                rows.append(([s * x for x in v], 1))
        if fm_feasible(rows, dim):
            U = frozenset(a for s, a in zip(signs, noncompact_roots) if s > 0)
            D = frozenset(a for s, a in zip(signs, noncompact_roots) if s < 0)
            out.add((U, D))
    return out


def codim_by_parity(noncompact_roots, S, theta):
    """Noncompact positive roots whose root space is negated."""
    return sum(1 for a in noncompact_roots if (sum(a[i - 1] for i in S) + theta) % 2)
