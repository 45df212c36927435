"""Root systems of the irreducible Hermitian symmetric pairs.

Roots are stored as integer coefficient tuples over the simple roots
(Bourbaki numbering).  Every system also carries the Bourbaki epsilon
realisation of its simple roots, used for the symmetric form and for
display.

Cartan convention: ``cartan[i][j] = 2 (psi_i, psi_j) / (psi_i, psi_i)``,
so ``cartan[i][j] = <psi_j, psi_i^vee>`` and ``diag(symmetrizer) @ cartan``
is the Gram matrix of the simple roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

Root = tuple  # tuple[int, ...] of simple-root coefficients

MINUS = "−"
EPS = "ε"
VARPI = "ϖ"

FAMILY_KINDS = ("AIII", "BDI", "CI", "DIII", "EIII", "EVII")


class FamilyError(ValueError):
    """Raised for out-of-range Hermitian family parameters."""


@dataclass(frozen=True)
class HermitianFamily:
    kind: str
    params: tuple = ()

    def __post_init__(self):
        k, ps = self.kind, self.params
        if k not in FAMILY_KINDS:
            raise FamilyError(f"unknown family {k!r}")
        expected = {"AIII": 2, "BDI": 1, "CI": 1, "DIII": 1, "EIII": 0, "EVII": 0}[k]
        if len(ps) != expected:
            raise FamilyError(f"{k} takes {expected} parameter(s), got {ps!r}")
        if k == "AIII":
            p, q = ps
            if not 1 <= p <= q:
                raise FamilyError(f"AIII(p,q) requires 1 <= p <= q, got p={p}, q={q}")
        elif k == "BDI" and ps[0] < 3:
            raise FamilyError(f"BDI(p) requires p >= 3, got p={ps[0]}")
        elif k == "CI" and ps[0] < 2:
            raise FamilyError(f"CI(n) requires n >= 2, got n={ps[0]}")
        elif k == "DIII" and ps[0] < 4:
            raise FamilyError(f"DIII(n) requires n >= 4, got n={ps[0]}")

    @property
    def dynkin(self) -> tuple:
        """(type letter, rank, noncompact node), node numbered from 1."""
        k, ps = self.kind, self.params
        if k == "AIII":
            p, q = ps
            return ("A", p + q - 1, p)
        if k == "BDI":
            p = ps[0]
            n = p // 2 + 1
            return ("B" if p % 2 else "D", n, 1)
        if k == "CI":
            return ("C", ps[0], ps[0])
        if k == "DIII":
            return ("D", ps[0], ps[0])
        if k == "EIII":
            return ("E", 6, 1)
        return ("E", 7, 7)

    @property
    def rank(self) -> int:
        return self.dynkin[1]

    @property
    def noncompact_node(self) -> int:
        return self.dynkin[2]

    def __str__(self):
        if self.params:
            return f"{self.kind}({','.join(map(str, self.params))})"
        return self.kind


def _unit(dim, i, scale=1):
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def simple_roots_eps(letter: str, rank: int) -> list:
    """Bourbaki (Planches I-VI) epsilon coordinates of the simple roots."""
    n = rank
    if letter == "A":
        if n < 1:
            raise FamilyError("A_n needs n >= 1")
        dim = n + 1
        return [[a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1))] for i in range(n)]
    if letter in "BCD":
        lo = {"B": 2, "C": 2, "D": 3}[letter]
        if n < lo:
            raise FamilyError(f"{letter}_n needs n >= {lo}")
        out = [[a - b for a, b in zip(_unit(n, i), _unit(n, i + 1))] for i in range(n - 1)]
        if letter == "B":
            out.append(_unit(n, n - 1))
        elif letter == "C":
            out.append(_unit(n, n - 1, 2))
        else:
            out.append([a + b for a, b in zip(_unit(n, n - 2), _unit(n, n - 1))])
        return out
    if letter == "E":
        if n not in (6, 7, 8):
            raise FamilyError("E_n needs n in 6..8")
        h = Fraction(1, 2)
        out = [[h, -h, -h, -h, -h, -h, -h, h]]
        out.append([a + b for a, b in zip(_unit(8, 0), _unit(8, 1))])
        for i in range(n - 2):
            out.append([a - b for a, b in zip(_unit(8, i + 1), _unit(8, i))])
        return out
    raise FamilyError(f"unsupported Dynkin type {letter}")


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _positive_roots(cartan) -> list:
    """All positive roots from a Cartan matrix via root strings."""
    n = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for a in layer:
            for j in range(n):
                # <a, psi_j^vee> = sum_i a_i cartan[j][i]
                pair = sum(a[i] * cartan[j][i] for i in range(n))
                p = 0
                b = list(a)
                while True:
                    b[j] -= 1
                    if tuple(b) in known:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    c = list(a)
                    c[j] += 1
                    c = tuple(c)
                    if c not in known:
                        known.add(c)
                        nxt.append(c)
        out.extend(nxt)
        layer = nxt
    return out


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A Hermitian root system: Dynkin data plus one marked noncompact node.

    ``node`` is the 0-based index of the noncompact simple root.
    """

    letter: str
    rank: int
    node: int
    family: HermitianFamily | None = None
    simple_eps: tuple = field(init=False, repr=False)
    gram: tuple = field(init=False, repr=False)
    cartan: tuple = field(init=False, repr=False)
    symmetrizer: tuple = field(init=False, repr=False)
    positive: tuple = field(init=False, repr=False)

    def __post_init__(self):
        simple = simple_roots_eps(self.letter, self.rank)
        gram = tuple(tuple(_dot(u, v) for v in simple) for u in simple)
        cartan = tuple(
            tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(self.rank)) for i in range(self.rank)
        )
        sym = tuple(gram[i][i] / 2 for i in range(self.rank))
        pos = sorted(_positive_roots(cartan))
        object.__setattr__(self, "simple_eps", tuple(tuple(v) for v in simple))
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "symmetrizer", sym)
        object.__setattr__(self, "positive", tuple(pos))
        for a in pos:
            if a[self.node] not in (0, 1):
                raise FamilyError(
                    f"node {self.node + 1} of {self.letter}{self.rank} is not a Hermitian node"
                )

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def key(self):
        return (self.letter, self.rank, self.node, self.family)

    @property
    def name(self):
        return str(self.family) if self.family else f"{self.letter}{self.rank}[{self.node + 1}]"

    # -- root catalogue ---------------------------------------------------
    @cached_property
    def roots(self) -> tuple:
        return self.positive + tuple(tuple(-c for c in a) for a in self.positive)

    @cached_property
    def compact_flags(self) -> tuple:
        return tuple(a[self.node] == 0 for a in self.roots)

    def is_compact(self, a: Root) -> bool:
        return a[self.node] == 0

    @cached_property
    def positive_noncompact(self) -> tuple:
        return tuple(sorted((a for a in self.positive if a[self.node] == 1), key=lambda a: (sum(a), a)))

    @cached_property
    def positive_compact(self) -> tuple:
        return tuple(a for a in self.positive if a[self.node] == 0)

    @cached_property
    def compact_simple(self) -> tuple:
        return tuple(i for i in range(self.rank) if i != self.node)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive, key=lambda a: (sum(a), a))

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    def is_root(self, v) -> bool:
        return tuple(v) in self.root_set

    # -- forms ------------------------------------------------------------
    def inner(self, a, b) -> Fraction:
        """Symmetric form on root-coordinate vectors."""
        r = self.rank
        return sum(
            (Fraction(a[i]) * b[j] * self.gram[i][j] for i in range(r) if a[i] for j in range(r) if b[j]),
            Fraction(0),
        )

    def coroot_pairing(self, a, j: int) -> Fraction:
        """<a, psi_j^vee> for a in root coordinates."""
        return Fraction(sum(a[i] * self.cartan[j][i] for i in range(self.rank)))

    def pairing(self, lam: "DominantVector", a) -> Fraction:
        """(lambda, alpha) with lambda in fundamental-weight coordinates.

        (varpi_psi, psi') = delta * |psi|^2/2, so the sum is
        sum_psi c_psi a_psi d_psi.
        """
        c = lam.fw if isinstance(lam, DominantVector) else lam
        if len(c) != self.rank or len(a) != self.rank:
            raise ValueError(f"dimension mismatch: rank {self.rank}, got {len(c)} and {len(a)}")
        return sum((Fraction(c[i]) * a[i] * self.symmetrizer[i] for i in range(self.rank) if a[i]), Fraction(0))

    def pairing_row(self, a) -> tuple:
        """Linear functional c -> (lambda_c, a) as a coefficient row."""
        return tuple(Fraction(a[i]) * self.symmetrizer[i] for i in range(self.rank))

    # -- order --------------------------------------------------------------
    @staticmethod
    def leq(a, b) -> bool:
        """Dominance order: b - a is a nonnegative combination of simple roots."""
        return all(y >= x for x, y in zip(a, b))

    # -- Weyl action -------------------------------------------------------
    def reflect_root(self, a, j: int) -> Root:
        k = sum(a[i] * self.cartan[j][i] for i in range(self.rank))
        out = list(a)
        out[j] -= k
        return tuple(out)

    def reflect_weight(self, c, j: int) -> tuple:
        """s_j on a weight in fundamental-weight coordinates."""
        cj = c[j]
        return tuple(Fraction(c[i]) - cj * self.cartan[i][j] for i in range(self.rank))

    @cached_property
    def compact_longest_word(self) -> tuple:
        """Reduced word of w_0 of the compact Weyl group (greedy descent).

        Starting from rho_k, reflect in the first compact simple root with
        positive pairing until the vector is antidominant for k.
        """
        v = tuple(Fraction(0 if i == self.node else 1) for i in range(self.rank))
        word = []
        while True:
            for j in self.compact_simple:
                if v[j] > 0:
                    v = self.reflect_weight(v, j)
                    word.append(j)
                    break
            else:
                return tuple(word)

    def w0k_weight(self, c) -> tuple:
        for j in self.compact_longest_word:
            c = self.reflect_weight(c, j)
        return c

    def w0k_root(self, a) -> Root:
        for j in self.compact_longest_word:
            a = self.reflect_root(a, j)
        return a

    # -- coordinates ---------------------------------------------------------
    @cached_property
    def fundamental_weights_eps(self) -> tuple:
        """varpi_i in epsilon coordinates: rows of (C^T)^{-1} applied to simple roots."""
        r = self.rank
        # varpi_i = sum_k m_ik psi_k with sum_k m_ik <psi_k, psi_j^vee> = delta_ij
        # <psi_k, psi_j^vee> = cartan[j][k]
        mat = [[Fraction(self.cartan[j][k]) for j in range(r)] for k in range(r)]
        inv = _inverse(mat)
        dim = len(self.simple_eps[0])
        out = []
        for i in range(r):
            v = [Fraction(0)] * dim
            for k in range(r):
                if inv[i][k]:
                    for t in range(dim):
                        v[t] += inv[i][k] * self.simple_eps[k][t]
            out.append(tuple(v))
        return tuple(out)

    def root_to_eps(self, a) -> tuple:
        dim = len(self.simple_eps[0])
        v = [Fraction(0)] * dim
        for k, ak in enumerate(a):
            if ak:
                for t in range(dim):
                    v[t] += ak * self.simple_eps[k][t]
        return tuple(v)

    def weight_to_eps(self, lam) -> tuple:
        c = lam.fw if isinstance(lam, DominantVector) else lam
        dim = len(self.simple_eps[0])
        v = [Fraction(0)] * dim
        for i, ci in enumerate(c):
            if ci:
                for t in range(dim):
                    v[t] += ci * self.fundamental_weights_eps[i][t]
        return tuple(v)

    def eps_to_weight(self, v) -> "DominantVector":
        """Fundamental-weight coordinates of an epsilon vector.

        c_psi = 2 (v, psi) / (psi, psi) with the Euclidean product; any
        component orthogonal to the roots (e.g. sum of all epsilon_i in
        type A) is dropped.
        """
        v = [Fraction(x) for x in v]
        dim = len(self.simple_eps[0])
        if len(v) != dim:
            raise ValueError(f"expected {dim} epsilon coordinates, got {len(v)}")
        return DominantVector(
            tuple(2 * _dot(v, s) / _dot(s, s) for s in self.simple_eps)
        )

    def is_k_dominant(self, lam) -> bool:
        c = lam.fw if isinstance(lam, DominantVector) else lam
        return all(c[i] >= 0 for i in self.compact_simple)


def _inverse(mat):
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class DominantVector:
    """lambda = sum_psi c_psi varpi_psi; x = h_lambda."""

    fw: tuple

    def __post_init__(self):
        object.__setattr__(self, "fw", tuple(Fraction(x) for x in self.fw))

    @classmethod
    def zero(cls, rank):
        return cls((0,) * rank)

    @classmethod
    def from_fw(cls, rank, terms: dict):
        """From a {node (1-based): coefficient} mapping."""
        c = [0] * rank
        for k, v in terms.items():
            c[k - 1] = v
        return cls(tuple(c))

    def __neg__(self):
        return DominantVector(tuple(-x for x in self.fw))

    def is_zero(self):
        return not any(self.fw)


@lru_cache(maxsize=None)
def build(family: HermitianFamily) -> RootSystem:
    letter, rank, node = family.dynkin
    return RootSystem(letter, rank, node - 1, family)


@lru_cache(maxsize=None)
def hermitian_system(letter: str, rank: int, node: int) -> RootSystem:
    """Root system for a Dynkin type with noncompact node (1-based)."""
    return RootSystem(letter, rank, node - 1, None)


# ---------------------------------------------------------------------------
# Noncompact poset


@dataclass(frozen=True, eq=False)
class NoncompactPoset:
    nodes: tuple
    hasse_edges: tuple  # (lower index, upper index, compact simple index)

    @cached_property
    def index(self):
        return {a: i for i, a in enumerate(self.nodes)}

    @cached_property
    def lower_covers(self) -> tuple:
        """Bitmask of lower covers per node."""
        out = [0] * len(self.nodes)
        for lo, hi, _ in self.hasse_edges:
            out[hi] |= 1 << lo
        return tuple(out)

    @cached_property
    def upper_covers(self) -> tuple:
        out = [0] * len(self.nodes)
        for lo, hi, _ in self.hasse_edges:
            out[lo] |= 1 << hi
        return tuple(out)

    def __len__(self):
        return len(self.nodes)

    def mask(self, roots) -> int:
        m = 0
        for a in roots:
            m |= 1 << self.index[a]
        return m

    def roots_of(self, mask: int) -> tuple:
        return tuple(a for i, a in enumerate(self.nodes) if mask >> i & 1)

    def is_down_closed(self, roots) -> bool:
        s = set(roots)
        return all(b in s for a in s for b in self.nodes if RootSystem.leq(b, a))

    def is_up_closed(self, roots) -> bool:
        s = set(roots)
        return all(b in s for a in s for b in self.nodes if RootSystem.leq(a, b))


@lru_cache(maxsize=None)
def noncompact_poset(rs: RootSystem) -> NoncompactPoset:
    nodes = rs.positive_noncompact
    idx = {a: i for i, a in enumerate(nodes)}
    edges = []
    for i, a in enumerate(nodes):
        for j in rs.compact_simple:
            b = list(a)
            b[j] += 1
            b = tuple(b)
            if b in idx:
                edges.append((i, idx[b], j))
    edges.sort()
    return NoncompactPoset(nodes, tuple(edges))


def _ideals_by_mask(lower_covers: Sequence[int], max_size: int) -> list:
    """Down-closed subsets (as bitmasks) of size <= max_size, grown one element at a time."""
    n = len(lower_covers)
    seen = {0}
    layer = [0]
    out = [0]
    for _ in range(min(max_size, n)):
        nxt = []
        for m in layer:
            for i in range(n):
                if not m >> i & 1 and lower_covers[i] & ~m == 0:
                    m2 = m | 1 << i
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        out.extend(nxt)
        layer = nxt
    return out


def _mask_key(m: int):
    bits = []
    i = 0
    while m:
        if m & 1:
            bits.append(i)
        m >>= 1
        i += 1
    return (len(bits), bits)


def enumerate_ideals(poset: NoncompactPoset, max_size: int | None = None) -> list:
    """All down-closed subsets with at most max_size elements, as root tuples."""
    if max_size is None:
        max_size = len(poset)
    masks = sorted(_ideals_by_mask(poset.lower_covers, max_size), key=_mask_key)
    return [poset.roots_of(m) for m in masks]


def enumerate_filters(poset: NoncompactPoset, max_size: int | None = None) -> list:
    """All up-closed subsets with at most max_size elements, as root tuples."""
    if max_size is None:
        max_size = len(poset)
    masks = sorted(_ideals_by_mask(poset.upper_covers, max_size), key=_mask_key)
    return [poset.roots_of(m) for m in masks]


def count_order_ideals(poset: NoncompactPoset) -> int:
    return len(_ideals_by_mask(poset.lower_covers, len(poset)))


def ideal_size_counts(poset: NoncompactPoset) -> list:
    """Number of order ideals of each size 0..|poset|."""
    counts = [0] * (len(poset) + 1)
    for m in _ideals_by_mask(poset.lower_covers, len(poset)):
        counts[bin(m).count("1")] += 1
    return counts


# ---------------------------------------------------------------------------
# Display


def _fmt_coeff_terms(terms):
    """terms: list of (coefficient, symbol).  Returns '2ε1−ε3' style text."""
    parts = []
    for c, sym in terms:
        if c == 0:
            continue
        mag = abs(c)
        mag_s = "" if mag == 1 else str(mag)
        sign = MINUS if c < 0 else "+"
        parts.append((sign, f"{mag_s}{sym}"))
    if not parts:
        return "0"
    out = ""
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out += (MINUS if sign == MINUS else "") + body
        else:
            out += sign + body
    return out


def _fmt_rational_terms(terms):
    from math import lcm

    den = 1
    for c, _ in terms:
        den = lcm(den, Fraction(c).denominator)
    if den == 1:
        return _fmt_coeff_terms([(int(c), s) for c, s in terms])
    inner = _fmt_coeff_terms([(int(c * den), s) for c, s in terms])
    return f"1/{den}({inner})"


def epsilon_terms(rs: RootSystem, v_eps) -> list:
    """(coefficient, symbol) pairs in the epsilon convention used for display."""
    fam = rs.family
    if rs.letter == "E" and rs.rank == 6 and (fam is None or fam.kind == "EIII"):
        # E6 lives where e6 = e7 = -e8; epsilon_0 := e8 - e7 - e6
        return [(v_eps[7], f"{EPS}0")] + [(v_eps[i], f"{EPS}{i + 1}") for i in range(5)]
    if rs.letter == "A":
        s = sum(v_eps, Fraction(0)) / len(v_eps)
        return [(x - s, f"{EPS}{i + 1}") for i, x in enumerate(v_eps)]
    return [(x, f"{EPS}{i + 1}") for i, x in enumerate(v_eps)]


def epsilon_display(rs: RootSystem, v) -> str:
    """Render a root (int tuple) or DominantVector in epsilon coordinates."""
    if isinstance(v, DominantVector):
        eps = rs.weight_to_eps(v)
    else:
        eps = rs.root_to_eps(v)
    return _fmt_rational_terms(epsilon_terms(rs, eps))


def fw_display(lam: DominantVector) -> str:
    return _fmt_rational_terms([(c, f"{VARPI}{i + 1}") for i, c in enumerate(lam.fw)])


def root_display(a) -> str:
    """Simple-root notation, e.g. 'psi1+2psi3'."""
    return _fmt_coeff_terms([(c, f"psi{i + 1}") for i, c in enumerate(a)])
