"""Levi factors of a class and the compact dual Y_q.

The zero-root subsystem of a witness splits into irreducible Hermitian
pieces, one per minimal noncompact zero root, plus a compact remainder.
Each piece is identified up to diagram automorphism by matching its Cartan
matrix against the standard ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .parabolic import ParabolicClass
from .rootsys import (
    DominantVector,
    RootSystem,
    hermitian_system,
    ideal_size_counts,
    noncompact_poset,
    simple_roots_eps,
)


class ClassificationError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# Dynkin types


@lru_cache(maxsize=None)
def standard_cartan(letter: str, rank: int) -> tuple:
    simple = simple_roots_eps(letter, rank)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    return tuple(
        tuple(int(2 * dot(simple[i], simple[j]) / dot(simple[i], simple[i])) for j in range(rank))
        for i in range(rank)
    )


def _candidates(rank):
    out = [("A", rank)]
    if rank >= 4:
        out.append(("D", rank))
    if rank >= 2:
        out.append(("C", rank))
    if rank >= 3:
        out.append(("B", rank))
    if rank in (6, 7, 8):
        out.append(("E", rank))
    return out


def _degrees(mat):
    n = len(mat)
    return sorted(sum(1 for j in range(n) if j != i and mat[i][j]) for i in range(n))


def _matchings(mat, std):
    """All permutations p with mat[p[i]][p[j]] == std[i][j]."""
    n = len(mat)
    found = []

    def extend(p, used):
        i = len(p)
        if i == n:
            found.append(tuple(p))
            return
        for c in range(n):
            if c in used or mat[c][c] != std[i][i]:
                continue
            if all(mat[p[k]][c] == std[k][i] and mat[c][p[k]] == std[i][k] for k in range(i)):
                p.append(c)
                used.add(c)
                extend(p, used)
                p.pop()
                used.discard(c)

    extend([], set())
    return found


def classify_connected(mat) -> tuple:
    """(letter, rank, permutations) for a connected Cartan matrix."""
    n = len(mat)
    deg = _degrees(mat)
    for letter, rank in _candidates(n):
        std = standard_cartan(letter, rank)
        if _degrees(std) != deg:
            continue
        perms = _matchings(mat, std)
        if perms:
            return letter, rank, perms
    raise ClassificationError(f"Cartan matrix {mat} matches no finite type")


def components(mat) -> list:
    n = len(mat)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and mat[i][j]:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return out


def submatrix(mat, idx):
    return tuple(tuple(mat[i][j] for j in idx) for i in idx)


def canonical_node(letter: str, rank: int, nodes) -> int:
    """Representative of a node orbit under diagram automorphisms (1-based)."""
    if letter == "A":
        return min(min(p, rank + 1 - p) for p in nodes)
    if letter == "D":
        return max(nodes)
    return min(nodes)


def weyl_order(letter: str, rank: int) -> int:
    if letter == "A":
        return factorial(rank + 1)
    if letter in "BC":
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {6: 51840, 7: 2903040, 8: 696729600}[rank]


def weyl_order_of_matrix(mat) -> int:
    out = 1
    for comp in components(mat):
        letter, rank, _ = classify_connected(submatrix(mat, comp))
        out *= weyl_order(letter, rank)
    return out


def dual_name(letter: str, rank: int, node: int) -> str:
    if letter == "A":
        return "S^2" if rank == 1 else f"G_{node}(C^{rank + 1})"
    if letter == "B" and node == 1:
        return f"Q_{2 * rank - 1}"
    if letter == "D" and node == 1:
        return f"Q_{2 * rank - 2}"
    if letter == "C" and node == rank:
        return f"Sp({rank})/U({rank})"
    if letter == "D" and node == rank:
        return f"SO({2 * rank})/U({rank})"
    if letter == "E" and rank == 6 and node == 1:
        return "E6/(Spin(10)xU(1))"
    if letter == "E" and rank == 7 and node == 7:
        return "E7/(E6xU(1))"
    raise ClassificationError(f"({letter}{rank}, node {node}) is not a Hermitian pair")


_ALIASES = {
    "Sp(1)/U(1)": "S^2",
    "Q_1": "S^2",
    "G_1(C^2)": "S^2",
    "P^1(C)": "S^2",
    "Sp(2)/U(2)": "Q_3",
    "SO(8)/U(4)": "Q_6",
    "Q_4": "G_2(C^4)",
    "SO(6)/U(3)": "G_1(C^4)",
    "Q_2": "S^2 x S^2",
    "SO(4)/U(2)": "S^2",
    "point": "",
}


def canonical_space(name: str) -> str:
    """Normal form of a product name so that isomorphic spaces compare equal."""
    name = name.replace("×", " x ").replace("𝕊", "S").replace("ℂ", "C")
    parts = []
    for f in name.split(" x "):
        f = f.strip().replace(" ", "")
        if not f:
            continue
        f = f.replace("{", "").replace("}", "")
        f = _ALIASES.get(f, f)
        parts.extend(p.strip() for p in f.split(" x ") if p.strip())
    return " x ".join(sorted(parts))


def same_space(a: str, b: str) -> bool:
    return canonical_space(a) == canonical_space(b)


# ---------------------------------------------------------------------------
# Factorization


@dataclass(frozen=True)
class HermitianFactor:
    alpha: tuple
    delta_alpha: tuple  # alpha first, then compact simple roots (as root tuples)
    phi_alpha: frozenset
    letter: str
    rank: int
    node: int  # canonical, 1-based
    dual_name: str

    @property
    def dim_c(self) -> int:
        return len(noncompact_poset(hermitian_system(self.letter, self.rank, self.node)))


@dataclass(frozen=True)
class LeviFactorization:
    phi_x: frozenset
    strongly_orthogonal: tuple
    factors: tuple
    compact_ideal: frozenset


def _support_ok(rs, gamma, alpha, allowed):
    t = gamma[rs.node]
    rest = [g - t * a for g, a in zip(gamma, alpha)]
    return all(v == 0 or i in allowed for i, v in enumerate(rest))


def _cartan_of(rs, roots):
    return tuple(
        tuple(int(2 * rs.inner(a, b) / rs.inner(a, a)) for b in roots) for a in roots
    )


def levi_factorize(rs: RootSystem, cls: ParabolicClass | DominantVector) -> LeviFactorization:
    lam = cls.witness if isinstance(cls, ParabolicClass) else cls
    phi_x = frozenset(a for a in rs.roots if rs.pairing(lam, a) == 0)
    zero_nc = [a for a in rs.positive_noncompact if a in phi_x]
    minimal = tuple(
        a for a in zero_nc if not any(b != a and RootSystem.leq(b, a) for b in zero_nc)
    )
    factors = []
    covered = set()
    for alpha in minimal:
        psis = set()
        for beta in zero_nc:
            if beta != alpha and RootSystem.leq(alpha, beta):
                psis.update(i for i in rs.compact_simple if beta[i] != alpha[i])
        psis = sorted(psis)
        simple = [alpha] + [tuple(int(i == j) for j in range(rs.rank)) for i in psis]
        for s in simple[1:]:
            assert s in phi_x, "compact simple root of a factor is not a zero root"
        phi_a = frozenset(g for g in phi_x if _support_ok(rs, g, alpha, set(psis)))
        # every root of the factor is an integral combination of one sign over the simple system
        for g in phi_a:
            coeffs = [g[rs.node]] + [g[i] - g[rs.node] * alpha[i] for i in psis]
            assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs), "not a simple system"
            assert abs(g[rs.node]) <= 1, "noncompact coefficient exceeds one"
        mat = _cartan_of(rs, simple)
        if len(components(mat)) != 1:
            raise ClassificationError("factor diagram is disconnected")
        letter, rank, perms = classify_connected(mat)
        nodes = {p.index(0) + 1 for p in perms}
        node = canonical_node(letter, rank, nodes)
        ref = hermitian_system(letter, rank, node)
        assert len(phi_a) == len(ref.roots), (
            f"factor root count {len(phi_a)} != {letter}{rank} root count {len(ref.roots)}"
        )
        factors.append(
            HermitianFactor(alpha, tuple(simple), phi_a, letter, rank, node, dual_name(letter, rank, node))
        )
        covered |= phi_a
    compact = frozenset(phi_x - covered)
    assert all(rs.is_compact(g) for g in compact), "noncompact root left outside the Hermitian factors"
    for i, a in enumerate(minimal):
        for b in minimal[i + 1:]:
            s = tuple(x + y for x, y in zip(a, b))
            d = tuple(x - y for x, y in zip(a, b))
            assert not rs.is_root(s) and not rs.is_root(d) and rs.inner(a, b) == 0, "not strongly orthogonal"
    return LeviFactorization(phi_x, minimal, tuple(factors), compact)


# ---------------------------------------------------------------------------
# Compact dual


@dataclass(frozen=True)
class CompactDualProduct:
    factors: tuple  # (letter, rank, node, dual_name), sorted by (rank, name)
    dim_c: int
    euler: int
    poincare: tuple

    @property
    def name(self) -> str:
        if not self.factors:
            return "point"
        return " x ".join(f[3] for f in self.factors)

    def to_json(self) -> dict:
        return {
            "factors": [
                {"type": f"{t}{r}", "rank": r, "node": n, "dual_name": name} for t, r, n, name in self.factors
            ],
            "dim_c": self.dim_c,
            "euler": self.euler,
            "poincare": list(self.poincare),
        }


@lru_cache(maxsize=None)
def factor_poincare(letter: str, rank: int, node: int) -> tuple:
    """Betti numbers b_0, b_2, ... from order ideals of the noncompact poset."""
    return tuple(ideal_size_counts(noncompact_poset(hermitian_system(letter, rank, node))))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def factor_euler(letter: str, rank: int, node: int) -> int:
    """|W(g)| / |W(k)| with k the diagram minus the noncompact node."""
    std = standard_cartan(letter, rank)
    rest = [i for i in range(rank) if i != node - 1]
    return weyl_order(letter, rank) // weyl_order_of_matrix(submatrix(std, rest))


def euler_characteristic(dual: CompactDualProduct | list) -> int:
    factors = dual.factors if isinstance(dual, CompactDualProduct) else dual
    return prod((factor_euler(t, r, n) for t, r, n, *_ in factors), start=1)


def poincare_polynomial(dual: CompactDualProduct | list) -> list:
    factors = dual.factors if isinstance(dual, CompactDualProduct) else dual
    out = [1]
    for t, r, n, *_ in factors:
        out = poly_mul(out, factor_poincare(t, r, n))
    return out


def compact_dual(rs: RootSystem, lf: LeviFactorization) -> CompactDualProduct:
    facs = sorted(((f.letter, f.rank, f.node, f.dual_name) for f in lf.factors), key=lambda t: (t[1], t[3]))
    poly = poincare_polynomial(facs)
    chi = euler_characteristic(facs)
    assert sum(poly) == chi, f"Poincare sum {sum(poly)} != Weyl ratio {chi}"
    assert poly == poly[::-1] and poly[0] == 1
    dim_c = len(poly) - 1
    dim_direct = sum(1 for a in lf.phi_x if a[rs.node] == 1)
    assert dim_c == dim_direct, f"dim {dim_c} != #zero noncompact positive roots {dim_direct}"
    return CompactDualProduct(tuple(facs), dim_c, chi, tuple(poly))


def compact_dual_of(rs: RootSystem, cls) -> CompactDualProduct:
    return compact_dual(rs, levi_factorize(rs, cls))
