"""Commuting involutions and the codimension of their fixed cycles.

An element of the group is a set S of compact simple roots together with a
bit saying whether theta is composed in.  It acts on the root space of
alpha by (-1) to the power sum_{psi in S} a_{alpha,psi} (+1 if alpha is
noncompact and the bit is set).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .levi import classify_connected, components, submatrix
from .rootsys import RootSystem


@dataclass(frozen=True, order=True)
class SigmaElement:
    S: tuple = ()
    theta: bool = False

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(set(self.S))))

    def compose(self, other: "SigmaElement") -> "SigmaElement":
        return SigmaElement(tuple(set(self.S) ^ set(other.S)), self.theta != other.theta)

    def label(self) -> str:
        parts = [f"psi_{i}" for i in self.S]
        if self.theta:
            parts.append("theta")
        return ",".join(parts) or "id"

    def to_json(self) -> dict:
        return {"S": [f"psi_{i}" for i in self.S], "theta": self.theta}

    @classmethod
    def parse(cls, text: str) -> "SigmaElement":
        """From "psi_3,theta", "psi3", "theta" or "id"."""
        S, theta = [], False
        for tok in text.replace(" ", "").split(","):
            if not tok or tok == "id":
                continue
            if tok == "theta":
                if theta:
                    raise ValueError("theta listed twice")
                theta = True
                continue
            t = tok.removeprefix("psi").removeprefix("_")
            if not t.isdigit():
                raise ValueError(f"cannot parse involution generator {tok!r}")
            S.append(int(t))
        if len(set(S)) != len(S):
            raise ValueError("repeated generator in involution")
        return cls(tuple(S), theta)


@dataclass(frozen=True)
class CodimReport:
    sigma: SigmaElement
    codim: int
    fixed_noncompact_count: int

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma.to_json(),
            "codim": self.codim,
            "fixed_counts": {"noncompact_positive": self.fixed_noncompact_count},
        }


def _check(rs: RootSystem, sigma: SigmaElement):
    for i in sigma.S:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"psi_{i} is not a simple root of a rank {rs.rank} system")
        if i - 1 == rs.node:
            raise ValueError(f"psi_{i} is the noncompact simple root; only compact ones generate the group")


def parity(rs: RootSystem, sigma: SigmaElement, a) -> int:
    p = sum(a[i - 1] for i in sigma.S)
    if sigma.theta and not rs.is_compact(a):
        p += 1
    return p % 2


def codim(rs: RootSystem, sigma: SigmaElement) -> CodimReport:
    _check(rs, sigma)
    odd = sum(parity(rs, sigma, a) for a in rs.positive_noncompact)
    total = len(rs.positive_noncompact)
    return CodimReport(sigma, odd, total - odd)


def all_sigma(rs: RootSystem) -> list:
    nodes = [i + 1 for i in rs.compact_simple]
    out = []
    for k in range(len(nodes) + 1):
        for S in combinations(nodes, k):
            out.append(SigmaElement(S, False))
            out.append(SigmaElement(S, True))
    return sorted(out)


def min_codim_over_sigma(rs: RootSystem):
    """Least nontrivial codimension and the first element reaching it.

    Elements acting trivially on p (codim 0) or fixing only a point
    (codim = dim X) are skipped.  Returns (None, None) if nothing is left.
    """
    total = len(rs.positive_noncompact)
    best = None
    for s in all_sigma(rs):
        c = codim(rs, s).codim
        if c == 0 or c == total:
            continue
        key = (c, s.S, s.theta)
        if best is None or key < best[0]:
            best = (key, s)
    if best is None:
        return None, None
    return best[0][0], best[1]


@dataclass(frozen=True)
class OuterInvolution:
    """Codimension-one cycle from an outer automorphism (even orthogonal case)."""

    codim: int
    fixed_subgroup: str


def outer_involution(rs: RootSystem):
    fam = rs.family
    if fam is not None and fam.kind == "BDI" and fam.params[0] % 2 == 0:
        return OuterInvolution(1, f"SO_0(2,{fam.params[0] - 1})")
    return None


def c_of_X(rs: RootSystem) -> int:
    tau = outer_involution(rs)
    if tau is not None:
        return tau.codim
    c, _ = min_codim_over_sigma(rs)
    if c is None:
        # only the trivial element and theta: the cycle is a point
        return len(rs.positive_noncompact)
    return c


@dataclass(frozen=True)
class FixedSubsystem:
    roots: frozenset
    compact_positive: int
    noncompact_positive: int
    semisimple_type: str


def fixed_subsystem(rs: RootSystem, sigma: SigmaElement) -> FixedSubsystem:
    _check(rs, sigma)
    fixed = frozenset(a for a in rs.roots if parity(rs, sigma, a) == 0)
    pos = [a for a in rs.positive if a in fixed]
    pos_set = set(pos)
    simple = [
        a for a in pos
        if not any(tuple(x - y for x, y in zip(a, b)) in pos_set for b in pos if b != a)
    ]
    return FixedSubsystem(
        fixed,
        sum(1 for a in pos if rs.is_compact(a)),
        sum(1 for a in pos if not rs.is_compact(a)),
        dynkin_summary(rs, simple),
    )


def dynkin_summary(rs: RootSystem, simple) -> str:
    if not simple:
        return "0"
    mat = tuple(tuple(int(2 * rs.inner(a, b) / rs.inner(a, a)) for b in simple) for a in simple)
    names = []
    for comp in components(mat):
        letter, rank, _ = classify_connected(submatrix(mat, comp))
        names.append((rank, f"{letter}{rank}"))
    return "+".join(n for _, n in sorted(names, key=lambda t: (-t[0], t[1])))
