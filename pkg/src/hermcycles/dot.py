"""Graphviz DOT text for the noncompact poset and the extended Dynkin diagram."""
from __future__ import annotations

from .rootsys import RootSystem, epsilon_display, noncompact_poset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(rs: RootSystem, name: str | None = None) -> str:
    poset = noncompact_poset(rs)
    lines = [f"digraph {_quote(name or rs.name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, a in enumerate(poset.nodes):
        lines.append(f"  n{i} [label={_quote(epsilon_display(rs, a))}];")
    for lo, hi, psi in poset.hasse_edges:
        lines.append(f"  n{lo} -> n{hi} [label={_quote(f'psi_{psi + 1}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_text(rs: RootSystem) -> str:
    poset = noncompact_poset(rs)
    out = [f"{len(poset.nodes)} nodes, {len(poset.hasse_edges)} edges"]
    for lo, hi, psi in poset.hasse_edges:
        out.append(f"{epsilon_display(rs, poset.nodes[lo])} -psi_{psi + 1}-> {epsilon_display(rs, poset.nodes[hi])}")
    return "\n".join(out) + "\n"


def dynkin_dot(rs: RootSystem, name: str | None = None) -> str:
    """Extended diagram: simple roots plus -alpha_0, noncompact node filled."""
    lines = [f"graph {_quote(name or rs.name)} {{", "  node [shape=circle, label=\"\", width=0.15];"]
    for i in range(rs.rank):
        style = "style=filled, fillcolor=black, " if i == rs.node else ""
        lines.append(f"  p{i + 1} [{style}xlabel={_quote(f'psi_{i + 1}')}];")
    lines.append(f"  a0 [xlabel={_quote('-alpha_0')}];")
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            bonds = rs.cartan[i][j] * rs.cartan[j][i]
            if bonds:
                lines.append(f"  p{i + 1} -- p{j + 1}" + (f" [label={bonds}]" if bonds > 1 else "") + ";")
    theta = rs.highest_root
    for i in range(rs.rank):
        # bonds between -alpha_0 and psi_i
        ab = 2 * rs.inner(theta, _unit(rs.rank, i)) / rs.inner(_unit(rs.rank, i), _unit(rs.rank, i))
        ba = 2 * rs.inner(theta, _unit(rs.rank, i)) / rs.inner(theta, theta)
        bonds = int(ab * ba)
        if bonds:
            lines.append(f"  a0 -- p{i + 1} [style=dashed" + (f", label={bonds}" if bonds > 1 else "") + "];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _unit(n, i):
    return tuple(int(i == j) for j in range(n))
