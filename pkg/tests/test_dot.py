import re

import pytest

from hermcycles.dot import dynkin_dot, hasse_dot, hasse_text
from hermcycles.rootsys import noncompact_poset

from conftest import rs_of


@pytest.mark.parametrize("name", ["su(1,2)", "su(3,4)", "sp(4)", "so(2,8)", "so*(10)", "e6-1", "e7-7"])
def test_hasse_dot_matches_poset(name):
    rs = rs_of(name)
    poset = noncompact_poset(rs)
    text = hasse_dot(rs, name)
    nodes = re.findall(r"^  n\d+ \[label=", text, re.M)
    edges = re.findall(r"^  n(\d+) -> n(\d+) \[label=\"psi_(\d+)\"\];$", text, re.M)
    assert len(nodes) == len(poset.nodes)
    assert len(edges) == len(poset.hasse_edges)
    for lo, hi, psi in edges:
        assert int(psi) - 1 in rs.compact_simple
    assert text.startswith(f'digraph "{name}" {{') and text.rstrip().endswith("}")
    assert text.count("{") == text.count("}")


def test_hasse_text_lists_edges():
    text = hasse_text(rs_of("su(1,3)"))
    lines = text.splitlines()
    assert lines[0] == "3 nodes, 2 edges"
    assert all("-psi_" in line for line in lines[1:])


@pytest.mark.parametrize("name, bonds", [("e7-7", 7), ("sp(3)", 3), ("so(2,7)", 4), ("su(2,3)", 5)])
def test_dynkin_dot(name, bonds):
    rs = rs_of(name)
    text = dynkin_dot(rs, name)
    assert text.count("style=filled") == 1
    assert f"p{rs.node + 1} [style=filled" in text
    assert text.count(" -- ") == bonds
    assert "a0 --" in text


def test_dot_quoting():
    text = hasse_dot(rs_of("su(1,1)"), 'odd"name')
    assert 'digraph "odd\\"name"' in text


def test_dot_is_deterministic():
    rs = rs_of("so*(12)")
    assert hasse_dot(rs) == hasse_dot(rs)
    assert dynkin_dot(rs) == dynkin_dot(rs)
