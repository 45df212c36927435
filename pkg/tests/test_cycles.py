import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermcycles.cycles import (
    SigmaElement,
    all_sigma,
    c_of_X,
    codim,
    dynkin_summary,
    fixed_subsystem,
    min_codim_over_sigma,
    outer_involution,
    parity,
)

from conftest import rs_of
from oracles import codim_by_parity

FAMILIES = ["su(2,5)", "su(3,7)", "su(4,4)", "so(2,7)", "so(2,8)", "sp(5)", "so*(8)", "so*(18)", "e6-1", "e7-7"]


def test_exceptional_codims():
    e6, e7 = rs_of("e6-1"), rs_of("e7-7")
    assert codim(e6, SigmaElement((3,))).codim == 10
    assert codim(e6, SigmaElement((3,), True)).codim == 6
    assert codim(e7, SigmaElement((6,), True)).codim == 11
    c6, s6 = min_codim_over_sigma(e6)
    c7, s7 = min_codim_over_sigma(e7)
    assert (c6, c7) == (6, 11)
    # ties are broken by the smallest S; psi_2 already reaches 6 on e6
    assert s6 == SigmaElement((2,), True)
    assert codim(e7, s7).codim == 11


@pytest.mark.parametrize("name", FAMILIES)
def test_codim_matches_parity_oracle(name):
    rs = rs_of(name)
    for s in all_sigma(rs):
        rep = codim(rs, s)
        assert rep.codim == codim_by_parity(rs.positive_noncompact, s.S, int(s.theta))
        assert rep.codim + rep.fixed_noncompact_count == len(rs.positive_noncompact)


@pytest.mark.parametrize("name", FAMILIES)
def test_theta_complements_codim(name):
    rs = rs_of(name)
    theta = SigmaElement((), True)
    total = len(rs.positive_noncompact)
    assert codim(rs, theta).codim == total
    assert codim(rs, SigmaElement()).codim == 0
    for s in all_sigma(rs):
        assert codim(rs, s).codim + codim(rs, s.compose(theta)).codim == total


@pytest.mark.parametrize("name", ["su(2,4)", "sp(4)", "so*(10)", "e6-1"])
def test_parity_is_a_homomorphism(name):
    rs = rs_of(name)
    group = all_sigma(rs)
    assert len(group) == 2 ** (len(rs.compact_simple) + 1)
    for a in group[:: max(1, len(group) // 8)]:
        for b in group:
            ab = a.compose(b)
            assert ab.compose(b) == a
            for r in rs.roots:
                assert parity(rs, ab, r) == parity(rs, a, r) ^ parity(rs, b, r)


@pytest.mark.parametrize("name", ["su(3,4)", "so(2,9)", "sp(5)", "so*(12)", "e7-7"])
def test_fixed_subsystem_consistency(name):
    rs = rs_of(name)
    for i in rs.compact_simple:
        s = SigmaElement((i + 1,))
        fs = fixed_subsystem(rs, s)
        assert codim(rs, s).codim == len(rs.positive_noncompact) - fs.noncompact_positive
        # fixed roots form a closed subsystem
        for a in fs.roots:
            assert tuple(-x for x in a) in fs.roots
            for b in fs.roots:
                c = tuple(x + y for x, y in zip(a, b))
                if rs.is_root(c):
                    assert c in fs.roots


def test_fixed_subsystem_identity_is_everything():
    rs = rs_of("so*(10)")
    fs = fixed_subsystem(rs, SigmaElement())
    assert fs.roots == frozenset(rs.roots)
    assert fs.semisimple_type == "D5"


def test_ci_first_node_fixed_roots():
    n = 5
    rs = rs_of(f"sp({n})")
    fs = fixed_subsystem(rs, SigmaElement((1,)))
    got = {tuple(rs.root_to_eps(a)) for a in rs.positive_noncompact if a in fs.roots}

    def e(*idx):
        v = [0] * n
        for i in idx:
            v[i - 1] += 1
        return tuple(v)

    expected = {e(j, j) for j in range(1, n + 1)} | {e(i, j) for i in range(2, n + 1) for j in range(i + 1, n + 1)}
    assert got == expected
    assert codim(rs, SigmaElement((1,))).codim == n - 1


@pytest.mark.parametrize("p, q", [(2, 3), (3, 5), (3, 7), (4, 6)])
def test_aiii_last_node_codim(p, q):
    rs = rs_of(f"su({p},{q})")
    s = SigmaElement((p + q - 1,))
    fs = fixed_subsystem(rs, s)
    assert fs.noncompact_positive == p * (q - 1)
    assert codim(rs, s).codim == p


def test_exceptional_fixed_types():
    # positive root counts: E6 36, D5 20, A5+A1 16
    fs = fixed_subsystem(rs_of("e7-7"), SigmaElement((6,), True))
    assert (fs.semisimple_type, fs.compact_positive, fs.noncompact_positive) == ("E6", 20, 16)
    fs = fixed_subsystem(rs_of("e6-1"), SigmaElement((3,), True))
    assert (fs.semisimple_type, fs.compact_positive, fs.noncompact_positive) == ("D5", 10, 10)
    fs = fixed_subsystem(rs_of("e6-1"), SigmaElement((3,)))
    assert (fs.semisimple_type, fs.compact_positive, fs.noncompact_positive) == ("A5+A1", 10, 6)


@pytest.mark.parametrize(
    "name, expected",
    [("su(3,7)", 3), ("su(4,4)", 4), ("so(2,7)", 1), ("so(2,8)", 1), ("sp(5)", 4), ("so*(18)", 8),
     ("e6-1", 6), ("e7-7", 11), ("su(1,1)", 1), ("su(1,5)", 1), ("so*(8)", 2)],
)
def test_c_of_x(name, expected):
    assert c_of_X(rs_of(name)) == expected


def test_outer_involution_only_for_even_orthogonal():
    tau = outer_involution(rs_of("so(2,8)"))
    assert tau.codim == 1 and tau.fixed_subgroup == "SO_0(2,7)"
    assert outer_involution(rs_of("so(2,7)")) is None
    assert min_codim_over_sigma(rs_of("so(2,8)"))[0] == 2


def test_su11_has_no_nontrivial_element():
    assert min_codim_over_sigma(rs_of("su(1,1)")) == (None, None)


def test_bad_sigma():
    rs = rs_of("e6-1")
    with pytest.raises(ValueError):
        codim(rs, SigmaElement((1,)))
    with pytest.raises(ValueError):
        codim(rs, SigmaElement((9,)))
    for text in ["psi_x", "theta,theta", "psi_2,psi2"]:
        with pytest.raises(ValueError):
            SigmaElement.parse(text)


@given(st.sets(st.integers(1, 7)), st.booleans())
def test_sigma_label_round_trip(S, theta):
    s = SigmaElement(tuple(S), theta)
    assert SigmaElement.parse(s.label()) == s
    assert s.compose(s) == SigmaElement()


def test_sigma_json_and_summary():
    s = SigmaElement.parse("psi3, theta")
    assert s.to_json() == {"S": ["psi_3"], "theta": True}
    assert SigmaElement.parse("id") == SigmaElement()
    rep = codim(rs_of("e6-1"), s)
    assert rep.to_json() == {"sigma": {"S": ["psi_3"], "theta": True}, "codim": 6, "fixed_counts": {"noncompact_positive": 10}}
    assert dynkin_summary(rs_of("e6-1"), []) == "0"
