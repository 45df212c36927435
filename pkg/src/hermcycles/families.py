"""Family strings and weight expressions.

Family strings: ``su(p,q)``, ``so(2,p)``, ``sp(n)`` (or ``sp(n,R)``),
``so*(2n)``, ``e6-1`` and ``e7-7``.  Weight expressions are linear
combinations of ``ε1``/``e1`` or ``ϖ1``/``w1`` with rational coefficients
and parentheses, e.g. ``2(ε1−ε6)+(ε2+ε3)−(ε4+ε5)``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .rootsys import DominantVector, FamilyError, HermitianFamily, RootSystem

_PATTERNS = [
    (re.compile(r"su\((\d+),(\d+)\)"), "AIII"),
    (re.compile(r"so\(2,(\d+)\)"), "BDI"),
    (re.compile(r"sp\((\d+)(?:,r)?\)"), "CI"),
    (re.compile(r"so\*\((\d+)\)"), "DIII"),
]
_EXCEPTIONAL = {
    "e6": "EIII", "e6-1": "EIII", "e6-3": "EIII", "e6(-14)": "EIII", "eiii": "EIII",
    "e7": "EVII", "e7-7": "EVII", "e7(-25)": "EVII", "evii": "EVII",
}


def parse_family(text: str) -> HermitianFamily:
    s = text.strip().lower().replace(" ", "").replace("ℝ", "r")
    if s in _EXCEPTIONAL:
        return HermitianFamily(_EXCEPTIONAL[s])
    for pat, kind in _PATTERNS:
        m = pat.fullmatch(s)
        if not m:
            continue
        nums = tuple(int(g) for g in m.groups())
        if kind == "AIII":
            return HermitianFamily(kind, tuple(sorted(nums)))
        if kind == "DIII":
            if nums[0] % 2:
                raise FamilyError(f"so*(2n) needs an even argument, got {nums[0]}")
            return HermitianFamily(kind, (nums[0] // 2,))
        return HermitianFamily(kind, nums)
    raise FamilyError(f"cannot parse family {text!r}")


def format_family(fam: HermitianFamily) -> str:
    k, ps = fam.kind, fam.params
    if k == "AIII":
        return f"su({ps[0]},{ps[1]})"
    if k == "BDI":
        return f"so(2,{ps[0]})"
    if k == "CI":
        return f"sp({ps[0]})"
    if k == "DIII":
        return f"so*({2 * ps[0]})"
    return "e6-1" if k == "EIII" else "e7-7"


# ---------------------------------------------------------------------------
# weight expressions

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([εeϖw])_?\{?(\d+)\}?|([()+\-−*]))")


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character in {text!r} at {pos}")
        num, sym, idx, op = m.groups()
        if num:
            out.append(("num", Fraction(num)))
        elif sym:
            kind = "eps" if sym in "εe" else "fw"
            out.append(("sym", (kind, int(idx))))
        else:
            out.append(("op", "-" if op == "−" else op))
        pos = m.end()
    return out


def parse_linear(text: str) -> dict:
    """{(kind, index): coefficient} for a linear expression."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"unexpected end of expression {text!r}")
        t = toks[pos]
        pos += 1
        return t

    def add(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + s * v
        return {k: v for k, v in out.items() if v}

    def expr():
        acc = {}
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = add(acc, term(), sign)
        while peek()[0] == "op" and peek()[1] in "+-":
            s = 1 if take()[1] == "+" else -1
            acc = add(acc, term(), s)
        return acc

    def term():
        coef = Fraction(1)
        if peek()[0] == "num":
            coef = take()[1]
            if peek() == ("op", "*"):
                take()
        t = peek()
        if t[0] == "sym":
            take()
            return {t[1]: coef}
        if t == ("op", "("):
            take()
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return {k: coef * v for k, v in inner.items()}
        raise ValueError(f"malformed expression {text!r}")

    if not toks:
        raise ValueError("empty expression")
    result = expr()
    if pos != len(toks):
        raise ValueError(f"trailing tokens in {text!r}")
    return result


def _eps_basis(rs: RootSystem, idx: int):
    """Ambient vector of epsilon_idx in the coordinates used for this family."""
    dim = len(rs.simple_eps[0])
    v = [Fraction(0)] * dim
    fam = rs.family
    if idx == 0:
        if fam is not None and fam.kind == "EIII":
            v[7], v[6], v[5] = Fraction(1), Fraction(-1), Fraction(-1)
            return v
        if rs.letter == "A":
            return [Fraction(1)] * dim
        raise ValueError("ε0 is only defined for su(p,q) and e6-1")
    if not 1 <= idx <= dim:
        raise ValueError(f"ε{idx} out of range for {rs.name}")
    if fam is not None and fam.kind == "EIII" and idx > 5:
        raise ValueError("e6-1 weights use ε0..ε5")
    v[idx - 1] = Fraction(1)
    return v


def parse_weight(rs: RootSystem, text: str) -> DominantVector:
    """Weight from an ε- or ϖ-expression, as fundamental-weight coordinates."""
    terms = parse_linear(text)
    kinds = {k for k, _ in terms}
    if len(kinds) > 1:
        raise ValueError("mixing ε and ϖ terms is not supported")
    if not terms:
        return DominantVector.zero(rs.rank)
    if kinds == {"fw"}:
        c = [Fraction(0)] * rs.rank
        for (_, i), v in terms.items():
            if not 1 <= i <= rs.rank:
                raise ValueError(f"ϖ{i} out of range for rank {rs.rank}")
            c[i - 1] += v
        return DominantVector(tuple(c))
    dim = len(rs.simple_eps[0])
    vec = [Fraction(0)] * dim
    for (_, i), coef in terms.items():
        for t, x in enumerate(_eps_basis(rs, i)):
            vec[t] += coef * x
    return rs.eps_to_weight(vec)
