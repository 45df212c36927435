"""Golden tables: canonical text fixtures, regeneration and verification.

Fixture format (UTF-8)::

    # table: T1
    # version: 1
    # columns: family | c_of_X | r_zero | sum_N | note
    su(3,7) | 3 | 3 | 1 | -

Cells are separated by ``|``.  ``-`` marks an empty note.  Weight and
involution cells are checked semantically (the weight must land in the
expected class, the involution must realise the expected codimension); all
other cells are compared literally after normalisation.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from math import comb
from pathlib import Path

from .cycles import SigmaElement, c_of_X, codim, min_codim_over_sigma, outer_involution
from .families import format_family, parse_family, parse_weight
from .levi import compact_dual_of, same_space
from .parabolic import NotDominantError, classify, counts_by_r, hodge_of_lambda
from .rootsys import build, epsilon_display, fw_display

VERSION = 1

COLUMNS = {
    "T1": [("family", "family"), ("c_of_X", "int"), ("r_zero", "int"), ("sum_N", "int"), ("note", "str")],
    "T2": [("family", "family"), ("sigma", "sigma"), ("c_of_X", "int"), ("note", "str")],
    "T3": [("lambda", "weight"), ("R", "int"), ("Y_q", "space"), ("chi", "int"), ("note", "str")],
    "T4": [("lambda", "weight"), ("R", "int"), ("Y_q", "space"), ("chi", "int"), ("note", "str")],
    "T5": [("family", "family"), ("lambda", "weight"), ("Y_q", "space"), ("chi", "int"), ("note", "str")],
    "X1": [("family", "family"), ("lambda", "weight"), ("R", "int"), ("note", "str")],
}
TABLE_IDS = tuple(COLUMNS)

T1_FAMILIES = ["su(3,7)", "su(4,5)", "su(4,4)", "su(5,5)", "so(2,7)", "so(2,8)", "sp(5)", "so*(18)", "e6-1", "e7-7"]
T2_FAMILIES = ["su(3,7)", "su(4,4)", "so(2,7)", "so(2,8)", "sp(5)", "so*(18)", "e6-1", "e7-7"]
T5_FAMILIES = ["su(3,7)", "so(2,7)", "so(2,8)", "so(2,10)", "sp(5)", "so*(18)"]
X1_FAMILIES = [
    "su(2,3)", "su(2,4)", "su(3,3)", "su(3,4)", "su(4,4)", "sp(4)",
    "so*(8)", "so*(10)", "so*(12)", "so*(14)", "so*(16)",
]


class FixtureError(ValueError):
    pass


@dataclass
class GoldenTable:
    table_id: str
    rows: list  # list of dicts keyed by column name
    version: int = VERSION

    def render(self) -> str:
        cols = COLUMNS[self.table_id]
        lines = [
            f"# table: {self.table_id}",
            f"# version: {self.version}",
            "# columns: " + " | ".join(c for c, _ in cols),
        ]
        for row in self.rows:
            lines.append(" | ".join(str(row[c]) if row[c] != "" else "-" for c, _ in cols))
        return "\n".join(lines) + "\n"


def parse_table(text: str) -> GoldenTable:
    header = {}
    rows = []
    cols = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            header[key.strip()] = val.strip()
            if key.strip() == "columns":
                tid = header.get("table")
                if tid not in COLUMNS:
                    raise FixtureError(f"line {n}: unknown table id {tid!r}")
                cols = COLUMNS[tid]
                names = [c.strip() for c in val.split("|")]
                if names != [c for c, _ in cols]:
                    raise FixtureError(f"line {n}: columns {names} do not match {tid}")
            continue
        if cols is None:
            raise FixtureError(f"line {n}: data row before the header")
        cells = [c.strip() for c in line.split("|")]
        if len(cells) != len(cols):
            raise FixtureError(f"line {n}: expected {len(cols)} cells, got {len(cells)}")
        row = {}
        for (name, typ), cell in zip(cols, cells):
            if cell == "":
                raise FixtureError(f"line {n}: empty cell {name!r} (use '-')")
            if typ == "int":
                try:
                    row[name] = int(cell)
                except ValueError:
                    raise FixtureError(f"line {n}: {name} must be an integer, got {cell!r}") from None
            elif typ == "family":
                try:
                    row[name] = format_family(parse_family(cell))
                except ValueError as e:
                    raise FixtureError(f"line {n}: {e}") from None
            elif typ == "sigma" and cell != "tau":
                try:
                    SigmaElement.parse(cell)
                except ValueError as e:
                    raise FixtureError(f"line {n}: {e}") from None
                row[name] = cell
            else:
                row[name] = "" if cell == "-" else cell
        rows.append(row)
    if "table" not in header or cols is None:
        raise FixtureError("missing table header")
    try:
        version = int(header.get("version", ""))
    except ValueError:
        raise FixtureError("missing or malformed version") from None
    if version != VERSION:
        raise FixtureError(f"unsupported fixture version {version}")
    return GoldenTable(header["table"], rows, version)


def fixture_dir():
    return resources.files("hermcycles") / "fixtures"


def load_fixture(table_id: str, directory=None) -> GoldenTable:
    base = Path(directory) if directory is not None else fixture_dir()
    path = base / f"{table_id}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"missing fixture {path}")
    return parse_table(path.read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# computations shared by emit and verify


def table1_row(family: str) -> dict:
    rs = build(parse_family(family))
    c = c_of_X(rs)
    counts = counts_by_r(classify(rs, c))
    r0 = min(counts) if counts else None
    if r0 is None:
        r = c + 1
        while r <= len(rs.positive_noncompact):
            if counts_by_r(classify(rs, r)).get(r):
                r0 = r
                break
            r += 1
    return {"family": family, "c_of_X": c, "r_zero": r0 if r0 is not None else 0, "sum_N": sum(counts.values())}


def table2_row(family: str) -> dict:
    rs = build(parse_family(family))
    tau = outer_involution(rs)
    if tau is not None:
        sigma = "tau"
    else:
        _, s = min_codim_over_sigma(rs)
        sigma = s.label()
    return {"family": family, "sigma": sigma, "c_of_X": c_of_X(rs)}


def exceptional_family_classes(family: str):
    fam = parse_family(family)
    rs = build(fam)
    return rs, classify(rs, hodge_bound(fam))


def hodge_bound(fam) -> int:
    """Largest Hodge degree r examined for a family (the value c(X))."""
    if fam.kind == "AIII":
        return fam.params[0]
    if fam.kind in ("CI", "DIII"):
        return fam.params[0] - 1
    return c_of_X(build(fam))


def generic_weights(fam) -> list:
    """The weights whose classes make up the generic answer for a classical family."""
    k = fam.kind
    out = []
    if k == "AIII":
        p, q = fam.params
        if q >= 2:
            out.append(f"ε{p + 1}−ε{p + q}")
        if p == q and p >= 2:
            out.append(f"ε1−ε{p}")
        if q == p + 1:
            out += [f"{p}ε1+{q}ε{p + 1}−ε0", f"ε0−{p}ε{p}−{q}ε{p + q}"]
        if p == q and p >= 2:
            out += [f"{p}(ε1+ε{p + 1})−ε0", f"ε0−{p}(ε{p}+ε{p + q})"]
    elif k in ("CI", "DIII"):
        n = fam.params[0]
        out.append(f"ε1−ε{n}")
    elif k == "BDI":
        out.append("ε2")
    return out


def _dual_row(rs, cls):
    d = compact_dual_of(rs, cls)
    return d.name, d.euler


def emit_tables() -> dict:
    out = {}
    out["T1"] = GoldenTable("T1", [dict(table1_row(f), note="") for f in T1_FAMILIES])
    out["T2"] = GoldenTable("T2", [dict(table2_row(f), note="") for f in T2_FAMILIES])
    for tid, fam, rmax in (("T3", "e6-1", 6), ("T4", "e7-7", 11)):
        rs = build(parse_family(fam))
        rows = []
        for cls in classify(rs, rmax):
            name, chi = _dual_row(rs, cls)
            rows.append({"lambda": fw_display(cls.witness), "R": cls.r_plus, "Y_q": name, "chi": chi, "note": ""})
        out[tid] = GoldenTable(tid, rows)
    rows = []
    for f in T5_FAMILIES:
        fam = parse_family(f)
        rs = build(fam)
        lam = parse_weight(rs, generic_weights(fam)[0])
        name, chi = _dual_row(rs, hodge_of_lambda(rs, lam))
        rows.append({"family": f, "lambda": epsilon_display(rs, lam), "Y_q": name, "chi": chi, "note": ""})
    out["T5"] = GoldenTable("T5", rows)
    rows = []
    for f in X1_FAMILIES:
        fam = parse_family(f)
        rs, classes = exceptional_family_classes(f)
        generic = {hodge_of_lambda(rs, parse_weight(rs, g)).key for g in generic_weights(fam)}
        extras = [c for c in classes if c.key not in generic]
        if not extras:
            rows.append({"family": f, "lambda": "none", "R": 0, "note": ""})
        for c in extras:
            rows.append({"family": f, "lambda": epsilon_display(rs, c.witness), "R": c.r_plus, "note": ""})
    out["X1"] = GoldenTable("X1", rows)
    return out


# ---------------------------------------------------------------------------
# verification


@dataclass
class Mismatch:
    table_id: str
    row: int
    column: str
    expected: object
    got: object

    def __str__(self):
        return f"{self.table_id} row {self.row} [{self.column}]: expected {self.expected!r}, got {self.got!r}"


def _lands(rs, text, classes):
    """Class (from ``classes``) containing the weight, or an error string."""
    try:
        cls = hodge_of_lambda(rs, parse_weight(rs, text))
    except (NotDominantError, ValueError) as e:
        return None, str(e)
    for c in classes:
        if c.key == cls.key:
            return c, None
    return None, f"R=({cls.r_plus},{cls.r_minus}) class not among the computed ones"


def verify_table(table: GoldenTable) -> list:
    tid = table.table_id
    bad = []

    def check(i, col, expected, got, same=None):
        ok = same(expected, got) if same else expected == got
        if not ok:
            bad.append(Mismatch(tid, i, col, expected, got))

    if tid == "T1":
        for i, row in enumerate(table.rows, 1):
            got = table1_row(row["family"])
            for col in ("c_of_X", "r_zero", "sum_N"):
                check(i, col, row[col], got[col])
    elif tid == "T2":
        for i, row in enumerate(table.rows, 1):
            rs = build(parse_family(row["family"]))
            check(i, "c_of_X", row["c_of_X"], c_of_X(rs))
            if row["sigma"] == "tau":
                tau = outer_involution(rs)
                check(i, "sigma", row["c_of_X"], tau.codim if tau else None)
            else:
                try:
                    got = codim(rs, SigmaElement.parse(row["sigma"])).codim
                except ValueError as e:
                    got = str(e)
                check(i, "sigma", row["c_of_X"], got)
    elif tid in ("T3", "T4"):
        fam, rmax = ("e6-1", 6) if tid == "T3" else ("e7-7", 11)
        rs = build(parse_family(fam))
        classes = classify(rs, rmax)
        hit = set()
        for i, row in enumerate(table.rows, 1):
            cls, err = _lands(rs, row["lambda"], classes)
            if cls is None:
                check(i, "lambda", row["lambda"], err)
                continue
            hit.add(cls.key)
            name, chi = _dual_row(rs, cls)
            check(i, "R", row["R"], cls.r_plus)
            check(i, "Y_q", row["Y_q"], name, same_space)
            check(i, "chi", row["chi"], chi)
        check(0, "class count", len(classes), len(hit))
        if len(hit) != len(table.rows):
            check(0, "distinct rows", len(table.rows), len(hit))
    elif tid == "T5":
        for i, row in enumerate(table.rows, 1):
            fam = parse_family(row["family"])
            rs = build(fam)
            try:
                cls = hodge_of_lambda(rs, parse_weight(rs, row["lambda"]))
            except (NotDominantError, ValueError) as e:
                check(i, "lambda", row["lambda"], str(e))
                continue
            name, chi = _dual_row(rs, cls)
            check(i, "Y_q", row["Y_q"], name, same_space)
            check(i, "chi", row["chi"], chi)
            expected_chi = t5_formula(fam)
            check(i, "chi formula", expected_chi, chi)
    elif tid == "X1":
        by_family = {}
        for i, row in enumerate(table.rows, 1):
            by_family.setdefault(row["family"], []).append((i, row))
        for f, items in by_family.items():
            fam = parse_family(f)
            rs, classes = exceptional_family_classes(f)
            generic = set()
            for g in generic_weights(fam):
                cls, err = _lands(rs, g, classes)
                if cls is None:
                    check(items[0][0], "generic", g, err)
                else:
                    generic.add(cls.key)
            listed = set()
            for i, row in items:
                if row["lambda"] == "none":
                    continue
                cls, err = _lands(rs, row["lambda"], classes)
                if cls is None:
                    check(i, "lambda", row["lambda"], err)
                    continue
                check(i, "R", row["R"], cls.r_plus)
                check(i, "exceptional", True, cls.key not in generic)
                listed.add(cls.key)
            extras = {c.key for c in classes} - generic
            check(items[0][0], f"{f} exceptional count", len(listed), len(extras))
            check(items[0][0], f"{f} exceptional set", True, listed == extras)
    return bad


def t5_formula(fam) -> int:
    """Closed-form Euler characteristic of Y_q for the generic class."""
    k, ps = fam.kind, fam.params
    if k == "AIII":
        p, q = ps
        return comb(p + q - 2, p)
    if k == "BDI":
        return 2 * (ps[0] // 2)
    if k == "CI":
        return 2 ** (ps[0] - 1)
    if k == "DIII":
        return 2 ** (ps[0] - 2)
    raise ValueError(f"no closed form for {fam}")
