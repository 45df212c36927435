import pytest

from hermcycles import tables
from hermcycles.rootsys import HermitianFamily
from hermcycles.tables import FixtureError, GoldenTable, load_fixture, parse_table, verify_table

HEADER = "# table: T1\n# version: 1\n# columns: family | c_of_X | r_zero | sum_N | note\n"


@pytest.mark.parametrize("tid", tables.TABLE_IDS)
def test_packaged_fixtures_verify(tid):
    table = load_fixture(tid)
    assert table.rows
    assert verify_table(table) == []


@pytest.mark.parametrize("tid", tables.TABLE_IDS)
def test_render_parse_round_trip(tid):
    table = load_fixture(tid)
    again = parse_table(table.render())
    assert again.rows == table.rows
    assert again.table_id == tid


@pytest.mark.parametrize(
    "text, message",
    [
        ("su(3,7) | 3 | 3 | 1 | -\n", "before the header"),
        (HEADER + "su(3,7) | 3 | 3 | 1\n", "expected 5 cells"),
        (HEADER + "su(3,7) | three | 3 | 1 | -\n", "integer"),
        (HEADER + "su(3,7) |  | 3 | 1 | -\n", "empty cell"),
        (HEADER + "su(3) | 3 | 3 | 1 | -\n", "cannot parse"),
        (HEADER.replace("version: 1", "version: 2") + "su(3,7) | 3 | 3 | 1 | -\n", "version"),
        (HEADER.replace("# version: 1\n", "") + "su(3,7) | 3 | 3 | 1 | -\n", "version"),
        (HEADER.replace("T1", "T9"), "unknown table"),
        (HEADER.replace("sum_N", "total"), "do not match"),
        ("# table: T2\n# version: 1\n# columns: family | sigma | c_of_X | note\nsp(5) | psi_q | 4 | -\n", "generator"),
        ("", "missing table header"),
    ],
)
def test_malformed_fixtures_rejected(text, message):
    with pytest.raises(FixtureError, match=message):
        parse_table(text)


def test_wrong_value_is_reported():
    table = parse_table(HEADER + "e7-7 | 11 | 6 | 7 | -\n")
    bad = verify_table(table)
    assert [(m.column, m.expected, m.got) for m in bad] == [("sum_N", 7, 6)]
    assert "T1 row 1 [sum_N]" in str(bad[0])


def test_wrong_space_and_weight_reported():
    text = "# table: T4\n# version: 1\n# columns: lambda | R | Y_q | chi | note\n"
    table = parse_table(text + "ϖ2−ϖ7 | 6 | SO(10)/U(5) | 32 | -\n")
    cols = {m.column for m in verify_table(table)}
    assert "Y_q" in cols and "class count" in cols
    table = parse_table(text + "ϖ1 | 6 | S^2 | 2 | -\n")
    assert any(m.column == "lambda" for m in verify_table(table))


def test_sigma_cell_checks_codim():
    text = "# table: T2\n# version: 1\n# columns: family | sigma | c_of_X | note\n"
    assert verify_table(parse_table(text + "e6-1 | psi_3 | 6 | -\n"))[0].got == 10
    assert verify_table(parse_table(text + "e6-1 | psi_1 | 6 | -\n"))[0].column == "sigma"
    assert verify_table(parse_table(text + "so(2,7) | tau | 1 | -\n"))[0].got is None


def test_missing_fixture(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_fixture("T1", tmp_path)


def test_emit_is_deterministic_and_self_consistent():
    a = tables.emit_tables()
    b = tables.emit_tables()
    assert {k: v.render() for k, v in a.items()} == {k: v.render() for k, v in b.items()}
    for tid, table in a.items():
        assert verify_table(parse_table(table.render())) == [], tid


def test_emitted_tables_agree_with_fixtures_on_numbers():
    emitted = tables.emit_tables()
    for tid in ("T1", "T2"):
        got = [{k: v for k, v in r.items() if k not in ("note", "sigma")} for r in emitted[tid].rows]
        want = [{k: v for k, v in r.items() if k not in ("note", "sigma")} for r in load_fixture(tid).rows]
        assert got == want
    for tid in ("T3", "T4"):
        got = sorted((r["R"], r["chi"]) for r in emitted[tid].rows)
        want = sorted((r["R"], r["chi"]) for r in load_fixture(tid).rows)
        assert got == want


@pytest.mark.parametrize(
    "fam, chi",
    [
        (HermitianFamily("AIII", (3, 7)), 56),
        (HermitianFamily("BDI", (7,)), 6),
        (HermitianFamily("BDI", (10,)), 10),
        (HermitianFamily("CI", (5,)), 16),
        (HermitianFamily("DIII", (9,)), 128),
    ],
)
def test_t5_formula(fam, chi):
    assert tables.t5_formula(fam) == chi


def test_t5_formula_rejects_exceptional():
    with pytest.raises(ValueError):
        tables.t5_formula(HermitianFamily("EIII"))


def test_render_uses_dash_for_empty():
    t = GoldenTable("T1", [{"family": "sp(5)", "c_of_X": 4, "r_zero": 4, "sum_N": 1, "note": ""}])
    assert t.render().splitlines()[-1] == "sp(5) | 4 | 4 | 1 | -"
