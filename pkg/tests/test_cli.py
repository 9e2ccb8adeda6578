import io
import subprocess
import sys

import pytest

from agkit.cli import main
from agkit.magma import read_magma
from conftest import FIXTURES


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def fx(name):
    return str(FIXTURES / f"{name}.tbl")


def test_classify_lad_example():
    code, text = run("classify", fx("lad-example"))
    assert code == 0
    status = {line.split()[0]: line.split()[-1] for line in text.splitlines()[2:]}
    for name in ("left-invertive", "lad", "medial"):
        assert status[name] == "holds"
    assert "fails at a=3 b=3 c=3: 1 != 0" in text


def test_classify_kv():
    code, text = run("classify", "--format", "kv", fx("ld-not-lad"))
    assert code == 0
    lines = [dict(kv.split("=", 1) for kv in line.split()) for line in text.splitlines()]
    assert lines[0]["ag_groupoid"] == "1"
    rows = {d["identity"]: d for d in lines[1:]}
    assert rows["left-distributive"]["holds"] == "1"
    assert rows["lad"]["holds"] == "0"
    assert rows["lad"]["lhs"] != rows["lad"]["rhs"]


def test_test_lad_negative_with_expectation():
    code, text = run("test", "--lad", "--show-table", "--expect=yes", fx("ld-not-lad"))
    assert code == 1
    assert "not LAD" in text and "*" in text
    code, _ = run("test", "--lad", "--expect=no", fx("ld-not-lad"))
    assert code == 0
    code, _ = run("test", "--lad", fx("ld-not-lad"))
    assert code == 0


def test_test_rad_positive():
    code, text = run("test", "--rad", "--expect=yes", fx("rad-test-example"))
    assert code == 0
    assert text.strip().endswith(": RAD")
    code, text = run("test", "--rad", "--format", "kv", fx("rd-not-rad"))
    assert code == 0
    assert text.splitlines()[0].split()[2] == "verdict=0"


def test_census_order_three():
    code, text = run("census", "--order", "3")
    assert code == 0
    rows = text.splitlines()
    assert len(rows) == 5
    assert rows[1].split()[-1] == "20"
    assert [r.split()[-1] for r in rows[2:]] == ["6", "0", "0"]


def test_census_order_one_kv():
    code, text = run("census", "--order", "1", "--format", "kv")
    assert code == 0
    assert text == "order=1 total=1 rad_na=0 lad_na=0 ad_na=0\n"


def test_census_multiple_orders_kv():
    _, text = run("census", "--order", "2,3,4", "--format", "kv")
    assert text.splitlines() == [
        "order=2 total=3 rad_na=0 lad_na=0 ad_na=0",
        "order=3 total=20 rad_na=6 lad_na=0 ad_na=0",
        "order=4 total=331 rad_na=175 lad_na=1 ad_na=0",
    ]


def test_output_is_byte_identical_across_runs_and_jobs():
    first = run("enumerate", "--order", "4", "--require", "rad", "--forbid", "associative")
    again = run("enumerate", "--order", "4", "--require", "rad", "--forbid", "associative")
    jobs = run("enumerate", "--order", "4", "--require", "rad", "--forbid", "associative", "--jobs", "8")
    assert first == again == jobs
    assert first[1].splitlines()[-1] == "# order 4: 175 of 331 AG-groupoid classes matched"
    assert run("census", "--order", "4") == run("census", "--order", "4", "--jobs", "3")


def test_enumerate_emit_tables(tmp_path):
    code, text = run("enumerate", "--order", "3", "--require", "rad", "--forbid", "associative",
                     "--emit-tables", str(tmp_path), "--format", "kv")
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    listed = [line.split("=")[1] + ".tbl" for line in text.splitlines() if line.startswith("table=")]
    assert names == sorted(listed) and len(names) == 6
    for p in tmp_path.iterdir():
        m = read_magma(p)
        assert "".join(map(str, m.linear)) + ".tbl" == p.name


def test_implications_exit_codes():
    code, text = run("implications", "--max-order", "3")
    assert code == 0
    assert text.count("verdict: holds") == 8
    assert "caveat:" in text
    code, text = run("implications", "--max-order", "4", "--format", "kv")
    assert code == 0 and len(text.splitlines()) == 8


def test_counterexample_command():
    code, text = run("counterexample", "--require", "right-distributive", "--forbid", "rad", "--max-order", "4")
    assert code == 0
    assert text.splitlines()[2:] == ["4", "0 2 3 1", "3 1 0 2", "1 3 2 0", "2 0 1 3"]
    code, text = run("counterexample", "--require", "lad", "--forbid", "associative", "--max-order", "3")
    assert code == 0 and text == "none up to order 3\n"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["test", "--lad", "--rad", "x.tbl"],
        ["test", "x.tbl"],
        ["census"],
        ["census", "--order", "6"],
        ["census", "--order", "three"],
        ["census", "--order", "3", "--jobs", "0"],
        ["enumerate", "--order", "3", "--require", "not-an-identity"],
        ["counterexample", "--require", "lad", "--forbid", "lad", "--max-order", "3"],
        ["classify", "/nonexistent/file.tbl"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_parse_error_reports_path(tmp_path, capsys):
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 2\n0 0\n")
    code, _ = run("classify", str(bad))
    assert code == 2
    err = capsys.readouterr().err
    assert str(bad) in err and "row 1, column 2" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "agkit", "census", "--order", "3", "--format", "kv"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == "order=3 total=20 rad_na=6 lad_na=0 ad_na=0\n"


def test_fixtures_carry_header_comments():
    for path in FIXTURES.glob("*.tbl"):
        assert path.read_text().startswith("# "), path
