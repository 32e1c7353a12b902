import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invsemi.catalog import table1_catalog
from invsemi.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out)


def test_census_json():
    code, data = run_json("census", "-n", "4")
    assert code == 0 and data["involution_semigroups"] == 83 and data["no_involution"] == 62


def test_census_order5_needs_opt_in():
    assert run("census", "-n", "5")[0] == 2


def test_check_holds():
    code, data = run_json("check", "--model", "a0", "--lhs", "x y x*", "--rhs", "x y* x*")
    assert code == 0 and data["holds"] and data["certificate"] == "CanonicalMatch"


def test_check_fails_with_counterexample():
    code, data = run_json("check", "--model", "a0", "--lhs", "x y", "--rhs", "y x")
    assert code == 1 and data["counterexample"] == {"x": 4, "y": 3}
    code, out, _ = run("check", "--model", "a0", "--lhs", "x y", "--rhs", "y x")
    assert code == 1 and "x=4" in out and "y=3" in out


def test_check_inline_table_and_zero():
    code, data = run_json("check", "--table", "2212222222321224", "--inv", "1243", "--zero", "x x*")
    assert code == 0 and data["holds"]
    assert run("check", "--model", "a0", "--zero", "x x*")[0] == 1


def test_text_and_json_agree():
    for lhs, rhs in (("x x*", "x* x"), ("x y x*", "x y* x*"), ("x y", "y x")):
        for m in ("a0", "b0"):
            c1, out, _ = run("check", "--model", m, "--lhs", lhs, "--rhs", rhs)
            c2, data = run_json("check", "--model", m, "--lhs", lhs, "--rhs", rhs)
            assert c1 == c2 and (("holds" in out.splitlines()[0]) == data["holds"])


def test_validate():
    assert run("validate", "n=4 mul=2212222222321214 inv=1243")[0] == 0
    assert run("validate", "n=2 mul=1122 inv=21")[0] == 1


def test_classify_named_and_census():
    code, data = run_json("classify", "--model", "b4")
    assert code == 0 and data["verdict"] == "C2(3)"
    code, data = run_json("classify", "-n", "3")
    assert code == 0


def test_enumerate():
    code, data = run_json("enumerate", "-n", "2", "--anti")
    assert code == 0 and data["count"] == 4


def test_normalize_and_trace_round_trip(tmp_path):
    code, data = run_json("normalize", "a x b x* c")
    assert code == 0 and data["standard_form"] == "ac*xbx*"
    f = tmp_path / "t.json"
    f.write_text(json.dumps(data["trace"]))
    assert run("verify-trace", str(f), "--model-check")[0] == 0
    bad = dict(data["trace"], end="axbx*c")
    f.write_text(json.dumps(bad))
    code, data = run_json("verify-trace", str(f))
    assert code == 1 and not data["ok"]


def test_normalize_zero_and_bipartite():
    code, data = run_json("normalize", "x x* x")
    assert code == 1 and data["zero"]
    assert run("normalize", "x y")[0] == 2
    assert run("normalize", "--system", "b0", "y x x* z")[0] == 1


def test_canonical():
    _, a = run_json("canonical", "x y x*")
    _, b = run_json("canonical", "x y* x*")
    assert a["canonical"] == b["canonical"]


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["census"], ["census", "-n", "x"], ["census", "-n", "4", "--bogus"],
    ["check", "--model", "zz", "--lhs", "x", "--rhs", "x"], ["check", "--model", "a0", "--lhs", "x("],
    ["check", "--model", "a0"], ["check", "--table", "123", "--inv", "1"],
    ["check", "--table", "1122", "--inv", "21", "--lhs", "x", "--rhs", "x"],
    ["verify-trace", "/nonexistent/file"], ["normalize", "x^0"],
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


@settings(max_examples=60)
@given(st.text(alphabet="xyz*^()0123 ab!", max_size=12))
def test_malformed_words_never_crash(text):
    code, _, _ = run("check", "--model", "a0", "--lhs", text, "--rhs", "x")
    assert code in (0, 1, 2)


def _catalog_text(corrupt=False):
    lines = []
    for e in table1_catalog():
        rows = list(e.rows)
        if corrupt and e.name == "A1":
            rows[3] = "1113"
        lines.append(f"{e.name} n=4 mul={''.join(rows)} inv={e.inv} {e.label}")
    return "\n".join(lines) + "\n"


def test_table1_with_catalog_file(tmp_path):
    f = tmp_path / "cat.txt"
    f.write_text(_catalog_text())
    assert run("table1", "--catalog", str(f))[0] == 0
    f.write_text(_catalog_text(corrupt=True))
    code, data = run_json("table1", "--catalog", str(f))
    assert code == 1 and "A1" in data["unmatched_catalog"] + data["invalid_catalog"]


def test_selftest_negative_control(tmp_path):
    f = tmp_path / "cat.txt"
    f.write_text(_catalog_text(corrupt=True))
    code, data = run_json("selftest", "--quick", "--catalog", str(f))
    assert code == 1
    failing = [i["name"] for i in data["items"] if not i["ok"]]
    assert failing == ["Table 1 round trip"]
    assert not any(i["name"].startswith("exhaustive") for i in data["items"])
