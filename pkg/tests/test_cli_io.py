import io
import json

import pytest

from mwpflow.cli_io import (
    EXPANSION_CAP,
    Report,
    ReportError,
    analyze_file,
    load_report,
    reevaluate,
    run_cli,
    save_report,
)


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(map(str, args)), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_exponential_exit_one(corpus):
    code, out, _ = run(corpus / "infinite" / "exponent_2.c")
    assert code == 1
    assert "infinite" in out and "unbounded: r" in out


def test_linear_with_report(corpus, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(corpus / "basics" / "binary_add.c", "--out", path)
    assert code == 0 and "polynomial" in out
    data = json.loads(path.read_text())
    assert data["schema_version"] == 1
    (fn,) = data["functions"]
    assert fn["verdict"] == "polynomial" and fn["choices"]["count"] == 3
    assert fn["relation"]["variables"] == ["x", "y", "z"]
    # the three alternatives together guarantee an unguarded m, which absorbs m under choice 1
    assert fn["relation"]["matrix"][1][0] == [
        {"scalar": "m", "deltas": []},
        {"scalar": "w", "deltas": [[0, 0]]},
        {"scalar": "p", "deltas": [[2, 0]]},
    ]


def test_pointer_exit_two(corpus):
    code, out, err = run(corpus / "unsupported" / "pointer.c")
    assert code == 2
    assert err.strip().endswith("unsupported construct: pointer declarator")
    assert err.startswith(str(corpus / "unsupported" / "pointer.c") + ":1:")


def test_missing_file_and_bad_flags(tmp_path, corpus):
    code, _, err = run(tmp_path / "nope.c")
    assert code == 2 and "cannot read file" in err
    assert run(corpus / "basics" / "binary_add.c", "--bogus")[0] == 2
    assert run()[0] == 2


def test_unwritable_report(corpus, tmp_path):
    code, _, err = run(corpus / "basics" / "binary_add.c", "--out", tmp_path / "no" / "r.json")
    assert code == 2 and "cannot write report" in err


def test_no_eval(corpus, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(corpus / "infinite" / "exponent_1.c", "--no-eval", "--out", path)
    assert code == 0 and "not evaluated" in out
    fn = json.loads(path.read_text())["functions"][0]
    assert fn["verdict"] is None and fn["choices"] is None
    assert load_report(path).functions[0].choices is None


def test_fin_and_matrix(corpus):
    code, out, _ = run(corpus / "basics" / "counter_loop.c", "--fin", "--print-matrix")
    assert code == 0
    assert "choice 1" in out
    assert "| i | n" in out


def test_fin_refuses_huge_expansion(corpus):
    code, out, _ = run(corpus / "other" / "explosion.c", "--fin")
    assert 3**20 > EXPANSION_CAP
    assert code == 0 and "compact form" in out and "choice " not in out


def test_time_flag(corpus, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(corpus / "basics" / "binary_add.c", "--time", "--out", path)
    assert "analysis time:" in out
    assert json.loads(path.read_text())["wall_time"] >= 0


def test_two_function_report(corpus, tmp_path):
    report = analyze_file(corpus / "basics" / "two_functions.c")
    assert [f.name for f in report.functions] == ["first", "second"]


def test_round_trip(corpus, tmp_path):
    report = analyze_file(corpus / "infinite" / "mixed.c")
    path = tmp_path / "r.json"
    save_report(report, path)
    loaded = load_report(path)
    assert loaded == report
    assert loaded.dumps() == report.dumps()


def test_reloaded_matrices_reevaluate(corpus, tmp_path):
    report = analyze_file(corpus / "other" / "loop_then_sum.c")
    path = tmp_path / "r.json"
    save_report(report, path)
    for before, after in zip(report.functions, load_report(path).functions):
        again = reevaluate(after)
        assert again.verdict == before.verdict
        assert again.choices == before.choices
        assert again.infinite_vars == before.infinite_vars


def test_error_entries(corpus, tmp_path):
    path = tmp_path / "r.json"
    code, _, err = run(corpus / "unsupported" / "undeclared.c", "--out", path)
    assert code == 2 and "undeclared variable" in err
    loaded = load_report(path)
    assert loaded.functions[0].verdict == "error"


def test_load_errors(tmp_path):
    with pytest.raises(ReportError):
        load_report(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema_version": 99}))
    with pytest.raises(ValueError):
        load_report(bad)


def test_report_from_json_is_inverse():
    report = Report("a.c", [])
    assert Report.from_json(report.to_json()) == report
