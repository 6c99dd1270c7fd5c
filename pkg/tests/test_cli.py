import json
import subprocess
import sys

import pytest

from codensity.bkshadow.builtins import make_monad
from codensity.cli import exit_code, main, make_report, render_json, render_text
from codensity.fincat.category import FinCategory
from codensity.fincat.io import dump_category
from codensity.monadkit.explicit import dump_monad, tabulate


def run(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


PASSING = [
    ["monad-check", "--monad", "builtin:maybe", "--window", "0..3"],
    ["algebras", "--monad", "builtin:powerset", "--window", "0..3"],
    ["isar", "--monad", "builtin:affine:Z/2", "--window", "0..4", "--depth", "1"],
    ["fakir", "--monad", "builtin:powerset", "--window", "1..4"],
    ["fakir-vs-codensity", "--monad", "builtin:powerset", "--object-size", "2", "--window", "0..4"],
    ["walking", "--monad", "builtin:powerset", "--carrier", "2", "--maxdim", "3"],
    ["codensity", "--category", "finset", "--subcat", "1,2,4", "--objects", "3"],
    ["codensity", "--category", "vect-f2", "--subcat", "1,2", "--objects", "2"],
    ["codensity", "--category", "chain:a,b,c", "--subcat", "b,c", "--objects", "a"],
    ["terminality", "--subcat", "1,2", "--window", "0..3"],
    ["retract-closure", "--subcat", "2", "--window", "0..4"],
    ["localize", "--category", "chain:a,b,c", "--subcat", "b,c"],
    ["initial-check", "--depth", "1", "--maxdim", "3"],
    ["cofinal", "--monad", "builtin:maybe", "--object-size", "1", "--maxdim", "3"],
    ["nerve", "--category", "group:Z/2", "--maxdim", "2"],
    ["basis-check", "--k", "2", "--B", "3"],
    ["basis-check", "--k", "3", "--B", "3", "--injective"],
    ["horn-generators", "--k", "1", "--B", "3"],
    ["filtration", "--maxdim", "2", "--B", "2", "--anodyne"],
    ["lifting-check", "--category", "group:Z/2", "--maxdim", "2"],
    ["bk-shadow", "--ring", "Z/2", "--window", "0..4"],
]


@pytest.mark.parametrize("argv", PASSING, ids=lambda a: " ".join(a[:3]))
def test_verbs_pass(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 0, (rep, err)
    assert rep["schema"] == "codensity-report/1"
    assert rep["verb"] == argv[0] and rep["verdict"] == "pass"
    assert rep["window"] is not None and rep["claim"]


def test_fakir_report_contents(capsys):
    _, rep, _ = run(capsys, "fakir", "--monad", "builtin:powerset", "--window", "1..4")
    assert rep["data"]["sizes"] == {"1": 1, "2": 2, "3": 3, "4": 4}
    assert all(rep["data"]["unit_image_only"].values())


def test_counterexample_exit_code(capsys):
    code, rep, _ = run(capsys, "lifting-check", "--category", "chain:0,1", "--maxdim", "2")
    assert code == 1 and rep["verdict"] == "fail"
    assert rep["counterexamples"]


def test_resource_exit_code(capsys):
    code, rep, _ = run(capsys, "monad-check", "--monad", "builtin:powerset", "--window", "0..4")
    assert code == 2 and rep["verdict"] == "resource"


@pytest.mark.parametrize("argv", [
    ["monad-check", "--monad", "/nonexistent/monad.json"],
    ["monad-check", "--monad", "builtin:list"],
    ["suite", "nope"],
    ["fakir", "--monad", "builtin:powerset", "--window", "-1..2"],
    ["fakir", "--monad", "builtin:powerset", "--window", "x"],
    ["no-such-verb"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_bad_monad_file(tmp_path, capsys):
    p = tmp_path / "m.json"
    p.write_text('{"sets": {}}')
    assert main(["monad-check", "--monad", str(p)]) == 2
    assert "cannot parse" in capsys.readouterr().err


def test_monad_file_round_trip(tmp_path, capsys):
    p = tmp_path / "maybe.json"
    dump_monad(tabulate(make_monad("maybe"), range(0, 3)), p)
    code, rep, _ = run(capsys, "monad-check", "--monad", str(p), "--window", "0..2")
    assert code == 0 and rep["verdict"] == "pass"


def test_category_file(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text(dump_category(FinCategory.chain(["a", "b", "c"])))
    code, rep, _ = run(capsys, "localize", "--category", str(p), "--subcat", "b,c")
    assert code == 0


def test_nerve_file_feeds_lifting_check(tmp_path, capsys):
    p = tmp_path / "n.json"
    assert main(["nerve", "--category", "group:Z/2", "--maxdim", "2", "--sset-out", str(p)]) == 0
    capsys.readouterr()
    code, rep, _ = run(capsys, "lifting-check", "--sset", str(p), "--maxdim", "2")
    assert code == 0 and rep["verdict"] == "pass"


def test_reports_are_deterministic(capsys):
    argv = ["basis-check", "--k", "2", "--B", "2"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_out_writes_both_formats(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert main(["fakir", "--monad", "builtin:maybe", "--window", "0..2", "--format", "json", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert out.read_text() == printed
    text = (tmp_path / "rep.txt").read_text()
    assert text.startswith("fakir: PASS")


def test_render_helpers():
    rep = make_report("x", [1, 2], "fail", "claim", {"n": {1: 2}}, ["bad"])
    assert json.loads(render_json(rep))["data"] == {"n": {"1": 2}}
    assert "counterexamples:" in render_text(rep)
    assert [exit_code(v) for v in ("pass", "fail", "resource")] == [0, 1, 2]


def test_quick_suite_through_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "codensity", "suite", "quick", "--format", "json"],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    rep = json.loads(proc.stdout)
    assert rep["data"]["passed"] == rep["data"]["total"] == 9
