import json
import shutil
import subprocess

import pytest

from dahaskein import cli, knots, verify
from dahaskein.exact import ONE, from_json, vpow

q = vpow(4)


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_parse_value():
    assert cli.parse_value("qu") == vpow(2)
    assert cli.parse_value("-q") == -q
    assert cli.parse_value("1/qu") == vpow(-2)
    assert cli.parse_value("v^-3") == vpow(-3)
    assert cli.parse_value("-1/2") == -ONE / 2
    with pytest.raises(cli.UsageError):
        cli.parse_value("banana")


def test_parse_specialization():
    assert cli.parse_specialization("xu=qu,xd=qu") == {"x_u": vpow(2), "x_d": vpow(2)}


def test_compute_macdonald(capsys):
    code, out = run(capsys, "compute", "macdonald", "--n", "1")
    assert code == 0
    assert out.strip() == "x + x^-1"


def test_compute_figure_eight(capsys):
    code, out = run(capsys, "compute", "jones-twist", "--n", "2", "--p", "-1")
    assert code == 0
    assert out.strip() == "v^8 - v^4 + 1 - v^-4 + v^-8"


def test_compute_reduced_json(capsys):
    argv = ["compute", "reduced", "--family", "12", "--k", "1", "--l", "2", "--n", "2",
            "--specialize", "xu=qu,xd=qu", "--format", "json"]
    code, out = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    f = from_json(doc["result"])
    assert knots.compare_up_to_framing(f, knots.unknot_factor(2) * knots.jones_twist(2, 2)) is not None
    _, again = run(capsys, *argv)
    assert again == out


def test_compute_torus_poly(capsys):
    code, out = run(capsys, "compute", "torus-poly", "--n", "2", "--slope", "3,2", "--specialize", "x=-q,t=-q")
    assert code == 0
    assert out.strip() == "-v^32 - v^24 - v^16 + 1"


def test_usage_errors(capsys):
    assert cli.main(["compute", "reduced", "--family", "99", "--n", "2"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "bogus"])
    assert exc.value.code == 2


def test_verify_suite_json(capsys):
    code, out = run(capsys, "verify", "--suite", "sigma11", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == 1
    assert doc["summary"]["fail"] == 0
    assert all({"name", "status", "seconds"} <= set(c) for c in doc["checks"])


def test_verify_failure_exit_code(monkeypatch, capsys):
    def items(o):
        return [("always fails", lambda: False)]
    monkeypatch.setitem(verify.BUILD, "a1", items)
    code, out = run(capsys, "verify", "--suite", "a1")
    assert code == 1
    assert "fail" in out


def test_fixture_skip_and_pass(tmp_path):
    opts = verify.Options(max_n=2, max_k=0)
    names = [n for n, _ in verify.suite_items("knots", opts)]
    assert "colored Jones fixtures" in names
    res = [r for r in verify.run_suites(["knots"], opts) if r.name == "colored Jones fixtures"]
    assert res[0].status == "skip"
    path = tmp_path / "f.json"
    path.write_text(json.dumps([{"knot": "4_1", "N": 2, "variable": "q",
                                 "coeffs": {"-2": "1", "-1": "-1", "0": "1", "1": "-1", "2": "1"}}]))
    items = verify.suite_items("knots", verify.Options(max_n=2, max_k=0, fixtures=str(path)))
    name, fn = items[-1]
    assert name == "fixture 4_1 N=2"
    assert fn() is True


def test_parallel_matches_serial():
    opts = verify.Options()
    serial = verify.run_suites(["a1"], opts)
    parallel = verify.run_suites(["a1"], opts, parallel=True, workers=2)
    assert [(r.name, r.status) for r in serial] == [(r.name, r.status) for r in parallel]


@pytest.mark.skipif(shutil.which("daha") is None, reason="console script not installed")
def test_console_script_deterministic():
    argv = ["daha", "compute", "conjecture", "--n", "2", "--k", "1", "--l", "0", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["kind"] == "conjecture"
