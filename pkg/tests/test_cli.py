import json
import subprocess
import sys

import pytest

from rcomplexity.cli import main

BENCH_CSV = """metric,unit,n,value
time,seconds,10,306
time,seconds,20,1206
time,seconds,30,2706
memory,kB,10,22
memory,kB,20,43
memory,kB,30,64
"""


@pytest.fixture
def bench(tmp_path):
    p = tmp_path / "bench.csv"
    p.write_text(BENCH_CSV)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fit_json(capsys, bench):
    code, out, _ = run(capsys, "fit", "--input", bench, "--output", "json")
    assert code == 0
    doc = json.loads(out)
    time, memory = doc["metrics"]
    assert set(time) == {"name", "unit", "family", "degree", "coeff", "intercept", "score"}
    assert (time["family"], time["degree"], time["coeff"], time["intercept"]) == ("POLY", 2, 3, 6)
    assert (memory["family"], memory["degree"], memory["coeff"], memory["intercept"]) == ("POLY", 1, 2.1, 1)


def test_fit_human_carries_same_numbers(capsys, bench):
    _, human, _ = run(capsys, "fit", "--input", bench)
    _, js, _ = run(capsys, "fit", "--input", bench, "--output", "json")
    for e in json.loads(js)["metrics"]:
        assert f"coeff={e['coeff']}" in human and f"intercept={e['intercept']}" in human
        assert f"degree={e['degree']}" in human


def test_fit_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "fit", "--input", str(tmp_path / "missing.csv"))
    assert code == 2 and "error" in err
    p = tmp_path / "short.csv"
    p.write_text("metric,unit,n,value\nt,s,10,1\nt,s,20,2\n")
    code, _, err = run(capsys, "fit", "--input", str(p))
    assert code == 2 and "at least 3" in err


def test_fit_no_model(capsys, tmp_path):
    p = tmp_path / "down.csv"
    p.write_text("metric,unit,n,value\nt,s,2,9\nt,s,4,5\nt,s,8,1\n")
    code, _, _ = run(capsys, "fit", "--input", str(p), "--families", "POLY")
    assert code == 3


def test_fit_negative_intercept_warning(capsys, tmp_path):
    p = tmp_path / "neg.csv"
    p.write_text("metric,unit,n,value\nt,s,10,17\nt,s,20,37\nt,s,30,57\n")
    code, _, err = run(capsys, "fit", "--input", str(p), "--families", "POLY", "--degrees", "1")
    assert code == 0 and "negative intercept" in err


@pytest.mark.parametrize(
    "function, cls, code",
    [("2.1*n + 1", "theta_2.1(n)", 0), ("3*n^2 + 6", "O_2(n^2)", 1), ("n", "o(n^2)", 0)],
)
def test_member_exit_codes(capsys, function, cls, code):
    assert run(capsys, "member", "--function", function, "--class", cls)[0] == code


def test_member_json(capsys):
    code, out, _ = run(capsys, "member", "--function", "3*n^2+6", "--class", "omega_2(n^2)", "--output", "json")
    doc = json.loads(out)
    assert code == 0 and doc["member"] is True and doc["limit"] == {"tag": "finite", "value": 3}


def test_member_parse_error(capsys):
    code, _, err = run(capsys, "member", "--function", "3*n^^2", "--class", "theta_3(n^2)")
    assert code == 2 and "^" in err.splitlines()[-1]


def test_limit_verify(capsys):
    code, out, _ = run(capsys, "limit", "--num", "n*log(n)", "--den", "n^2", "--verify", "--output", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["limit"]["tag"] == "zero" and doc["oracle"]["classification"] == "zero" and doc["oracle"]["agrees"]


def test_limit_human(capsys):
    code, out, _ = run(capsys, "limit", "--num", "3*n^2 + 6", "--den", "n^2", "--verify")
    assert code == 0 and out.splitlines()[0] == "3" and out.splitlines()[1].startswith("oracle: finite 3")


@pytest.mark.parametrize(
    "left, right, result",
    [
        ("theta_2(n)", "theta_3(n)", "theta_2(2.5*n)"),
        ("theta_2(n)", "theta_3(n^2)", "theta_3(n^2)"),
        ("O_1(n^2)", "O_1(n*log(n))", "O_1(n^2)"),
    ],
)
def test_add(capsys, left, right, result):
    code, out, _ = run(capsys, "add", "--left", left, "--right", right)
    assert code == 0 and out.strip() == result


def test_add_kind_mismatch(capsys):
    assert run(capsys, "add", "--left", "theta_2(n)", "--right", "O_2(n)")[0] == 2


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--f1", "100*n", "--f2", "n^2", "--output", "json")
    assert code == 0 and json.loads(out)["crossover"] == 101
    _, out, _ = run(capsys, "compare", "--f1", "n^2", "--f2", "n", "--output", "json")
    assert json.loads(out)["crossover"] is None


def test_compare_with_fitted_embedding(capsys, bench, tmp_path):
    _, out, _ = run(capsys, "fit", "--input", bench, "--output", "json")
    emb = tmp_path / "emb.json"
    emb.write_text(out)
    code, out, _ = run(capsys, "compare", "--f1", str(emb), "--f2", "n^3", "--metric", "time", "--at", "20",
                       "--output", "json")
    doc = json.loads(out)
    assert code == 0 and doc["at"]["f1"] == 1206 and doc["at"]["f2"] == 8000
    assert doc["crossover"] == 4
    inline = '{"family": "POLY", "degree": 2, "coeff": 3, "intercept": 6}'
    code, out, _ = run(capsys, "compare", "--f1", inline, "--f2", "n^3", "--output", "json")
    assert json.loads(out)["crossover"] == 4


def test_compare_needs_metric_for_multi_embedding(capsys, bench, tmp_path):
    _, out, _ = run(capsys, "fit", "--input", bench, "--output", "json")
    emb = tmp_path / "emb.json"
    emb.write_text(out)
    assert run(capsys, "compare", "--f1", str(emb), "--f2", "n")[0] == 2
    assert run(capsys, "compare", "--f1", str(tmp_path / "none.json"), "--f2", "n")[0] == 2


def test_module_entry_point(bench):
    proc = subprocess.run([sys.executable, "-m", "rcomplexity", "add", "--left", "theta_2(n)", "--right",
                           "theta_3(n)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "theta_2(2.5*n)"


def test_help_lists_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "exit codes" in capsys.readouterr().out
