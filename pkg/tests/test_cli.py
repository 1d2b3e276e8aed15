import json
import subprocess
import sys

import pytest

from susbounds.cli import main

from conftest import FIG1


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(out):
    return [line.split("\t") for line in out.splitlines()]


def test_mus_tsv(capsys):
    code, out, _ = run(capsys, "mus", "--string", FIG1)
    assert code == 0
    r = rows(out)
    assert len(r) == 5 and r[0] == ["3", "4", "bb"]
    assert all(len(x) == 3 for x in r)
    code, out, _ = run(capsys, "mus", "--string", "a")
    assert out == "1\t1\ta\n"


def test_mus_json(capsys):
    code, out, _ = run(capsys, "mus", "--string", FIG1, "--json")
    doc = json.loads(out)
    assert doc["schemaVersion"] == "1" and doc["command"] == "mus"
    assert doc["params"] == {"string": FIG1}
    assert [(d["begin"], d["end"]) for d in doc["payload"]["mus"]] == \
        [(3, 4), (4, 7), (5, 8), (7, 9), (8, 11)]


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "mus", "--file", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err


def test_file_input(capsys, tmp_path):
    p = tmp_path / "s.txt"
    p.write_bytes(FIG1.encode() + b"\n")
    code, out, _ = run(capsys, "mus", "--file", str(p))
    assert code == 0 and len(rows(out)) == 5


def test_no_input_and_both_inputs(capsys, tmp_path):
    assert run(capsys, "mus")[0] == 2
    p = tmp_path / "s.txt"
    p.write_bytes(b"ab")
    assert run(capsys, "mus", "--string", "ab", "--file", str(p))[0] == 2


def test_bytes_are_escaped_in_tsv(capsys):
    code, out, _ = run(capsys, "mus", "--string", "a\tb\ta")
    assert all(len(x) == 3 for x in rows(out))


def test_query_point(capsys):
    code, out, _ = run(capsys, "query", "--string", FIG1, "--point", "6")
    assert code == 0
    assert [(x[0], x[1]) for x in rows(out)] == [("3", "6"), ("4", "7"), ("5", "8"), ("6", "9")]
    assert {x[2] for x in rows(out)} == {"4"}


def test_query_interval_and_scan(capsys):
    code, out, _ = run(capsys, "query", "--string", FIG1, "--interval", "5:8")
    assert rows(out) == [["5", "8", "4", "aaba"]]
    code, out2, _ = run(capsys, "query", "--string", FIG1, "--interval", "5:8", "--method", "scan")
    assert out2 == out


def test_query_json(capsys):
    code, out, _ = run(capsys, "query", "--string", FIG1, "--point", "6", "--json")
    doc = json.loads(out)["payload"]
    assert doc["susLength"] == 4 and len(doc["sus"]) == 4


@pytest.mark.parametrize("flag", [["--point", "99"], ["--point", "0"], ["--interval", "3:12"],
                                  ["--interval", "oops"]])
def test_query_out_of_range(capsys, flag):
    assert run(capsys, "query", "--string", FIG1, *flag)[0] == 2


def test_query_requires_one_flag():
    with pytest.raises(SystemExit) as exc:
        main(["query", "--string", FIG1])
    assert exc.value.code == 2


def test_enumerate_decompose(capsys):
    code, out, _ = run(capsys, "enumerate", "--string", FIG1, "--point", "--decompose")
    counts = {x[1]: int(x[2]) for x in rows(out) if x[0] == "count"}
    assert counts["lsCount"] == 3 and counts["msCount"] == 5 and counts["rsCount"] == 3
    assert counts["psCount"] == 11
    assert all(len(x) == 4 for x in rows(out))


def test_enumerate_charging_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--string", FIG1, "--point", "--charging", "--json")
    p = json.loads(out)["payload"]
    assert p["finv"]["5"] == [[3, 5], [5, 8]]
    assert p["finv"]["9"] == [] and p["finv"]["11"] == []
    assert p["U"] == [5, 6]
    assert {tuple(d["interval"]): d["u"] for d in p["f"]}[(3, 5)] == 5


def test_enumerate_interval(capsys):
    code, out, _ = run(capsys, "enumerate", "--string", "baacaad", "--interval")
    counts = {x[1]: int(x[2]) for x in rows(out) if x[0] == "count"}
    assert counts["isCount"] == 11


def test_verify_input_tight(capsys):
    code, out, _ = run(capsys, "verify", "--string", "axbxc")
    assert code == 0
    r = {(x[0], x[1]): x[2] for x in rows(out)}
    assert r[("count", "ps_count")] == "7"
    assert r[("bound", "(3n-1)/2")] == "7"
    assert r[("tight", "|PS| == (3n-1)/2")] == "true"
    assert r[("oracle", "compared")] == "ok"


def test_verify_input_json(capsys):
    code, out, _ = run(capsys, "verify", "--string", FIG1, "--json")
    p = json.loads(out)["payload"]
    assert p["ok"] and p["ps_count"] == 11 and not p["mismatches"]
    assert all({"name", "lhs", "rhs", "relation", "passed"} <= set(c) for c in p["checks"])


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--exhaustive", "6", "2")
    assert code == 0
    assert rows(out)[-1][:3] == ["6", "2", "32"]


def test_verify_random_deterministic(capsys):
    code, out, _ = run(capsys, "verify", "--random", "20", "40", "4", "42", "--json")
    code2, out2, _ = run(capsys, "verify", "--random", "20", "40", "4", "--seed", "42", "--json")
    assert code == code2 == 0
    assert json.loads(out)["payload"] == json.loads(out2)["payload"]


def test_verify_failure_exit_1(capsys, monkeypatch):
    from susbounds import oracle
    monkeypatch.setattr(oracle, "compare_with_oracle", lambda text, a=None: ["forced mismatch"])
    code, out, _ = run(capsys, "verify", "--string", "ab")
    assert code == 1


def test_verify_budget_exit_2(capsys):
    assert run(capsys, "verify", "--exhaustive", "12", "3", "--budget", "10")[0] == 2


@pytest.mark.parametrize("argv, text, predicted", [
    (["point-tight", "3"], "axbxc", "7"),
    (["sigma-family", "8", "3"], "axbxxxxx", "9"),
])
def test_generate(capsys, argv, text, predicted):
    code, out, _ = run(capsys, "generate", *argv)
    r = dict((x[0], x[1]) for x in rows(out))
    assert code == 0 and r["text"] == text and r["predicted"] == predicted


def test_generate_interval_check(capsys):
    code, out, _ = run(capsys, "generate", "interval-family", "1/1", "--check", "--json")
    p = json.loads(out)["payload"]
    assert code == 0
    assert (p["text"], p["predicted"], p["measured"], p["match"]) == ("baacaad", 11, 11, True)


@pytest.mark.parametrize("argv", [["point-tight", "2"], ["sigma-family", "8", "9"],
                                  ["interval-family", "0"], ["point-tight", "x"],
                                  ["sigma-family", "8"]])
def test_generate_bad_params(capsys, argv):
    assert run(capsys, "generate", *argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "susbounds", "mus", "--string", "ab"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\t1\ta\n2\t2\tb\n"
