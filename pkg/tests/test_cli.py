import json

import pytest

from numsg.cli import run


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("NUMSG_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def test_count_f5(capsys):
    assert run(["count", "--frobenius", "5"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["f"] == 5 and doc["N"] == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--frobenius", "0"],
        ["count"],
        ["count", "--frobenius", "5", "--workers", "0"],
        ["count", "--frobenius", "5", "--node-budget", "-1"],
        ["count", "--frobenius", "5", "--format", "xml"],
        ["count", "-f", "7", "-m", "9"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_count_other_modes(capsys):
    assert run(["count", "--genus", "7"]) == 0
    assert json.loads(capsys.readouterr().out)["n_g"] == 39
    assert run(["count", "-f", "7", "-m", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["N_mul"] == 4
    assert run(["count", "-f", "7", "--census", "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("n,count\n0,1\n1,3\n2,4\n3,3\n")


def test_cache_hit_identical_bytes(capsys):
    assert run(["count", "--frobenius", "30"]) == 0
    first = capsys.readouterr()
    assert run(["count", "--frobenius", "30"]) == 0
    second = capsys.readouterr()
    assert first.out == second.out
    assert "cache hit" in second.err and "cache hit" not in first.err


def test_no_cache_flag(capsys, cache_dir):
    assert run(["count", "--frobenius", "12", "--no-cache"]) == 0
    assert not cache_dir.exists()


def test_corrupt_cache_recomputed(capsys, cache_dir):
    run(["count", "--frobenius", "9"])
    expected = capsys.readouterr().out
    for p in cache_dir.iterdir():
        p.write_text('{"garbage": 1}')
    assert run(["count", "--frobenius", "9"]) == 0
    out = capsys.readouterr()
    assert out.out == expected
    assert "discarding" in out.err


def test_workers_byte_identical(capsys):
    run(["dist", "-f", "25", "--no-cache"])
    one = capsys.readouterr().out
    run(["dist", "-f", "25", "--no-cache", "--workers", "4"])
    assert capsys.readouterr().out == one


def test_dist_f19(capsys):
    assert run(["dist", "--frobenius", "19", "--L", "2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,count,empirical_prob,theory_density,abs_diff"
    data = [l for l in lines[1:] if not l.startswith("#")]
    assert [int(l.split(",")[0]) for l in data] == list(range(10))
    footer = dict(l[2:].split(",", 1) for l in lines if l.startswith("#"))
    assert "sup_diff" in footer and "tv_distance" in footer


def test_dist_f29_json(capsys):
    assert run(["dist", "--frobenius", "29", "--L", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "numsg.dist/1"
    assert abs(doc["sup_diff"] - 0.033173) < 1e-6
    assert all("theory_density" in r for r in doc["rows"])


def test_dist_boundaries(capsys):
    assert run(["dist", "-f", "7", "--L", "0"]) == 0
    assert "theory_density" in json.loads(capsys.readouterr().out)["rows"][0]
    assert run(["dist", "-f", "7", "--L", "1"]) == 0
    out = capsys.readouterr()
    assert "theory_density" not in json.loads(out.out)["rows"][0]
    assert "dropped" in out.err


def test_classes(capsys):
    assert run(["classes", "-f", "24", "--max-y", "2", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Y,Z,alpha,alpha_prime,beta,predicted,enumerated,match\n")
    assert '"2","0",2,2,1,' in out
    assert "# ok,true" in out


def test_constants(capsys):
    assert run(["constants", "--max-l", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert rows[0]["value"] == "5/4"
    assert {(r["L"], r["parity"]): r["value"] for r in rows}[(2, "even")] == "53/32"


def test_verify_monotone(capsys):
    assert run(["verify", "monotone", "--max-f", "25", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    data = [l for l in lines[1:] if not l.startswith("#")]
    assert len(data) == 25 and all(l.endswith(",true") for l in data)


def test_verify_formulas(capsys):
    assert run(["verify", "formulas"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] and all(r["ok"] for r in doc["rows"])


def test_verify_all_budget_exhausted(capsys):
    assert run(["verify", "all", "--budget", "0.2", "--no-cache"]) == 3
    assert "budget" in capsys.readouterr().err


def test_node_budget_exit(capsys):
    assert run(["count", "-f", "40", "--node-budget", "500"]) == 3


def test_failed_identity_exit(monkeypatch, capsys):
    from numsg import verify

    monkeypatch.setattr(verify, "FORMULA_CHECKS", [lambda s: [verify.Check("bogus", False, "forced")]])
    assert run(["verify", "formulas", "--no-cache"]) == 1
    assert '"ok":false' in capsys.readouterr().out


def test_med_and_genus(capsys):
    assert run(["med", "--max-f", "14", "--shift-max", "14"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert [r["MED"] for r in doc["rows"]] == [r["published"] for r in doc["rows"]]
    assert doc["upper_chain_ok"]
    assert run(["genus", "--max-g", "10", "--format", "csv"]) == 0
    assert "# ok,true" in capsys.readouterr().out


def test_hpoly(capsys):
    assert run(["hpoly"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert {r["candidate"]: r["flagged"] for r in doc["rows"]} == {"definition": False, "printed": True}


def test_output_file(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert run(["constants", "--format", "csv", "-o", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().startswith("L,parity,value,decimal\n")
