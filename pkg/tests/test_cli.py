import csv
import io
import json

import pytest

from bsgs.cli import main
from bsgs.gf import make_field
from bsgs.groups import make_gl, make_sl
from bsgs.io import serialize
from bsgs.matrix import GroupMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("method", ["det", "naive", "random", "stcs"])
def test_order_builtin(capsys, method):
    code, out, _ = run(capsys, "order", "builtin:GL(2,3)", "--method", method, "--seed", "1")
    assert code == 0 and out.strip() == "48"


def test_order_json(capsys):
    code, out, _ = run(capsys, "order", "builtin:SL(2,4)", "--output", "json")
    assert json.loads(out) == {"group": "SL(2,4)", "order": 60}


@pytest.fixture
def group_files(tmp_path):
    F = make_field(3)
    g = tmp_path / "sl23.txt"
    g.write_text(serialize(F, 2, make_sl(2, F)))
    m = tmp_path / "tests.txt"
    m.write_text(serialize(F, 2, [GroupMatrix.identity(F, 2), GroupMatrix.diag(F, [2, 1])]))
    return g, m


def test_member(capsys, group_files):
    g, m = group_files
    code, out, _ = run(capsys, "member", str(g), str(m))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "yes dropout=3"
    assert lines[1].startswith("no ")


def test_member_field_mismatch(capsys, group_files, tmp_path):
    g, _ = group_files
    other = tmp_path / "f2.txt"
    F2 = make_field(2)
    other.write_text(serialize(F2, 2, make_gl(2, F2)))
    code, _, err = run(capsys, "member", str(g), str(other))
    assert code == 1 and "field" in err


def test_chain_text_and_json(capsys, group_files):
    g, _ = group_files
    code, out, _ = run(capsys, "chain", str(g))
    assert code == 0 and "order: 24" in out and "sgs size" in out
    code, out, _ = run(capsys, "chain", "builtin:GL(2,3)", "--base-strategy", "projective", "--output", "json")
    data = json.loads(out)
    assert data["orbits"][:2] == [4, 2] and data["base"][0]["projective"]


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "order", str(tmp_path / "missing"))[0] == 1
    assert run(capsys, "order", "builtin:GL(2,6)")[0] == 1
    assert run(capsys, "order", "builtin:GL(2,3)", "--stcs-ratio", "1/3")[0] == 1
    assert run(capsys, "order", "--bogus")[0] == 1
    # orbit explosion is a computation error
    assert run(capsys, "order", "builtin:GL(3,3)", "--orbit-limit", "5")[0] == 2


def test_bench_random_reproducible(capsys):
    argv = ["bench", "--suite", "random", "--field", "2", "--dim", "3", "--setsize", "2",
            "--trials", "20", "--seed", "1", "--output", "csv"]
    code, out1, err = run(capsys, *argv)
    assert code == 0 and "mean_ms" in err
    rows1 = list(csv.DictReader(io.StringIO(out1)))
    assert len(rows1) == 20
    assert list(rows1[0]) == ["group", "method", "strategy", "ms", "order", "baselen", "orbits"]
    rows2 = list(csv.DictReader(io.StringIO(run(capsys, *argv)[1])))
    strip = lambda rows: [{k: v for k, v in r.items() if k != "ms"} for r in rows]
    assert strip(rows1) == strip(rows2)
    assert all(168 % int(r["order"]) == 0 for r in rows1)


def test_bench_csv_json_agree(capsys):
    base = ["bench", "--suite", "random", "--field", "3", "--dim", "2", "--setsize", "1",
            "--trials", "4", "--seed", "9"]
    rows = list(csv.DictReader(io.StringIO(run(capsys, *base, "--output", "csv")[1])))
    data = json.loads(run(capsys, *base, "--output", "json")[1])
    for r, j in zip(rows, data):
        assert r["order"] == str(j["order"]) and r["orbits"] == j["orbits"] and r["baselen"] == str(j["baselen"])


def test_bench_classical_text(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "classical")
    assert code == 0 and out.count("\n") == 18 and "MISMATCH" not in out
