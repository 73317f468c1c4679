import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from tatami.cli import main
from tatami.core import Covering, validate_covering
from tatami.render import parse_ascii


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--n", "8", "--k", "7")[:2] == (0, "24\n")
    assert run(capsys, "count", "--n", "5")[1] == "1 2 3 6 4 2 2\n"
    assert run(capsys, "count", "--n", "2")[1] == "1\n"
    assert run(capsys, "count", "--n", "8", "--k", "99")[1] == "0\n"


def test_gen_jsonl(capsys):
    code, out, _ = run(capsys, "gen", "--n", "8", "--k", "7")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 24
    assert [r["index"] for r in rows] == list(range(24))
    assert all(r["v"] == 7 and validate_covering(Covering.from_key(r["key"])).ok for r in rows)


def test_gen_bond(capsys):
    out = run(capsys, "gen", "--n", "10", "--k", "0")[1]
    assert len(out.splitlines()) == 1
    assert json.loads(out)["code"] == "0,0,0,0,0,0,0,0"


def test_gen_infeasible(capsys):
    assert run(capsys, "gen", "--n", "9", "--k", "1000")[:2] == (0, "")


def test_gen_svg(capsys):
    out = run(capsys, "gen", "--n", "8", "--k", "7", "--format", "svg")[1]
    root = ET.fromstring(out)
    assert len(root.findall("{http://www.w3.org/2000/svg}g")) == 24


def test_gen_ascii_parses(capsys):
    out = run(capsys, "gen", "--n", "6", "--k", "4", "--format", "ascii")[1]
    blocks = [b for b in out.strip().split("\n\n")]
    assert len(blocks) == 9
    for block in blocks:
        header, picture = block.split("\n", 1)
        assert header.startswith("# ")
        assert validate_covering(parse_ascii(picture)).ok


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--n", "10", "--code", "0,1,-1,0,0,1,-1,0")
    assert code == 0 and out.count("*") == 4
    code, out, _ = run(capsys, "render", "--n", "10", "--code", "0,1,-1,0,0,1,-1,0", "--format", "svg")
    ET.fromstring(out)


def test_render_invalid(capsys):
    code, out, err = run(capsys, "render", "--n", "10", "--code", "0,0,1,0,0,1,0,0")
    assert code == 1 and out == "" and "type2-conflict" in err
    assert run(capsys, "render", "--n", "10", "--code", "0,1")[0] == 1


def test_poly(capsys):
    assert run(capsys, "poly", "--n", "6", "--which", "p")[1] == "1 0 1 2 2 -2 2\n"
    assert run(capsys, "poly", "--n", "6", "--which", "d")[1] == "1 2 2 2 1\n"
    assert run(capsys, "poly", "--n", "2", "--which", "r")[1] == "2 2\n"
    assert run(capsys, "poly", "--n", "4")[1] == "1 2 3 2\n"


def test_poly_big_numbers_in_full(capsys):
    out = run(capsys, "poly", "--n", "199", "--which", "p")[1]
    assert "e+" not in out and max(len(c.lstrip("-")) for c in out.split()) >= 50


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "3", "--oracle-nmax", "3")
    assert code == 0 and out.startswith("PASS")


def test_verify_corrupt(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "9", "--oracle-nmax", "2", "--inject-corrupt-d", "8")
    assert code == 2
    assert "FAIL d-divides-vh n=8: remainder [" in out


def test_conjectures_json(capsys):
    code, out, _ = run(capsys, "conjectures", "--nmax", "12")
    data = json.loads(out)
    assert code == 0
    assert [d["id"] for d in data] == ["vhcon-a", "vhcon-b", "pcon-a", "pcon-b", "pcon-c", "pcon-e", "pcon-f"]
    assert all(isinstance(v, str) for v in data[5]["witnesses"]["values"])


def test_oracle(capsys):
    out = run(capsys, "oracle", "--n", "4")[1]
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 8 and set(rows[0]) == {"n", "key", "v", "h"}


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 1
    assert run(capsys, "count", "--n", "1")[0] == 1
    assert run(capsys, "oracle", "--n", "20")[0] == 1
    assert run(capsys, "verify", "--oracle-nmax", "99")[0] == 1


def _cli(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "tatami.cli", *argv], capture_output=True, env=env)


def test_output_deterministic():
    a = _cli("gen", "--n", "9", "--k", "12", "--format", "svg")
    b = _cli("gen", "--n", "9", "--k", "12", "--format", "svg")
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_threads_do_not_change_output(tmp_path):
    import os

    env = dict(os.environ, TATAMI_THREADS="2")
    serial = _cli("verify", "--nmax", "12", "--oracle-nmax", "5", "--verbose")
    parallel = _cli("verify", "--nmax", "12", "--oracle-nmax", "5", "--verbose", env=env)
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout
