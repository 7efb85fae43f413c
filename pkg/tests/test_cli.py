import io
import json
import os
import subprocess
import sys

import pytest

from cmpoly import cache
from cmpoly.classpoly import ramanujan_poly, single_eta_poly
from cmpoly.cli import main
from cmpoly.errors import CacheError
from cmpoly.family import RAMANUJAN

T299 = "x^8 + x^7 - x^6 - 12x^5 + 16x^4 - 12x^3 + 15x^2 - 13x + 1"


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_poly_text():
    code, out = run(["poly", "--family", "ramanujan", "-D", "299"])
    assert code == 0
    assert out.strip() == str(ramanujan_poly(299))


def test_poly_eta_l():
    code, out = run(["poly", "--family", "eta-l", "--l", "13", "-D", "299"])
    assert code == 0
    assert out.strip() == str(single_eta_poly(299, 13))


def test_poly_json():
    code, out = run(["poly", "--family", "eta-p1p2", "--pair", "5,7", "-D", "299", "--format", "json"])
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == {"family", "D", "degree", "coeffs"}
    assert rec["family"] == "eta-5-7" and rec["D"] == 299 and rec["degree"] == 8
    assert len(rec["coeffs"]) == 9 and rec["coeffs"][-1] == "1"


def test_poly_precondition_exit_codes(capsys):
    assert run(["poly", "--family", "ramanujan", "-D", "12"])[0] == 2
    assert "InvalidDiscriminant" in capsys.readouterr().err
    assert run(["poly", "--family", "eta-l", "-D", "299"])[0] == 2
    assert run(["poly", "--family", "eta-p1p2", "--pair", "3,5", "-D", "299"])[0] == 2
    assert run(["poly", "--family", "weber", "-D", "23"])[0] == 2


def test_poly_precision_exit_code(capsys):
    code, _ = run(["poly", "--family", "hilbert", "-D", "20011", "--prec", "64"])
    assert code == 3
    assert "PrecisionExhausted" in capsys.readouterr().err


def test_poly_out_file(tmp_path):
    path = tmp_path / "t.poly"
    assert run(["poly", "--family", "ramanujan", "-D", "59", "--out", str(path)])[0] == 0
    assert cache.load(str(path)) == ramanujan_poly(59)


def test_curve_desk_example():
    code, out = run(["curve", "-D", "11", "--bits", "3", "--family", "ramanujan", "--seed", "1",
                     "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"p": 5, "a": 4, "b": 2, "m": 3, "D": 11, "j": 2}


def test_curve_is_byte_identical():
    argv = ["curve", "-D", "59", "--bits", "48", "--seed", "5"]
    assert run(argv) == run(argv)
    assert run(argv)[1].splitlines()[0].startswith("p = ")


def test_curve_exit_codes():
    assert run(["curve", "-D", "14", "--bits", "16"])[0] == 2
    assert run(["curve", "-D", "35", "--bits", "4", "--family", "ramanujan"])[0] == 4


def test_cache_round_trip(tmp_path):
    d = str(tmp_path)
    assert run(["curve", "-D", "35", "--bits", "24", "--cache", d])[0] == 0
    path = cache.cache_path(d, RAMANUJAN, 35)
    assert cache.load(path) == ramanujan_poly(35)
    assert run(["poly", "--family", "ramanujan", "-D", "35", "--cache", d])[1].strip() == "x^2 + x - 1"
    for poly in (ramanujan_poly(299), single_eta_poly(299, 13)):
        assert cache.loads(cache.dumps(poly)) == poly


def test_corrupted_cache_exits_5(tmp_path, capsys):
    d = str(tmp_path)
    path = cache.store(ramanujan_poly(299), d)
    lines = open(path).read().splitlines()
    lines[3] = str(int(lines[3]) + 1)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    with pytest.raises(CacheError):
        cache.load(path)
    assert run(["poly", "--family", "ramanujan", "-D", "299", "--cache", d])[0] == 5
    assert "checksum" in capsys.readouterr().err


@pytest.mark.parametrize("text", ["", "garbage\n1\n", "cmpoly-poly-v1 family=ramanujan D=11\n-1\n1\n",
                                  "cmpoly-poly-v1 family=ramanujan D=11 degree=2 sha256=00\n-1\n1\n"])
def test_malformed_cache(text):
    with pytest.raises(CacheError):
        cache.loads(text)


def test_bench_estimate_text():
    code, out = run(["bench", "--d-list", "109200299", "--families", "all", "--mode", "estimate"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1 + 9
    assert lines[0].split()[:4] == ["D", "family", "deg", "est_bits"]
    assert any("ramanujan" in line for line in lines)


def test_bench_jsonl(tmp_path):
    path = tmp_path / "rows.jsonl"
    code, out = run(["bench", "--d-range", "11:400:24", "--families", "ramanujan,hilbert",
                     "--mode", "construct", "--format", "jsonl", "--jsonl", str(path)])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs == [json.loads(line) for line in path.read_text().splitlines()]
    assert {r["family"] for r in recs} == {"ramanujan", "hilbert"}
    for r in recs:
        assert set(r) >= {"D", "family", "degree", "estimated_bits", "measured_height",
                          "storage_bits", "millis"}


def test_bench_none_is_empty():
    code, out = run(["bench", "--d-list", "299", "--families", "none"])
    assert code == 0
    assert out.splitlines()[1:] == []
    code, out = run(["bench", "--families", "none", "--format", "jsonl"])
    assert code == 0 and out == ""


def test_bench_row_errors_do_not_abort():
    code, out = run(["bench", "--d-list", "12,299", "--families", "ramanujan", "--mode", "construct"])
    assert code == 0
    assert "InvalidDiscriminant" in out
    assert "299" in out


def test_bench_io_failure(tmp_path):
    code, _ = run(["bench", "--d-list", "299", "--families", "ramanujan",
                   "--jsonl", str(tmp_path / "missing" / "x.jsonl")])
    assert code == 1


def test_module_entry_point():
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "cmpoly", "poly", "--family", "ramanujan", "-D", "299"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.strip() == T299
