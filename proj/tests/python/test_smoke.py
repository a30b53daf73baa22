import json
import os
import subprocess

import pytest

import hurwitz

A2 = [["2", "1"], ["1", "2"]]


def test_normalize_and_approx():
    assert hurwitz.normalize("2cos(pi*2/5) + 2cos(pi*4/5)") == "-1"
    assert abs(float(hurwitz.approx("2cos(pi*1/5)")) - 1.618033988749895) < 1e-12
    with pytest.raises(ValueError):
        hurwitz.normalize("2cos(pi*1/0)")


def test_fingerprint_and_det():
    assert hurwitz.det(A2) == "3"
    assert hurwitz.fingerprint(A2)["cyclotomic"] == [[3, 1]]


def test_braid_inverse():
    b = hurwitz.catalog("A3")
    assert hurwitz.act_word(hurwitz.act_word(b, "s1 s2"), "s2^-1 s1^-1") == b
    assert hurwitz.act_word(b, "s1 s2 s1") == hurwitz.act_word(b, "s2 s1 s2")


def test_counts_and_classify():
    c = hurwitz.count_orbits("A3")
    assert c["orbits"] == 1
    assert hurwitz.classify([["2", "-2", "-2"], ["-2", "2", "-2"], ["-2", "-2", "2"]])["verdict"] != "Finite"


def test_orbit_of_gamma0():
    r = hurwitz.orbit(hurwitz.catalog("A3"))
    assert r["verdict"] == "Finite"
    assert r["invariants"]["det"] == "4"


@pytest.mark.skipif("HURWITZ_CLI" not in os.environ, reason="CLI path not given")
def test_cli_charpoly(tmp_path):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"n": 2, "entries": A2}))
    out = subprocess.run([os.environ["HURWITZ_CLI"], "charpoly", str(f)], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["cyclotomic"] == [[3, 1]]
    bad = subprocess.run([os.environ["HURWITZ_CLI"], "charpoly", str(tmp_path / "missing.json")], capture_output=True, text=True)
    assert bad.returncode == 2
    assert json.loads(bad.stderr)["error"] == "input"
