import json
import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)


def test_hermite_table():
    r = run("hermite_table.py", "--n", "1", "--deg", "2")
    assert r.returncode == 0
    rows = json.loads(r.stdout)["rows"]
    assert [row["beta"] for row in rows] == [[0], [1], [2]]
    assert rows[1]["norm_B"] == "5"


def test_spectrum_table():
    r = run("spectrum_table.py", "--n", "2", "--deg", "1")
    assert r.returncode == 0
    assert "(0, 0): 1/8" in r.stdout


@pytest.mark.parametrize("suite", ["combinatorics", "typeb.bridge"])
def test_verification_grid(suite):
    r = run("run_verification_grid.py", "--sizes", "2", "--deg", "2", "--suite", suite)
    assert r.returncode == 0 and "FAILED" not in r.stdout
