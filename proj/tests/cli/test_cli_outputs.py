"""Runs the installed-style pasep binary and pins its output formats."""

import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

BIN = os.environ.get("PASEP_BIN", "pasep")
ROOT = Path(os.environ.get("PASEP_SOURCE_DIR", Path(__file__).resolve().parents[2]))
SCHEMAS = ROOT / "schemas"
GOLDEN = ROOT / "tests" / "golden"


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run_json(*args):
    r = run("--format", "json", *args)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


CASES = json.loads((GOLDEN / "cases.json").read_text())


@pytest.mark.parametrize("golden", sorted(CASES))
def test_golden(golden):
    r = run(*CASES[golden])
    assert r.returncode == 0, r.stderr
    assert r.stdout == (GOLDEN / golden).read_text()


@pytest.mark.parametrize(
    "name,args",
    [
        ("genfun", ["genfun", "--tau", "010", "--cross-check"]),
        ("genfun", ["genfun", "--shape", "3,1,0"]),
        ("genfun", ["genfun", "-z", "4", "--kind", "motzkin"]),
        ("steady", ["steady", "-n", "3", "--q", "1/2", "--alpha", "2/3", "--beta", "1/3"]),
        ("steady", ["steady", "-n", "0"]),
        ("steady", ["steady", "-n", "2", "--method", "ansatz"]),
        ("steady", ["steady", "-n", "2", "--method", "simulate", "--steps", "1000"]),
        ("simulate", ["simulate", "-n", "3", "--steps", "5000"]),
        ("simulate", ["simulate", "-n", "11", "--steps", "100"]),
        ("verify", ["--max-n", "4", "verify", "--all"]),
        ("eulerian", ["eulerian", "-n", "4"]),
        ("hasse", ["hasse", "-n", "5", "-k", "2"]),
    ],
)
def test_json_matches_schema(name, args):
    jsonschema.validate(run_json(*args), schema(name))


def test_schemas_are_well_formed():
    for path in SCHEMAS.glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_deterministic_simulation():
    args = ("--seed", "11", "simulate", "-n", "3", "--steps", "20000")
    assert run(*args).stdout == run(*args).stdout


@pytest.mark.parametrize(
    "args,code",
    [
        (["genfun", "--tau", "010", "--cross-check"], 0),
        (["verify", "--check", "mono", "--max-n", "4"], 0),
        (["verify", "--check", "nonexistent"], 2),
        (["genfun", "--tau", "0a1"], 2),
        (["steady", "-n", "2", "--beta", "0"], 2),
        (["steady", "-n", "2", "--q", "0.5"], 2),
        (["eulerian", "-n", "0"], 2),
        ([], 2),
    ],
)
def test_exit_codes(args, code):
    assert run(*args).returncode == code


def test_mono_reports_expected_negative():
    r = run("verify", "--check", "mono", "--max-n", "4")
    assert "1100" in r.stdout


def test_steady_unit_rates():
    doc = run_json("steady", "-n", "3")
    probs = {row["state"]: row["prob"] for row in doc["distribution"]}
    assert probs["010"] == "1/8"
    assert list(probs) == sorted(probs)
