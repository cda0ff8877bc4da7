import json
import shutil
import subprocess

import pytest

from superdirac import verify
from superdirac.cli import COMMANDS, run

SCHEMA_FOR = [
    ("roots --type C --n 2", "roots"),
    ("roots --type osp --n 3", "roots"),
    ("character --type osp --n 1 --hw 2", "character_record"),
    ("character --type B --hw 2,1", "character_record"),
    ("mult --hw 2,2", "multiplicities"),
    ("dim --type B --hw 2,1", "dimension"),
    ("transfer-factor --n 2 --order 8", "transfer_factor"),
    ("dirac-index --hw 1 --order 8", "dirac_index_certificate"),
    ("lift --param 2,1", "lift"),
    ("lift --param 3/2,1/2 --direction inverse", "lift"),
    ("lift-ds --n 2 --param 2,1", "lift_ds"),
    ("lift-ds --param 3/2,1/2 --inverse", "lift_ds"),
    ("dirac-square --n 1", "certificate"),
    ("dirac-cohomology --hw 2 --order 10", "certificate"),
    ("verify --suite lifting", "verify_report"),
]


def call(capsys, argv):
    rc = run(argv.split() + ["--no-cache"])
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.mark.parametrize("argv,name", SCHEMA_FOR, ids=[a for a, _ in SCHEMA_FOR])
def test_json_matches_schema(capsys, schema, argv, name):
    rc, out, _ = call(capsys, argv + " --json")
    assert rc == 0
    data = json.loads(out)
    errors = list(schema(name).iter_errors(data))
    assert not errors, errors[0].message


@pytest.mark.parametrize("argv", [a for a, _ in SCHEMA_FOR[:12]])
def test_deterministic_output(capsys, argv):
    first = call(capsys, argv + " --json")[1]
    assert call(capsys, argv + " --json")[1] == first
    assert call(capsys, argv)[1] == call(capsys, argv)[1]


def test_examples(capsys):
    rc, out, _ = call(capsys, "lift-ds --n 2 --param 2,1 --json")
    assert rc == 0 and json.loads(out) == {"lambda_prime": "3/2,1/2"}
    rc, out, _ = call(capsys, "character --type osp --n 1 --hw 2 --json")
    assert rc == 0 and json.loads(out)["dimension"] == "5"
    rc, out, _ = call(capsys, "lift-ds --param 3,1,-2")
    assert out.strip() == "5/2,1/2,-3/2"


@pytest.mark.slow
def test_verify_all(capsys):
    rc, out, _ = call(capsys, "verify --suite all --n-max 2 --order 12 --json")
    assert rc == 0
    report = json.loads(out)
    assert report["pass"] and set(report["suites"]) == set(verify.SUITES)


@pytest.mark.parametrize(
    "argv",
    [
        "",
        "frobnicate",
        "roots --n 2 --bogus",
        "character --hw 1/3",
        "character --hw 1,2",
        "character --type C --hw 2",
        "dim --hw 2 --n 3",
        "lift-ds --param 3/2,1/2",
        "lift-ds --param 2,2",
        "dirac-square --n 3",
        "verify --suite nonsense",
        "transfer-factor --n 1 --order 0",
        "mult",
    ],
)
def test_usage_errors(capsys, argv):
    rc = run(argv.split())
    err = capsys.readouterr().err.strip().splitlines()
    assert rc == 2
    assert len(err) == 2
    assert err[0].startswith("superdirac: error: ") and err[1].startswith("hint: ")


def test_identity_failure_exit_code(capsys, monkeypatch):
    def broken(n_max, order):
        return [verify._entry("harish_chandra", {"m": 0}, False, {"identity": "harish_chandra", "pass": False})]

    monkeypatch.setitem(verify.RUNNERS, "hc", broken)
    rc, out, _ = call(capsys, "verify --suite hc --json")
    assert rc == 1
    entry = json.loads(out)["suites"]["hc"]["entries"][0]
    assert entry["certificate"]["pass"] is False
    rc, out, _ = call(capsys, "verify --suite hc")
    assert rc == 1 and "certificate:" in out


def test_cache_roundtrip(capsys, tmp_path):
    argv = ["character", "--hw", "2,2", "--json", "--cache-dir", str(tmp_path)]
    assert run(argv) == 0
    first = capsys.readouterr().out
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    assert run(argv[:-2] + ["--no-cache"]) == 0
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_help_lists_flags(capsys, name):
    with pytest.raises(SystemExit) as exc:
        run([name, "--help"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    assert "--json" in text and "--order" in text


@pytest.mark.skipif(shutil.which("superdirac") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["superdirac", "dim", "--hw", "1", "--no-cache"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
    proc = subprocess.run(["superdirac", "dim"], capture_output=True, text=True)
    assert proc.returncode == 2
