import json
import os
import subprocess
import sys

import pytest

from tricut.cli import main
from tricut.fixtures import fixture_names


def run(*args, stdin=None, env=None):
    return subprocess.run(
        [sys.executable, "-m", "tricut", *args], input=stdin, capture_output=True, text=True, env=env
    )


@pytest.fixture
def wheel_file(tmp_path):
    p = tmp_path / "wheel.txt"
    assert main(["gen", "--wheel", "6", "-o", str(p)]) == 0
    return p


def test_decompose_summary(wheel_file, capsys):
    assert main(["decompose", str(wheel_file)]) == 0
    assert "cutsets: 9" in capsys.readouterr().out


def test_decompose_json_from_stdin(wheel_file):
    r = run("decompose", "-", "--json", stdin=wheel_file.read_text())
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert len(data["cutsets"]) == 9 and len(data["complexes"]) == 1


def test_piped_decompose_defaults_to_stdin():
    wheel = run("gen", "--wheel", "6").stdout
    r = run("decompose", "--json", stdin=wheel)
    assert r.returncode == 0 and len(json.loads(r.stdout)["cutsets"]) == 9


def test_decompose_dot(wheel_file, capsys):
    assert main(["decompose", str(wheel_file), "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph hypertree {")


def test_cutsets(wheel_file, capsys):
    assert main(["cutsets", str(wheel_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 9 and all(line.startswith("p ") for line in lines)


def test_verify_ok(wheel_file, capsys):
    assert main(["verify", str(wheel_file)]) == 0
    assert "violations: 0" in capsys.readouterr().out


def test_verify_corpus(tmp_path, capsys):
    for name in ("WHEEL6", "DK4"):
        assert main(["fixtures", "--emit", name, "-o", str(tmp_path / f"{name}.txt")]) == 0
    (tmp_path / "bad.txt").write_text("7 1\n0 0\n")
    assert main(["verify", "--corpus", str(tmp_path), "--jobs", "2"]) == 1
    out = capsys.readouterr().out
    assert "WHEEL6.txt: ok" in out and "bad.txt: ParseError" in out


def test_fixtures_list(capsys):
    assert main(["fixtures", "--list"]) == 0
    assert capsys.readouterr().out.split() == fixture_names()


@pytest.mark.parametrize(
    "text,code",
    [
        ("7 1\n0 0\n", 1),  # loop
        ("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", 2),  # K4 is too small
        ("7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n", 2),  # a path
        ("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n", 2),  # a cycle is only 2-connected
    ],
)
def test_exit_codes(tmp_path, text, code):
    p = tmp_path / "g.txt"
    p.write_text(text)
    assert main(["decompose", str(p)]) == code


def test_usage_errors_are_input_errors():
    assert main(["bogus"]) == 1
    assert main(["decompose", "/nonexistent/file"]) == 1
    assert main(["fixtures", "--emit", "NOPE"]) == 1
    assert main(["gen", "--random", "9"]) == 1
    assert main(["gen", "--wheel", "3"]) == 1


def test_seed_environment_overrides_flag(monkeypatch):
    plain = run("gen", "--random", "10", "--seed", "5")
    env = dict(os.environ, TRICUT_SEED="5")
    assert run("gen", "--random", "10", "--seed", "99", env=env).stdout == plain.stdout
    assert run("gen", "--random", "10", "--seed", "99").stdout != plain.stdout
    env["TRICUT_SEED"] = "x"
    assert run("gen", "--random", "10", env=env).returncode == 1
