import json
import os
import re
import subprocess

import pytest

CLI = os.environ.get("HLAT_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="HLAT_CLI not set")


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_info_ok():
    res = run("info", "e8")
    assert res.returncode == 0
    assert re.search(r"rank:\s+8\b", res.stdout)
    assert "unimodular: yes" in res.stdout


def test_bad_spec_is_usage_error():
    res = run("info", "nope:xyz")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_budget_env_override():
    res = run("e-invariant", "e8", env_extra={"HLAT_MAX_NODES": "100"})
    assert res.returncode == 3


def test_non_extremal_certificate_fails():
    res = run("h-bound", "certificate", "diag:1", "--w", "3", "--m", "1")
    assert res.returncode == 4


def test_json_report_parses_and_is_stable():
    args = ("--format", "json", "eta", "e8",
            "--w-ambient", "1,1,1,1,0,0,0,0", "--m", "0")
    first = run(*args)
    second = run(*args)
    assert first.returncode == 0
    report = json.loads(first.stdout)
    assert abs(report["result"]["value"]) == 16
    assert report["config"]["version"] == "0.1.0"
    assert first.stdout == second.stdout


def test_report_file(tmp_path):
    path = tmp_path / "report.json"
    res = run("--format", "json", "--report", str(path),
              "e-invariant", "diag:3")
    assert res.returncode == 0
    on_disk = json.loads(path.read_text())
    assert on_disk["result"]["value"] == 0
    assert json.loads(res.stdout) == on_disk


def test_brieskorn_value():
    res = run("h-bound", "brieskorn", "--k", "4")
    assert res.returncode == 0
    assert "h = 2" in res.stdout
