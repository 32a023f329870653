"""Shared helpers: fixture loading, throwaway git repos, acceptance summary."""

import json
import subprocess
from pathlib import Path

import pytest

FIXTURES_DIR = Path(__file__).resolve().parents[1] / "fixtures"

_GIT_IDENTITY = ["-c", "user.email=test@example.invalid", "-c", "user.name=Test"]


def load_fixture(name: str) -> dict:
    return json.loads((FIXTURES_DIR / name).read_text(encoding="utf-8"))


def oracle_fixture_names(oracle: str) -> list[str]:
    return sorted(p.name for p in FIXTURES_DIR.glob(f"oracle{oracle}-seed*.json"))


def git(repo: Path, *args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        ["git", "-C", str(repo), *_GIT_IDENTITY, *args],
        capture_output=True,
        text=True,
        check=True,
    )


def init_repo(repo: Path) -> None:
    subprocess.run(["git", "init", "-q", str(repo)], capture_output=True, check=True)
    (repo / "tracked.txt").write_text("v1\n", encoding="utf-8")
    git(repo, "add", "tracked.txt")
    git(repo, "commit", "-q", "-m", "init")


@pytest.fixture
def clean_repo(tmp_path, monkeypatch):
    """A committed single-file git repository, with the cwd inside it."""
    init_repo(tmp_path)
    monkeypatch.chdir(tmp_path)
    return tmp_path


# One summary line per acceptance criterion at the end of the run.
_ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    criterion = marker.kwargs.get("criterion", item.name)
    previous = _ACCEPTANCE_RESULTS.get(criterion, "passed")
    _ACCEPTANCE_RESULTS[criterion] = report.outcome if previous == "passed" else previous


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, outcome in _ACCEPTANCE_RESULTS.items():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {criterion}")
