"""Provenance capture and result records.

A result file carries the walk data together with everything needed to
re-obtain it: the full parameter set, a UTC timestamp, the VCS revision and
dirty flag, and an environment fingerprint. Records serialize to a canonical
JSON form (sorted keys, no insignificant whitespace, integers only, trailing
newline) so identical records are byte-identical files, and comparison never
relies on eyeballing.
"""

from __future__ import annotations

import json
import os
import platform
import re
import shutil
import subprocess
import sys
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import metadata
from pathlib import Path

from .errors import (
    DomainError,
    GitUnavailableError,
    RecordFormatError,
    UnsupportedSchemaError,
)
from .rng import SeedScheme, SeedSpec
from .walks import WalkModel, WalkParams, generate_walk, generate_walk_vectorized

SCHEMA_VERSION = 1
ARTIFACT_NAME = "r5walk"

_REVISION_RE = re.compile(r"^[0-9a-f]{40}$")
_DECIMAL_RE = re.compile(r"^[0-9]+$")


@dataclass(frozen=True)
class EnvFingerprint:
    """Runtime-captured description of the machine and toolchain."""

    os_name: str
    os_version: str
    architecture: str
    artifact_name: str
    artifact_version: str
    toolchain: str


@dataclass(frozen=True)
class VcsState:
    """Current commit id (absent outside a repository) and dirty flag."""

    revision: str | None
    dirty: bool


@dataclass(frozen=True)
class ResultRecord:
    """A walk plus the context needed to reproduce it."""

    schema_version: int
    data: list[int]
    parameters: WalkParams
    timestamp: str
    revision: str | None
    dirty: bool
    system: EnvFingerprint


def _nonempty(value: str) -> str:
    return value if value else "unknown"


def capture_env() -> EnvFingerprint:
    """Capture the live environment; unknown fields become "unknown"."""
    try:
        version = metadata.version(ARTIFACT_NAME)
    except metadata.PackageNotFoundError:
        version = "unknown"
    return EnvFingerprint(
        os_name=_nonempty(platform.system()),
        os_version=_nonempty(platform.release()),
        architecture=_nonempty(platform.machine()),
        artifact_name=ARTIFACT_NAME,
        artifact_version=_nonempty(version),
        toolchain=_nonempty(
            platform.python_implementation() + " " + " ".join(sys.version.split())
        ),
    )


def capture_vcs(workdir) -> VcsState:
    """Read the commit id and dirty flag of the repository containing workdir.

    dirty is true iff tracked files differ from HEAD; untracked files do not
    count. Outside a repository the revision is absent and dirty is false.
    Raises GitUnavailableError when the git executable itself is missing.
    """
    workdir = Path(workdir)
    if not workdir.is_dir():
        raise DomainError(f"workdir is not a directory: {workdir}")
    if shutil.which("git") is None:
        raise GitUnavailableError("git executable not found on PATH")
    head = subprocess.run(
        ["git", "rev-parse", "HEAD"],
        cwd=workdir,
        capture_output=True,
        text=True,
    )
    if head.returncode != 0:
        return VcsState(revision=None, dirty=False)
    revision = head.stdout.strip().lower()
    if not _REVISION_RE.match(revision):
        return VcsState(revision=None, dirty=False)
    diff = subprocess.run(
        ["git", "diff-index", "--quiet", "HEAD", "--"],
        cwd=workdir,
        capture_output=True,
    )
    return VcsState(revision=revision, dirty=diff.returncode != 0)


def build_record(walk, params: WalkParams, env: EnvFingerprint, vcs: VcsState, now) -> ResultRecord:
    """Assemble a schema-version-1 record; ``now`` may be a datetime or a
    preformatted string (stored verbatim)."""
    data = list(walk)
    for value in data:
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"walk data must be integers, got {value!r}")
    if isinstance(now, datetime):
        if now.tzinfo is None:
            now = now.replace(tzinfo=timezone.utc)
        timestamp = now.astimezone(timezone.utc).isoformat()
    else:
        timestamp = str(now)
    return ResultRecord(
        schema_version=SCHEMA_VERSION,
        data=data,
        parameters=params,
        timestamp=timestamp,
        revision=vcs.revision,
        dirty=vcs.dirty,
        system=env,
    )


def canonical_json(obj) -> str:
    """Serialize to the canonical form: UTF-8 JSON, lexicographically sorted
    keys, no insignificant whitespace, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def fingerprint_to_dict(env: EnvFingerprint) -> dict:
    return {
        "architecture": env.architecture,
        "artifact_name": env.artifact_name,
        "artifact_version": env.artifact_version,
        "os_name": env.os_name,
        "os_version": env.os_version,
        "toolchain": env.toolchain,
    }


def record_to_dict(record: ResultRecord) -> dict:
    """Map a record onto the schema-version-1 key set.

    The seed is stored as scheme plus decimal string so arbitrary-precision
    values survive any JSON implementation losslessly.
    """
    p = record.parameters
    return {
        "schema_version": record.schema_version,
        "data": list(record.data),
        "parameters": {
            "count": p.count,
            "model": p.model.value,
            "seed_scheme": p.seed.scheme.value,
            "seed_value": str(p.seed.value),
            "step": p.step,
            "x0": p.x0,
        },
        "timestamp": record.timestamp,
        "revision": record.revision,
        "dirty": record.dirty,
        "system": fingerprint_to_dict(record.system),
    }


def _require(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise RecordFormatError(f"{where}: missing key {key!r}")
    value = obj[key]
    # bool is an int subclass; keep JSON true/false out of integer fields.
    if (kind is not bool and isinstance(value, bool)) or not isinstance(value, kind):
        raise RecordFormatError(f"{where}: key {key!r} has the wrong type: {value!r}")
    return value


def record_from_dict(obj) -> ResultRecord:
    """Validate a parsed JSON object and rebuild the record."""
    if not isinstance(obj, dict):
        raise RecordFormatError("record must be a JSON object")
    schema = obj.get("schema_version")
    if schema != SCHEMA_VERSION:
        raise UnsupportedSchemaError(
            f"unsupported schema_version {schema!r}; this build reads version {SCHEMA_VERSION}"
        )

    data = _require(obj, "data", list, "record")
    for value in data:
        if not isinstance(value, int) or isinstance(value, bool):
            raise RecordFormatError(f"record: data must hold integers, got {value!r}")

    raw_params = _require(obj, "parameters", dict, "record")
    seed_value = _require(raw_params, "seed_value", str, "parameters")
    if not _DECIMAL_RE.match(seed_value):
        raise RecordFormatError(f"parameters: seed_value must be a decimal string, got {seed_value!r}")
    try:
        scheme = SeedScheme(_require(raw_params, "seed_scheme", str, "parameters"))
        model = WalkModel(_require(raw_params, "model", str, "parameters"))
    except ValueError as exc:
        raise RecordFormatError(f"parameters: {exc}") from exc
    try:
        params = WalkParams(
            count=_require(raw_params, "count", int, "parameters"),
            x0=_require(raw_params, "x0", int, "parameters"),
            step=_require(raw_params, "step", int, "parameters"),
            seed=SeedSpec(scheme, int(seed_value)),
            model=model,
        )
    except DomainError as exc:
        raise RecordFormatError(f"parameters: {exc}") from exc

    timestamp = _require(obj, "timestamp", str, "record")
    revision = obj.get("revision")
    if revision is not None:
        if not isinstance(revision, str) or not _REVISION_RE.match(revision):
            raise RecordFormatError(f"record: revision must be 40-char lowercase hex or null, got {revision!r}")
    dirty = _require(obj, "dirty", bool, "record")

    raw_system = _require(obj, "system", dict, "record")
    fields = {}
    for key in ("architecture", "artifact_name", "artifact_version", "os_name", "os_version", "toolchain"):
        value = _require(raw_system, key, str, "system")
        if not value:
            raise RecordFormatError(f"system: key {key!r} must be non-empty")
        fields[key] = value
    system = EnvFingerprint(
        os_name=fields["os_name"],
        os_version=fields["os_version"],
        architecture=fields["architecture"],
        artifact_name=fields["artifact_name"],
        artifact_version=fields["artifact_version"],
        toolchain=fields["toolchain"],
    )
    return ResultRecord(
        schema_version=SCHEMA_VERSION,
        data=list(data),
        parameters=params,
        timestamp=timestamp,
        revision=revision,
        dirty=dirty,
        system=system,
    )


def write_record(record: ResultRecord, out) -> None:
    """Write the canonical serialization atomically (temp file + rename)."""
    out = Path(out)
    payload = canonical_json(record_to_dict(record))
    fd, tmp_name = tempfile.mkstemp(dir=out.parent, prefix=out.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
        os.replace(tmp_name, out)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def read_record(path) -> ResultRecord:
    """Parse a result file; failures carry line/column diagnostics."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordFormatError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    return record_from_dict(obj)


@dataclass(frozen=True)
class FieldDiff:
    """Outcome for one compared field."""

    field: str
    equal: bool
    detail: str


@dataclass(frozen=True)
class ComparisonReport:
    """Per-field comparison outcome; ``first_divergence`` indexes the data."""

    match: bool
    fields: tuple[FieldDiff, ...]
    first_divergence: int | None

    def to_dict(self) -> dict:
        return {
            "match": self.match,
            "first_divergence": self.first_divergence,
            "fields": [
                {"field": f.field, "equal": f.equal, "detail": f.detail} for f in self.fields
            ],
        }

    def lines(self) -> list[str]:
        out = [f"{'match' if self.match else 'mismatch'}"]
        out.extend(f"  {f.field}: {'ok' if f.equal else 'DIFFERS'} ({f.detail})" for f in self.fields)
        return out


def _data_divergence(a: list[int], b: list[int]) -> int | None:
    for i in range(min(len(a), len(b))):
        if a[i] != b[i]:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def compare_records(a: ResultRecord, b: ResultRecord, strict: bool = False) -> ComparisonReport:
    """Compare data and parameters; strict mode adds revision, dirty and
    system. The timestamp is provenance, not result, and is never compared."""
    fields: list[FieldDiff] = []

    divergence = _data_divergence(a.data, b.data)
    if divergence is None:
        fields.append(FieldDiff("data", True, f"identical ({len(a.data)} positions)"))
    elif divergence < min(len(a.data), len(b.data)):
        fields.append(
            FieldDiff(
                "data",
                False,
                f"first divergence at index {divergence}: {a.data[divergence]} != {b.data[divergence]}",
            )
        )
    else:
        fields.append(
            FieldDiff("data", False, f"length differs: {len(a.data)} != {len(b.data)} (first divergence at index {divergence})")
        )

    if a.parameters == b.parameters:
        fields.append(FieldDiff("parameters", True, "identical"))
    else:
        pa, pb = record_to_dict(a)["parameters"], record_to_dict(b)["parameters"]
        differing = sorted(k for k in pa if pa[k] != pb[k])
        fields.append(FieldDiff("parameters", False, "differs in " + ", ".join(differing)))

    if strict:
        if a.revision == b.revision:
            fields.append(FieldDiff("revision", True, "identical"))
        else:
            fields.append(FieldDiff("revision", False, f"{a.revision!r} != {b.revision!r}"))
        if a.dirty == b.dirty:
            fields.append(FieldDiff("dirty", True, "identical"))
        else:
            fields.append(FieldDiff("dirty", False, f"{a.dirty} != {b.dirty}"))
        if a.system == b.system:
            fields.append(FieldDiff("system", True, "identical"))
        else:
            sa, sb = fingerprint_to_dict(a.system), fingerprint_to_dict(b.system)
            differing = sorted(k for k in sa if sa[k] != sb[k])
            fields.append(FieldDiff("system", False, "differs in " + ", ".join(differing)))

    return ComparisonReport(
        match=all(f.equal for f in fields),
        fields=tuple(fields),
        first_divergence=divergence,
    )


@dataclass(frozen=True)
class VectorCheck:
    """One golden-vector assertion inside the self-test."""

    name: str
    passed: bool
    expected: list[int]
    actual: list[int]


@dataclass(frozen=True)
class SelfTestReport:
    checks: tuple[VectorCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> str | None:
        for check in self.checks:
            if not check.passed:
                return check.name
        return None


def _golden(seed_value: int, model: WalkModel) -> WalkParams:
    return WalkParams(count=10, seed=SeedSpec(SeedScheme.BIG_INT_ARRAY, seed_value), model=model)


# Golden vectors a correct build must reproduce before producing results.
GOLDEN_WALKS: tuple[tuple[str, WalkParams, list[int]], ...] = (
    ("uniform-seed42", _golden(42, WalkModel.UNIFORM), [1, 0, -1, -2, -1, 0, 1, 0, -1, -2]),
    ("choice-legacy-seed1", _golden(1, WalkModel.CHOICE_LEGACY), [-1, 0, 1, 0, -1, -2, -1, 0, -1, -2]),
    ("choice-modern-seed1", _golden(1, WalkModel.CHOICE_MODERN), [-1, -2, -1, -2, -1, 0, 1, 2, 1, 0]),
    ("choice-modern-seed439", _golden(439, WalkModel.CHOICE_MODERN), [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]),
    ("choice-legacy-seed11235813", _golden(11235813, WalkModel.CHOICE_LEGACY), [-1, 0, -1, 0, -1, 0, -1, 0, 1, 2]),
)


def self_test() -> SelfTestReport:
    """Re-run the embedded golden vectors plus a vectorized-equivalence spot
    check; failures are report entries, never exceptions."""
    checks = []
    for name, params, expected in GOLDEN_WALKS:
        actual = generate_walk(params)
        checks.append(VectorCheck(name, actual == expected, list(expected), actual))
    scalar = generate_walk(
        WalkParams(count=100, seed=SeedSpec(SeedScheme.BIG_INT_ARRAY, 7), model=WalkModel.UNIFORM)
    )
    vectorized = generate_walk_vectorized(
        WalkParams(count=100, seed=SeedSpec(SeedScheme.BIG_INT_ARRAY, 7), model=WalkModel.UNIFORM_VECTORIZED)
    )
    checks.append(VectorCheck("vectorized-equivalence-seed7", vectorized == scalar, scalar, vectorized))
    return SelfTestReport(checks=tuple(checks))
