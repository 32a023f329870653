"""Harvest golden fixtures from the reference Mersenne Twister generators.

Oracle A is the CPython standard-library ``random`` module; oracle B is the
NumPy legacy ``RandomState`` generator. The two interpret the same integer
seed differently, so a fixture pair per seed captures that divergence as
data. Each fixture records, from a fresh seeding per stream:

* ``u32``: the first 1000 raw tempered 32-bit outputs,
* ``f64_hex``: the first 1000 53-bit doubles as big-endian IEEE-754 bit
  patterns (decimal printing is a round-trip hazard, bit patterns are not),
* ``state_words``/``state_cursor``: the 624 post-seed state words and the
  post-seed cursor position,
* ``notes``: the reference runtime actually used for harvesting.

Fixtures are committed to the repository; conformance suites read the files
and never need this package (or the reference runtimes) at test time.
"""

from __future__ import annotations

import json
import platform
import random
import struct
from pathlib import Path

STREAM_LENGTH = 1000

STANDARD_SEEDS = {
    "A": ("0", "1", "2", "42", "439", "12345", "18446744073709551617"),
    # Oracle B's scalar seeding only accepts 32-bit values.
    "B": ("0", "1", "2", "42", "439", "12345"),
}


class OracleUnavailableError(RuntimeError):
    """A reference runtime needed for harvesting is not installed."""


def double_to_hex(value: float) -> str:
    """Big-endian IEEE-754 bit pattern of a double, as 16 hex digits."""
    return struct.pack(">d", value).hex()


def hex_to_double(text: str) -> float:
    return struct.unpack(">d", bytes.fromhex(text))[0]


def canonical_json(obj) -> str:
    """Sorted keys, no insignificant whitespace, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False) + "\n"


def _parse_seed(seed: str) -> int:
    if not isinstance(seed, str) or not seed.isascii() or not seed.isdigit():
        raise ValueError(f"seed must be a non-negative decimal string, got {seed!r}")
    return int(seed)


def _harvest_oracle_a(seed_value: int, length: int) -> dict:
    rng = random.Random()
    rng.seed(seed_value)
    internal = rng.getstate()[1]
    state_words = [int(w) for w in internal[:-1]]
    state_cursor = int(internal[-1])
    u32 = [rng.getrandbits(32) for _ in range(length)]
    rng.seed(seed_value)
    f64_hex = [double_to_hex(rng.random()) for _ in range(length)]
    return {
        "oracle": "A",
        "seed": str(seed_value),
        "u32": u32,
        "f64_hex": f64_hex,
        "state_words": state_words,
        "state_cursor": state_cursor,
        "notes": f"CPython {platform.python_version()} random module",
    }


def _harvest_oracle_b(seed_value: int, length: int) -> dict:
    try:
        import numpy as np
    except ImportError as exc:  # pragma: no cover - exercised only without numpy
        raise OracleUnavailableError(
            "NumPy is not installed; oracle B is the NumPy legacy RandomState generator"
        ) from exc
    if seed_value >= 2**32:
        raise ValueError(f"oracle B seeds must be below 2**32, got {seed_value}")
    rs = np.random.RandomState(seed_value)
    _, words, pos, _, _ = rs.get_state()
    # randint over the full 32-bit range passes raw outputs through 1:1.
    u32 = [int(v) for v in rs.randint(0, 2**32, size=length, dtype=np.uint32)]
    rs = np.random.RandomState(seed_value)
    f64_hex = [double_to_hex(float(v)) for v in rs.random_sample(length)]
    return {
        "oracle": "B",
        "seed": str(seed_value),
        "u32": u32,
        "f64_hex": f64_hex,
        "state_words": [int(w) for w in words],
        "state_cursor": int(pos),
        "notes": f"NumPy {np.__version__} legacy RandomState",
    }


def harvest(oracle: str, seed: str, length: int = STREAM_LENGTH) -> dict:
    """Run the requested reference generator and collect its fixture dict."""
    seed_value = _parse_seed(seed)
    if oracle == "A":
        return _harvest_oracle_a(seed_value, length)
    if oracle == "B":
        return _harvest_oracle_b(seed_value, length)
    raise ValueError(f"oracle must be 'A' or 'B', got {oracle!r}")


def fixture_filename(oracle: str, seed: str) -> str:
    return f"oracle{oracle}-seed{seed}.json"


def emit_fixture(oracle: str, seed: str, out, length: int = STREAM_LENGTH) -> None:
    """Write one fixture file in canonical JSON."""
    fixture = harvest(oracle, seed, length)
    Path(out).write_text(canonical_json(fixture), encoding="utf-8")


def emit_standard_set(fixtures_dir) -> list[Path]:
    """Write the committed fixture set into fixtures_dir; returns the paths."""
    fixtures_dir = Path(fixtures_dir)
    fixtures_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for oracle, seeds in STANDARD_SEEDS.items():
        for seed in seeds:
            out = fixtures_dir / fixture_filename(oracle, seed)
            emit_fixture(oracle, seed, out)
            written.append(out)
    return written
