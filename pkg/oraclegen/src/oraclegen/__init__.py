"""Golden-fixture harvester for the two reference Mersenne Twister generators."""

from .harvest import (
    OracleUnavailableError,
    STANDARD_SEEDS,
    canonical_json,
    double_to_hex,
    emit_fixture,
    emit_standard_set,
    fixture_filename,
    harvest,
    hex_to_double,
)

__version__ = "0.1.0"

__all__ = [
    "OracleUnavailableError",
    "STANDARD_SEEDS",
    "canonical_json",
    "double_to_hex",
    "emit_fixture",
    "emit_standard_set",
    "fixture_filename",
    "harvest",
    "hex_to_double",
]
