"""Reproducible random-walk experiment harness.

Bit-exact MT19937 core with two seeding schemes and three sampling
semantics, deterministic walk experiments, and provenance-stamped result
records with replication checking.
"""

from .errors import (
    DomainError,
    GitUnavailableError,
    R5WalkError,
    RecordFormatError,
    SeedDomainError,
    StateFormatError,
    UnsupportedSchemaError,
)
from .provenance import (
    ComparisonReport,
    EnvFingerprint,
    FieldDiff,
    ResultRecord,
    SelfTestReport,
    VcsState,
    build_record,
    capture_env,
    capture_vcs,
    compare_records,
    read_record,
    self_test,
    write_record,
)
from .rng import (
    MtState,
    SeedScheme,
    SeedSpec,
    choice_legacy,
    choice_modern,
    export_state,
    getrandbits,
    import_state,
    next_f64,
    next_u32,
    seed,
    uniform,
)
from .walks import WalkModel, WalkParams, generate_walk, generate_walk_vectorized

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "DomainError",
    "EnvFingerprint",
    "FieldDiff",
    "GitUnavailableError",
    "MtState",
    "R5WalkError",
    "RecordFormatError",
    "ResultRecord",
    "SeedDomainError",
    "SeedScheme",
    "SeedSpec",
    "SelfTestReport",
    "StateFormatError",
    "UnsupportedSchemaError",
    "VcsState",
    "WalkModel",
    "WalkParams",
    "build_record",
    "capture_env",
    "capture_vcs",
    "choice_legacy",
    "choice_modern",
    "compare_records",
    "export_state",
    "generate_walk",
    "generate_walk_vectorized",
    "getrandbits",
    "import_state",
    "next_f64",
    "next_u32",
    "read_record",
    "seed",
    "self_test",
    "uniform",
    "write_record",
]
