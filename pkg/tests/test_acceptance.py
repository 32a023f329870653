"""Release acceptance criteria.

Every test here is one exit criterion, exercised end to end at its stated
tolerance (bit-exact unless noted). The conftest hook prints one PASS/FAIL
line per criterion at the end of the run.
"""

import json
import random
import struct
import time

import pytest
from conftest import FIXTURES_DIR, load_fixture
from hypothesis import given, settings
from hypothesis import strategies as st

from r5walk import rng
from r5walk.cli import main
from r5walk.provenance import EnvFingerprint, ResultRecord, read_record, write_record
from r5walk.rng import SeedScheme, SeedSpec
from r5walk.walks import WalkModel, WalkParams, generate_walk, generate_walk_vectorized

B = SeedScheme.BIG_INT_ARRAY
L = SeedScheme.LEGACY_SCALAR

# Wall-clock budget shared by the four property suites below.
PROPERTY_BUDGET_SECONDS = 10.0
_property_durations: dict[str, float] = {}


def _timed(name):
    class _Timer:
        def __enter__(self):
            self.start = time.perf_counter()

        def __exit__(self, *exc):
            _property_durations[name] = time.perf_counter() - self.start

    return _Timer()


def walk_of(value, model, count=10, x0=0, step=1, scheme=B):
    return generate_walk(
        WalkParams(count=count, x0=x0, step=step, seed=SeedSpec(scheme, value), model=model)
    )


@pytest.mark.acceptance(criterion="seed-42 uniform walk equals [1,0,-1,-2,-1,0,1,0,-1,-2] bit-exactly")
def test_seed42_uniform_walk():
    expected = [1, 0, -1, -2, -1, 0, 1, 0, -1, -2]
    assert walk_of(42, WalkModel.UNIFORM) == expected
    assert walk_of(42, WalkModel.UNIFORM_VECTORIZED) == expected


@pytest.mark.acceptance(
    criterion="seed-1 walks: choice-legacy [-1,0,1,0,-1,-2,-1,0,-1,-2], choice-modern [-1,-2,-1,-2,-1,0,1,2,1,0]"
)
def test_seed1_choice_walks():
    assert walk_of(1, WalkModel.CHOICE_LEGACY) == [-1, 0, 1, 0, -1, -2, -1, 0, -1, -2]
    assert walk_of(1, WalkModel.CHOICE_MODERN) == [-1, -2, -1, -2, -1, 0, 1, 2, 1, 0]


@pytest.mark.acceptance(criterion="seed-439 choice-modern walk is ten consecutive +1 steps")
def test_seed439_modern_walk():
    assert walk_of(439, WalkModel.CHOICE_MODERN) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]


@pytest.mark.acceptance(criterion="seed-11235813 choice-legacy walk equals [-1,0,-1,0,-1,0,-1,0,1,2]")
def test_seed11235813_legacy_walk():
    assert walk_of(11235813, WalkModel.CHOICE_LEGACY) == [-1, 0, -1, 0, -1, 0, -1, 0, 1, 2]


@pytest.mark.acceptance(
    criterion="oracle conformance: committed fixtures for seeds {0,1,2,42,439,12345,2^64+1}, 1000 u32 + 1000 doubles bit-exact"
)
def test_oracle_conformance_committed_fixtures():
    # Reads the committed fixture files only; the harvesting package is
    # neither imported nor required.
    seeds = ["0", "1", "2", "42", "439", "12345", "18446744073709551617"]
    for seed_text in seeds:
        path = FIXTURES_DIR / f"oracleA-seed{seed_text}.json"
        assert path.is_file(), f"missing committed fixture {path.name}"
        fx = load_fixture(path.name)
        spec = SeedSpec(B, int(seed_text))
        state = rng.seed(spec)
        assert [rng.next_u32(state) for _ in range(1000)] == fx["u32"], seed_text
        state = rng.seed(spec)
        produced = [struct.pack(">d", rng.next_f64(state)).hex() for _ in range(1000)]
        assert produced == fx["f64_hex"], seed_text


@pytest.mark.acceptance(
    criterion="property: walk step law and determinism over 10000 randomized parameter sets"
)
def test_property_step_law_and_determinism_10000():
    rnd = random.Random(0x5EED)
    pool = [0, 1, 2, 42, 439, 12345, 2**64 + 1]
    pool += [rnd.getrandbits(32) for _ in range(120)]
    pool += [rnd.getrandbits(rnd.randrange(33, 160)) for _ in range(60)]
    pool += [rnd.getrandbits(8) for _ in range(60)]
    models = list(WalkModel)
    with _timed("step-law-determinism"):
        for _ in range(10_000):
            value = rnd.choice(pool)
            scheme = L if value < 2**32 and rnd.random() < 0.3 else B
            params = WalkParams(
                count=rnd.randrange(0, 33),
                x0=rnd.randrange(-1000, 1001),
                step=rnd.randrange(1, 8),
                seed=SeedSpec(scheme, value),
                model=rnd.choice(models),
            )
            walk = generate_walk(params)
            assert generate_walk(params) == walk
            assert len(walk) == params.count
            previous = params.x0
            for position in walk:
                assert abs(position - previous) == params.step
                previous = position


@pytest.mark.acceptance(
    criterion="property: vectorized walk equals scalar uniform walk for 100 seeds x count 1000"
)
def test_property_vectorized_equals_scalar():
    with _timed("vectorized-equivalence"):
        for value in range(100):
            scalar = walk_of(value, WalkModel.UNIFORM, count=1000)
            vectorized = walk_of(value, WalkModel.UNIFORM_VECTORIZED, count=1000)
            assert vectorized == scalar, f"seed {value}"


_text = st.text(min_size=1, max_size=16)

_record_strategy = st.builds(
    ResultRecord,
    schema_version=st.just(1),
    data=st.lists(st.integers(-10**12, 10**12), max_size=50),
    parameters=st.builds(
        lambda count, x0, step, value, model: WalkParams(
            count=count, x0=x0, step=step, seed=SeedSpec(B, value), model=model
        ),
        count=st.integers(0, 500),
        x0=st.integers(-10**9, 10**9),
        step=st.integers(1, 10**6),
        value=st.integers(0, 2**128),
        model=st.sampled_from(list(WalkModel)),
    ),
    timestamp=st.text(max_size=40),
    revision=st.none() | st.from_regex(r"[0-9a-f]{40}", fullmatch=True),
    dirty=st.booleans(),
    system=st.builds(
        EnvFingerprint,
        os_name=_text,
        os_version=_text,
        architecture=_text,
        artifact_name=_text,
        artifact_version=_text,
        toolchain=_text,
    ),
)


@pytest.mark.acceptance(criterion="property: record serialization roundtrip over randomized records")
def test_property_record_roundtrip(tmp_path):
    out = tmp_path / "record.json"

    @settings(max_examples=150, deadline=None)
    @given(_record_strategy)
    def check(record):
        write_record(record, out)
        loaded = read_record(out)
        assert loaded == record
        first = out.read_bytes()
        write_record(loaded, out)
        assert out.read_bytes() == first

    with _timed("record-roundtrip"):
        check()


@pytest.mark.acceptance(
    criterion="property: export/import preserves the output stream at random cut points"
)
def test_property_state_roundtrip_at_cut_points():
    rnd = random.Random(1729)
    cuts = [0, 1, 623, 624, 625, 1247, 1248] + [rnd.randrange(0, 2000) for _ in range(93)]
    with _timed("state-cut-points"):
        for i, cut in enumerate(cuts):
            spec = SeedSpec(B, rnd.getrandbits(40)) if i % 2 else SeedSpec(L, rnd.getrandbits(32))
            state = rng.seed(spec)
            for _ in range(cut):
                rng.next_u32(state)
            words, cursor = rng.export_state(state)
            resumed = rng.import_state(words, cursor)
            expected_u32 = [rng.next_u32(state) for _ in range(50)]
            expected_f64 = [rng.next_f64(state) for _ in range(25)]
            assert [rng.next_u32(resumed) for _ in range(50)] == expected_u32
            assert [rng.next_f64(resumed) for _ in range(25)] == expected_f64


@pytest.mark.acceptance(
    criterion=f"property suites complete within {PROPERTY_BUDGET_SECONDS:.0f} s total"
)
def test_property_suites_within_budget():
    if len(_property_durations) < 4:
        pytest.skip("property suites did not all run in this session")
    total = sum(_property_durations.values())
    assert total < PROPERTY_BUDGET_SECONDS, _property_durations


@pytest.mark.acceptance(criterion="protocol: dirty-tree run exits 1 and writes no output file")
def test_protocol_dirty_tree_gate(clean_repo, capsys):
    (clean_repo / "tracked.txt").write_text("v2\n", encoding="utf-8")
    code = main(["run", "--out", "blocked.json"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out == "Repository is dirty, please commit first\n"
    assert not (clean_repo / "blocked.json").exists()


@pytest.mark.acceptance(criterion="protocol: run then replicate exits 0")
def test_protocol_run_replicate_closure(clean_repo, capsys):
    assert main(["run", "--seed", "42", "--out", "results.json"]) == 0
    assert main(["replicate", "results.json"]) == 0


@pytest.mark.acceptance(
    criterion="protocol: replicating a hand-corrupted record exits 2 with the divergence index"
)
def test_protocol_corrupted_record_divergence(clean_repo, capsys):
    assert main(["run", "--seed", "42", "--out", "results.json"]) == 0
    path = clean_repo / "results.json"
    obj = json.loads(path.read_text())
    obj["data"][7] -= 2
    path.write_text(json.dumps(obj), encoding="utf-8")
    capsys.readouterr()
    code = main(["replicate", "results.json"])
    captured = capsys.readouterr()
    assert code == 2
    assert "index 7" in captured.out
