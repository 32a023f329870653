"""Bit-exact MT19937 generator with two seeding schemes and three sampling semantics.

The generator state is 624 unsigned 32-bit words plus a cursor. Two seeding
schemes are supported:

* ``BIG_INT_ARRAY``, the CPython standard-library scheme: an arbitrary
  precision non-negative integer is split into little-endian 32-bit words and
  fed to the array-initialization procedure.
* ``LEGACY_SCALAR``, the NumPy legacy ``RandomState`` scheme: a single
  32-bit seed run through the scalar initialization recurrence.

The same seed integer produces different word arrays under the two schemes,
which is exactly the replication trap this package exists to demonstrate.
On top of raw 32-bit draws sit three sampling semantics: 53-bit doubles
(``next_f64``/``uniform``), the floor-of-double choice used by old runtimes
(``choice_legacy``), and the getrandbits rejection-sampling choice used by
modern runtimes (``choice_modern``). All are pinned bit-for-bit by the
committed oracle fixtures under ``fixtures/``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DomainError, SeedDomainError, StateFormatError

STATE_SIZE = 624

_MATRIX_A = 0x9908B0DF
_UPPER_MASK = 0x80000000
_LOWER_MASK = 0x7FFFFFFF
_WORD_MASK = 0xFFFFFFFF

# Tempering constants live at module level so the self-test sensitivity
# check can monkeypatch them; the draw path reads them on every call.
TEMPERING_MASK_B = 0x9D2C5680
TEMPERING_MASK_C = 0xEFC60000

_SCALAR_INIT_MULT = 1812433253
_ARRAY_INIT_SEED = 19650218
_ARRAY_INIT_MULT_1 = 1664525
_ARRAY_INIT_MULT_2 = 1566083941

_F64_SCALE = 1.0 / 9007199254740992.0  # 2**-53


class SeedScheme(Enum):
    """How a seed integer is interpreted when initializing the state."""

    BIG_INT_ARRAY = "bigint"
    LEGACY_SCALAR = "legacy"


@dataclass(frozen=True)
class SeedSpec:
    """A seeding scheme plus a non-negative integer seed value."""

    scheme: SeedScheme
    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise SeedDomainError(f"seed value must be an integer, got {self.value!r}")
        if self.value < 0:
            raise SeedDomainError(f"seed value must be non-negative, got {self.value}")
        if self.scheme is SeedScheme.LEGACY_SCALAR and self.value >= 2**32:
            raise SeedDomainError(
                f"legacy scalar seeds must be below 2**32, got {self.value}"
            )


@dataclass(eq=False)
class MtState:
    """Generator state: 624 words plus the index of the next word to temper.

    ``cursor == STATE_SIZE`` means the next draw must twist first; every
    seeding operation leaves the state in that position.
    """

    words: np.ndarray  # uint32, shape (STATE_SIZE,)
    cursor: int


def _key_words(value: int) -> tuple[int, ...]:
    # Little-endian 32-bit decomposition; zero still contributes one word.
    if value == 0:
        return (0,)
    words = []
    while value:
        words.append(value & _WORD_MASK)
        value >>= 32
    return tuple(words)


def _scalar_init(seed_value: int) -> list[int]:
    mt = [0] * STATE_SIZE
    mt[0] = prev = seed_value & _WORD_MASK
    for i in range(1, STATE_SIZE):
        prev = (_SCALAR_INIT_MULT * (prev ^ (prev >> 30)) + i) & _WORD_MASK
        mt[i] = prev
    return mt


# The array-initialization procedure always starts from the same scalar
# expansion of _ARRAY_INIT_SEED, so that base state is computed once.
_ARRAY_INIT_BASE = tuple(_scalar_init(_ARRAY_INIT_SEED))


def _array_init(key: tuple[int, ...]) -> list[int]:
    mt = list(_ARRAY_INIT_BASE)
    key_length = len(key)
    i, j = 1, 0
    prev = mt[0]
    for _ in range(max(STATE_SIZE, key_length)):
        v = ((mt[i] ^ ((prev ^ (prev >> 30)) * _ARRAY_INIT_MULT_1 & _WORD_MASK)) + key[j] + j) & _WORD_MASK
        mt[i] = prev = v
        i += 1
        j += 1
        if i >= STATE_SIZE:
            mt[0] = prev = mt[STATE_SIZE - 1]
            i = 1
        if j >= key_length:
            j = 0
    for _ in range(STATE_SIZE - 1):
        v = ((mt[i] ^ ((prev ^ (prev >> 30)) * _ARRAY_INIT_MULT_2 & _WORD_MASK)) - i) & _WORD_MASK
        mt[i] = prev = v
        i += 1
        if i >= STATE_SIZE:
            mt[0] = prev = mt[STATE_SIZE - 1]
            i = 1
    mt[0] = 0x80000000  # guarantees a non-zero state
    return mt


@lru_cache(maxsize=1024)
def _seeded_words(scheme: SeedScheme, value: int) -> np.ndarray:
    # Pure function of (scheme, value); the cached array is frozen and
    # copied per state, so sharing is invisible to callers.
    if scheme is SeedScheme.BIG_INT_ARRAY:
        mt = _array_init(_key_words(value))
    else:
        mt = _scalar_init(value)
    words = np.array(mt, dtype=np.uint32)
    words.setflags(write=False)
    return words


def seed(spec: SeedSpec) -> MtState:
    """Build a deterministic generator state from a seed specification."""
    if not isinstance(spec, SeedSpec):
        raise SeedDomainError(f"expected a SeedSpec, got {spec!r}")
    return MtState(words=_seeded_words(spec.scheme, spec.value).copy(), cursor=STATE_SIZE)


def _twist(mt: np.ndarray) -> None:
    # In-place block update. The sequential rule reads some already-updated
    # words: element i takes word i+397 (mod 624), which for i >= 227 was
    # rewritten earlier in the same pass. Splitting at 227 and 454 makes
    # every source slice final before it is read, so the staged version is
    # exactly the sequential one (checked against a per-word reference in
    # the test suite, and transitively by the oracle fixtures).
    matrix = np.uint32(_MATRIX_A)
    upper = np.uint32(_UPPER_MASK)
    lower = np.uint32(_LOWER_MASK)
    one = np.uint32(1)

    def mix(lo: int, hi: int, src: np.ndarray) -> None:
        y = (mt[lo:hi] & upper) | (mt[lo + 1 : hi + 1] & lower)
        mt[lo:hi] = src ^ (y >> one) ^ (matrix * (y & one))

    mix(0, 227, mt[397:624])
    mix(227, 454, mt[0:227])
    mix(454, 623, mt[227:396])
    y = (int(mt[623]) & _UPPER_MASK) | (int(mt[0]) & _LOWER_MASK)
    mt[623] = int(mt[396]) ^ (y >> 1) ^ (_MATRIX_A if y & 1 else 0)


def next_u32(state: MtState) -> int:
    """Return the next tempered 32-bit output and advance the cursor."""
    if state.cursor >= STATE_SIZE:
        _twist(state.words)
        state.cursor = 0
    y = int(state.words[state.cursor])
    state.cursor += 1
    y ^= y >> 11
    y ^= (y << 7) & TEMPERING_MASK_B
    y ^= (y << 15) & TEMPERING_MASK_C
    return y ^ (y >> 18)


def next_f64(state: MtState) -> float:
    """Return a 53-bit-precision double in [0, 1), consuming two 32-bit draws."""
    a = next_u32(state) >> 5
    b = next_u32(state) >> 6
    # (a << 26) + b < 2**53, so both the int-to-float conversion and the
    # scaling are exact.
    return ((a << 26) + b) * _F64_SCALE


def uniform(state: MtState, a: float, b: float) -> float:
    """Return a + (b - a) * next_f64(state); bounds must be finite."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"uniform bounds must be finite, got ({a!r}, {b!r})")
    return a + (b - a) * next_f64(state)


def choice_legacy(state: MtState, n: int) -> int:
    """Index in [0, n) via floor(next_f64 * n), the pre-rejection semantics.

    Consumes exactly one double (two 32-bit draws) regardless of n.
    """
    if n < 1:
        raise DomainError(f"choice requires n >= 1, got {n}")
    # int() truncation equals floor here because the operand is non-negative.
    return int(next_f64(state) * n)


def getrandbits(state: MtState, k: int) -> int:
    """Return the top k bits of the next 32-bit output, 1 <= k <= 32."""
    if not 1 <= k <= 32:
        raise DomainError(f"getrandbits supports 1 <= k <= 32, got {k}")
    return next_u32(state) >> (32 - k)


def choice_modern(state: MtState, n: int) -> int:
    """Index in [0, n) via rejection sampling over getrandbits.

    Draws k = bit_length(n) bits and retries while the value is >= n, the
    semantics of modern runtime choice; draw consumption is variable (and
    n == 1 still consumes draws until a zero bit arrives).
    """
    if n < 1:
        raise DomainError(f"choice requires n >= 1, got {n}")
    if n >= 2**32:
        raise DomainError(f"choice supports n < 2**32, got {n}")
    k = n.bit_length()
    r = getrandbits(state, k)
    while r >= n:
        r = getrandbits(state, k)
    return r


def export_state(state: MtState) -> tuple[list[int], int]:
    """Return a faithful (words, cursor) copy without touching the state."""
    return state.words.tolist(), state.cursor


def import_state(words, cursor: int) -> MtState:
    """Rebuild a generator state from 624 words plus a cursor.

    The imported generator continues exactly as the one that exported the
    values; in particular a freshly seeded word array imported with cursor
    624 reproduces that seed's whole output stream.
    """
    try:
        length = len(words)
    except TypeError as exc:
        raise StateFormatError(f"state words must be a sequence, got {words!r}") from exc
    if length != STATE_SIZE:
        raise StateFormatError(f"state must hold exactly {STATE_SIZE} words, got {length}")
    try:
        array = np.array(words, dtype=np.uint32)
    except (OverflowError, ValueError, TypeError) as exc:
        raise StateFormatError(f"state words must be integers in [0, 2**32): {exc}") from exc
    # Catches lossy conversions (floats, etc.) that numpy would quietly truncate.
    if not np.array_equal(array, np.asarray(words)):
        raise StateFormatError("state words must be integers in [0, 2**32)")
    if not isinstance(cursor, int) or isinstance(cursor, bool) or not 0 <= cursor <= STATE_SIZE:
        raise StateFormatError(f"cursor must be an integer in [0, {STATE_SIZE}], got {cursor!r}")
    return MtState(words=array, cursor=cursor)
