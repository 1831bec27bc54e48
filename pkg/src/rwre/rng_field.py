"""Counter-based space-time randomness.

All simulations read three kinds of randomness: an i.i.d. uniform field
indexed by lattice points (x, n), auxiliary uniform sequences, and
Poisson jump clocks.  Each value is a pure function of
(master seed, stream, replica, index), computed by hashing the key words
through a splitmix-style 64-bit finalizer.  There is no generator state,
so values can be produced lazily, in any order, from any number of
workers, and two runs with the same key agree bit for bit.

The scalar and vectorized paths share the same arithmetic mod 2**64;
``tests/test_rng.py`` pins their equality.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MULT_A = 0xBF58476D1CE4E5B9
_MULT_B = 0x94D049BB133111EB
# one fixed salt per stream keeps the streams statistically independent
_STREAM_SALT = {
    1: 0x243F6A8885A308D3,  # EnvField
    2: 0x13198A2E03707344,  # JumpField
    3: 0xA4093822299F31D0,  # AuxUniform
    4: 0x082EFA98EC4E6C89,  # PoissonClock
}


class Stream(enum.IntEnum):
    """Independent sub-streams of the master seed."""

    EnvField = 1
    JumpField = 2
    AuxUniform = 3
    PoissonClock = 4


@dataclass(frozen=True)
class SeedKey:
    """Addresses one randomness stream of one experiment replica.

    ``reflected`` re-indexes the field through x -> -x; it is produced by
    the walker module's mirror transform and leaves the law unchanged.
    """

    master_seed: int
    stream: Stream
    replica: int = 0
    reflected: bool = False

    def with_replica(self, replica: int) -> "SeedKey":
        return replace(self, replica=replica)

    def with_stream(self, stream: Stream) -> "SeedKey":
        return replace(self, stream=stream)

    def mirrored(self) -> "SeedKey":
        return replace(self, reflected=not self.reflected)


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * _MULT_A & _MASK64
    z = (z ^ (z >> 27)) * _MULT_B & _MASK64
    return z ^ (z >> 31)


def _hash_words(seed: int, w0: int, w1: int, w2: int, w3: int) -> int:
    h = _mix((seed + _GOLDEN) & _MASK64)
    for w in (w0, w1, w2, w3):
        h = _mix(h ^ ((w * _GOLDEN + _MULT_A) & _MASK64))
    return h


def _zigzag(x: int) -> int:
    # injective Z -> N, keeps negative sites addressable
    return 2 * x if x >= 0 else -2 * x - 1


def _mix_np(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MULT_A)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MULT_B)
    return z ^ (z >> np.uint64(31))


def _hash_words_np(seed, w0, w1, w2, w3) -> np.ndarray:
    golden = np.uint64(_GOLDEN)
    mult = np.uint64(_MULT_A)
    h = _mix_np(np.asarray(seed, dtype=np.uint64) + golden)
    for w in (w0, w1, w2, w3):
        w = np.asarray(w, dtype=np.uint64)
        h = _mix_np(h ^ (w * golden + mult))
    return h


def _zigzag_np(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    return np.where(x >= 0, 2 * x, -2 * x - 1).astype(np.uint64)


def _to_unit(bits: int) -> float:
    # top 53 bits; plain division by 2**64 can round up to 1.0
    return (bits >> 11) * 2.0**-53


def uniform_at(key: SeedKey, p: tuple[int, int]) -> float:
    """Uniform variate in [0, 1) attached to lattice point p = (x, n).

    Pure in (key, p): the same arguments always return the same bits.
    Values at distinct points are independent, as are values from keys
    differing in stream or replica.
    """
    x, n = p
    if key.reflected:
        x = -x
    bits = _hash_words(
        key.master_seed & _MASK64,
        _STREAM_SALT[int(key.stream)],
        key.replica & _MASK64,
        _zigzag(x),
        n,
    )
    return _to_unit(bits)


def uniforms_at(key: SeedKey, xs, ns, replicas=None) -> np.ndarray:
    """Vector form of :func:`uniform_at` over arrays of sites and times.

    ``replicas`` optionally overrides the key's replica per element; the
    result equals elementwise scalar calls, bit for bit.
    """
    xs = np.asarray(xs, dtype=np.int64)
    if key.reflected:
        xs = -xs
    if replicas is None:
        rep = np.uint64(key.replica & _MASK64)
    else:
        rep = np.asarray(replicas, dtype=np.uint64)
    bits = _hash_words_np(
        np.uint64(key.master_seed & _MASK64),
        np.uint64(_STREAM_SALT[int(key.stream)]),
        rep,
        _zigzag_np(xs),
        np.asarray(ns, dtype=np.uint64),
    )
    return (bits >> np.uint64(11)) * 2.0**-53


def aux_uniform(key: SeedKey, j: int) -> float:
    """j-th variate of the auxiliary i.i.d. uniform sequence."""
    return uniform_at(key, (j, 0))


def _clock_gaps(key: SeedKey, start: int, count: int) -> np.ndarray:
    # inverse-CDF exponentials on half-step-offset uniforms: the offset
    # keeps every gap strictly positive, so arrival times never tie
    bits = _hash_words_np(
        np.uint64(key.master_seed & _MASK64),
        np.uint64(_STREAM_SALT[int(key.stream)]),
        np.uint64(key.replica & _MASK64),
        _zigzag_np(np.arange(start, start + count, dtype=np.int64)),
        np.uint64(0),
    )
    u = ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    return -np.log(u)


def poisson_times(key: SeedKey, horizon: float) -> np.ndarray:
    """Arrival times in (0, horizon] of a rate-1 Poisson clock.

    Deterministic given the key; gaps are i.i.d. exponential(1), so the
    number of arrivals is Poisson(horizon) in law.
    """
    if not horizon > 0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    block = max(16, int(horizon) + 1)
    times: list[np.ndarray] = []
    total = 0.0
    start = 0
    while True:
        gaps = _clock_gaps(key, start, block)
        t = total + np.cumsum(gaps)
        if t[-1] > horizon:
            times.append(t[t <= horizon])
            break
        times.append(t)
        total = float(t[-1])
        start += block
    return np.concatenate(times) if len(times) > 1 else times[0]


def gamma_variate(key: SeedKey, n: int) -> float:
    """Sum of the clock's first n exponential gaps (the n-th arrival time)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(np.sum(_clock_gaps(key, 0, n)))


def ks_statistic(samples: np.ndarray) -> float:
    """Kolmogorov-Smirnov distance of samples to the uniform [0,1) law."""
    s = np.sort(np.asarray(samples, dtype=np.float64))
    n = len(s)
    grid = np.arange(1, n + 1) / n
    return float(max(np.max(grid - s), np.max(s - (grid - 1.0 / n))))


def ks_threshold(n: int, significance: float = 0.01) -> float:
    """Asymptotic KS critical value; 0.01 and 0.05 levels are supported."""
    coeff = {0.01: 1.6276, 0.05: 1.3581}[significance]
    return coeff / math.sqrt(n)
