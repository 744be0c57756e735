"""Deterministic random number generation for reproducible experiments.

The generator is pinned to the bit so that any matrix drawn during a run can
be regenerated later from its recorded 64-bit seed, on any machine and in any
language.  Nothing here depends on a platform RNG.

Bit stream (splitmix64)
    The state advances by the 64-bit constant ``0x9E3779B97F4A7C15`` and each
    output is the new state passed through two xorshift/multiply rounds::

        z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
        z ^= z >> 27;  z *= 0x94D049BB133111EB
        z ^= z >> 31

    All arithmetic is modulo 2**64.

Derived values
    * uniform on [0, 1):   ``(word >> 11) * 2**-53``
    * uniform on (0, 1]:   ``((word >> 11) + 1) * 2**-53``
    * standard normal:     Box-Muller cosine branch,
      ``sqrt(-2 ln u1) * cos(2 pi u2)`` with ``u1`` on (0, 1] and ``u2`` on
      [0, 1).  One normal consumes exactly two words, ``u1`` first.
    * complex standard normal array: all real parts are drawn first in
      row-major order, then all imaginary parts; real and imaginary parts are
      independent standard normals.
    * integer on [lo, hi]: ``lo + word % (hi - lo + 1)``
    * distinct index draws: partial Fisher-Yates over ``range(n)``, one
      integer draw per selected index.

Stream splitting
    ``derive_seed(seed, index)`` equals the ``index``-th splitmix64 output
    for ``seed``, computed in O(1) as ``mix(seed + (index + 1) * GOLDEN)``.
    Experiment runners use it to give every suite and every trial its own
    independent, individually re-creatable stream.
"""
from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

_TWO53 = float(2**53)


def mix64(z: int) -> int:
    """The splitmix64 output function on a single 64-bit word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed for child stream `index`, the index-th splitmix64 output of `seed`."""
    if index < 0:
        raise ValueError("stream index must be non-negative")
    return mix64((seed + (index + 1) * GOLDEN) & _MASK64)


class SplitMix64:
    """splitmix64 stream with vectorized uniform/normal/complex draws."""

    def __init__(self, seed: int):
        self._state = int(seed) & _MASK64

    @property
    def state(self) -> int:
        return self._state

    def next_uint64(self) -> int:
        self._state = (self._state + GOLDEN) & _MASK64
        return mix64(self._state)

    def uint64s(self, count: int) -> np.ndarray:
        """Next `count` outputs as a uint64 array (vectorized scalar recurrence)."""
        if count < 0:
            raise ValueError("count must be non-negative")
        with np.errstate(over="ignore"):
            steps = np.arange(1, count + 1, dtype=np.uint64)
            z = np.uint64(self._state) + steps * np.uint64(GOLDEN)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
            z = z ^ (z >> np.uint64(31))
        self._state = (self._state + count * GOLDEN) & _MASK64
        return z

    def uniforms(self, count: int) -> np.ndarray:
        """`count` doubles uniform on [0, 1)."""
        return (self.uint64s(count) >> np.uint64(11)).astype(np.float64) / _TWO53

    def normals(self, count: int) -> np.ndarray:
        """`count` standard normals (Box-Muller cosine branch, two words each)."""
        words = self.uint64s(2 * count) >> np.uint64(11)
        u1 = (words[0::2].astype(np.float64) + 1.0) / _TWO53
        u2 = words[1::2].astype(np.float64) / _TWO53
        return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)

    def complex_normals(self, shape) -> np.ndarray:
        """Complex array with independent standard normal real/imaginary parts."""
        count = int(np.prod(shape, dtype=np.int64)) if shape else 1
        re = self.normals(count)
        im = self.normals(count)
        return (re + 1j * im).reshape(shape)

    def randint(self, lo: int, hi: int) -> int:
        """Integer uniform on the inclusive range [lo, hi] (modulo method)."""
        if hi < lo:
            raise ValueError(f"empty integer range [{lo}, {hi}]")
        return lo + self.next_uint64() % (hi - lo + 1)

    def choose_distinct(self, count: int, n: int) -> list[int]:
        """`count` distinct indices from range(n), partial Fisher-Yates order."""
        if not 0 <= count <= n:
            raise ValueError(f"cannot choose {count} distinct indices from {n}")
        pool = list(range(n))
        for i in range(count):
            j = self.randint(i, n - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]
