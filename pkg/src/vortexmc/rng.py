"""Reproducible random number streams.

Every stochastic routine in the package draws its noise through a
:class:`RandomSource`, a thin wrapper around numpy's counter-based Philox
bit generator.  A source is identified by ``(algorithm, master_seed,
stream_id)``; the same triple always produces the bit-identical sequence
of draws, and distinct stream ids give statistically independent streams.
Child streams are derived with a splitmix64 mix of the parent stream id,
so independent sub-tasks (per ensemble, per time step, per estimator)
can allocate their own streams deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ALGORITHM = "philox4x64"

_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    """One splitmix64 round, used to derive child stream ids."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class RandomSource:
    """A named, reproducible noise stream.

    Parameters
    ----------
    master_seed : int
        64-bit master seed shared by all streams of one run.
    stream_id : int
        Identifies this stream; distinct ids are independent.
    """

    master_seed: int
    stream_id: int = 0
    algorithm: str = ALGORITHM

    def __post_init__(self):
        if self.algorithm != ALGORITHM:
            raise ValueError(f"unsupported rng algorithm {self.algorithm!r}")

    def generator(self) -> np.random.Generator:
        key = np.array([self.master_seed & _MASK64, self.stream_id & _MASK64],
                       dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def normals(self, shape) -> np.ndarray:
        """Standard normal draws; a pure function of (source, shape)."""
        return self.generator().standard_normal(shape)

    def child(self, index: int) -> "RandomSource":
        """Derive an independent sub-stream, stable under re-runs."""
        mixed = _splitmix64((self.stream_id & _MASK64) ^ _splitmix64(index & _MASK64))
        return RandomSource(self.master_seed, mixed, self.algorithm)


def wiener_increments(source: RandomSource, n_paths: int, n_steps: int,
                      dim: int, dt: float, antithetic: bool = False) -> np.ndarray:
    """Brownian increments of shape (n_paths, n_steps, dim), each ~ N(0, dt).

    With ``antithetic=True`` paths come in (W, -W) pairs: the first half of
    the ensemble is drawn, the second half mirrors it.  ``n_paths`` must be
    even in that case.
    """
    if antithetic:
        if n_paths % 2:
            raise ValueError("antithetic sampling needs an even n_paths")
        half = source.normals((n_paths // 2, n_steps, dim))
        draws = np.concatenate([half, -half], axis=0)
    else:
        draws = source.normals((n_paths, n_steps, dim))
    return draws * np.sqrt(dt)
