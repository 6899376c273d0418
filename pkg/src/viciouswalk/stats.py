"""Random fixed-point-free involutions and the rightmost-walker statistic.

``L`` is half the longest decreasing subsequence of a uniform random
fixed-point-free involution of ``{1..2N}``; through the bijection it is the
maximum displacement of the rightmost walker in a uniform random
configuration of the second class.  Its centred and scaled version
``chi = (L - sqrt(2N)) / (0.5 (2N)^(1/6))`` tends to the GOE Tracy-Widom law.

Randomness comes from :class:`numpy.random.Generator` (PCG64).  Batches split
across workers draw from ``SeedSequence(seed).spawn(jobs)``, so results are
reproducible for a fixed ``(seed, jobs)`` pair.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .bijection import Involution
from .counting import count_brute, double_factorial
from .tableaux import lds


def _rng(rng) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_pairing(N: int, rng) -> np.ndarray:
    """0-indexed partner array of a uniform perfect matching of ``2N`` points.

    Equivalent in law to pairing the smallest free element with a uniform
    choice among the others and recursing: the consecutive pairs of a uniform
    shuffle form a uniform matching.
    """
    perm = _rng(rng).permutation(2 * N)
    partner = np.empty(2 * N, dtype=np.int64)
    partner[perm[0::2]] = perm[1::2]
    partner[perm[1::2]] = perm[0::2]
    return partner


def sample_involution(N: int, rng) -> Involution:
    if N < 1:
        raise ValueError("N must be >= 1")
    return Involution(tuple((random_pairing(N, rng) + 1).tolist()))


def sample_L(N: int, rng) -> int:
    """Half the longest decreasing subsequence of a uniform random involution."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return lds((random_pairing(N, rng) + 1).tolist()) // 2


def chi(N: int, L):
    """``(L - sqrt(2N)) / (0.5 * (2N)**(1/6))``; vectorised over ``L``."""
    two_n = 2.0 * N
    out = (np.asarray(L, dtype=float) - np.sqrt(two_n)) / (0.5 * two_n ** (1.0 / 6.0))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class SampleBatch:
    N: int
    seed: int
    values: np.ndarray
    chis: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.int64)
        if values.size and (values.min() < 1 or values.max() > self.N):
            raise ValueError("sampled L outside [1, N]")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "chis", chi(self.N, values) if values.size else np.empty(0))

    def __len__(self) -> int:
        return int(self.values.size)


def _draw(N: int, n: int, seed_seq: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.default_rng(seed_seq)
    return np.fromiter((sample_L(N, rng) for _ in range(n)), dtype=np.int64, count=n)


def sample_batch(N: int, n: int, seed: int = 0, jobs: int = 1) -> SampleBatch:
    """``n`` independent draws of ``L``, split evenly over ``jobs`` workers."""
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    children = np.random.SeedSequence(seed).spawn(jobs)
    sizes = [n // jobs + (k < n % jobs) for k in range(jobs)]
    if jobs == 1:
        parts = [_draw(N, sizes[0], children[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_draw, [N] * jobs, sizes, children))
    return SampleBatch(N, seed, np.concatenate(parts) if parts else np.empty(0, dtype=np.int64))


def exact_L_distribution(N: int) -> dict[int, Fraction]:
    """``P(L = p)`` for ``p = 1..N`` from the brute-force counts."""
    total = double_factorial(2 * N - 1)
    cdf = [Fraction(count_brute(N, p).value, total) for p in range(N + 1)]
    return {p: cdf[p] - cdf[p - 1] for p in range(1, N + 1)}


class EmpiricalCdf:
    """Right-continuous step function of a sample."""

    def __init__(self, samples):
        x = np.sort(np.asarray(samples, dtype=float).ravel())
        if x.size == 0:
            raise ValueError("empty sample")
        self.points, counts = np.unique(x, return_counts=True)
        self.heights = np.cumsum(counts) / x.size
        self.n = x.size

    def __call__(self, x):
        idx = np.searchsorted(self.points, x, side="right")
        h = np.concatenate(([0.0], self.heights))
        return h[idx]

    def left_limit(self, x):
        idx = np.searchsorted(self.points, x, side="left")
        h = np.concatenate(([0.0], self.heights))
        return h[idx]


def ks_distance(a: EmpiricalCdf, b: Callable) -> float:
    """Sup-distance between an empirical CDF and ``b``.

    Both one-sided gaps are taken at each jump of ``a``.  ``b`` is treated as
    continuous unless it has a ``left_limit`` method (another step function).
    """
    x = a.points
    fb = np.asarray(b(x), dtype=float)
    fb_left = np.asarray(b.left_limit(x), dtype=float) if hasattr(b, "left_limit") else fb
    fa_left = np.concatenate(([0.0], a.heights[:-1]))
    return float(max(np.max(np.abs(a.heights - fb)), np.max(np.abs(fa_left - fb_left))))
