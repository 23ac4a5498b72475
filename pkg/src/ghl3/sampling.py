"""Seeded, counter-based random variate generation by inverse transform.

The uniform source is a stateless 64-bit mix (splitmix-style) of
seed + (counter+1) * golden, so draw i depends only on (seed, i): streams
can be resumed, split by seed, and give bit-identical sequences on every
platform. Uniforms are built from the top 52 bits as (k + 0.5) * 2^-52,
which keeps every draw strictly inside (0, 1) using exact float
arithmetic. Variates are then exactly quantile(u) -- no rejection step.

A stream is single-owner mutable state; concurrent sampling needs
independent streams with distinct seeds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distribution import GeneralizedHalfLogistic
from .order_statistics import OrderIndex

__all__ = ["RngStream", "sample", "sample_order_stat"]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_2_POW_NEG52 = 2.0**-52


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * _MIX1 & _MASK64
    z = (z ^ (z >> 27)) * _MIX2 & _MASK64
    return z ^ (z >> 31)


@dataclass
class RngStream:
    """Position `counter` in the uniform stream identified by `seed`."""

    seed: int
    counter: int = 0

    def __post_init__(self) -> None:
        if self.seed != int(self.seed) or not (0 <= self.seed <= _MASK64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.counter != int(self.counter) or self.counter < 0:
            raise ValueError(f"counter must be a nonnegative integer, got {self.counter!r}")

    def next_uniform(self) -> float:
        """Next uniform in (0, 1) exclusive; advances the counter by one."""
        k = _mix64((self.seed + (self.counter + 1) * _GOLDEN) & _MASK64)
        self.counter += 1
        return ((k >> 12) + 0.5) * _2_POW_NEG52


def sample(d: GeneralizedHalfLogistic, stream: RngStream, count: int) -> list[float]:
    """Draw `count` variates as quantile(u) over successive uniforms u.

    Fully reproducible from the stream's (seed, counter); advances the
    counter by count.
    """
    if count != int(count) or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    return [d.quantile(stream.next_uniform()) for _ in range(int(count))]


def sample_order_stat(
    d: GeneralizedHalfLogistic, idx: OrderIndex, stream: RngStream, batches: int
) -> list[float]:
    """Simulate the r-th order statistic: each output is the r-th smallest
    of n fresh draws. Consumes n uniforms per batch."""
    if batches != int(batches) or batches < 1:
        raise ValueError(f"batches must be a positive integer, got {batches!r}")
    out = []
    for _ in range(int(batches)):
        draws = sorted(d.quantile(stream.next_uniform()) for _ in range(idx.n))
        out.append(draws[idx.r - 1])
    return out
