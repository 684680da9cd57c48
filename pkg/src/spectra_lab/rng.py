"""Counter-based random streams for reproducible, order-independent sampling.

Every stream is addressed by ``(seed, index, stream)``: a 64-bit experiment
seed, a sample index, and a small stream id that separates logical blocks
(diagonal entries, off-diagonal entries, ...) inside one sample.  Streams are
backed by Philox keyed with ``(seed, index)``, with the stream id placed in
the top counter word, so any sample of any experiment can be regenerated in
isolation and no two streams ever overlap.  Normal variates use numpy's
ziggurat; within a stream, draws are consumed in the documented block order.
"""

from __future__ import annotations

import numpy as np

_U64 = 2**64


def bit_generator(seed: int, index: int, stream: int = 0) -> np.random.Philox:
    """Philox instance for the (seed, index, stream) address."""
    if not 0 <= seed < _U64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    if not 0 <= index < _U64:
        raise ValueError(f"sample index must be an unsigned 64-bit integer, got {index}")
    if not 0 <= stream < _U64:
        raise ValueError(f"stream id must be an unsigned 64-bit integer, got {stream}")
    key = np.array([seed, index], dtype=np.uint64)
    counter = np.array([0, 0, 0, stream], dtype=np.uint64)
    return np.random.Philox(key=key, counter=counter)


def generator(seed: int, index: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(bit_generator(seed, index, stream))


def standard_normal(seed: int, index: int, stream: int, size) -> np.ndarray:
    """Standard normals drawn from the (seed, index, stream) address."""
    return generator(seed, index, stream).standard_normal(size)
