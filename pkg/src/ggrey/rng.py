"""Replica-stream seeding.

Monte Carlo work is cut into fixed-size blocks; block ``b`` of a run seeded
with ``seed`` always draws from ``SeedSequence(seed, spawn_key=(b,))``. The
output therefore depends only on (seed, block size, total count), never on
how many workers process the blocks.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

BLOCK_SIZE = 8192


def replica_rng(seed, index):
    """Independent generator for replica/block ``index`` of run ``seed``."""
    if seed < 0:
        raise ValueError("seed must be a nonnegative integer")
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(index),)))


def blocks(total, block_size=BLOCK_SIZE):
    """Yield (block_index, start, stop) covering range(total)."""
    for b, start in enumerate(range(0, total, block_size)):
        yield b, start, min(start + block_size, total)


def map_blocks(fn, total, seed, workers=None, block_size=BLOCK_SIZE):
    """Run ``fn(rng, count)`` per block and return the results in block order."""
    jobs = [(replica_rng(seed, b), stop - start) for b, start, stop in blocks(total, block_size)]
    if workers is None or workers <= 1 or len(jobs) == 1:
        return [fn(r, m) for r, m in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))
