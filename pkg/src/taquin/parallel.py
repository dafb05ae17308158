"""Deterministic block-parallel execution.

Work is cut into fixed-size blocks computed serially in index order; workers
only decide which blocks run where, and results are merged in block order.
Outputs are therefore byte-identical for any worker count, which the harness
treats as a contract.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

BLOCK_SIZE = 64


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, explicit)
    raw = os.environ.get("TAQUIN_WORKERS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def blocks(total: int, size: int = BLOCK_SIZE) -> list[tuple[int, int]]:
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def map_blocks(fn, args_list, workers: int | None = None) -> list:
    """fn over args_list, results in input order."""
    n = worker_count(workers)
    if n <= 1 or len(args_list) <= 1:
        return [fn(a) for a in args_list]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, args_list))
