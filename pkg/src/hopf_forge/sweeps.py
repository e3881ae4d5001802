"""Chunked evaluation of verification sweeps.

Results come back in input order whatever the worker count, so reports do
not depend on scheduling.  The worker count is read from HOPF_FORGE_THREADS
(0 or unset means one worker per CPU).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

ENV_THREADS = "HOPF_FORGE_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_THREADS, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_THREADS} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{ENV_THREADS} must be >= 0")
    return n or (os.cpu_count() or 1)


def ordered_map(fn, items):
    items = list(items)
    workers = min(worker_count(), max(len(items), 1))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def first_failure(check, items):
    """Run ``check`` over items; return (number checked, first non-None witness in input order)."""
    results = ordered_map(check, items)
    for r in results:
        if r is not None:
            return len(results), r
    return len(results), None
