"""Ordered parallel map honoring ``SATAKE_LAB_THREADS``."""

import os
from concurrent.futures import ThreadPoolExecutor

ENV_VAR = "SATAKE_LAB_THREADS"


def thread_count():
    """Worker count from the environment; 0 or unset means automatic."""
    raw = os.environ.get(ENV_VAR, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = min(8, os.cpu_count() or 1)
    return n


def ordered_map(fn, items, threads=None):
    """``[fn(x) for x in items]`` possibly run concurrently; order is preserved."""
    items = list(items)
    n = thread_count() if threads is None else threads
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
