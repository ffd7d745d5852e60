"""Scaling benchmark: preprocessing time, query latency and stored words per size."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import numpy as np

from connectivity_oracle import ConnectivityOracle
from utils.config import BenchConfig

from .generators import random_connected

logger = logging.getLogger(__name__)


def _bench_size(n: int, config: BenchConfig, seed: int) -> Dict[str, float]:
    rng = np.random.default_rng(seed)
    graph = random_connected(n, config.edge_factor * n, rng)
    start = time.perf_counter()
    oracle = ConnectivityOracle.preprocess(graph)
    build = time.perf_counter() - start

    latencies = np.empty(config.queries)
    for i in range(config.queries):
        k = int(rng.integers(1, min(3, n - 2) + 1))
        picked = rng.choice(n, size=k + 2, replace=False) + 1
        failures, x, y = picked[:k].tolist(), int(picked[k]), int(picked[k + 1])
        start = time.perf_counter()
        oracle.connected(failures, x, y)
        latencies[i] = time.perf_counter() - start

    words = oracle.table_words()
    row = {
        "n": n,
        "m": graph.m,
        "preprocess_s": round(build, 4),
        "query_median_us": round(float(np.median(latencies)) * 1e6, 2),
        "query_p99_us": round(float(np.percentile(latencies, 99)) * 1e6, 2),
        "table_words": words,
        "words_per_vertex": round(words / n, 2),
    }
    logger.info("bench n=%d: build %.3fs, median query %.1fus, %d words",
                n, build, row["query_median_us"], words)
    return row


def run_bench(config: Optional[BenchConfig] = None) -> dict:
    """
    Benchmark every size of ``config.sizes``.

    The report lists one row per size plus the ratios between consecutive sizes
    of preprocessing time and words per vertex, and the median latency of the
    largest size relative to the smallest. Sizes run on ``config.threads``
    workers, each seeded from ``config.seed`` and its position.
    """
    config = config or BenchConfig()
    sizes = sorted(config.sizes)
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        rows: List[Dict[str, float]] = list(pool.map(
            lambda item: _bench_size(item[1], config, config.seed + item[0]), enumerate(sizes)))
    growth = []
    for small, large in zip(rows, rows[1:]):
        growth.append({
            "from": small["n"],
            "to": large["n"],
            "preprocess_ratio": round(large["preprocess_s"] / max(small["preprocess_s"], 1e-9), 3),
            "words_per_vertex_ratio": round(large["words_per_vertex"] / small["words_per_vertex"], 3),
        })
    return {
        "config": {"sizes": list(config.sizes), "edge_factor": config.edge_factor,
                   "queries": config.queries, "seed": config.seed,
                   "threads": config.threads},
        "rows": rows,
        "growth": growth,
        "latency_ratio": round(rows[-1]["query_median_us"] / max(rows[0]["query_median_us"], 1e-9), 3),
    }
