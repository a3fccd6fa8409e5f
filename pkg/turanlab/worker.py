"""
Worker pool for shardable sweeps
Splits a search into independent shards, runs them inline or on a process
pool, and hands the results back in shard order for deterministic reduction
"""

import logging
from multiprocessing import Pool, cpu_count
from typing import Callable, List, Sequence

from turanlab.config import resolve_threads

logger = logging.getLogger(__name__)


class ShardWorker:
    """Runs shard functions with a fixed number of worker processes"""

    def __init__(self, threads=None):
        """
        Initialize the worker

        Args:
            threads (int): Worker processes; 1 runs everything in-process,
                None reads TURANLAB_THREADS
        """
        self.threads = max(1, min(resolve_threads(threads), cpu_count() or 1))

    def map(self, func: Callable, shards: Sequence) -> List:
        """
        Apply func to every shard

        Args:
            func: Module-level function (must be picklable)
            shards: Shard arguments

        Returns:
            list: Results in shard order
        """
        shards = list(shards)
        if self.threads == 1 or len(shards) <= 1:
            return [func(shard) for shard in shards]
        processes = min(self.threads, len(shards))
        logger.info(f"Running {len(shards)} shards on {processes} processes")
        with Pool(processes=processes) as pool:
            return pool.map(func, shards)


def split_evenly(items: Sequence, pieces: int) -> List[list]:
    """Split items into at most pieces contiguous chunks, keeping order"""
    items = list(items)
    if not items:
        return []
    pieces = max(1, min(pieces, len(items)))
    size, extra = divmod(len(items), pieces)
    chunks = []
    start = 0
    for i in range(pieces):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return chunks
