from functools import partial
from typing import Callable, Iterable, NamedTuple, Sequence, TypeVar

import aiometer
import anyio
from anyio import to_thread
from loguru import logger

from core.settings import settings

T = TypeVar("T")


class Chunk(NamedTuple):
    index: int
    start: int
    stop: int


def split_range(total: int, chunk_size: int | None = None) -> list[Chunk]:
    size = chunk_size or settings.chunk_size
    return [
        Chunk(index=i, start=start, stop=min(start + size, total))
        for i, start in enumerate(range(0, total, size))
    ]


async def _call_in_thread(func: Callable[[Chunk], T], chunk: Chunk) -> tuple[int, T]:
    result = await to_thread.run_sync(func, chunk)
    return chunk.index, result


Progress = Callable[[int], None]


async def _run_concurrently(
    func: Callable[[Chunk], T], chunks: Sequence[Chunk], workers: int, progress: Progress | None
) -> list[T]:
    results: dict[int, T] = {}
    async with aiometer.amap(
        partial(_call_in_thread, func),
        chunks,
        max_at_once=workers,
    ) as done:
        async for index, result in done:
            results[index] = result
            if progress is not None:
                progress(chunks[index].stop - chunks[index].start)
            logger.debug(f"Chunk {index + 1}/{len(chunks)} done")
    return [results[i] for i in range(len(chunks))]


def map_chunks(
    func: Callable[[Chunk], T],
    chunks: Iterable[Chunk],
    workers: int | None = None,
    progress: Progress | None = None,
) -> list[T]:
    """
    Run a pure chunk function over every chunk and return the results in
    chunk order, whatever order the workers finished in. progress gets the
    size of each finished chunk, always on the calling thread.
    """
    chunks = list(chunks)
    workers = workers or settings.workers
    if workers <= 1 or len(chunks) <= 1:
        results = []
        for chunk in chunks:
            results.append(func(chunk))
            if progress is not None:
                progress(chunk.stop - chunk.start)
        return results
    return anyio.run(_run_concurrently, func, chunks, workers, progress)


def first_hit(
    func: Callable[[Chunk], T | None],
    chunks: Iterable[Chunk],
    workers: int | None = None,
) -> T | None:
    """
    Each chunk reports its own first hit (or None); the lowest chunk wins,
    so the answer does not depend on the worker count.
    """
    chunks = list(chunks)
    workers = workers or settings.workers
    if workers <= 1:
        for chunk in chunks:
            hit = func(chunk)
            if hit is not None:
                return hit
        return None
    for hit in map_chunks(func, chunks, workers):
        if hit is not None:
            return hit
    return None
