"""Chunked sweeps, run inline or across worker processes."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from math import factorial
from typing import Optional, TypeVar

from tqdm import tqdm

from directed_cqsf.config.schema import EngineSettings
from directed_cqsf.utils.errors import BudgetExceededError

ChunkT = TypeVar("ChunkT")
ResultT = TypeVar("ResultT")


def check_factorial_budget(n: int, settings: EngineSettings) -> None:
    """Refuse S_n sweeps for n above ``settings.budget_factorial``."""
    if n > settings.budget_factorial:
        raise BudgetExceededError(
            f"n={n} exceeds the permutation budget of {settings.budget_factorial} "
            f"({factorial(n)} permutations); raise --budget-factorial to allow it",
            requested=n,
            budget=settings.budget_factorial,
        )


def _run_chunk(
    worker: Callable[[ChunkT], ResultT], position: int, chunk: ChunkT
) -> tuple[int, ResultT]:
    return position, worker(chunk)


def run_sweep(
    worker: Callable[[ChunkT], ResultT],
    chunks: Sequence[ChunkT],
    settings: Optional[EngineSettings] = None,
    desc: str = "Sweeping",
) -> list[ResultT]:
    """
    Apply ``worker`` to every chunk and return the results in chunk order.

    With ``settings.jobs > 1`` chunks are submitted to a process pool and
    collected as they finish, so ``worker`` and the chunks must pickle
    (module-level functions, or functools.partial over them).

    Args:
        worker: Function of one chunk
        chunks: Independent pieces of the sweep
        settings: Engine settings (worker count, progress bars)
        desc: Progress bar label

    Returns:
        One result per chunk, in the order of ``chunks``
    """
    settings = settings or EngineSettings()
    disable = not settings.progress
    results: dict[int, ResultT] = {}

    if settings.jobs == 1 or len(chunks) <= 1:
        for position, chunk in enumerate(
            tqdm(chunks, desc=desc, unit="chunk", leave=False, disable=disable)
        ):
            results[position] = worker(chunk)
        return [results[i] for i in range(len(chunks))]

    with ProcessPoolExecutor(max_workers=settings.jobs) as executor:
        futures = [
            executor.submit(_run_chunk, worker, position, chunk)
            for position, chunk in enumerate(chunks)
        ]
        with tqdm(total=len(chunks), desc=desc, unit="chunk", disable=disable) as pbar:
            for future in as_completed(futures):
                position, result = future.result()
                results[position] = result
                pbar.update(1)
                pbar.set_postfix({"done": f"{len(results)}/{len(chunks)}"})

    # Reassemble in submission order
    return [results[i] for i in range(len(chunks))]
