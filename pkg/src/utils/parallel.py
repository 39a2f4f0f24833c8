
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_tasks(fn: Callable[[T], R], tasks: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Apply ``fn`` to every task, optionally on a process pool.

    Results always come back in task order, so reductions over them are
    identical to the sequential run.

    Parameters
    ----------
    fn : callable
        A module-level (picklable) function.
    tasks : iterable
        Arguments for ``fn``; each must be picklable when ``jobs > 1``.
    jobs : int, optional
        Number of worker processes. The default is 1 (run in-process).

    Returns
    -------
    list
        ``[fn(t) for t in tasks]``.
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]

    workers = min(jobs, len(tasks))
    logger.debug(f"Running {len(tasks)} sub-searches on {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))
