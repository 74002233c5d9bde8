from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm


Task = TypeVar("Task")
Partial = TypeVar("Partial")


def reduce_blocks(
    worker: Callable[[Task], Partial],
    tasks: Sequence[Task],
    threads: int = 1,
    show_progress: bool = False,
    desc: Optional[str] = None,
) -> List[Partial]:
    r"""
    Evaluate ``worker`` on every task of a partitioned enumeration and return the partial
    results in task order, regardless of the order in which workers finish.

    Extended Summary
    ----------------
    Callers combine the returned partials with an associative and commutative reduction (a
    ``Counter`` update, a series sum), always left to right. A parallel pass therefore yields
    exactly the table of a sequential pass. ``worker`` must be a module-level function so it
    can be shipped to worker processes.

    Parameters
    ----------
    worker: Callable[[Task], Partial]
        Pure function evaluated once per task.
    tasks: Sequence[Task]
        Disjoint blocks of the enumeration space.
    threads: int, optional (default = 1)
        Number of worker processes. ``1`` evaluates in-process.
    show_progress: bool, optional (default = False)
        Whether to show a ``tqdm`` bar counting finished blocks.
    """
    if threads < 1:
        raise ValueError(f"Number of workers must be at least 1, got {threads}.")

    partials: List[Optional[Partial]] = [None] * len(tasks)
    with tqdm(total=len(tasks), desc=desc, disable=not show_progress) as progress:
        if threads == 1 or len(tasks) <= 1:
            for index, task in enumerate(tasks):
                partials[index] = worker(task)
                progress.update(1)
        else:
            with ProcessPoolExecutor(max_workers=threads) as executor:
                futures = {executor.submit(worker, t): index for index, t in enumerate(tasks)}
                for future in as_completed(futures):
                    partials[futures[future]] = future.result()
                    progress.update(1)

    return partials  # type: ignore


def parse_int_list(text: str) -> Tuple[int, ...]:
    r"""
    Parse a comma-separated integer list as given on the command line. The literal ``none``
    denotes the empty list, so that an empty set is distinguishable from an omitted flag.
    """
    text = text.strip()
    if text.lower() == "none":
        return ()
    try:
        return tuple(int(token) for token in text.split(","))
    except ValueError:
        raise ValueError(f"Expected comma-separated integers or 'none', got '{text}'.")
