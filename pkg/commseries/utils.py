"""
Utilities
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, Union

# Set up logging
logger = logging.getLogger(__name__)

Word = Tuple[str, ...]
RationalLike = Union[int, Fraction, str]


def to_fraction(value: Any) -> Fraction:
    """
    Convert an int, Fraction, string such as "-5/2", or a sympy QQ element to a Fraction.

    Args:
        value: The value to convert

    Returns:
        The exact rational value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        raise TypeError(f"Cannot convert {value!r} to an exact rational")
    return Fraction(int(numerator), int(denominator))


def format_rational(value: Fraction) -> str:
    """Render a rational as "n" or "n/d"."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_word(word: Word) -> str:
    """Render a word with letters separated by spaces, and ε for the empty word."""
    return " ".join(word) if word else "ε"


def words_up_to(symbols: Sequence[str], max_len: int) -> Iterator[Word]:
    """
    Enumerate all words of length at most max_len in shortlex order.

    Args:
        symbols: Alphabet, in the order used for lexicographic comparison
        max_len: Length bound

    Returns:
        An iterator over words, shortest first
    """
    for length in range(max_len + 1):
        for word in product(symbols, repeat=length):
            yield tuple(word)


def run_batch(
    tasks: Sequence[Callable[[], Any]],
    concurrent: bool = False,
    max_concurrent: int = 4,
) -> List[Any]:
    """
    Run independent zero-argument callables and collect their results in submission order.

    Args:
        tasks: The callables to run
        concurrent: If True, process tasks concurrently using ThreadPoolExecutor
        max_concurrent: Maximum number of workers (only used if concurrent=True)

    Returns:
        List of results, results[i] belonging to tasks[i]

    Raises:
        Exception: The first exception raised by a task, in submission order
    """
    results: List[Any] = [None] * len(tasks)
    errors: List[Optional[BaseException]] = [None] * len(tasks)

    if concurrent and len(tasks) > 1:
        logger.info(
            f"Processing {len(tasks)} queries concurrently with max {max_concurrent} workers"
        )
        with ThreadPoolExecutor(max_workers=max_concurrent) as executor:
            futures = {executor.submit(task): i for i, task in enumerate(tasks)}
            for future in as_completed(futures):
                idx = futures[future]
                try:
                    results[idx] = future.result()
                    logger.info(f"Completed query {idx+1}/{len(tasks)}")
                except Exception as e:
                    logger.error(f"Error processing query {idx}: {e}")
                    errors[idx] = e
    else:
        logger.info(f"Processing {len(tasks)} queries sequentially")
        for i, task in enumerate(tasks):
            try:
                results[i] = task()
                logger.info(f"Completed query {i+1}/{len(tasks)}")
            except Exception as e:
                logger.error(f"Error processing query {i}: {e}")
                errors[i] = e
                break

    for error in errors:
        if error is not None:
            raise error
    return results
