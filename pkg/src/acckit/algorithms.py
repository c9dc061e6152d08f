"""Array and scalar algorithms: folds, max-find, carry addition, searches, sorts.

Functions that the benchmark measures accept an optional ``OpCounter`` and
record exact comparison and move counts in it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, List, NamedTuple, Optional, Sequence

from .containers import CapacityError, ShiftArray


@dataclass
class OpCounter:
    comparisons: int = 0
    moves: int = 0

    def reset(self) -> None:
        self.comparisons = 0
        self.moves = 0


class SearchOutcome(NamedTuple):
    found: bool
    index: Optional[int] = None


@dataclass
class StudentRecord:
    name: str
    id: int
    grades: List[int] = field(default_factory=lambda: [-1] * 5)
    average: int = -1


def accumulate(values: Sequence[int], mode: str = "sum") -> int:
    if mode == "sum":
        total = 0
        for v in values:
            total += v
    elif mode == "product":
        total = 1
        for v in values:
            total *= v
    else:
        raise ValueError("mode must be 'sum' or 'product', not %r" % mode)
    return total


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return accumulate(range(1, n + 1), "product")


def sum_until_zero(values: Sequence[int]) -> int:
    """Add entries until the sentinel 0 shows up; the sentinel itself is not added."""
    total = 0
    for v in values:
        if v == 0:
            break
        total += v
    return total


def to_digits(n: int) -> List[int]:
    """Least significant digit first."""
    if n < 0:
        raise ValueError("only non-negative numbers have a digit form here")
    digits = [n % 10]
    n //= 10
    while n:
        digits.append(n % 10)
        n //= 10
    return digits


def from_digits(digits: Sequence[int]) -> int:
    n = 0
    for d in reversed(digits):
        n = n * 10 + d
    return n


def add_by_digits(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Column addition with carry. Both inputs and the result are least significant first."""
    for d in list(a) + list(b):
        if not isinstance(d, int) or not 0 <= d <= 9:
            raise ValueError("not a decimal digit: %r" % (d,))
    result = []
    carry = 0
    for col in range(max(len(a), len(b))):
        s = carry
        if col < len(a):
            s += a[col]
        if col < len(b):
            s += b[col]
        if s < 10:
            result.append(s)
            carry = 0
        else:
            result.append(s - 10)
            carry = 1
    if carry:
        result.append(carry)
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result or [0]


def find_max(values: Sequence[Any], counter: Optional[OpCounter] = None):
    """Return ``(value, index)`` of the first maximum."""
    if len(values) == 0:
        raise ValueError("find_max of an empty sequence")
    best = 0
    for i in range(1, len(values)):
        if counter is not None:
            counter.comparisons += 1
        if values[best] < values[i]:
            best = i
    return values[best], best


def match_arrays(a: Sequence[Any], b: Sequence[Any]) -> int:
    if len(a) != len(b):
        raise ValueError("arrays differ in length (%d vs %d)" % (len(a), len(b)))
    return sum(1 for x, y in zip(a, b) if x == y)


def linear_search(values: Sequence[Any], target: Any, counter: Optional[OpCounter] = None,
                  first_only: bool = False) -> List[int]:
    hits = []
    for i, v in enumerate(values):
        if counter is not None:
            counter.comparisons += 1
        if v == target:
            hits.append(i)
            if first_only:
                break
    return hits


def binary_search(sorted_values: Sequence[Any], target: Any,
                  counter: Optional[OpCounter] = None) -> SearchOutcome:
    # One comparison is counted per probe of the middle element; the
    # less/greater branch reuses that probe's outcome.
    low, high = 0, len(sorted_values) - 1
    while low <= high:
        mid = (low + high) // 2
        if counter is not None:
            counter.comparisons += 1
        probe = sorted_values[mid]
        if target == probe:
            return SearchOutcome(True, mid)
        if target > probe:
            low = mid + 1
        else:
            high = mid - 1
    return SearchOutcome(False)


def sort_descending(values: Sequence[Any], strategy: str = "extract_max",
                    counter: Optional[OpCounter] = None) -> List[Any]:
    if strategy == "extract_max":
        unsorted = list(values)
        ordered = []
        while unsorted:
            _, tallest = find_max(unsorted, counter)
            ordered.append(unsorted.pop(tallest))
            if counter is not None:
                counter.moves += 1
        return ordered
    if strategy == "in_place":
        data = list(values)
        n = len(data)
        for i in range(n):
            for j in range(i, n):
                if counter is not None:
                    counter.comparisons += 1
                if data[i] < data[j]:
                    data[i], data[j] = data[j], data[i]
                    if counter is not None:
                        counter.moves += 3
        return data
    raise ValueError("unknown sort strategy %r" % strategy)


def sorted_insert(arr: ShiftArray, value: int, counter: Optional[OpCounter] = None) -> ShiftArray:
    """Insert into a descending array ahead of the first smaller element."""
    if arr.length >= arr.capacity:
        raise CapacityError("array is full (%d slots)" % arr.capacity)
    index = arr.length
    for i in range(arr.length):
        if counter is not None:
            counter.comparisons += 1
        if value > arr.slots[i]:
            index = i
            break
    return arr.insert_at(index, value, counter)


def sort_records_by_key(records: Sequence[StudentRecord],
                        key: Callable[[StudentRecord], Any] = lambda r: r.id) -> List[StudentRecord]:
    """Descending by ``key``; whole records are swapped, so rows stay intact."""
    s = list(records)
    n = len(s)
    for i in range(n):
        for j in range(i, n):
            if key(s[i]) < key(s[j]):
                temp = s[i]
                s[i] = s[j]
                s[j] = temp
    return s
