"""Fixed-capacity arrays, bounded queue/stack and a doubly linked list.

Failures are raised as exceptions; the CLI turns them into the familiar
one-line messages ("Could not add data. Queue is full." and friends).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, List, Optional

VACANT = 0


class ContainerError(Exception):
    pass


class BoundsError(ContainerError, IndexError):
    pass


class CapacityError(ContainerError):
    pass


class QueueFull(CapacityError):
    message = "Could not add data. Queue is full."


class QueueEmpty(ContainerError):
    message = "Could not remove data. Queue is empty."


class StackFull(CapacityError):
    message = "Could not add data. Stack is full."


class StackEmpty(ContainerError):
    message = "Could not remove data. Stack is empty."


def circular_index(i: int, n: int) -> int:
    if n <= 0:
        raise ValueError("circular_index needs a positive length, got %d" % n)
    return i % n


class ShiftArray:
    """Fixed number of integer slots, of which the first ``length`` are in use."""

    def __init__(self, capacity: int, values: Iterable[int] = ()):
        values = list(values)
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        if len(values) > capacity:
            raise CapacityError("%d values do not fit in %d slots" % (len(values), capacity))
        self.capacity = capacity
        self.length = len(values)
        self.slots: List[int] = values + [VACANT] * (capacity - len(values))

    @classmethod
    def from_slots(cls, slots: Iterable[int], length: Optional[int] = None) -> "ShiftArray":
        """Wrap raw slots; the whole slot list counts as occupied unless told otherwise."""
        slots = list(slots)
        arr = cls(len(slots))
        arr.slots = slots
        arr.length = len(slots) if length is None else length
        return arr

    def values(self) -> List[int]:
        return self.slots[: self.length]

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return "ShiftArray(%d, %r)" % (self.capacity, self.values())

    def shift(self, lo: int, hi: int, direction: str, counter=None) -> "ShiftArray":
        if lo > hi:
            return self
        if lo < 0:
            raise BoundsError("negative index %d" % lo)
        if direction == "up":
            if hi + 1 >= self.capacity:
                raise BoundsError("shift up of [%d, %d] leaves a %d-slot array" % (lo, hi, self.capacity))
            for i in range(hi, lo - 1, -1):
                self.slots[i + 1] = self.slots[i]
        elif direction == "down":
            if lo < 1 or hi >= self.capacity:
                raise BoundsError("shift down of [%d, %d] leaves a %d-slot array" % (lo, hi, self.capacity))
            for i in range(lo, hi + 1):
                self.slots[i - 1] = self.slots[i]
        else:
            raise ValueError("direction must be 'up' or 'down', not %r" % direction)
        if counter is not None:
            counter.moves += hi - lo + 1
        return self

    def insert_at(self, index: int, value: int, counter=None) -> "ShiftArray":
        if self.length >= self.capacity:
            raise CapacityError("array is full (%d slots)" % self.capacity)
        if not 0 <= index <= self.length:
            raise BoundsError("insert index %d outside 0..%d" % (index, self.length))
        self.shift(index, self.length - 1, "up", counter)
        self.slots[index] = value
        self.length += 1
        if counter is not None:
            counter.moves += 1
        return self

    def delete_at(self, index: int, counter=None) -> "ShiftArray":
        if not 0 <= index < self.length:
            raise BoundsError("delete index %d outside 0..%d" % (index, self.length - 1))
        self.shift(index + 1, self.length - 1, "down", counter)
        self.length -= 1
        self.slots[self.length] = VACANT
        return self


@dataclass
class BoundedQueue:
    """FIFO with the front pinned at position 0; dequeue shifts the rest down."""

    max: int
    data: List[Any] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def enqueue(self, value: Any) -> None:
        if len(self.data) >= self.max:
            raise QueueFull(QueueFull.message)
        self.data.append(value)

    def dequeue(self, consume: bool = True, counter=None) -> Any:
        if not self.data:
            raise QueueEmpty(QueueEmpty.message)
        front = self.data[0]
        if consume:
            # deleting slot 0 shifts every remaining element down one
            del self.data[0]
            if counter is not None:
                counter.moves += len(self.data)
        return front

    def peek(self) -> Any:
        return self.dequeue(consume=False)

    def items(self) -> List[Any]:
        return list(self.data)


@dataclass
class BoundedStack:
    max: int
    data: List[Any] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.data)

    def __len__(self) -> int:
        return len(self.data)

    def push(self, value: Any) -> None:
        if len(self.data) >= self.max:
            raise StackFull(StackFull.message)
        self.data.append(value)

    def pop(self, consume: bool = True) -> Any:
        if not self.data:
            raise StackEmpty(StackEmpty.message if consume else "Stack is empty.")
        if consume:
            return self.data.pop()
        return self.data[-1]

    def peek(self) -> Any:
        return self.pop(consume=False)

    def items(self) -> List[Any]:
        """Bottom first, top last."""
        return list(self.data)


class Node:
    __slots__ = ("payload", "next", "prev")

    def __init__(self, payload: Any):
        self.payload = payload
        self.next: Optional[Node] = None
        self.prev: Optional[Node] = None

    def __repr__(self) -> str:
        return "Node(%r)" % (self.payload,)


class LinkedList:
    """Doubly linked list with head/tail tracking and positional insert/delete.

    Positions follow the player-list semantics: inserting at an index at or
    past the end appends, and deleting a missing index is a reported no-op.
    """

    def __init__(self, payloads: Iterable[Any] = ()):
        self.head: Optional[Node] = None
        self.tail: Optional[Node] = None
        self.count = 0
        for p in payloads:
            self.append(p)

    def __len__(self) -> int:
        return self.count

    def __iter__(self) -> Iterator[Any]:
        node = self.head
        while node is not None:
            yield node.payload
            node = node.next

    def __repr__(self) -> str:
        return "LinkedList(%r)" % (self.to_list(),)

    def nodes(self) -> Iterator[Node]:
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def append(self, payload: Any) -> Node:
        node = Node(payload)
        if self.tail is None:
            self.head = self.tail = node
        else:
            node.prev = self.tail
            self.tail.next = node
            self.tail = node
        self.count += 1
        return node

    def insert(self, i: int, payload: Any, counter=None) -> Node:
        if self.tail is None or i >= self.count:
            return self.append(payload)
        at = self._node_at(max(i, 0), counter)
        node = Node(payload)
        node.next = at
        node.prev = at.prev
        if at.prev is None:
            self.head = node
        else:
            at.prev.next = node
        at.prev = node
        self.count += 1
        return node

    def delete(self, i: int, counter=None) -> bool:
        if i < 0 or i >= self.count:
            return False
        self.unlink(self._node_at(i, counter))
        return True

    def unlink(self, node: Node) -> None:
        if node.prev is None:
            self.head = node.next
        else:
            node.prev.next = node.next
        if node.next is None:
            self.tail = node.prev
        else:
            node.next.prev = node.prev
        node.next = node.prev = None
        self.count -= 1

    def pop_front(self) -> Any:
        if self.head is None:
            raise BoundsError("pop from an empty list")
        node = self.head
        self.unlink(node)
        return node.payload

    def to_list(self) -> List[Any]:
        return list(self)

    def _node_at(self, i: int, counter=None) -> Node:
        n = 0
        node = self.head
        while node is not None and n < i:
            node = node.next
            n += 1
        if counter is not None:
            counter.comparisons += n + 1
        assert node is not None
        return node
