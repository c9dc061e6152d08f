"""Character-insert edits on a line buffer, reversible through a bounded LIFO history."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Deque, List, NamedTuple


class HistoryEmpty(Exception):
    pass


class UndoElement(NamedTuple):
    ch: str
    row: int
    column: int
    replaced_text: str = ""


class UndoStack:
    """Newest entry on top; pushing onto a full stack drops the oldest."""

    def __init__(self, capacity: int = 100):
        if capacity < 1:
            raise ValueError("history capacity must be at least 1")
        self.capacity = capacity
        self._entries: Deque[UndoElement] = deque(maxlen=capacity)

    def __len__(self) -> int:
        return len(self._entries)

    def push(self, e: UndoElement) -> None:
        self._entries.append(e)

    def pop(self) -> UndoElement:
        if not self._entries:
            raise HistoryEmpty("nothing to undo")
        return self._entries.pop()

    def entries(self) -> List[UndoElement]:
        return list(self._entries)


@dataclass
class TextBuffer:
    rows: List[str]

    @classmethod
    def from_text(cls, text: str) -> "TextBuffer":
        return cls(text.split("\n"))

    def text(self) -> str:
        return "\n".join(self.rows)


def apply_edit(buf: TextBuffer, st: UndoStack, row: int, column: int, ch: str,
               selection_length: int = 0) -> UndoElement:
    """Replace ``selection_length`` characters at (row, column) with ``ch``."""
    if len(ch) != 1:
        raise ValueError("an edit types exactly one character")
    if ch == "\n":
        raise ValueError("line breaks are not typed through apply_edit")
    if not 0 <= row < len(buf.rows):
        raise IndexError("row %d outside 0..%d" % (row, len(buf.rows) - 1))
    line = buf.rows[row]
    if selection_length < 0 or not 0 <= column <= len(line) or column + selection_length > len(line):
        raise IndexError("selection %d+%d does not fit row %d of length %d"
                         % (column, selection_length, row, len(line)))
    replaced = line[column:column + selection_length]
    buf.rows[row] = line[:column] + ch + line[column + selection_length:]
    element = UndoElement(ch, row, column, replaced)
    st.push(element)
    return element


def undo_last(buf: TextBuffer, st: UndoStack) -> UndoElement:
    e = st.pop()
    line = buf.rows[e.row]
    buf.rows[e.row] = line[:e.column] + e.replaced_text + line[e.column + 1:]
    return e
