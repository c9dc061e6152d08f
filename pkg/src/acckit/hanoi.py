"""Tower of Hanoi over three bounded stacks, with the size rule enforced."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .containers import BoundedStack, StackEmpty

BARS = ("A", "B", "C")


class SourceEmpty(StackEmpty):
    pass


class HanoiGame:
    def __init__(self, n: int = 4):
        if n < 1:
            raise ValueError("need at least one disk")
        self.n = n
        self.bars: Dict[str, BoundedStack] = {b: BoundedStack(n) for b in BARS}
        for size in range(n, 0, -1):
            self.bars["A"].push(size)

    def _bar(self, name: str) -> BoundedStack:
        try:
            return self.bars[name.upper()]
        except (KeyError, AttributeError):
            raise ValueError("no bar %r; use A, B or C" % (name,)) from None

    def can_place(self, disk: int, to: str) -> bool:
        dst = self._bar(to)
        return not len(dst) or dst.peek() > disk

    def move_disk(self, src: str, dst: str) -> bool:
        """Move the top disk of ``src`` onto ``dst``; False (and no change) if it would sit on a smaller one."""
        s, d = self._bar(src), self._bar(dst)
        if s is d:
            raise ValueError("source and destination are the same bar")
        if not len(s):
            raise SourceEmpty("Could not remove data. Stack is empty.")
        disk = s.peek()
        if len(d) and d.peek() < disk:
            return False
        d.push(s.pop())
        return True

    def is_won(self) -> bool:
        return len(self.bars["C"]) == self.n

    def state(self) -> Tuple[Tuple[int, ...], ...]:
        """Each bar bottom-to-top."""
        return tuple(tuple(self.bars[b].items()) for b in BARS)

    def render(self) -> str:
        return "\n".join("%s: %s" % (b, " ".join(str(d) for d in self.bars[b].items())) for b in BARS)


def optimal_moves(n: int, src: str = "A", dst: str = "C", via: str = "B") -> List[Tuple[str, str]]:
    if n == 0:
        return []
    return optimal_moves(n - 1, src, via, dst) + [(src, dst)] + optimal_moves(n - 1, via, dst, src)
