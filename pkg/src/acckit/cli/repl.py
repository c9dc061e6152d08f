"""Line-driven demo sessions, one per interactive mode.

Every session follows the same shape: a run flag (``done``), a prompt for the
next expected input, and ``feed(line)`` which consumes exactly one line and
returns the text to print. A line that cannot be parsed produces a usage
message and leaves the session exactly as it was.
"""

from __future__ import annotations

import shlex
from typing import Callable, List, Optional, TextIO

from .. import hanoi as hanoi_mod
from ..containers import BoundedQueue, BoundedStack, ContainerError, LinkedList
from ..ledger import (
    TYPE_NAMES, Ledger, LedgerError, NothingPending, Transaction, format_journal_line,
)
from ..lending import Registry
from ..sim.rng import Lcg
from ..undo import HistoryEmpty, TextBuffer, UndoStack, apply_edit, undo_last


class UsageError(ValueError):
    pass


def _int(line: str) -> int:
    try:
        return int(line.strip())
    except ValueError:
        raise UsageError("usage: enter a whole number") from None


class Session:
    """Base class; subclasses set ``prompt`` and implement ``handle``."""

    prompt = ""

    def __init__(self):
        self.done = False

    def banner(self) -> str:
        return ""

    def handle(self, line: str) -> str:
        raise NotImplementedError

    def feed(self, line: str) -> str:
        if self.done:
            return ""
        try:
            return self.handle(line)
        except UsageError as e:
            return str(e)


def dispatch_command(session: Session, line: str) -> str:
    return session.feed(line)


def run_session(session: Session, stdin: TextIO, stdout: TextIO) -> int:
    def emit(text: str) -> None:
        if text:
            stdout.write(text if text.endswith("\n") else text + "\n")

    emit(session.banner())
    while not session.done:
        emit(session.prompt)
        line = stdin.readline()
        if not line:
            break
        emit(session.feed(line.rstrip("\n")))
    return 0


# ---------------------------------------------------------------- calculator

class CalcSession(Session):
    MENU = "Enter operation type. 1 for add, 2 for subtract, 3 for multiply, 4 for divide, 0 to exit: "

    def __init__(self):
        super().__init__()
        self.operation: Optional[int] = None
        self.num1: Optional[int] = None
        self.prompt = self.MENU

    def handle(self, line: str) -> str:
        value = _int(line)
        if self.operation is None:
            if value == 0:
                self.done = True
                return ""
            if not 0 < value < 5:
                return "Invalid operation!"
            self.operation = value
            self.prompt = "Enter the first number: "
            return ""
        if self.num1 is None:
            self.num1 = value
            self.prompt = "Enter the second number: "
            return ""
        op, a, b = self.operation, self.num1, value
        self.operation = self.num1 = None
        self.prompt = self.MENU
        return calculate(op, a, b)


def calculate(op: int, a: int, b: int) -> str:
    if op == 1:
        return str(a + b)
    if op == 2:
        return str(a - b)
    if op == 3:
        return str(a * b)
    if op == 4:
        if b == 0:
            return "divide by zero!"
        q = abs(a) // abs(b)
        return str(q if (a >= 0) == (b > 0) else -q)
    return "Invalid operation!"


# ------------------------------------------------------------- guess number

class GuessSession(Session):
    prompt = "enter a number: "

    def __init__(self, rng: Lcg, lo: int = 1, hi: int = 10):
        super().__init__()
        self.number = rng.randint(lo, hi)

    def handle(self, line: str) -> str:
        guess = _int(line)
        if guess < self.number:
            return "go higher"
        if guess > self.number:
            return "go lower"
        self.done = True
        return "you win!"


# ------------------------------------------------------------ queue / stack

def _show(items) -> str:
    return " ".join(str(v) for v in items)


class _MenuSession(Session):
    MENU = " >> 0-exit 1-add 2-remove 3-show: "

    def __init__(self):
        super().__init__()
        self.adding = False
        self.prompt = self.MENU

    def handle(self, line: str) -> str:
        value = _int(line)
        if self.adding:
            self.adding = False
            self.prompt = self.MENU
            try:
                self.add(value)
            except ContainerError as e:
                return "%s\n%s" % (e, _show(self.contents()))
            return _show(self.contents())
        if value == 0:
            self.done = True
            return ""
        if value == 1:
            self.adding = True
            self.prompt = "enter new data: "
            return ""
        if value == 2:
            try:
                self.remove()
            except ContainerError as e:
                return "%s\n%s" % (e, _show(self.contents()))
            return _show(self.contents())
        if value == 3:
            return _show(self.contents())
        return "enter valid command 0-3"


class QueueSession(_MenuSession):
    def __init__(self, capacity: int = 10):
        super().__init__()
        self.q = BoundedQueue(capacity)

    def add(self, v):
        self.q.enqueue(v)

    def remove(self):
        self.q.dequeue()

    def contents(self):
        return self.q.items()


class StackSession(_MenuSession):
    def __init__(self, capacity: int = 10):
        super().__init__()
        self.s = BoundedStack(capacity)

    def add(self, v):
        self.s.push(v)

    def remove(self):
        self.s.pop()

    def contents(self):
        return self.s.items()


# ------------------------------------------------------------- player list

class ListSession(Session):
    MENU = " >> 0 - exit, 1 - add, 2 - insert, 3 - delete, 4 - report : "

    def __init__(self, rng: Lcg):
        super().__init__()
        self.rng = rng
        self.players = LinkedList()
        self.pending: Optional[str] = None
        self.prompt = self.MENU

    def _new_id(self) -> int:
        return 1000 + self.rng.randint(0, 99)

    def handle(self, line: str) -> str:
        value = _int(line)
        if self.pending is not None:
            action, self.pending = self.pending, None
            self.prompt = self.MENU
            if action == "insert":
                self.players.insert(value, self._new_id())
                return ""
            if not self.players.delete(value):
                return "no player at index %d" % value
            return ""
        if value == 0:
            self.done = True
        elif value == 1:
            self.players.append(self._new_id())
        elif value in (2, 3):
            self.pending = "insert" if value == 2 else "delete"
            self.prompt = "enter index: "
        elif value == 4:
            return "\n".join(str(p) for p in self.players)
        else:
            return "enter valid command 0-4"
        return ""


# ---------------------------------------------------------------- banking

def _account_text(acc) -> str:
    return "Account:\nAccount #: %d\nName: %s\nBalance: %d" % (acc.number, acc.name, acc.balance)


def _transaction_text(t: Transaction) -> str:
    return "Transaction:\nAccount #: %d\nType: %s\nAmount: %d" % (t.account, TYPE_NAMES.get(t.type, "?"), t.amount)


class BankSession(Session):
    MENU = "0-Exit, 1-Create Transaction, 2-Run Transaction, 3-List Transactions: "
    FIELDS = (
        ("account", "Enter account number: "),
        ("type", "Enter transaction type (1-Report, 2-Deposit, 3-Withdraw): "),
        ("amount", "Enter transaction amount: "),
    )

    def __init__(self, accounts: int = 3, strict: bool = False,
                 journal: Optional[Callable[[str], None]] = None):
        super().__init__()
        self.ledger = Ledger(strict=strict)
        self.to_open = accounts
        self.journal = journal
        self.draft: List[int] = []
        self.prompt = "Enter account holder's name: " if accounts else self.MENU

    def handle(self, line: str) -> str:
        if self.to_open:
            name = line.strip()
            if not name:
                raise UsageError("usage: enter a non-empty name")
            self.ledger.open_account(name)
            self.to_open -= 1
            if self.to_open:
                return ""
            self.prompt = self.MENU
            return "\n".join(_account_text(a) for a in self.ledger.accounts)

        value = _int(line)
        if self.draft or self.prompt != self.MENU:
            self.draft.append(value)
            if len(self.draft) < len(self.FIELDS):
                self.prompt = self.FIELDS[len(self.draft)][1]
                return ""
            t = Transaction(*self.draft)
            self.draft = []
            self.prompt = self.MENU
            try:
                self.ledger.submit_transaction(t)
            except LedgerError as e:
                return str(e)
            if self.journal is not None:
                self.journal(format_journal_line(t))
            return ""

        if value == 0:
            self.done = True
            return ""
        if value == 1:
            self.prompt = self.FIELDS[0][1]
            return ""
        if value == 2:
            try:
                out = self.ledger.run_next_transaction()
            except NothingPending as e:
                return str(e)
            except LedgerError as e:
                return str(e)
            text = _transaction_text(out.transaction)
            if out.status == "rejected":
                return text + "\nRejected: insufficient funds"
            return text + "\n" + _account_text(out.account)
        if value == 3:
            return "\n".join(_transaction_text(t) for t in self.ledger.pending_transactions())
        return "invalid command"


# ---------------------------------------------------------------- lending

class LendSession(Session):
    MENU = "1-Report, 2-Borrow, 3-Return, 0-Exit "

    def __init__(self, registry: Optional[Registry] = None, staff: bool = True):
        super().__init__()
        self.registry = registry or Registry.stocked()
        self.staff = staff
        self.action: Optional[int] = None
        self.patron: Optional[int] = None
        self.prompt = self.MENU

    def banner(self) -> str:
        return self.registry.report(self.staff)

    def handle(self, line: str) -> str:
        value = _int(line)
        if self.action is not None:
            if self.patron is None:
                self.patron = value
                self.prompt = "Enter book ID: "
                return ""
            action, p = self.action, self.patron
            self.action = self.patron = None
            self.prompt = self.MENU
            ok = self.registry.borrow(p, value) if action == 2 else self.registry.return_item(p, value)
            return ("Done" if ok else "Sorry") + "\n" + self.registry.report(self.staff)
        if value == 0:
            self.done = True
            return ""
        if value == 1:
            return self.registry.report(self.staff)
        if value in (2, 3):
            self.action = value
            self.prompt = "Enter patron ID: "
            return ""
        return "Invalid command"


# ------------------------------------------------------------------ hanoi

class HanoiSession(Session):
    POP = " >> 0-exit 1-pop from A, 2-pop from B, 3-pop from C: "
    PUSH = " >> 0-exit 1-push to A, 2-push to B, 3-push to C: "

    def __init__(self, n: int = 4):
        super().__init__()
        self.game = hanoi_mod.HanoiGame(n)
        self.source: Optional[str] = None  # bar the in-hand disk came from
        self.moves = 0
        self.prompt = self.POP

    def banner(self) -> str:
        return self.game.render()

    def _bar(self, value: int) -> str:
        if not 1 <= value <= 3:
            raise UsageError("usage: choose 0-3")
        return hanoi_mod.BARS[value - 1]

    def handle(self, line: str) -> str:
        value = _int(line)
        if value == 0:
            self.done = True
            return ""
        bar = self._bar(value)
        if self.source is None:
            stack = self.game.bars[bar]
            if not len(stack):
                return "Could not remove data. Stack is empty."
            self.source = bar
            self.prompt = self.PUSH
            return "in hand: %d" % stack.peek()
        src, self.source = self.source, None
        self.prompt = self.POP
        if bar == src:
            self.moves += 1
            return self.game.render()
        if not self.game.move_disk(src, bar):
            return "Could not place a disk on a smaller one.\n" + self.game.render()
        self.moves += 1
        text = self.game.render()
        if self.game.is_won():
            self.done = True
            text += "\nSolved in %d moves!" % self.moves
        return text


# ------------------------------------------------------------------- undo

class UndoSession(Session):
    prompt = "> "
    USAGE = "usage: type <row> <col> <char> [sel_len] | undo | show | quit"

    def __init__(self, text: str = "", capacity: int = 100):
        super().__init__()
        self.buf = TextBuffer.from_text(text)
        self.history = UndoStack(capacity)

    def handle(self, line: str) -> str:
        try:
            parts = shlex.split(line)
        except ValueError:
            raise UsageError(self.USAGE) from None
        if not parts:
            raise UsageError(self.USAGE)
        cmd = parts[0].lower()
        if cmd in ("quit", "0"):
            self.done = True
            return ""
        if cmd == "show":
            return self.buf.text()
        if cmd == "undo":
            try:
                undo_last(self.buf, self.history)
            except HistoryEmpty:
                return "nothing to undo"
            return self.buf.text()
        if cmd == "type" and len(parts) in (4, 5):
            try:
                row, col = int(parts[1]), int(parts[2])
                sel = int(parts[4]) if len(parts) == 5 else 0
                apply_edit(self.buf, self.history, row, col, parts[3], sel)
            except (ValueError, IndexError) as e:
                raise UsageError("%s (%s)" % (self.USAGE, e)) from None
            return self.buf.text()
        raise UsageError(self.USAGE)
