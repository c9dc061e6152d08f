"""Accounts plus a FIFO of pending transactions, applied strictly in submission order."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, List, NamedTuple, Optional

from .containers import BoundedQueue

FIRST_ACCOUNT = 1000
REPORT, DEPOSIT, WITHDRAW = 1, 2, 3
TYPE_NAMES = {REPORT: "Report", DEPOSIT: "Deposit", WITHDRAW: "Withdraw"}


class LedgerError(Exception):
    pass


class InvalidTransaction(LedgerError):
    def __init__(self, msg: str = "Invalid transaction"):
        super().__init__(msg)


class UnknownAccount(LedgerError):
    def __init__(self, number: int):
        super().__init__("Unknown account %d" % number)
        self.number = number


class NothingPending(LedgerError):
    def __init__(self):
        super().__init__("No transaction to run")


@dataclass(frozen=True)
class Account:
    number: int
    name: str
    balance: int = 0


class Transaction(NamedTuple):
    account: int
    type: int
    amount: int = 0

    @property
    def type_name(self) -> str:
        return TYPE_NAMES.get(self.type, "?")


class Outcome(NamedTuple):
    transaction: Transaction
    account: Account
    status: str = "applied"  # "applied" or "rejected"


class Ledger:
    """``strict`` rejects withdrawals that would overdraw; by default balances may go negative."""

    def __init__(self, strict: bool = False, max_pending: int = 1 << 20):
        self.accounts: List[Account] = []
        self.pending: BoundedQueue = BoundedQueue(max_pending)
        self.strict = strict

    def open_account(self, name: str) -> int:
        number = FIRST_ACCOUNT + len(self.accounts)
        self.accounts.append(Account(number, name, 0))
        return number

    def _index(self, number: int) -> int:
        i = number - FIRST_ACCOUNT
        if not 0 <= i < len(self.accounts):
            raise UnknownAccount(number)
        return i

    def report_account(self, number: int) -> Account:
        return self.accounts[self._index(number)]

    def _validate(self, t: Transaction) -> None:
        if t.type not in TYPE_NAMES:
            raise InvalidTransaction()
        self._index(t.account)

    def submit_transaction(self, t: Transaction) -> None:
        self._validate(t)
        self.pending.enqueue(t)

    def run_next_transaction(self) -> Outcome:
        if not len(self.pending):
            raise NothingPending()
        t = self.pending.dequeue()
        self._validate(t)
        i = self._index(t.account)
        acc = self.accounts[i]
        if t.type == DEPOSIT:
            acc = replace(acc, balance=acc.balance + t.amount)
        elif t.type == WITHDRAW:
            if self.strict and t.amount > acc.balance:
                return Outcome(t, acc, "rejected")
            acc = replace(acc, balance=acc.balance - t.amount)
        self.accounts[i] = acc
        return Outcome(t, acc)

    def run_all(self) -> List[Outcome]:
        out = []
        while len(self.pending):
            out.append(self.run_next_transaction())
        return out

    def pending_transactions(self) -> List[Transaction]:
        return self.pending.items()

    def total(self) -> int:
        return sum(a.balance for a in self.accounts)


def format_journal_line(t: Transaction) -> str:
    return "%d %d %d" % (t.account, t.type, t.amount)


def parse_journal(lines: Iterable[str]) -> List[Transaction]:
    out = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError("journal line %d: expected '<account> <type> <amount>'" % lineno)
        out.append(Transaction(*(int(p) for p in parts)))
    return out


def replay_journal(lines: Iterable[str], names: Iterable[str], strict: bool = False) -> Ledger:
    """Rebuild a ledger from account names plus a journal, running every transaction."""
    ledger = Ledger(strict=strict)
    for name in names:
        ledger.open_account(name)
    for t in parse_journal(lines):
        ledger.submit_transaction(t)
    ledger.run_all()
    return ledger
