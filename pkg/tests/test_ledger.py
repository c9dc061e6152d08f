import pytest
from hypothesis import given, strategies as st

from acckit.ledger import (DEPOSIT, REPORT, WITHDRAW, InvalidTransaction, Ledger, NothingPending, Transaction,
                           UnknownAccount, format_journal_line, parse_journal, replay_journal)


def make(n=2, strict=False):
    led = Ledger(strict)
    for i in range(n):
        led.open_account("p%d" % i)
    return led


def test_accounts_numbered_from_1000():
    led = make(3)
    assert [a.number for a in led.accounts] == [1000, 1001, 1002]


def test_nothing_happens_until_run():
    led = make()
    led.submit_transaction(Transaction(1000, DEPOSIT, 30))
    assert led.report_account(1000).balance == 0
    out = led.run_next_transaction()
    assert out.account.balance == 30 and out.status == "applied"
    with pytest.raises(NothingPending):
        led.run_next_transaction()


def test_withdraw_may_overdraw_unless_strict():
    led = make()
    led.submit_transaction(Transaction(1000, WITHDRAW, 5))
    assert led.run_all()[0].account.balance == -5
    led = make(strict=True)
    led.submit_transaction(Transaction(1000, WITHDRAW, 5))
    out = led.run_all()[0]
    assert out.status == "rejected" and out.account.balance == 0


def test_invalid_submissions():
    led = make()
    with pytest.raises(InvalidTransaction):
        led.submit_transaction(Transaction(1000, 9, 1))
    with pytest.raises(UnknownAccount):
        led.submit_transaction(Transaction(2000, REPORT, 0))
    assert led.pending_transactions() == []


txn = st.tuples(st.integers(1000, 1002), st.sampled_from([REPORT, DEPOSIT, WITHDRAW]), st.integers(0, 500))


@given(st.lists(txn, max_size=40), st.booleans())
def test_journal_replay_matches_live_ledger(raw, strict):
    live = make(3, strict)
    for t in raw:
        live.submit_transaction(Transaction(*t))
    live.run_all()
    journal = [format_journal_line(Transaction(*t)) for t in raw]
    assert parse_journal(journal) == [Transaction(*t) for t in raw]
    again = replay_journal(journal, ["p0", "p1", "p2"], strict)
    assert again.accounts == live.accounts


def test_parse_journal_skips_comments_and_rejects_garbage():
    assert parse_journal(["# header", "", "1000 2 5"]) == [Transaction(1000, 2, 5)]
    with pytest.raises(ValueError):
        parse_journal(["1000 2"])
