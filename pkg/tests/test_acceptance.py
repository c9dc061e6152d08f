"""Acceptance suite: one test per numbered criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly as
``python3 tests/test_acceptance.py``.
"""

import csv
import io
import json
import math
import os
import random
import subprocess
import sys
import time

import pytest

from acckit.algorithms import (StudentRecord, add_by_digits, binary_search, from_digits,
                               linear_search, sort_records_by_key, sorted_insert, to_digits)
from acckit.cli import main
from acckit.cli.bench import run_bench, rows_to_csv
from acckit.containers import (BoundedQueue, BoundedStack, BoundsError, CapacityError, LinkedList,
                               QueueEmpty, QueueFull, ShiftArray, StackEmpty, StackFull)
from acckit.hanoi import BARS, HanoiGame, optimal_moves
from acckit.imaging import (EffectSpec, PixelBuffer, WHITE, apply_effect, decode_ppm,
                            encode_ppm)
from acckit.ledger import DEPOSIT, REPORT, WITHDRAW, Ledger, Transaction, format_journal_line, replay_journal
from acckit.lending import Registry
from acckit.sim import GuardState, JumpState, guard_fsm, jump_step
from acckit.undo import TextBuffer, UndoStack, apply_edit, undo_last

SUITE_START = time.perf_counter()
RESULTS = {}
LINES = {}  # collected by conftest for the end-of-run summary


def report(n, ok, detail=""):
    line = "criterion %2d: %s%s" % (n, "PASS" if ok else "FAIL", ("  " + detail) if detail else "")
    RESULTS[n] = ok
    LINES[n] = line
    print(line)
    assert ok, line


# ---------------------------------------------------------------- 1

def test_c01_binary_matches_linear():
    rng = random.Random(101)
    t0 = time.perf_counter()
    divergences = 0
    for _ in range(1000):
        n = rng.randint(1, 256)
        data = sorted(rng.randint(-50, 50 + n) for _ in range(n))
        for target in range(data[0] - 5, data[-1] + 6):
            hits = linear_search(data, target)
            got = binary_search(data, target)
            # membership must agree, and a hit must land on a matching element
            if got.found != bool(hits) or (got.found and data[got.index] != target):
                divergences += 1
            # leftmost occurrence recovered from the hit equals the linear first index
            elif got.found:
                i = got.index
                while i > 0 and data[i - 1] == target:
                    i -= 1
                if i != hits[0]:
                    divergences += 1
    elapsed = time.perf_counter() - t0
    report(1, divergences == 0 and elapsed < 10, "divergences=%d, %.2fs" % (divergences, elapsed))


# ---------------------------------------------------------------- 2

def test_c02_complexity_bounds_in_bench_csv():
    sizes = [1, 2, 3, 7, 16, 100, 255, 256, 1000, 1024, 2048, 4095, 4096]
    text = rows_to_csv(run_bench("search", sizes, reps=20, seed=3))
    bad = []
    for row in csv.DictReader(io.StringIO(text)):
        n, comps = int(row["n"]), int(row["comparisons"])
        bound = math.floor(math.log2(n)) + 2 if row["op"] == "binary" else n
        if comps > bound:
            bad.append((row["op"], n, comps, bound))
    linear_worst = [int(r["comparisons"]) for r in csv.DictReader(io.StringIO(text)) if r["op"] == "linear"]
    report(2, not bad and linear_worst == sizes, "violations=%s" % bad)


# ---------------------------------------------------------------- 3

def test_c03_reference_tables():
    arr = ShiftArray(5, [44, 36, 25, 12])
    sorted_insert(arr, 39)
    ok_insert = arr.values() == [44, 39, 36, 25, 12]

    def rec(line):
        name, id_, *g, avg = line.split()
        return StudentRecord(name, int(id_), [int(v) for v in g], int(avg))

    before = [rec(l) for l in ("x 141 67 34 0 69 24 38", "x 778 58 62 64 5 45 46", "x 881 27 61 91 95 42 63",
                               "x 427 36 91 4 2 53 37", "x 392 82 21 16 18 95 46")]
    after = [rec(l) for l in ("x 881 27 61 91 95 42 63", "x 778 58 62 64 5 45 46", "x 427 36 91 4 2 53 37",
                              "x 392 82 21 16 18 95 46", "x 141 67 34 0 69 24 38")]
    out = sort_records_by_key(before)
    ids = [r.id for r in out]
    row881 = next(r for r in out if r.id == 881)
    ok_sort = out == after and row881.average == 63
    report(3, ok_insert and ok_sort, "insert=%s ids=%s" % (arr.values(), ids))


# ---------------------------------------------------------------- 4

def test_c04_digit_addition():
    ok_worked = from_digits(add_by_digits(to_digits(27), to_digits(15))) == 42
    rng = random.Random(4)
    mismatches = 0
    for _ in range(10_000):
        a, b = rng.randrange(10 ** rng.randint(1, 12)), rng.randrange(10 ** rng.randint(1, 12))
        if from_digits(add_by_digits(to_digits(a), to_digits(b))) != a + b:
            mismatches += 1
    report(4, ok_worked and mismatches == 0, "27+15 ok=%s, mismatches=%d" % (ok_worked, mismatches))


# ---------------------------------------------------------------- 5

def _queue_trial(rng):
    cap = rng.randint(1, 6)
    q, model = BoundedQueue(cap), []
    for _ in range(rng.randint(1, 30)):
        op = rng.random()
        if op < 0.45:
            v = rng.randint(-99, 99)
            try:
                q.enqueue(v)
                got = "ok"
            except QueueFull as e:
                got = e.message
            want = "ok" if len(model) < cap else "Could not add data. Queue is full."
            if want == "ok":
                model.append(v)
        elif op < 0.85:
            try:
                got = q.dequeue()
            except QueueEmpty as e:
                got = e.message
            want = model.pop(0) if model else "Could not remove data. Queue is empty."
        else:
            try:
                got = q.peek()
            except QueueEmpty:
                got = "empty"
            want = model[0] if model else "empty"
        if got != want or q.items() != model:
            return False
    return True


def _stack_trial(rng):
    cap = rng.randint(1, 6)
    s, model = BoundedStack(cap), []
    for _ in range(rng.randint(1, 30)):
        op = rng.random()
        if op < 0.45:
            v = rng.randint(-99, 99)
            try:
                s.push(v)
                got = "ok"
            except StackFull as e:
                got = e.message
            want = "ok" if len(model) < cap else "Could not add data. Stack is full."
            if want == "ok":
                model.append(v)
        elif op < 0.85:
            try:
                got = s.pop()
            except StackEmpty as e:
                got = e.message
            want = model.pop() if model else "Could not remove data. Stack is empty."
        else:
            try:
                got = s.peek()
            except StackEmpty:
                got = "empty"
            want = model[-1] if model else "empty"
        if got != want or s.items() != model:
            return False
    return True


def _list_consistent(lst, model):
    fwd = lst.to_list()
    back = []
    node = lst.tail
    while node is not None:
        back.append(node.payload)
        node = node.prev
    return fwd == model and back == model[::-1] and len(lst) == len(model)


def _list_trial(rng):
    lst, model = LinkedList(), []
    for step in range(rng.randint(1, 30)):
        op = rng.random()
        if op < 0.5:
            i = rng.randint(-1, len(model) + 2)
            lst.insert(i, step)
            if i >= len(model):
                model.append(step)
            else:
                model.insert(max(i, 0), step)
        elif op < 0.9:
            i = rng.randint(-1, len(model) + 1)
            got = lst.delete(i)
            want = 0 <= i < len(model)
            if want:
                del model[i]
            if got != want:
                return False
        else:
            try:
                got = lst.pop_front()
            except BoundsError:
                got = "empty"
            want = model.pop(0) if model else "empty"
            if got != want:
                return False
        if not _list_consistent(lst, model):
            return False
    return True


def test_c05_container_models():
    rng = random.Random(5)
    fails = {name: sum(not trial(rng) for _ in range(10_000))
             for name, trial in (("queue", _queue_trial), ("stack", _stack_trial), ("list", _list_trial))}
    report(5, not any(fails.values()), "failures=%s" % fails)


# ---------------------------------------------------------------- 6

def test_c06_shift_oracle():
    rng = random.Random(6)
    mismatches = 0
    for _ in range(10_000):
        cap = rng.randint(1, 12)
        vals = [rng.randint(1, 99) for _ in range(rng.randint(0, cap))]
        arr = ShiftArray(cap, vals)
        kind = rng.choice(("insert", "delete", "up", "down"))
        try:
            if kind == "insert":
                i, v = rng.randint(-1, len(vals) + 1), rng.randint(1, 99)
                arr.insert_at(i, v)
                want = vals[:i] + [v] + vals[i:]
                if not (0 <= i <= len(vals) < cap):
                    mismatches += 1
            elif kind == "delete":
                i = rng.randint(-1, len(vals))
                arr.delete_at(i)
                want = vals[:i] + vals[i + 1:]
                if not 0 <= i < len(vals):
                    mismatches += 1
            else:
                lo = rng.randint(0, cap)
                hi = rng.randint(lo - 1, cap)
                slots = list(arr.slots)
                arr.shift(lo, hi, kind)
                if lo <= hi:
                    if kind == "up":
                        if hi + 1 >= cap:
                            mismatches += 1
                        rebuilt = slots[:lo + 1] + slots[lo:hi + 1] + slots[hi + 2:]
                    else:
                        if lo < 1 or hi >= cap:
                            mismatches += 1
                        rebuilt = slots[:lo - 1] + slots[lo:hi + 1] + slots[hi:]
                else:
                    rebuilt = slots
                if arr.slots != rebuilt:
                    mismatches += 1
                continue
        except (BoundsError, CapacityError):
            continue
        if arr.values() != want or arr.slots[len(want):] != [0] * (cap - len(want)):
            mismatches += 1
    report(6, mismatches == 0, "mismatches=%d" % mismatches)


# ---------------------------------------------------------------- 7

def test_c07_jump_trajectory():
    j = JumpState(y0=380, v0=-25, t=0, jumping=True)
    ys = {}
    landed_at = None
    while j.jumping:
        t = j.t
        ys[t] = jump_step(j, ground=380)
        if not j.jumping:
            landed_at = t
    ok = ys[0] == 380 and ys[10] == 180 and ys[50] == 380 and landed_at == 51 and ys[51] == 380
    report(7, ok, "y0=%d y10=%d y50=%d landed_t=%s" % (ys[0], ys[10], ys[50], landed_at))


# ---------------------------------------------------------------- 8

def test_c08_guard_fsm():
    table = {250: GuardState.WALK, 150: GuardState.WATCH, 50: GuardState.ATTACK,
             200: GuardState.WATCH, 100: GuardState.ATTACK}
    got = {d: guard_fsm(d) for d in table}
    report(8, got == table, str({d: s.name for d, s in got.items()}))


# ---------------------------------------------------------------- 9

def _golden_source():
    rng = random.Random(9)
    rows = [[(rng.randrange(256), rng.randrange(256), rng.randrange(256)) for _ in range(17)] for _ in range(11)]
    for y in range(11):
        rows[y][(3 * y) % 17] = (255, 255, 255)
    return encode_ppm(PixelBuffer.from_rows(rows, mask=WHITE))


def test_c09_filters(tmp_path):
    gray = apply_effect(PixelBuffer.from_rows([[(30, 60, 90)]]), EffectSpec("gray")).get_pixel(0, 0)
    row = PixelBuffer.from_rows([[(10, 10, 10), (40, 40, 40), (100, 100, 100)]])
    blurred = apply_effect(row, EffectSpec("blur"))
    bl = [blurred.get_pixel(x, 0)[:3] for x in range(3)]
    up = apply_effect(PixelBuffer.from_rows([[(250, 250, 250)]]), EffectSpec("brightup", 20)).get_pixel(0, 0)

    src = decode_ppm(_golden_source(), mask=WHITE)
    masked = src.mask_map()
    masked_ok = True
    for spec in ("gray", "blur", "brightup:20", "brightdown:20"):
        out = apply_effect(src, EffectSpec.parse(spec))
        masked_ok &= bool((out.pixels[masked] == src.pixels[masked]).all())

    src_path = tmp_path / "src.ppm"
    src_path.write_bytes(_golden_source())
    same = True
    for spec in ("gray", "blur", "brightup:20", "brightdown:35", "fill:102030"):
        outs = []
        for run in range(2):
            p = tmp_path / ("%s_%d.ppm" % (spec.replace(":", "_"), run))
            assert main(["filter", spec, str(src_path), str(p)]) == 0
            outs.append(p.read_bytes())
        same &= outs[0] == outs[1]

    ok = (gray[:3] == (60, 60, 60) and bl == [(10, 10, 10), (50, 50, 50), (100, 100, 100)]
          and up[:3] == (255, 255, 255) and masked_ok and same)
    report(9, ok, "gray=%s blur=%s brightup=%s masked=%s golden=%s" % (gray[:3], bl[1], up[:3], masked_ok, same))


# ---------------------------------------------------------------- 10

DETERMINISM_TRACE = """\
# mixed input exercising movement and shooting
0 RIGHT DOWN
12 SPACE DOWN
13 SPACE UP
20 DOWN DOWN
35 RIGHT UP
40 SPACE DOWN
41 SPACE UP
60 LEFT DOWN
61 DOWN UP
90 LEFT UP
120 UP DOWN
150 UP UP
"""

WIN_TRACE = "0 RIGHT DOWN\n0 DOWN DOWN\n"


def _sim_cli(trace_path, frames, seed):
    proc = subprocess.run([sys.executable, "-m", "acckit", "--seed", str(seed), "sim", "--trace", str(trace_path),
                           "--frames", str(frames), "--seed", str(seed)],
                          capture_output=True, text=True, check=True,
                          env=dict(os.environ, PYTHONPATH=os.pathsep.join(sys.path)))
    return json.loads(proc.stdout)


def test_c10_sim_determinism_and_win(tmp_path):
    t = tmp_path / "t.txt"
    t.write_text(DETERMINISM_TRACE)
    digests = [_sim_cli(t, 200, 7)["digest"] for _ in range(3)]
    stable = len(set(digests)) == 1 and len(digests[0]) == 16

    w = tmp_path / "win.txt"
    w.write_text(WIN_TRACE)
    summary = _sim_cli(w, 200, 7)

    # frame by frame: the prize disappears on exactly the frame the player reaches it
    from acckit.sim import build_world, check_collision, parse_trace, step_frame
    world = build_world("topdown", 7)
    events = parse_trace(WIN_TRACE.splitlines())
    collision_frame = None
    for f in range(200):
        before_visible = world.prize.visible
        cmds = step_frame(world, [e for e in events if e.frame == f])
        if before_visible and not world.prize.visible:
            collision_frame = f
            on_prize = check_collision(world.player, world.prize)
            drawn = any(c.shape_id == "prize" for c in cmds)
            break
    win_ok = (summary["win"] is True and summary["prize_visible"] is False
              and collision_frame is not None and summary["quit_frame"] == collision_frame
              and on_prize and not drawn)
    report(10, stable and win_ok, "digest=%s x3, win=%s at frame %s" % (digests[0], summary["win"], collision_frame))


# ---------------------------------------------------------------- 11

def _disks(game):
    return sorted(d for bar in game.state() for d in bar)


def test_c11_hanoi():
    g = HanoiGame(3)
    accepted = sum(g.move_disk(s, d) for s, d in optimal_moves(3))
    scripted_ok = accepted == 7 and g.is_won()

    rng = random.Random(11)
    g = HanoiGame(5)
    violations = 0
    for _ in range(10_000):
        src, dst = rng.sample(BARS, 2)
        before = g.state()
        s_bar, d_bar = before[BARS.index(src)], before[BARS.index(dst)]
        if not s_bar:
            continue
        illegal = bool(d_bar) and d_bar[-1] < s_bar[-1]
        ok = g.move_disk(src, dst)
        if illegal and (ok or g.state() != before):
            violations += 1
        if not illegal and not ok:
            violations += 1
        if _disks(g) != [1, 2, 3, 4, 5] or any(list(b) != sorted(b, reverse=True) for b in g.state()):
            violations += 1
    report(11, scripted_ok and violations == 0, "accepted=%d won=%s violations=%d" % (accepted, scripted_ok, violations))


# ---------------------------------------------------------------- 12

def test_c12_ledger_fifo():
    led = Ledger()
    acct = led.open_account("Ada")
    led.submit_transaction(Transaction(acct, DEPOSIT, 50))
    led.submit_transaction(Transaction(acct, REPORT))
    outs = led.run_all()
    worked_ok = acct == 1000 and outs[-1].account.balance == 50

    rng = random.Random(12)
    mismatches = 0
    for _ in range(1000):
        strict = rng.random() < 0.5
        names = ["n%d" % i for i in range(rng.randint(1, 4))]
        ledger = Ledger(strict=strict)
        for n in names:
            ledger.open_account(n)
        balances = {1000 + i: 0 for i in range(len(names))}
        txs = [Transaction(rng.choice(list(balances)), rng.choice((REPORT, DEPOSIT, WITHDRAW)), rng.randint(0, 200))
               for _ in range(rng.randint(0, 25))]
        expected = []
        for t in txs:
            ledger.submit_transaction(t)
            if t.type == DEPOSIT:
                balances[t.account] += t.amount
            elif t.type == WITHDRAW and not (strict and t.amount > balances[t.account]):
                balances[t.account] -= t.amount
            expected.append(balances[t.account])
        got = [o.account.balance for o in ledger.run_all()]
        replayed = replay_journal([format_journal_line(t) for t in txs], names, strict)
        final = {a.number: a.balance for a in ledger.accounts}
        if got != expected or final != balances or {a.number: a.balance for a in replayed.accounts} != balances:
            mismatches += 1
    report(12, worked_ok and mismatches == 0, "deposit-then-report=%d, mismatches=%d" % (outs[-1].account.balance, mismatches))


# ---------------------------------------------------------------- 13

def test_c13_undo_roundtrip():
    rng = random.Random(13)
    failures = 0
    alphabet = "abcxyz XYZ01"
    for _ in range(1000):
        rows = ["".join(rng.choice(alphabet) for _ in range(rng.randint(0, 8))) for _ in range(rng.randint(1, 4))]
        buf = TextBuffer(list(rows))
        cap = rng.randint(1, 30)
        st = UndoStack(cap)
        k = rng.randint(0, cap)
        for _ in range(k):
            r = rng.randrange(len(buf.rows))
            col = rng.randint(0, len(buf.rows[r]))
            sel = rng.randint(0, len(buf.rows[r]) - col)
            apply_edit(buf, st, r, col, rng.choice(alphabet), sel)
        for _ in range(k):
            undo_last(buf, st)
        if buf.rows != rows or len(st):
            failures += 1
    report(13, failures == 0, "failures=%d" % failures)


# ---------------------------------------------------------------- 14

def test_c14_lending_integrity():
    rng = random.Random(14)
    reg = Registry.stocked(6, 6)
    dangling = 0
    identity_breaks = 0
    for _ in range(10_000):
        items = [it.id for it in reg.items()] + [reg.next_item_id]
        pats = [p.id for p in reg.patrons()] + [reg.next_patron_id]
        op = rng.choice(("borrow", "borrow", "return", "add_item", "add_patron", "remove_item", "remove_patron"))
        if op == "borrow":
            p, i = rng.choice(pats), rng.choice(items)
            before = reg.link_state()
            if reg.borrow(p, i):
                assert reg.return_item(p, i)
                identity_breaks += reg.link_state() != before
                reg.borrow(p, i)
            else:
                identity_breaks += reg.link_state() != before
        elif op == "return":
            reg.return_item(rng.choice(pats), rng.choice(items))
        elif op == "add_item":
            try:
                reg.add_item()
            except Exception:
                pass
        elif op == "add_patron":
            try:
                reg.add_patron()
            except Exception:
                pass
        elif op == "remove_item":
            reg.remove_item(rng.choice(items))
        else:
            reg.remove_patron(rng.choice(pats))
        dangling += len(reg.integrity_errors())
    report(14, dangling == 0 and identity_breaks == 0,
           "dangling=%d identity_breaks=%d" % (dangling, identity_breaks))


# ---------------------------------------------------------------- 15

def test_c15_whole_suite_budget():
    elapsed = time.perf_counter() - SUITE_START
    done = sorted(RESULTS)
    report(15, elapsed < 300 and done == list(range(1, 15)),
           "%.1fs for criteria %s" % (elapsed, ",".join(map(str, done))))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
