"""``acc-kit`` command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from ..imaging import EffectSpec, PPMFormatError, apply_effect, parse_color, read_ppm, write_ppm
from ..sim.rng import Lcg
from ..sim.world import MODES, TraceError, WorldConfig, parse_trace
from . import repl
from .bench import SUITES, rows_to_csv, run_bench
from .repl import dispatch_command, run_session
from .simrun import run_sim_trace

REPL_MODES = ("calc", "guess", "bank", "lend", "queue", "stack", "list", "hanoi", "undo")


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path, encoding="utf-8") as f:
        cfg = json.load(f)
    if not isinstance(cfg, dict):
        raise ValueError("config file must hold a JSON object")
    return cfg


def _sizes(text: str) -> List[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be comma-separated integers") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(top: bool) -> argparse.ArgumentParser:
        # subcommands accept the same options but must not reset a value given before the mode
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--seed", type=int, default=1 if top else argparse.SUPPRESS,
                       help="RNG seed (u32, default 1)")
        p.add_argument("--config", default=None if top else argparse.SUPPRESS,
                       help="JSON file with per-mode settings")
        return p

    common = globals_parser(False)
    parser = argparse.ArgumentParser(prog="acc-kit", parents=[globals_parser(True)],
                                     description="Classic algorithms, containers and a headless game kernel.")
    sub = parser.add_subparsers(dest="mode", required=True, metavar="mode")

    sub.add_parser("calc", parents=[common], help="integer calculator menu")
    sub.add_parser("guess", parents=[common], help="guess the number 1..10")
    p = sub.add_parser("bank", parents=[common], help="accounts with a FIFO transaction queue")
    p.add_argument("--accounts", type=int, default=3)
    p.add_argument("--strict", action="store_true", help="reject withdrawals that would overdraw")
    p.add_argument("--journal", help="append each accepted transaction to this file")
    p = sub.add_parser("lend", parents=[common], help="library lending registry")
    p.add_argument("--patron-view", action="store_true", help="hide borrower ids in reports")
    for name in ("queue", "stack"):
        p = sub.add_parser(name, parents=[common], help="bounded %s demo" % name)
        p.add_argument("--max", type=int, default=None, help="capacity (default 10)")
    sub.add_parser("list", parents=[common], help="linked player list demo")
    p = sub.add_parser("hanoi", parents=[common], help="Tower of Hanoi")
    p.add_argument("--disks", type=int, default=4)
    p = sub.add_parser("undo", parents=[common], help="typing with undo history")
    p.add_argument("--text", default="", help="initial buffer contents (\\n separates rows)")
    p.add_argument("--history", type=int, default=None, help="undo capacity (default 100)")

    p = sub.add_parser("filter", parents=[common], help="apply a pixel filter to a PPM image")
    p.add_argument("effect", help="gray | blur | brightup:D | brightdown:D | fill:RRGGBB")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--mask", default="ffffff", help="mask colour RRGGBB, or 'none' (default ffffff)")

    p = sub.add_parser("sim", parents=[common], help="run the headless game from an input trace")
    p.add_argument("--trace", help="trace file; omit for no input")
    p.add_argument("--frames", type=int, required=True)
    p.add_argument("--dump", help="directory for frame_%%05d.ppm dumps")
    p.add_argument("--mode", dest="world_mode", choices=MODES, default="topdown")
    p.add_argument("--assets", help="directory of <shape>.ppm sprite overrides")

    p = sub.add_parser("bench", parents=[common], help="operation-count benchmark, CSV on stdout")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--sizes", type=_sizes, default=[16, 64, 256, 1024])
    p.add_argument("--reps", type=int, default=5)
    return parser


def make_session(args, cfg: dict) -> repl.Session:
    rng = Lcg(args.seed)
    mode = args.mode
    if mode == "calc":
        return repl.CalcSession()
    if mode == "guess":
        return repl.GuessSession(rng)
    if mode == "bank":
        journal = None
        if args.journal:
            path = args.journal

            def journal(line: str) -> None:
                with open(path, "a", encoding="utf-8") as f:
                    f.write(line + "\n")
        return repl.BankSession(args.accounts, args.strict or cfg.get("strict", False), journal)
    if mode == "lend":
        return repl.LendSession(staff=not args.patron_view)
    if mode in ("queue", "stack"):
        cap = args.max or cfg.get("capacity", 10)
        return repl.QueueSession(cap) if mode == "queue" else repl.StackSession(cap)
    if mode == "list":
        return repl.ListSession(rng)
    if mode == "hanoi":
        return repl.HanoiSession(args.disks)
    if mode == "undo":
        return repl.UndoSession(args.text.replace("\\n", "\n"), args.history or cfg.get("history", 100))
    raise ValueError("not an interactive mode: %s" % mode)


def main(argv: Optional[List[str]] = None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _load_config(args.config)
    except (OSError, ValueError) as e:
        print("acc-kit: cannot read config: %s" % e, file=sys.stderr)
        return 2
    section = cfg.get(args.mode, {})

    if args.mode in REPL_MODES:
        return run_session(make_session(args, section), stdin, stdout)

    if args.mode == "filter":
        try:
            effect = EffectSpec.parse(args.effect)
            mask = None if args.mask.lower() == "none" else parse_color(args.mask)
            img = read_ppm(args.input, mask=mask)
        except (OSError, ValueError) as e:
            print("acc-kit filter: %s" % e, file=sys.stderr)
            return 2
        write_ppm(args.output, apply_effect(img, effect))
        return 0

    if args.mode == "sim":
        try:
            events = []
            if args.trace:
                with open(args.trace, encoding="utf-8") as f:
                    events = parse_trace(f)
            config = WorldConfig(mode=args.world_mode, **section)
            summary = run_sim_trace(events, args.frames, args.seed, args.dump, args.world_mode,
                                    args.assets, config)
        except (OSError, TraceError, PPMFormatError, TypeError, ValueError) as e:
            print("acc-kit sim: %s" % e, file=sys.stderr)
            return 2
        stdout.write(json.dumps(summary, sort_keys=True) + "\n")
        return 0

    if args.mode == "bench":
        if args.reps <= 0:
            print("acc-kit bench: --reps must be positive", file=sys.stderr)
            return 2
        stdout.write(rows_to_csv(run_bench(args.suite, args.sizes, args.reps, args.seed)))
        return 0
    return 2


__all__ = ["main", "build_parser", "dispatch_command", "run_bench", "run_sim_trace"]
