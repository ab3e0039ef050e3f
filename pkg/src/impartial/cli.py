"""Command-line interface: Grundy evaluation, Grundy tables, optimal moves,
verification sweeps, and a line-oriented interactive play mode.

Exit codes: 0 ok, 1 verification mismatch, 2 usage/parse error, 3 closed
form and engine disagree, 4 resource budget exceeded, 130 interactive
session aborted.  Output is deterministic: identical invocations produce
byte-identical output, except for the elapsed times in verify's reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import closed_forms, engine, verification
from .errors import BudgetExceededError, DomainError, ParseError
from .rulesets import RULESETS, format_position, parse_position

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_BUDGET = 4
EXIT_ABORTED = 130

# Cap on dense-grid cells / memoized positions; bounds a few thousand wide
# stay comfortably inside.
DEFAULT_BUDGET = 1 << 26

CONFIG_KEYS = {
    "delete-nim": "delete_nim_bound",
    "vdn": "vdn_bound",
    "sum": "sum_bound",
    "proof-steps": "proof_steps_bound",
    "iso": "iso_bound",
}


def _closed_form_value(game: str, pos) -> int:
    if game == "delete-nim":
        return closed_forms.delete_nim_grundy(*pos)
    if game == "vdn":
        return closed_forms.vdn_grundy(*pos)
    return closed_forms.nim_sum(pos)


def _engine_value(game: str, pos, budget: int) -> int:
    rules = RULESETS[game]
    if game == "nim":
        return engine.grundy(pos, rules, budget=budget)
    grid = engine.grundy_grid(rules, max(pos), budget=budget)
    return int(grid[pos[0], pos[1]])


def _grid_value_fn(game: str, pos, budget: int):
    """Option evaluator for two-heap games backed by one dense grid; None for Nim."""
    if game == "nim":
        return None
    grid = engine.grundy_grid(RULESETS[game], max(pos), budget=budget)
    return lambda q: int(grid[q[0], q[1]])


def cmd_grundy(args) -> int:
    pos = parse_position(RULESETS[args.game], args.position)
    formula = _closed_form_value(args.game, pos)
    eng = _engine_value(args.game, pos, args.budget)
    print(f"closed-form: {formula}")
    print(f"engine: {eng}")
    print(f"outcome: {'P' if eng == 0 else 'N'}")
    if formula != eng:
        print("error: closed form and engine disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _table_rows(game: str, bound: int) -> list[tuple[int, int, int]]:
    lo = 0 if game == "delete-nim" else 1
    if bound < lo:
        raise ParseError(f"bound must be >= {lo} for {game}")
    if game == "delete-nim":
        grid = closed_forms.delete_nim_grundy_grid(bound)
    else:
        grid = closed_forms.vdn_grundy_grid(bound)
    return [
        (x, y, int(grid[x, y]))
        for x in range(lo, bound + 1)
        for y in range(lo, bound + 1)
    ]


def _render_table(rows, fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["x", "y", "grundy"])
        writer.writerows(rows)
    elif fmt == "json":
        records = [{"x": x, "y": y, "grundy": g} for x, y, g in rows]
        out.write(json.dumps(records) + "\n")
    else:
        xs = sorted({x for x, _, _ in rows})
        ys = sorted({y for _, y, _ in rows})
        values = {(x, y): g for x, y, g in rows}
        width = max(len(str(g)) for _, _, g in rows)
        width = max(width, len(str(ys[-1])))
        label = max(3, len(str(xs[-1])))
        out.write(" " * label + "".join(f" {y:>{width}}" for y in ys) + "\n")
        for x in xs:
            out.write(
                f"{x:>{label}}" + "".join(f" {values[x, y]:>{width}}" for y in ys) + "\n"
            )


def cmd_table(args) -> int:
    rows = _table_rows(args.game, args.bound)
    if args.output:
        with open(args.output, "w") as fh:
            _render_table(rows, args.format, fh)
    else:
        _render_table(rows, args.format, sys.stdout)
    return EXIT_OK


def cmd_best_move(args) -> int:
    rules = RULESETS[args.game]
    pos = parse_position(rules, args.position)
    if not rules.options(pos):
        print("P-position (terminal)")
        return EXIT_OK
    move = engine.best_move(
        pos, rules, budget=args.budget, value_fn=_grid_value_fn(args.game, pos, args.budget)
    )
    print("P-position" if move is None else format_position(rules, move))
    return EXIT_OK


def _verify_bounds(args) -> dict:
    """Merge bound sources: builtin < config file < --bound < per-check flag."""
    bounds = dict(verification.DEFAULT_BOUNDS)
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read config {args.config!r}: {exc}") from exc
        for name, key in CONFIG_KEYS.items():
            if key in cfg:
                bounds[name] = int(cfg[key])
        if "bouton_heaps" in cfg or "bouton_size" in cfg:
            heaps, size = bounds["bouton"]
            bounds["bouton"] = (
                int(cfg.get("bouton_heaps", heaps)),
                int(cfg.get("bouton_size", size)),
            )
    if args.bound is not None:
        for name in CONFIG_KEYS:
            bounds[name] = args.bound
    for name, value in [
        ("delete-nim", args.bound_delete_nim),
        ("vdn", args.bound_vdn),
        ("sum", args.bound_sum),
        ("proof-steps", args.bound_proof_steps),
        ("iso", args.bound_iso),
    ]:
        if value is not None:
            bounds[name] = value
    if args.heaps is not None or args.size is not None:
        heaps, size = bounds["bouton"]
        bounds["bouton"] = (
            args.heaps if args.heaps is not None else heaps,
            args.size if args.size is not None else size,
        )
    return bounds


def cmd_verify(args) -> int:
    bounds = _verify_bounds(args)
    if args.check and not args.all:
        names = args.check
    else:
        names = list(verification.CHECK_NAMES)
    reports = []
    for name in names:
        report = verification.run_check(
            name, bounds[name], workers=args.workers, budget=args.budget
        )
        reports.append(report)
        if args.format == "text":
            print(report.text_line())
    if args.format == "json":
        print(verification.reports_to_json(reports))
    else:
        passed = sum(1 for r in reports if r.passed)
        print(f"{passed}/{len(reports)} checks passed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def cmd_play(args) -> int:
    rules = RULESETS[args.game]
    pos = parse_position(rules, args.position)
    value_fn = _grid_value_fn(args.game, pos, args.budget) if pos else None
    memo: engine.MemoTable = {}
    mover = args.first
    while True:
        print(f"position: {format_position(rules, pos)}")
        opts = rules.options(pos)
        if not opts:
            # the player to move has no options; the other player moved last
            print("engine wins" if mover == "human" else "you win")
            return EXIT_OK
        if mover == "engine":
            move = engine.best_move(
                pos, rules, memo=memo, budget=args.budget, value_fn=value_fn
            )
            if move is None:  # losing position: play the smallest canonical option
                move = sorted(opts)[0]
            print(f"engine plays {format_position(rules, move)}")
            pos = move
            mover = "human"
        else:
            try:
                line = input("your move> ")
            except EOFError:
                return EXIT_ABORTED
            try:
                move = parse_position(rules, line)
            except (ParseError, DomainError):
                print("illegal move: cannot parse (enter a position like 2,0)")
                continue
            if move not in opts:
                print(
                    f"illegal move: {format_position(rules, move)} is not an option "
                    f"of {format_position(rules, pos)}"
                )
                continue
            pos = move
            mover = "engine"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="impartial",
        description="Grundy values, optimal moves and exhaustive verification "
        "for Delete Nim, VDN and Nim.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, games):
        p.add_argument("--game", required=True, choices=games)
        p.add_argument("--position", required=True, help="position text, e.g. 3,2")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("grundy", help="closed-form and engine Grundy value of a position")
    add_common(p, sorted(RULESETS))
    p.set_defaults(func=cmd_grundy)

    p = sub.add_parser("table", help="Grundy grid for a two-heap game")
    p.add_argument("--game", required=True, choices=["delete-nim", "vdn"])
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("best-move", help="a winning move, or P-position")
    add_common(p, sorted(RULESETS))
    p.set_defaults(func=cmd_best_move)

    p = sub.add_parser("verify", help="exhaustive verification sweeps")
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.add_argument("--check", action="append", choices=verification.CHECK_NAMES)
    p.add_argument("--bound", type=int, help="bound for every selected single-bound check")
    p.add_argument("--bound-delete-nim", type=int)
    p.add_argument("--bound-vdn", type=int)
    p.add_argument("--bound-sum", type=int)
    p.add_argument("--bound-proof-steps", type=int)
    p.add_argument("--bound-iso", type=int)
    p.add_argument("--heaps", type=int, help="max heap count for the bouton check")
    p.add_argument("--size", type=int, help="max heap size for the bouton check")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--config", help="JSON file with default bounds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="interactive game against the engine")
    add_common(p, sorted(RULESETS))
    p.add_argument("--first", choices=["human", "engine"], default="human")
    p.set_defaults(func=cmd_play)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help (0) and usage errors (2)
        return 0 if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except KeyboardInterrupt:
        return EXIT_ABORTED
