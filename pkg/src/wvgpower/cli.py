"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 computation infeasible
(size caps, engine mismatch), 3 golden mismatch under ``scenario --check``.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from wvgpower import __version__
from wvgpower.apportionment import SeatAllocation, allocate
from wvgpower.errors import GameFileError, WvgError
from wvgpower.game import WeightedVotingGame, warn_if_not_proper
from wvgpower.indices import (
    ENGINES,
    IndexKind,
    IndexReport,
    banzhaf,
    coleman_initiate,
    coleman_prevent,
    deegan_packel,
    holler_pgi,
    shapley_shubik,
    swing_profile,
)
from wvgpower.io import (
    dumps_report,
    game_document,
    load_game_file,
    parse_game_literal,
    report_document,
    reports_to_csv,
)
from wvgpower.myerson import CommunicationGraph, myerson_index
from wvgpower.scenarios import GoldenDelta, golden_diff, load_scenario, scenario_names

EXIT_GOLDEN_MISMATCH = 3

INDEX_NAMES = {
    "ssi": IndexKind.SSI,
    "banzhaf": IndexKind.BANZHAF_NORM,
    "banzhaf-abs": IndexKind.BANZHAF_ABS,
    "pgi": IndexKind.PGI,
    "deegan-packel": IndexKind.DEEGAN_PACKEL,
    "coleman-prevent": IndexKind.COLEMAN_PREVENT,
    "coleman-initiate": IndexKind.COLEMAN_INITIATE,
    "myerson": IndexKind.MYERSON,
}
ALIASES = {
    "coleman": ["coleman-prevent", "coleman-initiate"],
    "holler": ["pgi"],
    "all": ["ssi", "banzhaf", "banzhaf-abs", "pgi", "deegan-packel", "coleman-prevent",
            "coleman-initiate", "myerson"],
}
DEFAULT_INDICES = ["ssi", "banzhaf", "pgi", "deegan-packel", "coleman-prevent", "coleman-initiate"]
DEFAULT_INDICES_KINDS = [INDEX_NAMES[k] for k in DEFAULT_INDICES]
SWING_KINDS = {IndexKind.SSI, IndexKind.BANZHAF_NORM, IndexKind.BANZHAF_ABS,
               IndexKind.COLEMAN_PREVENT, IndexKind.COLEMAN_INITIATE}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_indices(text: str | None) -> list[IndexKind] | None:
    if text is None:
        return None
    kinds: list[IndexKind] = []
    for token in (t.strip().lower() for t in text.split(",")):
        if not token:
            continue
        for name in ALIASES.get(token, [token]):
            if name not in INDEX_NAMES:
                raise GameFileError(
                    f"unknown index {token!r}; choose from {', '.join([*INDEX_NAMES, *ALIASES])}")
            if INDEX_NAMES[name] not in kinds:
                kinds.append(INDEX_NAMES[name])
    if not kinds:
        raise GameFileError("no indices selected")
    return kinds


def compute_reports(game: WeightedVotingGame, kinds: Sequence[IndexKind], engine: str = "dp",
                    graph: CommunicationGraph | None = None) -> list[IndexReport]:
    profile = swing_profile(game, engine) if SWING_KINDS & set(kinds) else None
    out = []
    for kind in kinds:
        if kind is IndexKind.SSI:
            out.append(shapley_shubik(game, engine, profile))
        elif kind is IndexKind.BANZHAF_NORM:
            out.append(banzhaf(game, True, engine, profile))
        elif kind is IndexKind.BANZHAF_ABS:
            out.append(banzhaf(game, False, engine, profile))
        elif kind is IndexKind.COLEMAN_PREVENT:
            out.append(coleman_prevent(game, engine, profile))
        elif kind is IndexKind.COLEMAN_INITIATE:
            out.append(coleman_initiate(game, engine, profile))
        elif kind is IndexKind.PGI:
            out.append(holler_pgi(game))
        elif kind is IndexKind.DEEGAN_PACKEL:
            out.append(deegan_packel(game))
        elif kind is IndexKind.MYERSON:
            if graph is None:
                raise GameFileError("the Myerson index needs \"edges\" in the game file")
            out.append(myerson_index(game, graph))
    return out


def format_table(game: WeightedVotingGame, reports: Sequence[IndexReport], precision: int,
                 title: str | None = None) -> str:
    headers = ["party", "weight"] + [r.kind.value for r in reports]
    rows = [[p.name, str(p.weight)] + [r.rendered(precision)[p.id] for r in reports]
            for p in game.parties]
    widths = [max(len(h), *(len(row[k]) for row in rows)) for k, h in enumerate(headers)]

    def line(cells):
        return "  ".join(c.ljust(widths[0]) if k == 0 else c.rjust(widths[k])
                         for k, c in enumerate(cells)).rstrip()

    out = []
    if title:
        out.append(title)
    out.append(f"game {game.literal()}")
    out.append(line(headers))
    out.append(line(["-" * w for w in widths]))
    out.extend(line(row) for row in rows)
    out.append("")
    for r in reports:
        ranking = " > ".join("=".join(group) for group in r.ranking_names())
        out.append(f"ranking {r.kind.value}: {ranking}")
    return "\n".join(out) + "\n"


def format_deltas(deltas: Sequence[GoldenDelta]) -> str:
    lines = []
    for d in deltas:
        delta = "0" if d.delta == 0 else f"{d.delta:+.2f}"
        flag = "" if d.ok else "  MISMATCH"
        lines.append(f"{d.party} {d.kind.value} = {d.computed}, golden {d.golden}, delta {delta}{flag}")
    return "\n".join(lines) + ("\n" if lines else "")


def _emit(args, game, reports, name, extra=None) -> str:
    if args.output == "csv":
        return reports_to_csv(reports, args.precision)
    if args.output == "machine":
        doc = report_document(reports, game, name=name, precision=args.precision,
                              version=__version__ if args.include_version else None)
        if extra:
            doc.update(extra)
        return dumps_report(doc)
    title = f"{name} (wvgpower {__version__})" if args.include_version else name
    return format_table(game, reports, args.precision, title)


def _majority_quota(total: int) -> int:
    return total // 2 + 1


def cmd_compute(args) -> int:
    graph = None
    name = None
    if args.game_literal:
        if args.file:
            raise GameFileError("give either a game file or --game-literal, not both")
        game = parse_game_literal(args.game_literal)
    elif args.file:
        gf = load_game_file(args.file)
        name, graph = gf.name, gf.graph
        if gf.game is not None:
            game = gf.game
        else:
            alloc = allocate(gf.election)
            game = alloc.game(args.quota or _majority_quota(sum(alloc.seats)))
    else:
        raise GameFileError("a game file or --game-literal is required")
    if args.quota is not None:
        try:
            game = game.with_quota(args.quota)
        except GameFileError as exc:
            raise GameFileError(f"--quota: {exc}") from None
    warn_if_not_proper(game)
    kinds = parse_indices(args.indices)
    if kinds is None:
        kinds = DEFAULT_INDICES_KINDS + ([IndexKind.MYERSON] if graph is not None else [])
    reports = compute_reports(game, kinds, args.engine, graph)
    sys.stdout.write(_emit(args, game, reports, name))
    return 0


def cmd_scenario(args) -> int:
    sc = load_scenario(args.name)
    game = sc.game
    if args.quota is not None:
        game = game.with_quota(args.quota)
        warn_if_not_proper(game)
    kinds = parse_indices(args.indices) or list(sc.goldens)
    reports = compute_reports(game, kinds, args.engine, sc.graph)
    # goldens only apply to the published quota
    deltas = golden_diff(sc, reports, args.precision) if game == sc.game else []
    if args.output == "machine":
        extra = {"golden_diff": [
            {"index": d.kind.value, "party": d.party, "computed": str(d.computed),
             "golden": str(d.golden), "delta": str(d.delta), "ok": d.ok} for d in deltas]}
        sys.stdout.write(_emit(args, game, reports, sc.name, extra))
    elif args.output == "csv":
        sys.stdout.write(_emit(args, game, reports, sc.name))
        sys.stderr.write(format_deltas(deltas))
    else:
        sys.stdout.write(_emit(args, game, reports, sc.name))
        if deltas:
            sys.stdout.write("\ngolden diff\n" + format_deltas(deltas))
    bad = [d for d in deltas if not d.ok]
    if bad:
        print(f"{len(bad)} of {len(deltas)} entries differ from the published values by more "
              "than 0.01", file=sys.stderr)
        if args.check:
            return EXIT_GOLDEN_MISMATCH
    return 0


def format_allocation(alloc: SeatAllocation, shares) -> str:
    width = max(5, *(len(n) for n in alloc.names))
    out = [f"{'party'.ljust(width)}  {'share%':>7}  {'qualifies':>9}  {'seats':>5}"]
    for i, nm in enumerate(alloc.names):
        mark = "  +bonus (plurality)" if i == alloc.winner else ""
        pct = shares[i] * 100
        out.append(f"{nm.ljust(width)}  {float(pct):7.2f}  {'yes' if alloc.qualifying[i] else 'no':>9}"
                   f"  {alloc.seats[i]:5d}{mark}")
    out.append(f"{'total'.ljust(width)}  {'':7}  {'':9}  {sum(alloc.seats):5d}")
    return "\n".join(out) + "\n"


def cmd_apportion(args) -> int:
    gf = load_game_file(args.file)
    if gf.election is None:
        raise GameFileError(f"{args.file}: no \"votes\" to apportion")
    alloc = allocate(gf.election)
    quota = args.quota or _majority_quota(sum(alloc.seats))
    game = alloc.game(quota)
    if args.output == "machine":
        doc = {"seats": dict(zip(alloc.names, alloc.seats)),
               "qualifying": [nm for nm, ok in zip(alloc.names, alloc.qualifying) if ok],
               "winner": alloc.names[alloc.winner],
               "game": game_document(game, name=gf.name)}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(format_allocation(alloc, gf.election.shares))
        sys.stdout.write(f"induced game {game.literal()}\n")
    if args.emit_game:
        Path(args.emit_game).write_text(
            json.dumps(game_document(game, name=gf.name), indent=2) + "\n", encoding="utf-8")
    return 0


def cmd_list(args) -> int:
    for name in scenario_names():
        sc = load_scenario(name)
        graph = "graph" if sc.graph is not None else "no graph"
        kinds = ",".join(k.value for k in sc.goldens)
        print(f"{name}  {sc.game.literal()}  {graph}  goldens: {kinds}")
    return 0


def _add_compute_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--indices", help="comma list: " + ", ".join([*INDEX_NAMES, *ALIASES]))
    p.add_argument("--quota", type=int, help="override the quota")
    p.add_argument("--precision", type=int, default=2, help="decimal places shown (default 2)")
    p.add_argument("--engine", choices=ENGINES, default="dp",
                   help="swing counting engine; 'both' cross-checks (default dp)")
    p.add_argument("--output", choices=("table", "csv", "machine"), default="table")
    p.add_argument("--include-version", action="store_true",
                   help="stamp the tool version into the output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wvgpower", description="Power indices for weighted voting games.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="indices for a game file or literal")
    p.add_argument("file", nargs="?", help="game file (JSON)")
    p.add_argument("--game-literal", help="inline game such as '[3; 2,1,1]'")
    _add_compute_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("scenario", help="run a bundled scenario against the published values")
    p.add_argument("name")
    p.add_argument("--check", action="store_true",
                   help=f"exit {EXIT_GOLDEN_MISMATCH} if any entry is off by more than 0.01")
    _add_compute_flags(p)
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("apportion", help="seats from vote shares")
    p.add_argument("file", help="file with a \"votes\" list")
    p.add_argument("--quota", type=int, help="quota of the induced game (default: majority)")
    p.add_argument("--emit-game", metavar="PATH", help="write the induced game file")
    p.add_argument("--output", choices=("table", "machine"), default="table")
    p.set_defaults(func=cmd_apportion)

    p = sub.add_parser("list-scenarios", help="bundled scenarios")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "precision", 2) < 0:
        print("wvgpower: error: --precision must be >= 0", file=sys.stderr)
        return 1
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except WvgError as exc:
            print(f"wvgpower: error: {exc}", file=sys.stderr)
            return exc.exit_code


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"wvgpower: warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
