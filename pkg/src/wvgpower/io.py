"""Game files, report documents and CSV output.

A game file is a JSON object::

    {
      "name": "may2012",                       # optional
      "quota": 151,                            # required with "parties"
      "parties": [{"name": "ND", "weight": 108}, ...],
      "edges": [["PASOK", "ND"], ...],         # optional
      "votes": [{"name": "ND", "percent": "18.85"}, ...],   # optional
      "total_votes": 6155464,                  # optional, with "count" votes
      "note": "free text"                      # optional
    }

Each vote entry carries either ``percent`` (a decimal string, read exactly)
or an integer ``count``.  A file may hold only ``votes``; the game is then
derived by apportionment.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable

from wvgpower.apportionment import ElectionResult
from wvgpower.errors import GameFileError
from wvgpower.game import WeightedVotingGame
from wvgpower.indices import IndexKind, IndexReport
from wvgpower.myerson import CommunicationGraph

TOP_KEYS = {"name", "quota", "parties", "edges", "votes", "total_votes", "note"}
PARTY_KEYS = {"name", "weight"}
VOTE_KEYS = {"name", "percent", "count"}
REPORT_FORMAT = "wvgpower-report/1"

_DECIMAL = re.compile(r"^\d+(\.\d+)?$")


@dataclass(frozen=True)
class GameFile:
    name: str | None
    game: WeightedVotingGame | None
    graph: CommunicationGraph | None
    election: ElectionResult | None
    note: str | None = None
    edge_names: tuple[tuple[str, str], ...] = ()


def _fail(path: str, msg: str):
    raise GameFileError(f"{path}: {msg}")


def _int(value: Any, path: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        _fail(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(path, f"must be >= {minimum}, got {value}")
    return value


def _str(value: Any, path: str) -> str:
    if not isinstance(value, str) or not value:
        _fail(path, f"expected a nonempty string, got {value!r}")
    return value


def _list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {type(value).__name__}")
    return value


def _object(value: Any, path: str, keys: set[str]) -> dict:
    if not isinstance(value, dict):
        _fail(path, f"expected an object, got {type(value).__name__}")
    unknown = sorted(set(value) - keys)
    if unknown:
        _fail(path, f"unknown key(s) {', '.join(unknown)}")
    return value


def _percent(value: Any, path: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str) and _DECIMAL.match(value.strip()):
        return Fraction(value.strip())
    _fail(path, f"percent must be a decimal string such as \"18.85\", got {value!r}")


def parse_game_document(doc: Any) -> GameFile:
    doc = _object(doc, "$", TOP_KEYS)
    name = _str(doc["name"], "$.name") if "name" in doc else None
    note = doc.get("note")
    if note is not None and not isinstance(note, str):
        _fail("$.note", "expected a string")

    game = None
    if "parties" in doc:
        if "quota" not in doc:
            _fail("$", "\"quota\" is required with \"parties\"")
        names, weights = [], []
        for k, entry in enumerate(_list(doc["parties"], "$.parties")):
            p = f"$.parties[{k}]"
            entry = _object(entry, p, PARTY_KEYS)
            for key in PARTY_KEYS:
                if key not in entry:
                    _fail(p, f"missing \"{key}\"")
            names.append(_str(entry["name"], p + ".name"))
            weights.append(_int(entry["weight"], p + ".weight", 0))
        quota = _int(doc["quota"], "$.quota", 1)
        try:
            game = WeightedVotingGame.from_weights(quota, weights, names)
        except GameFileError as exc:
            _fail("$", str(exc))
    elif "quota" in doc and "votes" not in doc:
        _fail("$", "\"quota\" given without \"parties\" or \"votes\"")

    graph = None
    edge_names: list[tuple[str, str]] = []
    if "edges" in doc:
        if game is None:
            _fail("$.edges", "edges need a \"parties\" list")
        for k, pair in enumerate(_list(doc["edges"], "$.edges")):
            p = f"$.edges[{k}]"
            if not isinstance(pair, list) or len(pair) != 2:
                _fail(p, "expected a pair of party names")
            a, b = _str(pair[0], p + "[0]"), _str(pair[1], p + "[1]")
            for nm in (a, b):
                if nm not in game.names:
                    _fail(p, f"unknown party {nm!r}")
            edge_names.append((a, b))
        graph = CommunicationGraph.from_names(game, edge_names)

    election = None
    if "votes" in doc:
        entries = []
        kinds = set()
        for k, entry in enumerate(_list(doc["votes"], "$.votes")):
            p = f"$.votes[{k}]"
            entry = _object(entry, p, VOTE_KEYS)
            nm = _str(entry.get("name"), p + ".name")
            if game is not None and nm not in game.names:
                _fail(p, f"unknown party {nm!r}")
            has = [key for key in ("percent", "count") if key in entry]
            if len(has) != 1:
                _fail(p, "give exactly one of \"percent\" or \"count\"")
            kinds.add(has[0])
            if has[0] == "percent":
                entries.append((nm, _percent(entry["percent"], p + ".percent")))
            else:
                entries.append((nm, _int(entry["count"], p + ".count", 0)))
        if len(kinds) > 1:
            _fail("$.votes", "mixes \"percent\" and \"count\" entries")
        try:
            if kinds == {"count"}:
                total = _int(doc["total_votes"], "$.total_votes", 1) if "total_votes" in doc else None
                election = ElectionResult.from_counts(entries, total)
            else:
                if "total_votes" in doc:
                    _fail("$.total_votes", "only valid with \"count\" votes")
                election = ElectionResult.from_percentages(entries)
        except GameFileError as exc:
            if str(exc).startswith("$"):
                raise
            _fail("$.votes", str(exc))
    elif "total_votes" in doc:
        _fail("$.total_votes", "given without \"votes\"")

    if game is None and election is None:
        _fail("$", "document has neither \"parties\" nor \"votes\"")
    return GameFile(name, game, graph, election, note, tuple(edge_names))


def loads_game_file(text: str) -> GameFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_game_document(doc)


def load_game_file(path: str | Path) -> GameFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GameFileError(f"{path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise GameFileError(f"{path}: not valid UTF-8") from None
    try:
        return loads_game_file(text)
    except GameFileError as exc:
        raise GameFileError(f"{path}: {exc}") from None


def game_document(game: WeightedVotingGame, graph: CommunicationGraph | None = None,
                  name: str | None = None, note: str | None = None) -> dict:
    doc: dict[str, Any] = {}
    if name:
        doc["name"] = name
    if note:
        doc["note"] = note
    doc["quota"] = game.quota
    doc["parties"] = [{"name": p.name, "weight": p.weight} for p in game.parties]
    if graph is not None:
        doc["edges"] = [list(e) for e in graph.edge_names(game.names)]
    return doc


def parse_game_literal(text: str) -> WeightedVotingGame:
    """Read ``[q; w1, w2, ...]``; parties are named A, B, C, ..."""
    m = re.fullmatch(r"\s*\[\s*(\d+)\s*;\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*", text)
    if not m:
        raise GameFileError(f"game literal must look like [q; w1, w2, ...], got {text!r}")
    weights = [int(x) for x in m.group(2).split(",")]
    return WeightedVotingGame.from_weights(int(m.group(1)), weights)


def _fraction_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def report_document(reports: Iterable[IndexReport], game: WeightedVotingGame, *,
                    name: str | None = None, precision: int = 2,
                    version: str | None = None) -> dict:
    reports = list(reports)
    doc: dict[str, Any] = {
        "format": REPORT_FORMAT,
        "game": {"name": name, "literal": game.literal(), "quota": game.quota,
                 "parties": list(game.names), "weights": list(game.weights)},
        "precision": precision,
        "indices": [
            {
                "kind": r.kind.value,
                "engine": r.engine,
                "values": {nm: _fraction_str(v) for nm, v in zip(r.names, r.values)},
                "rendered": dict(zip(r.names, r.rendered(precision))),
                "ranking": r.ranking_names(),
            }
            for r in reports
        ],
    }
    if version is not None:
        doc["version"] = version
    return doc


def reports_from_document(doc: dict) -> list[IndexReport]:
    if doc.get("format") != REPORT_FORMAT:
        raise GameFileError(f"not a {REPORT_FORMAT} document")
    names = tuple(doc["game"]["parties"])
    out = []
    for entry in doc["indices"]:
        values = tuple(_parse_fraction(entry["values"][nm]) for nm in names)
        out.append(IndexReport(IndexKind(entry["kind"]), names, values, entry["engine"],
                               doc.get("precision", 2)))
    return out


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


CSV_HEADER = ["party", "index", "value", "numerator", "denominator"]


def reports_to_csv(reports: Iterable[IndexReport], precision: int = 2) -> str:
    """Tidy rows, one per (party, index)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        for nm, v, text in zip(r.names, r.values, r.rendered(precision)):
            writer.writerow([nm, r.kind.value, text, v.numerator, v.denominator])
    return buf.getvalue()


def reports_from_csv(text: str) -> dict[tuple[str, str], Fraction]:
    rows = csv.DictReader(io.StringIO(text))
    return {(row["party"], row["index"]): Fraction(int(row["numerator"]), int(row["denominator"]))
            for row in rows}
