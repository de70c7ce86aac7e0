"""Command-line front end.

All logic lives in the library modules; the CLI only parses arguments,
formats output, and maps results to exit codes: 0 for success, 1 for a
well-formed negative answer, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import graphs, hands, oracle, rubric
from .deck import AceRule, DeckSpec, InvalidDeckError
from .graphs import EulerianStatus, GraphFormatError, Trail
from .hands import HandCategory, WildCardsUnsupportedError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parlorproofs",
        description="Exact poker-hand combinatorics, Eulerian trail analysis, "
                    "and rubric scoring.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    poker = top.add_parser("poker", help="hand counts, probabilities, winners")
    poker_sub = poker.add_subparsers(dest="command", required=True)

    def add_deck_flags(p, wilds=True):
        p.add_argument("--values", type=int, default=13, metavar="V")
        p.add_argument("--suits", type=int, default=4, metavar="S")
        if wilds:
            p.add_argument("--wilds", type=int, default=0, metavar="W")
        p.add_argument("--ace", choices=("both", "high"), default="both")

    for name in ("count", "prob"):
        p = poker_sub.add_parser(name)
        add_deck_flags(p)
        p.add_argument("category", nargs="?", metavar="CATEGORY")
        p.add_argument("--all", action="store_true", dest="all_categories")

    p = poker_sub.add_parser("winner")
    add_deck_flags(p, wilds=False)
    p.add_argument("entries", nargs="+", metavar="NAME=CATEGORY")

    p = poker_sub.add_parser("verify")
    add_deck_flags(p, wilds=False)
    p.add_argument("--threads", type=int, default=1, metavar="N")
    p.add_argument("--csv", action="store_true")

    p = poker_sub.add_parser("proof")
    add_deck_flags(p, wilds=False)
    p.add_argument("category", metavar="CATEGORY")

    graph = top.add_parser("graph", help="Eulerian trail analysis of graph files")
    graph_sub = graph.add_subparsers(dest="command", required=True)
    for name in ("analyze", "trail", "proof"):
        p = graph_sub.add_parser(name)
        p.add_argument("file", metavar="FILE")

    rub = top.add_parser("rubric", help="score a mark sheet against a rubric")
    rub_sub = rub.add_subparsers(dest="command", required=True)
    p = rub_sub.add_parser("score")
    p.add_argument("rubric_file", metavar="RUBRIC_FILE")
    p.add_argument("marks_file", metavar="MARKS_FILE")

    return parser


def _deck_spec(args, wilds_attr: bool = True) -> DeckSpec:
    ace = AceRule.BOTH if args.ace == "both" else AceRule.HIGH_ONLY
    try:
        return DeckSpec(values=args.values, suits=args.suits,
                        wilds=getattr(args, "wilds", 0) if wilds_attr else 0,
                        ace_rule=ace)
    except InvalidDeckError as exc:
        raise _CliError(str(exc))


def _category(slug: str) -> HandCategory:
    try:
        return HandCategory.from_slug(slug)
    except ValueError as exc:
        raise _CliError(str(exc))


def _poker_count(args, out) -> int:
    spec = _deck_spec(args)
    want_prob = args.command == "prob"
    if args.all_categories:
        categories = list(HandCategory)
    elif args.category:
        categories = [_category(args.category)]
    else:
        raise _CliError("give a CATEGORY or --all")
    try:
        for cat in categories:
            if want_prob:
                p = hands.probability(cat, spec)
                print(f"{cat.slug}: {p.format()}", file=out)
            else:
                print(f"{cat.slug}: {hands.count_category(cat, spec)}", file=out)
    except WildCardsUnsupportedError as exc:
        raise _CliError(str(exc))
    return EXIT_OK


def _poker_winner(args, out) -> int:
    spec = _deck_spec(args, wilds_attr=False)
    entries = []
    for item in args.entries:
        if "=" not in item:
            raise _CliError(f"expected NAME=CATEGORY, got {item!r}")
        name, slug = item.split("=", 1)
        entries.append((name, _category(slug)))
    report = hands.determine_winner(entries, spec)
    for name, cat in report.excluded:
        print(f"excluded: {name} ({cat.slug} is impossible in this deck)",
              file=out)
    if report.winner is not None:
        chain = " < ".join(f"{p.count}/{p.total}" for _, _, p in report.ranking)
        print(f"{report.winner} wins ({chain})", file=out)
        return EXIT_OK
    if report.is_tie:
        print("Tie: " + ", ".join(report.tied), file=out)
        return EXIT_OK
    print("no winner: every entry is impossible in this deck", file=out)
    return EXIT_NEGATIVE


def _poker_verify(args, out) -> int:
    spec = _deck_spec(args, wilds_attr=False)
    try:
        report = oracle.verify_closed_forms(spec, workers=args.threads)
    except oracle.EnumerationCapError as exc:
        raise _CliError(str(exc))
    print(report.render_csv() if args.csv else report.render_text(), file=out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _poker_proof(args, out) -> int:
    spec = _deck_spec(args, wilds_attr=False)
    doc = hands.combinatorial_proof(_category(args.category), spec)
    print(doc.render_text(), file=out)
    return EXIT_OK


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}")


def _load_graph(path: str) -> graphs.Multigraph:
    try:
        return graphs.parse_graph(_read_file(path))
    except GraphFormatError as exc:
        raise _CliError(f"{path}: {exc}")


def _graph_status_line(g: graphs.Multigraph) -> str:
    status = graphs.eulerian_status(g)
    odd = graphs.odd_vertices(g)
    if status is EulerianStatus.CIRCUIT:
        return "Circuit: every vertex has even degree"
    if status is EulerianStatus.OPEN_TRAIL:
        return f"OpenTrail: odd-degree vertices {odd[0]} and {odd[1]}"
    if status is EulerianStatus.NO_TRAIL:
        return f"NoTrail: {len(odd)} vertices of odd degree"
    return "Disconnected: edges span more than one component"


def _graph_analyze(args, out) -> int:
    g = _load_graph(args.file)
    try:
        print(_graph_status_line(g), file=out)
    except graphs.DegenerateGraphError as exc:
        raise _CliError(str(exc))
    return EXIT_OK


def _graph_trail(args, out) -> int:
    g = _load_graph(args.file)
    try:
        result = graphs.find_trail(g)
    except graphs.DegenerateGraphError as exc:
        raise _CliError(str(exc))
    if isinstance(result, Trail):
        print(result.render_text(), file=out)
        return EXIT_OK
    print(_graph_status_line(g), file=out)
    return EXIT_NEGATIVE


def _graph_proof(args, out) -> int:
    g = _load_graph(args.file)
    try:
        doc = graphs.impossibility_proof(g)
    except graphs.DegenerateGraphError as exc:
        raise _CliError(str(exc))
    except graphs.ProofContractError as exc:
        print(str(exc), file=out)
        return EXIT_NEGATIVE
    print(doc.render_text(), file=out)
    return EXIT_OK


def _rubric_score(args, out) -> int:
    try:
        loaded = rubric.load_rubric(_read_file(args.rubric_file))
        marks = rubric.parse_marks(_read_file(args.marks_file))
        report = rubric.score(loaded, marks)
    except (rubric.RubricFormatError, rubric.MarkSheetError) as exc:
        raise _CliError(str(exc))
    print(report.render_text(), file=out)
    return EXIT_OK


_HANDLERS = {
    ("poker", "count"): _poker_count,
    ("poker", "prob"): _poker_count,
    ("poker", "winner"): _poker_winner,
    ("poker", "verify"): _poker_verify,
    ("poker", "proof"): _poker_proof,
    ("graph", "analyze"): _graph_analyze,
    ("graph", "trail"): _graph_trail,
    ("graph", "proof"): _graph_proof,
    ("rubric", "score"): _rubric_score,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[(args.group, args.command)](args, out)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
