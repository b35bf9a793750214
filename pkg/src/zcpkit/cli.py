"""Command-line front end.

Subcommands::

    zcpkit gcp K2*K10 [--json]
    zcpkit zcp K10*K10 --pos front --x +1 --y -1 [--report | --predict]
    zcpkit classify pair.txt
    zcpkit profile pair.txt --format csv
    zcpkit search --max-zcz 9 --type 1
    zcpkit search --insert K10 [--unequal]

Exit codes: 0 success, 1 validation error, 2 verification violation
(a measured profile disagreeing with its prediction). All output is exact
integers; pair files use the two-line '+'/'-' text format. The environment
variable ZCPKIT_SEARCH_CAP overrides the exhaustive search cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .core import SequencePair, format_sequence, parse_pair
from .golay import GcpRecipe, build_gcp
from .zcp import (
    InsertionSpec,
    Position,
    UnsupportedConstructionError,
    VerificationError,
    ZcpReport,
    ZcpType,
    classify,
    construct_obzcp,
    measure_insertion,
    predicted_profile,
)
from .search import (
    DEFAULT_EXHAUSTIVE_CAP,
    exhaustive_max_zcz,
    insertion_search,
)

SEARCH_CAP_ENV = "ZCPKIT_SEARCH_CAP"

_SIGNS = {"+1": 1, "-1": -1, "+": 1, "-": -1}

# Default insertion signs per position, chosen to land Type-I for front/end
# and the (always Type-II) middle construction.
_DEFAULT_SIGNS = {
    Position.FRONT: (1, -1),
    Position.END: (1, 1),
    Position.MIDDLE: (1, 1),
}


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's default 2
        raise _CliError(message)


def _parse_sign(text: str) -> int:
    sign = _SIGNS.get(text.strip())
    if sign is None:
        raise _CliError(f"invalid sign {text!r} (expected +1, -1, + or -)")
    return sign


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _read_pair(path: str) -> SequencePair:
    return parse_pair(Path(path).read_text(encoding="ascii"))


def _print_pair(pair: SequencePair) -> None:
    print(format_sequence(pair.first))
    print(format_sequence(pair.second))


def export_profile(report: ZcpReport, fmt: str) -> str:
    """Render a report as 'csv' rows (tau,aacs_sum,magnitude) or as JSON."""
    if fmt == "csv":
        lines = ["tau,aacs_sum,magnitude"]
        lines.extend(f"{tau},{v},{abs(v)}" for tau, v in enumerate(report.profile))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n"
    raise _CliError(f"unknown profile format {fmt!r}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="zcpkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_gcp = sub.add_parser("gcp", help="build a Golay pair from a recipe string")
    p_gcp.add_argument("recipe", help="product expression, e.g. K2*K10")
    p_gcp.add_argument("--json", action="store_true", help="emit a JSON record")

    p_zcp = sub.add_parser("zcp", help="build an odd-length pair by insertion")
    p_zcp.add_argument("recipe")
    p_zcp.add_argument("--pos", required=True, choices=[p.value for p in Position])
    p_zcp.add_argument("--x", default=None, help="sign inserted into row 1 (+1/-1)")
    p_zcp.add_argument("--y", default=None, help="sign inserted into row 2 (+1/-1)")
    mode = p_zcp.add_mutually_exclusive_group()
    mode.add_argument("--report", action="store_true", help="print the measured report")
    mode.add_argument("--predict", action="store_true", help="print the predicted profile")

    p_classify = sub.add_parser("classify", help="classify a pair read from a file")
    p_classify.add_argument("file")

    p_profile = sub.add_parser("profile", help="export a pair's profile")
    p_profile.add_argument("file")
    p_profile.add_argument("--format", required=True, choices=["csv", "json"])

    p_search = sub.add_parser("search", help="run a brute-force search")
    target = p_search.add_mutually_exclusive_group(required=True)
    target.add_argument("--max-zcz", type=int, metavar="N", help="exhaustive max-ZCZ search")
    target.add_argument("--insert", metavar="RECIPE_OR_FILE", help="insertion grid search")
    p_search.add_argument("--type", choices=["1", "2"], help="ZCP type for --max-zcz")
    p_search.add_argument(
        "--unequal", action="store_true", help="allow different insertion positions per row"
    )
    return parser


def _cmd_gcp(args) -> int:
    recipe = GcpRecipe.parse(args.recipe)
    pair = build_gcp(recipe)
    if args.json:
        _print_json(
            {
                "length": pair.length,
                "recipe": str(recipe),
                "rows": [format_sequence(pair.first), format_sequence(pair.second)],
            }
        )
    else:
        _print_pair(pair)
    return 0


def _cmd_zcp(args) -> int:
    recipe = GcpRecipe.parse(args.recipe)
    position = Position(args.pos)
    default_x, default_y = _DEFAULT_SIGNS[position]
    x = _parse_sign(args.x) if args.x is not None else default_x
    y = _parse_sign(args.y) if args.y is not None else default_y
    spec = InsertionSpec(position, x, y)

    if args.predict:
        _print_json(predicted_profile(recipe, spec).to_json_dict())
        return 0

    try:
        pair, _ = construct_obzcp(recipe, spec)
        report = classify(pair) if args.report else None
    except UnsupportedConstructionError:
        # No prediction for this combination: fall back to measure-only.
        pair, report = measure_insertion(recipe, spec)

    if args.report:
        _print_json(report.to_json_dict() if report else classify(pair).to_json_dict())
    else:
        _print_pair(pair)
    return 0


def _cmd_classify(args) -> int:
    _print_json(classify(_read_pair(args.file)).to_json_dict())
    return 0


def _cmd_profile(args) -> int:
    report = classify(_read_pair(args.file))
    sys.stdout.write(export_profile(report, args.format))
    return 0


def _search_cap() -> int:
    raw = os.environ.get(SEARCH_CAP_ENV)
    if raw is None:
        return DEFAULT_EXHAUSTIVE_CAP
    try:
        return int(raw)
    except ValueError:
        raise _CliError(f"{SEARCH_CAP_ENV} must be an integer, got {raw!r}") from None


def _cmd_search(args) -> int:
    if args.max_zcz is not None:
        if args.type is None:
            raise _CliError("--max-zcz requires --type {1,2}")
        zcp_type = ZcpType.TYPE1 if args.type == "1" else ZcpType.TYPE2
        result = exhaustive_max_zcz(args.max_zcz, zcp_type, cap=_search_cap())
        _print_json(result.to_json_dict())
        return 0

    target = args.insert
    try:
        pair = build_gcp(GcpRecipe.parse(target))
    except ValueError:
        if not Path(target).exists():
            raise _CliError(
                f"{target!r} is neither a recipe string nor an existing pair file"
            ) from None
        pair = _read_pair(target)
    result = insertion_search(pair, allow_unequal_positions=args.unequal)
    _print_json(result.to_json_dict())
    return 0


_HANDLERS = {
    "gcp": _cmd_gcp,
    "zcp": _cmd_zcp,
    "classify": _cmd_classify,
    "profile": _cmd_profile,
    "search": _cmd_search,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
