"""Command-line interface.

Commands: word-info, braid, bw, family, satellite, oracle.  Every error
path prints a single line starting with "error:" and exits 1 for bad
input or usage, 2 for a violated invariant or a failed oracle sweep.
The LORENZKNOTS_WORKERS environment variable sets the default worker
count for family classification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import oracles
from .braids import (
    NotAKnotError,
    cycle_structure,
    minimal_braid,
    word_to_braid,
)
from .render import ascii_braid
from .satellites import (
    SatelliteSpec,
    is_satellite_knot,
    parse_pattern,
    satellite_braid,
    satellite_consistency,
    satellite_word,
)
from .torus import (
    InvalidParamsError,
    Verdict,
    classify,
    enumerate_family,
    params_of,
)
from .words import InvalidWordError, Word

WORKERS_ENV = "LORENZKNOTS_WORKERS"

CSV_COLUMNS = [
    "word", "p", "q", "k", "r", "n",
    "crossings", "genus2", "verdict", "q_prime", "morton_conditional",
]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(value, 1)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_word_info(args: argparse.Namespace) -> int:
    word = Word.parse(args.word)
    info: dict[str, object] = {
        "word": str(word),
        "n": len(word),
        "nL": word.n_l,
        "nR": word.n_r,
        "aperiodic": word.is_aperiodic(),
        "t": None,
        "lmax": None,
        "lmax_position": None,
        "rmin": None,
        "rmin_position": None,
        "syllables": None,
    }
    if word.is_aperiodic():
        lmax, lpos = word.l_maximal()
        rmin, rpos = word.r_minimal()
        info.update(
            t=word.trip_number(),
            lmax=str(lmax),
            lmax_position=lpos,
            rmin=str(rmin),
            rmin_position=rpos,
            syllables=[list(pair) for pair in word.syllables()],
        )
    _write_output(json.dumps(info, indent=2), args.out)
    return 0


def _cmd_braid(args: argparse.Namespace) -> int:
    word = Word.parse(args.word)
    perm = word_to_braid(word)
    if args.format == "ascii":
        _write_output(ascii_braid(perm), args.out)
    else:
        _write_output(json.dumps(perm.to_dict(), indent=2), args.out)
    return 0


def _cmd_bw(args: argparse.Namespace) -> int:
    word = Word.parse(args.word)
    braid = minimal_braid(word_to_braid(word), word.trip_number())
    _write_output(json.dumps(braid.to_dict(), indent=2), args.out)
    return 0


def _report_row(report_dict: dict) -> list[str]:
    row = []
    for column in CSV_COLUMNS:
        value = report_dict[column]
        if value is None:
            row.append("")
        elif isinstance(value, bool):
            row.append("true" if value else "false")
        else:
            row.append(str(value))
    return row


def _cmd_family(args: argparse.Namespace) -> int:
    params_of(args.p, args.q)
    words = enumerate_family(args.p, args.q)
    if args.action == "enumerate":
        _write_output("".join(f"{w}\n" for w in words), args.out)
        return 0

    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    # Pure per-word work sharded over a pool; executor map preserves input
    # order, so output is byte-identical for any worker count.
    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(classify, words))

    tallies = {verdict: 0 for verdict in Verdict}
    for report in reports:
        tallies[report.verdict] += 1
    summary = {
        "count": len(reports),
        "torus": tallies[Verdict.TORUS_STANDARD],
        "not_torus": tallies[Verdict.NOT_TORUS_NOT_SATELLITE],
        "undecided": tallies[Verdict.UNDECIDED_TORUS_CANDIDATE],
    }

    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for report in reports:
            writer.writerow(_report_row(report.to_dict()))
        buffer.write(
            "# summary count={count} torus={torus} not_torus={not_torus} "
            "undecided={undecided}\n".format(**summary))
        _write_output(buffer.getvalue(), args.out)
    else:
        lines = [json.dumps(report.to_dict()) for report in reports]
        lines.append(json.dumps(summary))
        _write_output("".join(f"{line}\n" for line in lines), args.out)
    return 0


def _cmd_satellite(args: argparse.Namespace) -> int:
    spec = SatelliteSpec(
        parse_pattern(args.left),
        parse_pattern(args.right),
        Word.parse(args.companion),
    )
    braid = satellite_braid(spec)
    knot = is_satellite_knot(spec)
    payload = {
        "A": str(spec.left),
        "B": str(spec.right),
        "C": str(spec.companion),
        "k": spec.k,
        "strands": spec.strand_count,
        "knot": knot,
        "components": len(cycle_structure(braid)),
        "word": str(satellite_word(spec)) if knot else None,
        "consistent": satellite_consistency(spec) if knot else None,
    }
    _write_output(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    suite = args.suite
    if suite in ("roundtrip", "genus"):
        bound = args.max_len if args.max_len is not None else oracles.ROUNDTRIP_MAX_LEN
        if bound > oracles.CAP_WORD_LEN:
            raise ValueError(
                f"--max-len {bound} exceeds the cap {oracles.CAP_WORD_LEN}")
        result = oracles.SUITES[suite](bound)
    elif suite == "satellite":
        bound = args.max_len if args.max_len is not None else oracles.SATELLITE_MAX_LEN
        if bound > oracles.CAP_SATELLITE_LEN:
            raise ValueError(
                f"--max-len {bound} exceeds the cap {oracles.CAP_SATELLITE_LEN}")
        result = oracles.satellite_suite(bound)
    else:
        default_p = oracles.COUNTS_MAX_P if suite == "counts" else oracles.FILTER_MAX_P
        default_q = oracles.COUNTS_MAX_Q if suite == "counts" else oracles.FILTER_MAX_Q
        max_p = args.max_p if args.max_p is not None else default_p
        max_q = args.max_q if args.max_q is not None else default_q
        if max_p > oracles.CAP_P:
            raise ValueError(f"--max-p {max_p} exceeds the cap {oracles.CAP_P}")
        if max_q > oracles.CAP_Q:
            raise ValueError(f"--max-q {max_q} exceeds the cap {oracles.CAP_Q}")
        result = oracles.SUITES[suite](max_p, max_q)

    for note in result.notes:
        print(note)
    for finding in result.counterexamples:
        print(f"counterexample: {finding}")
    print(result.summary())
    return 0 if result.passed else 2


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lorenzknots", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("word-info", help="orbit invariants of a word")
    p_info.add_argument("word")
    p_info.add_argument("--out")
    p_info.set_defaults(func=_cmd_word_info)

    p_braid = sub.add_parser("braid", help="Lorenz braid permutation of a word")
    p_braid.add_argument("word")
    p_braid.add_argument("--format", choices=["json", "ascii"], default="json")
    p_braid.add_argument("--out")
    p_braid.set_defaults(func=_cmd_braid)

    p_bw = sub.add_parser("bw", help="minimal braid word on trip-number strands")
    p_bw.add_argument("word")
    p_bw.add_argument("--out")
    p_bw.set_defaults(func=_cmd_bw)

    p_family = sub.add_parser("family", help="enumerate or classify a syllable family")
    p_family.add_argument("-p", type=int, required=True)
    p_family.add_argument("-q", type=int, required=True)
    p_family.add_argument("action", choices=["enumerate", "classify"])
    p_family.add_argument("--out")
    p_family.add_argument("--workers", type=int, default=None)
    p_family.add_argument("--format", choices=["json", "csv"], default="json")
    p_family.set_defaults(func=_cmd_family)

    p_sat = sub.add_parser("satellite", help="assemble a satellite braid and its word")
    p_sat.add_argument("-A", dest="left", required=True, metavar="WORD|trivial:K")
    p_sat.add_argument("-B", dest="right", required=True, metavar="WORD|trivial:K")
    p_sat.add_argument("-C", dest="companion", required=True, metavar="WORD")
    p_sat.add_argument("--out")
    p_sat.set_defaults(func=_cmd_satellite)

    p_oracle = sub.add_parser("oracle", help="run a brute-force verification sweep")
    p_oracle.add_argument("suite", choices=sorted(oracles.SUITES))
    p_oracle.add_argument("--max-len", type=int, default=None)
    p_oracle.add_argument("--max-p", type=int, default=None)
    p_oracle.add_argument("--max-q", type=int, default=None)
    p_oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InvalidWordError, InvalidParamsError, NotAKnotError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"error: internal invariant violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
