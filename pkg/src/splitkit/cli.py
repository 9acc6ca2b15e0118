"""Command-line front end.

Reads a degree sequence or a labeled digraph from a plain-text file, runs
any of the analyses, and prints exact integer results.  Vertex labels in
files are 1-based; all internal indices are 0-based.

Exit codes: 0 the input is split, 1 valid but not split, 2 unparseable
input, 3 invalid or non-digraphic input where the command needs it, 4 the
oracle cross-check disagreed with the fast path.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from .digraphs import Digraph, degree_sequence, repair
from .errors import NotDigraphicError, SequenceValidationError, SplitkitError
from .oracle import (
    DEFAULT_BUDGET,
    EnumerationBudget,
    brute_min_partition_measure,
    brute_realize,
    brute_splittance,
)
from .sequences import IntegerPairSequence, validate
from .splittance import (
    digraph_splittance,
    fulkerson_slack,
    is_digraphic,
    is_split_sequence,
    maximal_sequences,
    split_partitions,
    splittance_matrix,
)

EXIT_SPLIT = 0
EXIT_NOT_SPLIT = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_INPUT = 3
EXIT_ORACLE_DISAGREEMENT = 4


class InputParseError(SplitkitError):
    """The input file does not follow the documented format."""


@dataclass(frozen=True)
class InputDocument:
    """Exactly one of the two variants is present."""

    sequence: IntegerPairSequence | None = None
    digraph: Digraph | None = None

    def as_sequence(self) -> IntegerPairSequence:
        if self.sequence is not None:
            return self.sequence
        return degree_sequence(self.digraph)


def parse_document(text: str) -> InputDocument:
    """Parse the line-oriented input format.

    A sequence file starts with a ``seq`` header followed by one
    ``out in`` pair per line; a digraph file starts with ``digraph N``
    followed by one ``u v`` arc per line with 1-based labels.  Blank lines
    and ``#`` comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if not lines:
        raise InputParseError("empty input: expected a 'seq' or 'digraph N' header")

    header = lines[0].split()
    body = lines[1:]

    if header[0] == "seq":
        if len(header) != 1:
            raise InputParseError(f"malformed header {lines[0]!r}: expected 'seq'")
        pairs = []
        for line in body:
            fields = line.split()
            if len(fields) != 2:
                raise InputParseError(f"expected 'out in' pair, got {line!r}")
            try:
                pairs.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise InputParseError(f"non-integer degree in line {line!r}") from None
        return InputDocument(sequence=IntegerPairSequence(pairs))

    if header[0] == "digraph":
        if len(header) != 2:
            raise InputParseError(
                f"malformed header {lines[0]!r}: expected 'digraph N'"
            )
        try:
            n = int(header[1])
        except ValueError:
            raise InputParseError(f"non-integer vertex count {header[1]!r}") from None
        if n < 0:
            raise InputParseError(f"negative vertex count {n}")
        arcs = set()
        for line in body:
            fields = line.split()
            if len(fields) != 2:
                raise InputParseError(f"expected 'u v' arc, got {line!r}")
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise InputParseError(f"non-integer label in line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputParseError(f"arc ({u}, {v}) outside labels [1, {n}]")
            if u == v:
                raise InputParseError(f"loop at vertex {u} not allowed")
            if (u - 1, v - 1) in arcs:
                raise InputParseError(f"duplicate arc ({u}, {v})")
            arcs.add((u - 1, v - 1))
        return InputDocument(digraph=Digraph(n, arcs))

    raise InputParseError(f"unknown header {lines[0]!r}: expected 'seq' or 'digraph N'")


def _labels(vertices) -> str:
    return ",".join(str(v + 1) for v in sorted(vertices))


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _oracle_budget() -> EnumerationBudget:
    override = os.environ.get("SPLITKIT_ORACLE_MAX_N")
    if override is None:
        return DEFAULT_BUDGET
    bound = int(override)
    return EnumerationBudget(
        max_vertices=bound,
        max_realize_vertices=bound,
        max_partitions=4**bound,
    )


def _oracle_check_sequence(seq: IntegerPairSequence, digraphic: bool) -> list[str]:
    """Cross-validate digraphicality and splittance; return disagreements."""
    budget = _oracle_budget()
    failures = []
    if seq.n <= budget.max_realize_vertices:
        realization = brute_realize(seq, budget)
        if (realization is not None) != digraphic:
            failures.append(
                f"oracle disagreement: realization search says "
                f"{realization is not None}, inequality test says {digraphic}"
            )
    else:
        print(
            f"oracle: realization check skipped (N={seq.n} over budget)",
            file=sys.stderr,
        )
    if digraphic:
        if 4**seq.n <= budget.max_partitions:
            brute = brute_min_partition_measure(seq, budget)
            fast = digraph_splittance(seq)
            if brute != fast:
                failures.append(
                    f"oracle disagreement: partition sweep gives {brute}, "
                    f"matrix minimum gives {fast}"
                )
        else:
            print(
                f"oracle: partition sweep skipped (N={seq.n} over budget)",
                file=sys.stderr,
            )
    return failures


def cmd_check(doc: InputDocument, fmt: str, oracle: bool) -> int:
    # Out-of-range entries are merely non-digraphic here; check still reports.
    seq = doc.as_sequence()
    digraphic = is_digraphic(seq)
    if not digraphic:
        if fmt == "csv":
            print("digraphic,split,splittance")
            print("false,,")
        else:
            print("digraphic=false")
        if oracle:
            for failure in _oracle_check_sequence(seq, digraphic):
                print(failure, file=sys.stderr)
                return EXIT_ORACLE_DISAGREEMENT
        return EXIT_INVALID_INPUT
    split = is_split_sequence(seq)
    splittance = digraph_splittance(seq)
    if fmt == "csv":
        print("digraphic,split,splittance")
        print(f"true,{_bool(split)},{splittance}")
    else:
        print("digraphic=true")
        print(f"split={_bool(split)}")
        print(f"splittance={splittance}")
    if oracle:
        for failure in _oracle_check_sequence(seq, digraphic):
            print(failure, file=sys.stderr)
            return EXIT_ORACLE_DISAGREEMENT
    return EXIT_SPLIT if split else EXIT_NOT_SPLIT


def cmd_matrix(doc: InputDocument, fmt: str, oracle: bool, extras: bool) -> int:
    seq = doc.as_sequence()
    validate(seq)
    sigma = splittance_matrix(seq)
    for row in sigma.entries:
        print(",".join(str(value) for value in row))
    if extras:
        slack = fulkerson_slack(seq)
        maximal = maximal_sequences(seq)
        print("sbar," + ",".join(str(s) for s in slack.s_bar))
        print("sunder," + ",".join(str(s) for s in slack.s_under))
        print("mbar," + ",".join(str(m) for m in maximal.m_bar))
        print("munder," + ",".join(str(m) for m in maximal.m_under))
    digraphic = is_digraphic(seq)
    if oracle:
        for failure in _oracle_check_sequence(seq, digraphic):
            print(failure, file=sys.stderr)
            return EXIT_ORACLE_DISAGREEMENT
    if not digraphic:
        return EXIT_INVALID_INPUT
    return EXIT_SPLIT if is_split_sequence(seq) else EXIT_NOT_SPLIT


def cmd_partitions(doc: InputDocument, fmt: str, oracle: bool) -> int:
    seq = doc.as_sequence()
    validate(seq)
    digraphic = is_digraphic(seq)
    if not digraphic:
        print("error: sequence is not digraphic", file=sys.stderr)
        if oracle:
            for failure in _oracle_check_sequence(seq, digraphic):
                print(failure, file=sys.stderr)
                return EXIT_ORACLE_DISAGREEMENT
        return EXIT_INVALID_INPUT
    parts = split_partitions(seq)
    if fmt == "csv":
        print("k,l,pm,plus,minus,zero")
        for part in parts:
            print(
                f"{part.k},{part.l},"
                f"{_labels(part.pm).replace(',', ' ')},"
                f"{_labels(part.plus).replace(',', ' ')},"
                f"{_labels(part.minus).replace(',', ' ')},"
                f"{_labels(part.zero).replace(',', ' ')}"
            )
    else:
        for part in parts:
            print(
                f"k={part.k} l={part.l} pm={_labels(part.pm)} "
                f"plus={_labels(part.plus)} minus={_labels(part.minus)} "
                f"zero={_labels(part.zero)}"
            )
    if oracle:
        for failure in _oracle_check_sequence(seq, digraphic):
            print(failure, file=sys.stderr)
            return EXIT_ORACLE_DISAGREEMENT
    return EXIT_SPLIT if parts else EXIT_NOT_SPLIT


def cmd_repair(doc: InputDocument, fmt: str, oracle: bool) -> int:
    if doc.digraph is None:
        print("error: repair needs a digraph input", file=sys.stderr)
        return EXIT_INVALID_INPUT
    g = doc.digraph
    edits, _ = repair(g)
    if fmt == "csv":
        print("op,u,v")
        for u, v in sorted(edits.add):
            print(f"+,{u + 1},{v + 1}")
        for u, v in sorted(edits.remove):
            print(f"-,{u + 1},{v + 1}")
    else:
        for u, v in sorted(edits.add):
            print(f"+ {u + 1} {v + 1}")
        for u, v in sorted(edits.remove):
            print(f"- {u + 1} {v + 1}")
    if oracle:
        budget = _oracle_budget()
        if g.n <= budget.max_vertices:
            brute = brute_splittance(g, budget)
            if brute != edits.size:
                print(
                    f"oracle disagreement: edit search gives {brute}, "
                    f"repair gives {edits.size}",
                    file=sys.stderr,
                )
                return EXIT_ORACLE_DISAGREEMENT
        else:
            print(
                f"oracle: edit search skipped (n={g.n} over budget)",
                file=sys.stderr,
            )
    return EXIT_SPLIT if edits.size == 0 else EXIT_NOT_SPLIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitkit",
        description="Classify, measure, and repair split digraphs from "
        "degree sequences or concrete digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="input file ('-' for stdin)")
        p.add_argument(
            "--format",
            choices=["kv", "csv"],
            default="kv",
            help="output style (matrix output is always CSV)",
        )
        p.add_argument(
            "--oracle",
            action="store_true",
            help="cross-validate against the brute-force oracle within budget "
            "(SPLITKIT_ORACLE_MAX_N overrides the bounds)",
        )

    add_common(sub.add_parser("check", help="digraphic? split? splittance value"))
    matrix = sub.add_parser("matrix", help="print the splittance matrix as CSV")
    add_common(matrix)
    matrix.add_argument(
        "--extras",
        action="store_true",
        help="append slack and turning-point rows to the CSV",
    )
    add_common(sub.add_parser("partitions", help="list all split partitions"))
    add_common(sub.add_parser("repair", help="print a minimal arc edit script"))
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR

    try:
        doc = parse_document(text)
    except InputParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR

    try:
        if args.command == "check":
            return cmd_check(doc, args.format, args.oracle)
        if args.command == "matrix":
            return cmd_matrix(doc, args.format, args.oracle, args.extras)
        if args.command == "partitions":
            return cmd_partitions(doc, args.format, args.oracle)
        return cmd_repair(doc, args.format, args.oracle)
    except SequenceValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NotDigraphicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
