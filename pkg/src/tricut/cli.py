"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 analysis precondition violated,
3 integrity error (a structural theorem failed; always a bug).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cutsets import enumerate_cutsets, require_analyzable, sorted_cutsets
from .errors import AnalysisError, InputError, IntegrityError, TricutError
from .fixtures import fixture_names, load_fixture
from .formats import analysis_report, dump_report, format_dot, format_edge_list, format_summary, parse_graph
from .generators import gen_random_triconnected, gen_wheel
from .verify import verify_graph

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_INTEGRITY = 0, 1, 2, 3
CORPUS_SUFFIXES = (".txt", ".edges", ".json")


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; 2 is reserved for analysis preconditions
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_graph(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
    g = parse_graph(text)
    require_analyzable(g)
    return g


def _write(text: str, dest: str | None) -> None:
    if dest:
        Path(dest).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_decompose(args) -> int:
    g = _read_graph(args.file)
    if args.json:
        _write(dump_report(analysis_report(g)), args.output)
    elif args.dot:
        _write(format_dot(g), args.output)
    else:
        _write(format_summary(g), args.output)
    return EXIT_OK


def cmd_cutsets(args) -> int:
    g = _read_graph(args.file)
    lines = [" ".join(g.label(v) for v in sorted(c)) for c in sorted_cutsets(enumerate_cutsets(g))]
    _write("".join(x + "\n" for x in lines), None)
    return EXIT_OK


def _verify_file(path: str) -> tuple[str, int, str]:
    """(path, exit code, one-line outcome); every failure stays inside its own file."""
    try:
        g = parse_graph(Path(path).read_text())
        report = verify_graph(g)
    except TricutError as e:
        return path, e.exit_code, f"{type(e).__name__}: {e}"
    except OSError as e:
        return path, EXIT_INPUT, f"cannot read: {e.strerror}"
    checks = sum(r.instances for r in report.results.values())
    if report.violations:
        bad = ", ".join(f"{r.lemma}x{r.violations}" for r in report.rows() if r.violations)
        return path, EXIT_INTEGRITY, f"{report.violations} violations ({bad})"
    return path, EXIT_OK, f"ok ({checks} checks)"


def cmd_verify(args) -> int:
    if args.corpus:
        root = Path(args.corpus)
        if not root.is_dir():
            raise InputError(f"{args.corpus} is not a directory")
        files = sorted(str(p) for p in root.iterdir() if p.suffix in CORPUS_SUFFIXES)
        if not files:
            raise InputError(f"no graph files in {args.corpus}")
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_verify_file, files))
        else:
            results = [_verify_file(f) for f in files]
        worst = EXIT_OK
        for path, code, msg in results:
            print(f"{path}: {msg}")
            worst = max(worst, code)
        if not args.quiet:
            bad = sum(1 for _, code, _ in results if code)
            print(f"{len(results)} files, {bad} failed", file=sys.stderr)
        return worst
    if not args.file:
        raise InputError("verify needs a file or --corpus DIR")
    g = _read_graph(args.file)
    report = verify_graph(g)
    if not args.quiet:
        print(report.format())
    print(f"violations: {report.violations}")
    return EXIT_OK if report.ok else EXIT_INTEGRITY


def cmd_gen(args) -> int:
    if args.wheel is not None:
        g = gen_wheel(args.wheel)
    else:
        env = os.environ.get("TRICUT_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise InputError(f"TRICUT_SEED must be an integer, got {env!r}") from None
        elif args.seed is not None:
            seed = args.seed
        else:
            raise InputError("--random needs --seed S or TRICUT_SEED")
        g = gen_random_triconnected(args.random, seed)
    _write(format_edge_list(g), args.output)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.list:
        for name in fixture_names():
            print(name)
    else:
        _write(format_edge_list(load_fixture(args.emit)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tricut", description="Decompose a triconnected graph by its 3-vertex cutsets.")
    p.add_argument("--quiet", action="store_true", help="suppress progress and detail output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("decompose", help="full analysis report")
    d.add_argument("file", nargs="?", default="-", help="graph file, '-' or nothing for stdin")
    fmt = d.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true")
    d.add_argument("-o", "--output")
    d.set_defaults(run=cmd_decompose)

    c = sub.add_parser("cutsets", help="list every 3-cutset")
    c.add_argument("file")
    c.set_defaults(run=cmd_cutsets)

    v = sub.add_parser("verify", help="check every structural claim on a graph")
    v.add_argument("file", nargs="?")
    v.add_argument("--corpus", metavar="DIR")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(run=cmd_verify)

    g = sub.add_parser("gen", help="generate a triconnected graph")
    kind = g.add_mutually_exclusive_group(required=True)
    kind.add_argument("--wheel", type=int, metavar="M")
    kind.add_argument("--random", type=int, metavar="N")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(run=cmd_gen)

    f = sub.add_parser("fixtures", help="built-in example graphs")
    which = f.add_mutually_exclusive_group(required=True)
    which.add_argument("--list", action="store_true")
    which.add_argument("--emit", metavar="NAME")
    f.add_argument("-o", "--output")
    f.set_defaults(run=cmd_fixtures)
    return p


def run_cli(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except IntegrityError as e:
        print(f"integrity error: {e}", file=sys.stderr)
        return EXIT_INTEGRITY
    except AnalysisError as e:
        print(f"precondition: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    try:
        return run_cli(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT
