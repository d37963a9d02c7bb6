"""``semikern <command> [names...] --input FILE [options]``.

Exit status: 0 on success, 1 when a verification verdict fails, 2 on usage,
parse or precondition errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .axioms import check_axioms
from .commands import SESSION_COMMANDS, Options, UsageError, run
from .mining import PATTERNS, mine
from .session import KINDS, Session, SessionError, make_category, parse_session

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
COMMANDS = (*SESSION_COMMANDS, "check-axioms", "mine")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semikern", description="Kernels, cokernels, strictness "
                                 "and isomorphism theorems in finite semiabelian categories.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("names", nargs="*", help="morphism or object names, or the mining pattern")
    ap.add_argument("--input", "-i", help="session file ('-' for stdin)")
    ap.add_argument("--category", choices=KINDS,
                    help="category for check-axioms/mine when no session is given")
    ap.add_argument("--p", type=int, help="prime for vect/lintop (default 2)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=None,
                    help="random samples (check-axioms: 300, mine: 1000)")
    ap.add_argument("--max-dim", type=int, default=2)
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    ap.add_argument("--paranoid", action="store_true", help="add random probe objects")
    ap.add_argument("--exhaustive", action="store_true", help="mine: enumerate instead of sampling")
    ap.add_argument("--witness-out", help="mine: write the witness session to this file")
    return ap


def _read_session(path: str | None) -> Session:
    if path is None:
        raise UsageError("--input is required for this command")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_session(text)
    except SessionError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _category_for(args):
    """The (category, kind, p) to search: from the session if given, else the flags."""
    if args.input is not None:
        s = _read_session(args.input)
        if s.kind is None:
            raise UsageError("session has no category line")
        if args.p is not None and s.p is not None and args.p != s.p:
            raise UsageError(f"--p {args.p} conflicts with p={s.p} in the session")
        return s.category, s.kind, s.p
    if args.category is None:
        raise UsageError("give --input or --category")
    kind = args.category
    p = args.p if args.p is not None else (2 if kind in ("vect", "lintop") else None)
    try:
        return make_category(kind, p), kind, p
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def execute(argv: list[str]):
    args = build_parser().parse_args(argv)
    if args.command == "check-axioms":
        if args.names:
            raise UsageError("check-axioms takes no names")
        C, kind, p = _category_for(args)
        report = check_axioms(C, kind, p, seed=args.seed,
                              samples=300 if args.samples is None else args.samples,
                              max_dim=args.max_dim, paranoid=args.paranoid)
    elif args.command == "mine":
        if len(args.names) != 1 or args.names[0] not in PATTERNS:
            raise UsageError(f"mine takes one pattern: {', '.join(PATTERNS)}")
        C, kind, p = _category_for(args)
        report = mine(C, kind, p, args.names[0], seed=args.seed,
                      samples=1000 if args.samples is None else args.samples,
                      max_dim=args.max_dim, exhaustive=args.exhaustive)
        w = report.results["witness"]
        if args.witness_out and w is not None:
            Path(args.witness_out).write_text(w["session"], encoding="utf-8")
    else:
        session = _read_session(args.input)
        if args.p is not None and session.p is not None and args.p != session.p:
            raise UsageError(f"--p {args.p} conflicts with p={session.p} in the session")
        opts = Options(seed=args.seed, max_dim=args.max_dim, paranoid=args.paranoid,
                       samples=300 if args.samples is None else args.samples)
        report = run(args.command, session, args.names, opts)
    return report, args.json


def main(argv: list[str] | None = None) -> int:
    try:
        report, as_json = execute(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"semikern: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse
        return EXIT_USAGE if exc.code else EXIT_OK
    sys.stdout.write(report.to_json() if as_json else report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
