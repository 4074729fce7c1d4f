"""Command line front end.

Exit codes: 0 success, 1 parse or usage error, 2 unsolvable board,
3 periodic cell too large, 4 theorem verification failure (which no
input can trigger; a nonzero report means the build is broken).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from ..diagrange import certify_diagonal, solve_diagonal
from ..errors import CellTooLargeError, UnsolvableBoardError
from ..gf2core import parse_matrix_text, random_symmetric_matrix, rank
from ..lightsout import classic_grid, parse_board_text, parse_graph_json, solve_board
from ..rowfinite import parse_periodic_spec_json
from ..transfer import solve_prefix

EXIT_PARSE = 1
EXIT_UNSOLVABLE = 2
EXIT_CELL_TOO_LARGE = 3
EXIT_VERIFY_FAILED = 4


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped onto the parse-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE) from exc


def _cmd_solve_board(args) -> int:
    try:
        rows, cols, state = parse_board_text(_read_file(args.board))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.graph is None:
        graph = classic_grid(rows, cols)
    else:
        try:
            graph = parse_graph_json(_read_file(args.graph))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        if graph.vertex_count != rows * cols:
            print(f"error: graph has {graph.vertex_count} vertices but the "
                  f"board has {rows * cols} cells", file=sys.stderr)
            return EXIT_PARSE
    try:
        clicks = solve_board(graph, state)
    except UnsolvableBoardError as exc:
        print("UNSOLVABLE")
        if exc.witness is not None:
            witness = " ".join(str(i + 1) for i in exc.witness.support())
            print(f"witness: {witness}")
        return EXIT_UNSOLVABLE
    print(" ".join(str(v) for v in clicks.vertices()))
    return 0


def _cmd_verify_theorem(args) -> int:
    if args.trials < 1 or args.max_dim < 1:
        print("error: trials and max-dim must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    rng = random.Random(args.seed)
    passed = failed = 0
    for _ in range(args.trials):
        dim = rng.randrange(1, args.max_dim + 1)
        matrix = random_symmetric_matrix(rng, dim)
        if certify_diagonal(matrix, solve_diagonal(matrix)):
            passed += 1
        else:
            failed += 1
    print(f"verify-theorem trials={args.trials} max_dim={args.max_dim} "
          f"seed={args.seed}")
    print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else EXIT_VERIFY_FAILED


def _cmd_prefix(args) -> int:
    try:
        spec = parse_periodic_spec_json(_read_file(args.spec))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        answer = solve_prefix(spec, args.p, horizon=args.horizon, n=args.n)
    except CellTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CELL_TOO_LARGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"{answer.prefix} {answer.certificate}")
    return 0


def _cmd_rank(args) -> int:
    try:
        matrix = parse_matrix_text(_read_file(args.matrix))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(rank(matrix))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gf2lights",
                     description="Lights Out solving over Z2")
    sub = parser.add_subparsers(dest="command", required=True,
                               parser_class=_Parser)

    p = sub.add_parser("solve-board",
                       help="solve a board file to all-off")
    p.add_argument("--board", required=True, help="board file: 'rows cols' "
                   "header then 0/1 grid lines")
    p.add_argument("--graph", help="graph JSON file; omitted means the "
                   "classic grid of the board's dimensions")
    p.set_defaults(func=_cmd_solve_board)

    p = sub.add_parser("verify-theorem",
                       help="check the diagonal-in-range guarantee on "
                            "random symmetric matrices")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-dim", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("prefix",
                       help="solution prefix for a periodic infinite system")
    p.add_argument("--spec", required=True, help="periodic spec JSON file")
    p.add_argument("-p", type=int, required=True, help="prefix length")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true",
                      help="exact answer via the transfer automaton")
    mode.add_argument("--horizon", type=int,
                      help="sound horizon-H approximation")
    p.add_argument("--n", type=int, default=1,
                   help="base block size for horizon cuts")
    p.set_defaults(func=_cmd_prefix)

    p = sub.add_parser("rank",
                       help="rank of a matrix in the plain text format")
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("serve",
                       help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
