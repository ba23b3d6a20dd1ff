"""Command-line client for the service.

Each subcommand performs one request. Without --server the ASGI app runs
in-process, so no server is needed; with --server URL the same requests go
over the network. Exit codes: 0 success, 1 usage/parse/domain error,
2 equivalence refuted.
"""
from __future__ import annotations

import argparse
import asyncio
import sys
from typing import Optional

import httpx

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_REFUTED = 2


class _ArgumentParser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the CLI contract reserves 2
    # for refuted equivalence, so usage errors exit 1 instead
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _subtraction_set(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("subtraction set must not be empty")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("subtraction amounts must be positive")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="lrgame", description=__doc__)
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="send requests to a running service instead of in-process",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="outcome and simplified named value of EXPR")
    p.add_argument("expr")

    p = commands.add_parser("sum", help="canonical tree of EXPR (sums expanded)")
    p.add_argument("expr")

    p = commands.add_parser("conj", help="canonical tree of the conjugate of EXPR")
    p.add_argument("expr")

    p = commands.add_parser("birthday", help="birthday of EXPR")
    p.add_argument("expr")

    p = commands.add_parser("simplify", help="canonical tree of the simplified EXPR")
    p.add_argument("expr")

    p = commands.add_parser("equiv", help="search day-bounded contexts distinguishing two positions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--day", type=int, default=2, help="universe day bound (default 2)")

    p = commands.add_parser("enumerate", help="all positions born by the given day")
    p.add_argument("--day", type=int, default=2, help="universe day bound (default 2)")

    p = commands.add_parser("table", help="single-pile value tables")
    tables = p.add_subparsers(dest="ruleset", required=True)
    ps = tables.add_parser("subtraction", help="subtraction-game values for pile sizes 0..N")
    ps.add_argument("--set", dest="subtraction_set", type=_subtraction_set, required=True,
                    metavar="S1,S2,...", help="subtraction amounts, e.g. 2,5")
    ps.add_argument("--max", dest="max_size", type=int, required=True, metavar="N")
    ps.add_argument("--report", action="store_true", help="append detected periodicity")
    pe = tables.add_parser("even-nim", help="Even Nim values for even pile sizes 0..N")
    pe.add_argument("--max", dest="max_size", type=int, required=True, metavar="N")
    pe.add_argument("--report", action="store_true", help="append detected periodicity")

    p = commands.add_parser("outcome", help="closed-form outcomes")
    outcomes = p.add_subparsers(dest="ruleset", required=True)
    po = outcomes.add_parser("even-nim", help="outcome of an initial Even Nim board")
    po.add_argument("sizes", type=int, nargs="*", help="even pile sizes")

    return parser


async def _request(server: Optional[str], path: str, payload: dict) -> httpx.Response:
    if server is not None:
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)
    from .service.app import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(transport=transport, base_url="http://lrgame", timeout=None) as client:
        return await client.post(path, json=payload)


def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    if isinstance(detail, dict) and "message" in detail:
        # parse errors already carry their byte offset in the message text
        message = detail["message"]
    elif detail is not None:
        message = str(detail)
    else:
        message = f"request failed with status {response.status_code}"
    print(f"lrgame: error: {message}", file=sys.stderr)
    return EXIT_ERROR


def _print_table(body: dict, report: bool) -> None:
    for row in body["rows"]:
        print(f"{row['n']}\t{row['value']}\t{row['outcome']}")
    if report and body.get("period") is not None:
        print(f"period\t{body['preperiod']}\t{body['period']}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "eval":
        path, payload = "/eval", {"expr": args.expr}
    elif args.command == "sum":
        path, payload = "/canonical", {"expr": args.expr}
    elif args.command == "conj":
        path, payload = "/conjugate", {"expr": args.expr}
    elif args.command == "birthday":
        path, payload = "/birthday", {"expr": args.expr}
    elif args.command == "simplify":
        path, payload = "/simplify", {"expr": args.expr}
    elif args.command == "equiv":
        path, payload = "/equiv", {"left": args.left, "right": args.right, "day": args.day}
    elif args.command == "enumerate":
        path, payload = "/universe", {"day": args.day}
    elif args.command == "table" and args.ruleset == "subtraction":
        path = "/tables/subtraction"
        payload = {"subtraction_set": args.subtraction_set, "max_size": args.max_size}
    elif args.command == "table":
        path, payload = "/tables/even-nim", {"max_size": args.max_size}
    else:
        path, payload = "/outcomes/even-nim", {"sizes": args.sizes}

    try:
        response = asyncio.run(_request(args.server, path, payload))
    except httpx.HTTPError as exc:
        print(f"lrgame: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if response.status_code != 200:
        return _fail(response)
    body = response.json()

    if args.command == "eval":
        print(f"{body['outcome']}\t{body['value']}")
    elif args.command in ("sum", "conj", "simplify"):
        print(body["text"])
    elif args.command == "birthday":
        print(body["birthday"])
    elif args.command == "equiv":
        if body["refuted"]:
            print(f"refuted\t{body['witness']}")
            return EXIT_REFUTED
        print("no-counterexample")
    elif args.command == "enumerate":
        for member in body["members"]:
            print(member)
    elif args.command == "table":
        _print_table(body, args.report)
    else:
        print(body["outcome"])
    return EXIT_OK


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
