"""Batch front-end: walk tables, moment tables, density samples and verification suites."""
import argparse
import json
import logging
import sys

from lattice_walks_manager import LatticeWalksManager
from tables import format_csv

logger = logging.getLogger(__name__)

COMMANDS = ("walks", "moments", "density", "verify", "components", "iso")

# request keys each command accepts, mapped from argparse destinations
REQUEST_KEYS = {
    "walks": {"kind": "kind", "mmax": "mmax", "n": "n", "k": "k", "l": "l", "radius_budget": "radius_budget"},
    "moments": {"kind": "kind", "mmax": "mmax", "n": "n", "k": "k", "l": "l"},
    "density": {"kind": "kind", "grid": "grid"},
    "verify": {"suite": "suite", "tol": "tol", "radius_budget": "radius_budget"},
    "components": {"kind": "kind", "k": "k", "l": "l"},
    "iso": {"kind": "kind", "mmax": "mmax", "n": "n", "k": "k", "l": "l", "radius_budget": "radius_budget"},
}

DEFAULT_FORMAT = {"verify": "json", "iso": "json"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--kind", type=str, default=None,
                        help="lattice kind, distribution (arcsine|semicircle|aa|wa|ww), product or map")
    parser.add_argument("--mmax", type=int, default=None, help="largest walk length or moment order")
    parser.add_argument("--n", type=int, default=None, help="strip width")
    parser.add_argument("--k", type=int, default=None, help="first diamond side or path size")
    parser.add_argument("--l", type=int, default=None, help="second diamond side or path size")
    parser.add_argument("--grid", type=int, default=None, help="density sample count on [-4, 4]")
    parser.add_argument("--suite", type=str, default="all",
                        help="identity|iso|coincidence|density|path-spectrum|walks|products|all")
    parser.add_argument("--format", choices=("csv", "json"), default=None, dest="output_format")
    parser.add_argument("--out", type=str, default=None, help="write to this path instead of stdout")
    parser.add_argument("--tol", type=float, default=None, help="tolerance override for float checks")
    parser.add_argument("--radius-budget", type=int, default=None, dest="radius_budget",
                        help="vertex budget for balls (default: $LATTICE_WALKS_BUDGET or 5000000)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def stray_flags(parser: argparse.ArgumentParser, args: argparse.Namespace) -> list[str]:
    """Request flags given a non-default value that the command does not take."""
    accepted = set(REQUEST_KEYS[args.command].values())
    every = {dest for keys in REQUEST_KEYS.values() for dest in keys.values()}
    return sorted(
        "--" + dest.replace("_", "-") for dest in every - accepted
        if getattr(args, dest) != parser.get_default(dest)
    )


def build_request(args: argparse.Namespace) -> str:
    fields = {key: getattr(args, dest) for key, dest in REQUEST_KEYS[args.command].items()}
    return json.dumps({key: value for key, value in fields.items() if value is not None})


def render_csv(response: dict) -> str:
    header = f"# params {json.dumps(response['params'], sort_keys=True)}\n"
    return header + format_csv(response["columns"], response["rows"])


def render_json(response: dict) -> str:
    body = {key: value for key, value in response.items() if key not in ("columns", "rows")}
    if "checks" not in body and "map" not in body and "components" not in body:
        body["columns"], body["rows"] = response["columns"], response["rows"]
    return json.dumps(body, indent=2, sort_keys=True) + "\n"


def dispatch(manager: LatticeWalksManager, command: str, request: str) -> dict:
    return json.loads(getattr(manager, f"cmd_{command}")(request))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stray = stray_flags(parser, args)
    if stray:
        parser.error(f"{args.command} does not take {', '.join(stray)}")
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")

    response = dispatch(LatticeWalksManager(), args.command, build_request(args))
    if "error" in response:
        print(f"error: {response['error']}", file=sys.stderr)
        return 1

    output_format = args.output_format or DEFAULT_FORMAT.get(args.command, "csv")
    text = render_csv(response) if output_format == "csv" else render_json(response)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
        logger.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)

    failed = response.get("pass") is False or response.get("ok") is False
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
