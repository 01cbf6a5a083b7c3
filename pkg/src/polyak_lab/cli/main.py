import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, NoReturn, Optional

from ..config import LOG_LEVELS, RunConfig, resolve_config
from ..definitions.constants import TOOL_VERSION
from ..definitions.exceptions import UsageException, error_code_for, exit_code_for
from ..factory import ClaimFactory, MEMBERSHIP_FLAVORS
from . import commands

_logger = logging.getLogger(__name__)

RELATION_KINDS = ["dP", "dR", "dPI", "dPII", "dPIII", "dRI", "dRII", "dRIII",
                  "1T+-", "NS", "6T+-", "1T", "6T", "4T", "2T", "flip"]
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
CommandT = Callable[[argparse.Namespace, RunConfig], int]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageException(message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _skeleton(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--skeleton", choices=["circle", "line"], default="circle", help="Skeleton (default circle)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polyak-lab", description="Finite-type invariants of virtual knots from Gauss diagrams")
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    parser.add_argument("--config", help="TOML config file (default ./polyak-lab.toml when present)")
    parser.add_argument("--cache-dir", dest="cache_dir", help="Relation-system cache directory")
    parser.add_argument("--no-cache", dest="no_cache", action="store_true", help="Do not read or write the cache")
    parser.add_argument("--output", "-o", help="Write the result here instead of stdout")
    parser.add_argument("--format", choices=["json", "table"], help="Output format (default json)")
    parser.add_argument("--workers", type=int, help="Worker processes for 'verify all'")
    parser.add_argument("--seed", type=int, help="Seed for --sample")
    parser.add_argument("--enumeration-ceiling", dest="enumeration_ceiling", type=_positive)
    parser.add_argument("--arrow-ceiling", dest="arrow_ceiling", type=_positive)
    parser.add_argument("--chord-ceiling", dest="chord_ceiling", type=_positive)
    parser.add_argument("--witness-bound", dest="witness_bound", type=_positive)
    parser.add_argument("--reproducible", action="store_true", help="Zero runtime_ms in certificates")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable)")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Errors only")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("enum", help="Enumerate canonical diagrams")
    _skeleton(p)
    p.add_argument("--flavor", choices=["arrow-signed", "arrow-unsigned", "chord-signed", "chord-unsigned"],
                   default="arrow-signed")
    p.add_argument("--style", choices=["solid", "dashed"], default="solid")
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--exactly", type=_positive, help="Exactly N arrows/chords")
    size.add_argument("--up-to", dest="up_to", type=_positive, help="At most N arrows/chords")
    p.add_argument("--sample", type=_positive, help="Random subset of K diagrams (uses --seed)")
    p.set_defaults(handler=commands.cmd_enum)

    p = sub.add_parser("relations", help="Export a relation system")
    p.add_argument("--kind", choices=RELATION_KINDS, required=True)
    p.add_argument("--order", type=_positive, required=True)
    _skeleton(p)
    p.add_argument("--flavor", choices=["arrow", "chord"], default="chord",
                   help="Target for the signed homogeneous and unsigned kinds")
    p.add_argument("--untruncated", action="store_true", help="Keep terms above the order")
    p.set_defaults(handler=commands.cmd_relations)

    p = sub.add_parser("invariants", help="Basis of the invariant space")
    p.add_argument("--order", type=_positive, required=True)
    _skeleton(p)
    p.add_argument("--profile", choices=["gpv", "gpv+virtualization", "chord"], default="gpv")
    p.set_defaults(handler=commands.cmd_invariants)

    p = sub.add_parser("eval", help="Evaluate an invariant on a knot")
    p.add_argument("--invariant", required=True, help="Functional JSON file")
    p.add_argument("--knot", required=True, help="Gauss code, e.g. O1+,U2+,O2+,U1+")
    p.set_defaults(handler=commands.cmd_eval)

    p = sub.add_parser("witness", help="Find a crossing flip that changes an invariant")
    p.add_argument("--invariant", required=True, help="Functional JSON file")
    p.add_argument("--max-crossings", dest="max_crossings", type=_positive)
    p.set_defaults(handler=commands.cmd_witness)

    p = sub.add_parser("verify", help="Verify a claim and print its certificate")
    p.add_argument("claim", choices=list(ClaimFactory().CLAIM_REGISTRY) + ["all"])
    p.add_argument("--order", type=_positive)
    _skeleton(p)
    p.add_argument("--flavor", choices=list(MEMBERSHIP_FLAVORS), default="chord", help="For 'membership'")
    p.add_argument("--order-low", dest="order_low", type=_positive, default=1, help="For 'stability'")
    p.add_argument("--order-max", dest="order_max", type=_positive, default=3, help="For 'all'")
    p.set_defaults(handler=commands.cmd_verify)
    return parser


def _log_level(args: argparse.Namespace, configured: str) -> str:
    if args.quiet:
        return "ERROR"
    if args.verbose:
        index = max(0, LOG_LEVELS.index(configured) - args.verbose)
        return LOG_LEVELS[index]
    return configured


def _flags(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "cache_dir": args.cache_dir,
        "use_cache": False if args.no_cache else None,
        "output": args.output,
        "format": args.format,
        "workers": args.workers,
        "seed": args.seed,
        "enumeration_ceiling": args.enumeration_ceiling,
        "arrow_ceiling": args.arrow_ceiling,
        "chord_ceiling": args.chord_ceiling,
        "witness_bound": args.witness_bound,
    }


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv (list[str] | None): Arguments without the program name, ``sys.argv[1:]`` when omitted.

    Returns:
        int: 0 pass, 1 fail, 2 inconclusive, 64 usage or ceiling error, 65 bad input data.
    """
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(stream=sys.stderr, level=_log_level(args, RunConfig.log_level), format=LOG_FORMAT)
        config = resolve_config(_flags(args), args.config)
        logging.getLogger().setLevel(_log_level(args, config.log_level))
        handler: CommandT = args.handler
        return handler(args, config)
    except Exception as e:
        if not isinstance(e, UsageException):
            _logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"error[{error_code_for(e)}]: {e}\n")
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
