#!/usr/bin/env python3
"""
metahecke command-line interface
Every subcommand prints one JSON document on stdout.
Exit codes: 0 success, 1 domain error, 2 malformed input.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from pydantic import ValidationError

from core.commands import COMMANDS, error_document, execute, request_schemas
from core.errors import MetaHeckeError
from models.schemas import RunConfig

logger = logging.getLogger("metahecke")

GLOBAL_KEYS = {"command", "pretty", "output", "seed", "verbose", "input"}


def _pair(text: str) -> Dict[str, int]:
    """"v,u" -> {"v": v, "u": u}"""
    try:
        v, u = (int(x) for x in text.split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected 'v,u', got {text!r}") from e
    return {"v": v, "u": u}


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _json_value(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise argparse.ArgumentTypeError(f"invalid JSON: {e}") from e


def _specialization(text: str) -> str:
    """Accepts "v=2" or "2" """
    name, _, value = text.rpartition("=")
    if name and name.strip() != "v":
        raise argparse.ArgumentTypeError(f"only v can be specialized, got {text!r}")
    return value.strip()


def _add_cover(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cover", choices=["kp", "savin", "general"], default="general")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--d", type=int, default=1)


def _add_type(p: argparse.ArgumentParser) -> None:
    _add_cover(p)
    p.add_argument("--r0", type=int, required=True)
    p.add_argument("--m0", type=int)
    p.add_argument("--l0", type=int, default=1)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--f", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metahecke",
                                     description="Exact computations for metaplectic covers and Hecke algebras")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    parser.add_argument("--output", help="write the document to a file instead of stdout")
    parser.add_argument("--seed", type=int, help="seed recorded in the document")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--input", help="read the request as JSON from a file ('-' for stdin)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="tame Hilbert symbol (x, y)_n")
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--x", type=_pair, help="valuation,unit-exponent")
    p.add_argument("--y", type=_pair, help="valuation,unit-exponent")
    p.add_argument("--unramified-degree", dest="unramified_degree", type=int)

    p = sub.add_parser("commutator", help="commutators on block tori")
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--kind", choices=["field_torus", "levi", "diagonal"], default="field_torus")
    p.add_argument("--u", type=_json_value, help="JSON list of blocks")
    p.add_argument("--w", type=_json_value, help="JSON list of blocks")

    p = sub.add_parser("congruence", help="solve the intertwining congruences")
    p.add_argument("--n", type=int)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--l", type=_int_list)
    p.add_argument("--r", type=_int_list)
    p.add_argument("--method", choices=["kernel", "enumerate"], default="kernel")
    p.add_argument("--closed-form", dest="closed_form", choices=["kp", "savin"])

    p = sub.add_parser("params", help="invariants n0, d0, s0 and s*")
    _add_type(p)

    p = sub.add_parser("w0check", help="compare T0 with W0'")
    _add_type(p)
    p.add_argument("--method", choices=["kernel", "enumerate"], default="kernel")

    p = sub.add_parser("green-l0", help="o and l from a regular character exponent")
    p.add_argument("--q-l", dest="q_l", type=int)
    p.add_argument("--m0", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--xi", type=int)

    p = sub.add_parser("hecke-mul", help="multiply two Hecke algebra elements")
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--flavor", choices=["finite", "affine", "twisted"])
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.add_argument("--prefer", choices=["smallest", "largest"], default="smallest")

    p = sub.add_parser("induce", help="induced module from a character of the Bernstein subalgebra")
    p.add_argument("--t", type=int)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--x", nargs="+")
    p.add_argument("--zval")
    p.add_argument("--specialize", type=_specialization)
    p.add_argument("--method", choices=["auto", "burnside", "eigen"], default="auto")
    p.add_argument("--box-cap", dest="box_cap", type=int)

    p = sub.add_parser("reducibility", help="rank-one reducibility point with witnesses")
    _add_type(p)
    p.add_argument("--v")
    p.add_argument("--unit", default="1")

    p = sub.add_parser("scan-w0", help="index of W0' in T0 over a parameter grid")
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--t-max", dest="t_max", type=int, default=2)
    p.add_argument("--r0-max", dest="r0_max", type=int, default=2)
    p.add_argument("--workers", type=int)

    sub.add_parser("schemas", help="print the JSON Schemas of every request")
    return parser


def _payload(args: argparse.Namespace) -> Dict[str, Any]:
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return json.loads(text)
    return {k: v for k, v in vars(args).items() if k not in GLOBAL_KEYS and v is not None}


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(subcommand=args.command, seed=args.seed, pretty=args.pretty, output=args.output,
                     n_max=getattr(args, "n_max", None), t_max=getattr(args, "t_max", None),
                     r0_max=getattr(args, "r0_max", None))


def _emit(doc: dict, config: RunConfig) -> None:
    if config.pretty:
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    if config.output:
        Path(config.output).write_text(text + "\n")
    else:
        print(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        config = _config(args)
    except ValidationError as e:
        logger.error("invalid options: %s", e)
        return 2

    if args.command == "schemas":
        _emit(request_schemas(), config)
        return 0

    model, _ = COMMANDS[args.command]
    try:
        payload = _payload(args)
        request = model.model_validate(payload)
    except (ValidationError, ValueError, OSError) as e:
        logger.error("malformed input for %s: %s", args.command, e)
        return 2

    try:
        doc = execute(args.command, request, config.seed)
    except MetaHeckeError as e:
        logger.error("%s failed: %s", args.command, e.message)
        _emit(error_document(args.command, request.model_dump(), e, config.seed), config)
        return 1
    except ValueError as e:
        # unparsable scalars and Hecke expressions surface here
        logger.error("malformed input for %s: %s", args.command, e)
        return 2

    _emit(doc, config)
    return 0


if __name__ == "__main__":
    sys.exit(main())
