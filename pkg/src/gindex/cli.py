"""Command-line front end: build, query, validate, and generate corpora.

Exit codes: 0 success (including zero occurrences); each error class maps
to its own code, listed in ``EXIT_CODES``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus
from .attractor import Attractor, validate_attractor
from .errors import (
    AttractorInvalid,
    BadParameters,
    ChecksumMismatch,
    EmptyPattern,
    FingerprintCollision,
    GindexError,
    InputContainsZeroByte,
    PatternContainsReservedSymbol,
    PositionOutOfRange,
    TooLargeForValidator,
    VersionMismatch,
)
from .index import build_self_index
from .index_io import load_index_file, save_index_file

EXIT_CODES = {
    InputContainsZeroByte: 2,
    AttractorInvalid: 3,
    PositionOutOfRange: 4,
    EmptyPattern: 5,
    PatternContainsReservedSymbol: 6,
    ChecksumMismatch: 7,
    VersionMismatch: 8,
    FingerprintCollision: 9,
    TooLargeForValidator: 10,
    BadParameters: 11,
}

VALIDATOR_CAP = 500


def _read_attractor_file(path) -> Attractor:
    with open(path) as fh:
        positions = tuple(int(tok) for tok in fh.read().split())
    return Attractor(positions)


def cmd_build(args) -> int:
    with open(args.input, "rb") as fh:
        text = fh.read()
    attractor = None
    if args.attractor != "lz77":
        attractor = _read_attractor_file(args.attractor)
    t0 = time.perf_counter()
    idx = build_self_index(text, seed=args.seed, security=args.security,
                           verify=args.verify == "on", attractor=attractor)
    nbytes = save_index_file(idx, args.output)
    stats = idx.stats()
    print(json.dumps({
        "n": stats["n"],
        "gamma": stats["gamma"],
        "w": stats["w"],
        "levels": stats["levels"],
        "bytes": nbytes,
        "build_seconds": round(time.perf_counter() - t0, 3),
        "attempts": stats["build_attempts"],
    }))
    return 0


def _pattern_from_args(args) -> bytes:
    if args.pattern_hex is not None:
        return bytes.fromhex(args.pattern_hex)
    if args.pattern_file is not None:
        with open(args.pattern_file, "rb") as fh:
            return fh.read()
    if args.pattern is None:
        raise EmptyPattern("no pattern given")
    return args.pattern.encode("latin-1")


def cmd_locate(args) -> int:
    idx = load_index_file(args.index)
    pattern = _pattern_from_args(args)
    t0 = time.perf_counter()
    occs = idx.locate(pattern)
    elapsed = time.perf_counter() - t0
    if args.format == "positions":
        for t in occs:
            print(t)
    elif args.format == "count":
        print(len(occs))
    else:
        print(json.dumps({
            "pattern_length": len(pattern),
            "count": len(occs),
            "occurrences": occs,
            "locate_seconds": round(elapsed, 6),
        }))
    return 0


def cmd_extract(args) -> int:
    idx = load_index_file(args.index)
    data = idx.extract(args.start, args.len)
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()
    return 0


def cmd_validate(args) -> int:
    with open(args.input, "rb") as fh:
        text = fh.read()
    if len(text) > VALIDATOR_CAP:
        raise TooLargeForValidator(
            f"brute-force validation is capped at {VALIDATOR_CAP} symbols")
    attractor = _read_attractor_file(args.attractor)
    ok, witness = validate_attractor(text, attractor)
    if ok:
        print("valid")
        return 0
    print(f"invalid witness {witness[0]} {witness[1]}")
    return EXIT_CODES[AttractorInvalid]


def cmd_gen(args) -> int:
    if args.family == "fibonacci":
        data = corpus.fibonacci_word(args.order)
    elif args.family == "thue_morse":
        data = corpus.thue_morse(args.order)
    elif args.family == "random":
        data = corpus.random_text(args.length, args.sigma, args.seed)
    else:
        data = corpus.mutated_copies(args.copies, args.length, args.rate,
                                     args.seed, args.sigma)
    with open(args.out, "wb") as fh:
        fh.write(data)
    print(json.dumps({"family": args.family, "length": len(data)}))
    return 0


def cmd_stats(args) -> int:
    idx = load_index_file(args.index)
    stats = idx.stats()
    stats["node_identity_2w_minus_gamma_eff"] = (
        stats["explicit_count"] == 2 * stats["w"] - stats["gamma_eff"])
    print(json.dumps(stats))
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gindex",
        description="compressed self-index: build, locate, extract")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="index a file and save the result")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--attractor", default="lz77",
                   help='"lz77" or a file of 1-based attractor positions')
    p.add_argument("--verify", choices=("on", "off"), default="on")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--security", type=int, default=2)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("locate", help="report all occurrences of a pattern")
    p.add_argument("--index", required=True)
    p.add_argument("--pattern")
    p.add_argument("--pattern-hex")
    p.add_argument("--pattern-file")
    p.add_argument("--format", choices=("positions", "count", "json"),
                   default="positions")
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("extract", help="print a substring of the indexed text")
    p.add_argument("--index", required=True)
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("validate", help="brute-force check of an attractor")
    p.add_argument("--input", required=True)
    p.add_argument("--attractor", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="write a deterministic benchmark corpus")
    p.add_argument("--family", required=True,
                   choices=("fibonacci", "thue_morse", "random", "mutated_copies"))
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--length", type=int, default=1000)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--copies", type=int, default=10)
    p.add_argument("--rate", type=float, default=0.001)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="print stored-structure statistics")
    p.add_argument("--index", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except GindexError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CODES.get(type(err), 1)
    except OSError as err:
        print(f"io error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
