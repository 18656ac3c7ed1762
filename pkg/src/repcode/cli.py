"""Command-line interface.

Exit status: 0 on success, 1 on usage errors, 2 on validation errors,
resource-cap violations, decode failures and failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .codec import decode, encode_sequential, heads_from_message
from .dpgp import (
    DpgpDecodeFailure,
    DpgpParams,
    dpgp_decode,
    dpgp_encode,
    dpgp_enumerate,
    dpgp_size,
)
from .errors import DomainError, ResourceError
from .perm import code_min_distance
from .rep import (
    RepSpec,
    format_spec,
    kloeve_spec,
    load_spec,
    optimal_spec,
    rep_enumerate,
    rep_size,
    save_spec,
    validate_spec,
)
from .sim import SimConfig, run_simulation

EXIT_USAGE = 1
EXIT_INVALID = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise UsageError(f"expected space-separated integers, got {text!r}") from None


def _word(seq: Sequence[int]) -> str:
    return " ".join(map(str, seq))


def _distance(d: float) -> str:
    return "inf" if d == float("inf") else str(d)


def _add_source(p: argparse.ArgumentParser, families: Sequence[str]) -> None:
    p.add_argument("--spec", metavar="PATH", help="spec file, one line of heads per step")
    p.add_argument("--family", choices=families)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--q", type=int, default=2)


def _family_spec(args: argparse.Namespace) -> RepSpec:
    if args.n is None or args.d is None:
        raise UsageError(f"--family {args.family} needs --n and --d")
    if args.family == "optimal":
        return optimal_spec(args.n, args.d)
    return kloeve_spec(args.n, args.d, args.q)


def _spec(args: argparse.Namespace) -> RepSpec:
    if args.spec:
        if args.family:
            raise UsageError("give either --spec or --family, not both")
        return load_spec(args.spec)
    if args.family in ("optimal", "kloeve"):
        return _family_spec(args)
    raise UsageError("a code is required: --spec PATH or --family optimal|kloeve")


def _dpgp(args: argparse.Namespace) -> DpgpParams | None:
    if args.family != "dpgp":
        return None
    if args.n is None or args.d is None:
        raise UsageError("--family dpgp needs --n and --d")
    return DpgpParams(args.n, args.d)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family is None:
        raise UsageError("gen needs --family")
    if args.family == "dpgp":
        params = _dpgp(args)
        print(dpgp_size(params.n, params.d))
        return 0
    spec = _family_spec(args)
    if args.spec:
        save_spec(spec, args.spec)
        print(rep_size(spec))
    else:
        sys.stdout.write(format_spec(spec))
        print(rep_size(spec), file=sys.stderr)
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    params = _dpgp(args)
    if params is not None:
        if args.message is None:
            raise UsageError("--family dpgp encodes class ranks given by --message")
        print(_word(dpgp_encode(params, _ints(args.message))))
        return 0
    spec = _spec(args)
    if (args.message is None) == (args.heads is None):
        raise UsageError("give exactly one of --message or --heads")
    heads = _ints(args.heads) if args.heads is not None else heads_from_message(spec, _ints(args.message))
    print(_word(encode_sequential(spec, heads)))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    if args.received is None:
        raise UsageError("decode needs --received")
    received = _ints(args.received)
    params = _dpgp(args)
    if params is not None:
        try:
            ranks = dpgp_decode(params, received)
        except DpgpDecodeFailure as exc:
            print(f"decode failure; estimate {_word(exc.estimate)}", file=sys.stderr)
            return EXIT_INVALID
        codeword = dpgp_encode(params, ranks)
        if args.format == "json":
            print(json.dumps({"message": list(ranks), "codeword": list(codeword)}))
        else:
            print(f"message {_word(ranks)}\ncodeword {_word(codeword)}")
        return 0
    spec = _spec(args)
    res = decode(spec, received)
    if args.format == "json":
        print(
            json.dumps(
                {"message": list(res.ranks), "heads": list(res.heads), "codeword": list(res.rebuilt)}
            )
        )
    else:
        print(f"message {_word(res.ranks)}\nheads {_word(res.heads)}\ncodeword {_word(res.rebuilt)}")
    return 0


def _words(args: argparse.Namespace):
    params = _dpgp(args)
    if params is not None:
        return dpgp_enumerate(params.n, params.d, cap=args.max_size)
    return rep_enumerate(_spec(args), cap=args.max_size)


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = sys.stdout
    for w in _words(args):
        out.write(_word(w) + "\n")
    return 0


def cmd_mindist(args: argparse.Namespace) -> int:
    print(_distance(code_min_distance(_words(args))))
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    spec = _spec(args)
    d = args.d
    if d is None:
        d = validate_spec(spec, 1).guaranteed_distance
        if d == float("inf"):
            raise UsageError("spec has a single codeword; pass --d explicitly")
    cfg = SimConfig(spec, int(d), args.noise, args.trials, args.seed, args.clip)
    report = run_simulation(cfg, threads=args.threads)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    elif args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = verify.run_all(args.seed, workers=args.threads)
    timing = not args.no_timing
    if args.format == "json":
        print(json.dumps([r.to_dict(timing) for r in reports], sort_keys=True))
    else:
        sys.stdout.write("\n".join(r.to_text(timing) for r in reports))
    return 0 if all(r.passed for r in reports) else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="repcode", description="Permutation codes under the Chebyshev distance.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a spec file for a code family")
    _add_source(p, ["optimal", "kloeve", "dpgp"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode", help="encode a message or head sequence")
    _add_source(p, ["optimal", "kloeve", "dpgp"])
    p.add_argument("--message", metavar="STR")
    p.add_argument("--heads", metavar="STR")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word")
    _add_source(p, ["optimal", "kloeve", "dpgp"])
    p.add_argument("--received", metavar="STR")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_decode)

    for name, func, help_ in (
        ("enumerate", cmd_enumerate, "list every codeword"),
        ("mindist", cmd_mindist, "brute-force minimum distance"),
    ):
        p = sub.add_parser(name, help=help_)
        _add_source(p, ["optimal", "kloeve", "dpgp"])
        p.add_argument("--max-size", type=int, default=10**6, metavar="CAP")
        p.set_defaults(func=func)

    p = sub.add_parser("simulate", help="word error rate under bounded uniform noise")
    _add_source(p, ["optimal", "kloeve"])
    p.add_argument("--noise", type=int, required=True, metavar="E")
    p.add_argument("--trials", type=int, default=1000, metavar="T")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--clip", action="store_true", help="clip received symbols to [0, n)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the brute-force check suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times for byte-stable output")
    p.set_defaults(func=cmd_verify)
    return parser


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"repcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ResourceError, OSError) as exc:
        print(f"repcode: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
