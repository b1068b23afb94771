import argparse
import json
import logging
import sys
from pathlib import Path
from regweight.batch import parse_sets, run_corpus
from regweight.certificate import check_certificate, load_certificate, write_certificate
from regweight.errors import FallbackExhausted, GenerationError, InvariantViolation
from regweight.generate import gen_random_regular
from regweight.graph6 import encode_graph6, load_graph, load_graphs
from regweight.weighter import MODES, WeighterConfig, weight_with_set
from regweight.weightset import WeightSet

_logger = logging.getLogger("regweight")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALLBACK = 2
EXIT_INTERNAL = 3


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _config(args: argparse.Namespace) -> WeighterConfig:
    return WeighterConfig(mode=args.mode, audit=args.audit, exhaustive_cap=args.exhaustive_cap,
                          local_search_budget=args.local_search_budget,
                          local_search_restarts=args.local_search_restarts, seed=args.seed)


def cmd_weight(args: argparse.Namespace) -> int:
    try:
        g = load_graph(args.input)
        q = WeightSet.parse(args.set)
        cert = weight_with_set(g, q, _config(args))
    except FallbackExhausted as e:
        _logger.error("%s", e)
        return EXIT_FALLBACK
    except InvariantViolation as e:
        _logger.error("Internal error: %s", e)
        return EXIT_INTERNAL
    except (ValueError, OSError) as e:
        _logger.error("%s", e)
        return EXIT_INPUT
    if args.out is None:
        _emit(cert.dumps(), None)
    else:
        write_certificate(cert, args.out)
    _logger.info("%s", cert)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = load_graph(args.input)
        cert = load_certificate(args.cert)
        report = check_certificate(g, cert)
    except (ValueError, OSError) as e:
        _logger.error("%s", e)
        return EXIT_INPUT
    if not report.is_proper:
        for u, v, d in report.conflicts:
            _logger.error("Conflict on edge %d %d: both weighted degrees are %s", u, v, d)
        return EXIT_INPUT
    _logger.info("Certificate is a proper weighting over %s", cert.weight_set)
    return EXIT_OK


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        sets = parse_sets(args.sets)
        entries = load_graphs(args.corpus)
        report = run_corpus(entries, sets, jobs=args.jobs, oracle_cap=args.oracle_cap,
                            config=_config(args))
    except (ValueError, OSError) as e:
        _logger.error("%s", e)
        return EXIT_INPUT
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    stats = report.timing_stats()
    _logger.info("Wall clock: total %.3fs, mean %.3fs, max %.3fs",
                 stats["total"], stats["mean"], stats["max"])
    if args.timings is not None:
        with open(args.timings, "w", encoding="utf-8") as f:
            json.dump({"per_graph": report.timings, **stats}, f, indent=2)
    return report.exit_code


def cmd_gen(args: argparse.Namespace) -> int:
    if args.count < 1:
        _logger.error("--count must be positive, got %d", args.count)
        return EXIT_INPUT
    lines = []
    try:
        for i in range(args.count):
            lines.append(encode_graph6(gen_random_regular(args.n, args.k, args.seed + i)))
    except (ValueError, GenerationError) as e:
        _logger.error("%s", e)
        return EXIT_INPUT
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def _add_config_flags(p: argparse.ArgumentParser):
    p.add_argument("--mode", choices=MODES, default="exact",
                   help="independent set solver used for the layers")
    p.add_argument("--audit", action="store_true",
                   help="check the construction's conditions at every milestone")
    p.add_argument("--exhaustive-cap", type=int, default=20)
    p.add_argument("--local-search-budget", type=int, default=200000)
    p.add_argument("--local-search-restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0, help="local search seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regweight",
        description="Proper 3-valued edge weightings of regular graphs")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", help="weight a graph and write a certificate")
    p.add_argument("--input", type=Path, required=True, help="graph6 or edge-list file")
    p.add_argument("--set", required=True, help="three weights a,b,c, e.g. -1,0,2")
    p.add_argument("--out", type=Path, default=None)
    _add_config_flags(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--cert", type=Path, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="weight every graph of a graph6 corpus")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--sets", required=True, help="weight sets separated by ';'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle-cap", type=int, default=0,
                   help="also run exhaustive search on graphs with at most this many edges")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--timings", type=Path, default=None, help="write wall-clock statistics")
    _add_config_flags(p)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen", help="generate random regular graphs in graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def _join_set_values(argv: list[str]) -> list[str]:
    """
    Rewrites "--set V" and "--sets V" as "--set=V" and "--sets=V" so that a
    weight set starting with a negative number is not read as an option.
    """
    out = []
    it = iter(argv)
    for token in it:
        if token in ("--set", "--sets"):
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_set_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s",
                        level=logging.DEBUG if args.verbose else logging.INFO)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
