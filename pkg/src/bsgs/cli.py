"""Command line interface: ``bsgs order|member|chain|bench``.

Exit codes: 0 ok, 1 input/parse error, 2 computation error,
3 computed order disagrees with a known order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import (
    METHODS,
    BenchRecord,
    bench_classical_suite,
    bench_random_suite,
    build_chain,
    format_records,
)
from .chain import ChainConfig
from .errors import BSGSError, ParseError
from .groups import parse_builtin
from .heuristics import BaseStrategy
from .io import load
from .randomized import DEFAULT_SIFT_THRESHOLD
from .schreier import DEFAULT_ORBIT_LIMIT, GENERATOR_LABELS, TRANSVERSAL_LABELS
from .stcs import DEFAULT_RATIO, parse_ratio

EXIT_PARSE, EXIT_COMPUTE, EXIT_MISMATCH = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _ratio(text):
    try:
        return parse_ratio(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--method", choices=METHODS, default="det")
    common.add_argument("--base-strategy", choices=[s.value for s in BaseStrategy], default="natural")
    common.add_argument("--tree", choices=(GENERATOR_LABELS, TRANSVERSAL_LABELS), default=TRANSVERSAL_LABELS,
                        help="Schreier tree labels")
    common.add_argument("--rebuild", choices=("always", "extend"), default="always")
    common.add_argument("--sift-threshold", type=int, default=DEFAULT_SIFT_THRESHOLD,
                        help="consecutive trivial sifts that stop the random method")
    common.add_argument("--stcs-ratio", type=_ratio, default=DEFAULT_RATIO, help="coset cutoff ratio, e.g. 6/5")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--orbit-limit", type=int, default=DEFAULT_ORBIT_LIMIT)
    common.add_argument("--output", choices=("text", "csv", "json"), default="text")

    p = _Parser(prog="bsgs", description="Base and strong generating sets for matrix groups over finite fields.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    o = sub.add_parser("order", parents=[common], help="print the group order")
    o.add_argument("group", help="group file or builtin:GL(d,q) / builtin:SL(d,q)")
    m = sub.add_parser("member", parents=[common], help="test membership of matrices")
    m.add_argument("group")
    m.add_argument("matrices", help="group file whose generators are the matrices to test")
    c = sub.add_parser("chain", parents=[common], help="print base, orbit sizes and sgs size")
    c.add_argument("group")
    b = sub.add_parser("bench", parents=[common], help="run a benchmark suite")
    b.add_argument("--suite", choices=("classical", "random"), default="classical")
    b.add_argument("--field", type=int, default=2, help="field order q (random suite)")
    b.add_argument("--dim", type=int, default=3)
    b.add_argument("--setsize", type=int, default=2)
    b.add_argument("--trials", type=int, default=20)
    return p


def _config(args) -> ChainConfig:
    return ChainConfig(label_mode=args.tree, rebuild=args.rebuild,
                       orbit_limit=args.orbit_limit, strategy=args.base_strategy)


def _load_group(spec):
    """(label, generators, known order or None)."""
    if spec.startswith("builtin:"):
        label, _, gens, oracle = parse_builtin(spec)
        return label, gens, oracle
    gf = load(spec)
    if not gf.gens:
        raise ParseError(f"{spec}: no generators")
    return spec, gf.gens, None


def _kw(args):
    return {"sift_threshold": args.sift_threshold, "ratio": args.stcs_ratio}


def _emit(args, payload: dict, text: str):
    if args.output == "json":
        print(json.dumps(payload))
    elif args.output == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))
    else:
        print(text)


def _cmd_order(args) -> int:
    label, gens, oracle = _load_group(args.group)
    chain = build_chain(gens, args.method, _config(args), args.seed, **_kw(args))
    n = chain.order()
    _emit(args, {"group": label, "order": n}, str(n))
    if oracle is not None and n != oracle:
        print(f"order mismatch: expected {oracle}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def _cmd_member(args) -> int:
    _, gens, _ = _load_group(args.group)
    tests = load(args.matrices).gens
    chain = build_chain(gens, args.method, _config(args), args.seed, **_kw(args))
    if tests and (tests[0].field != chain.field or tests[0].d != chain.d):
        raise ParseError("matrices do not match the group's field and dimension")
    rows = []
    for g in tests:
        res = chain.sift(g)
        ok = res.residue.is_identity and res.dropout == len(chain.base) + 1
        rows.append({"member": ok, "dropout": res.dropout})
    if args.output == "json":
        print(json.dumps(rows))
    elif args.output == "csv":
        print("member,dropout")
        for r in rows:
            print(f"{'yes' if r['member'] else 'no'},{r['dropout']}")
    else:
        for r in rows:
            print(f"{'yes' if r['member'] else 'no'} dropout={r['dropout']}")
    return 0


def _cmd_chain(args) -> int:
    label, gens, oracle = _load_group(args.group)
    chain = build_chain(gens, args.method, _config(args), args.seed, **_kw(args))
    base = [{"point": list(bp.coords), "projective": bp.projective} for bp in chain.base]
    orbits = chain.orbit_sizes()
    payload = {"group": label, "baselen": len(base), "orbits": "x".join(map(str, orbits)),
               "sgs": len(chain.sgs), "order": chain.order()}
    if args.output == "json":
        payload["base"] = base
        payload["orbits"] = orbits
        print(json.dumps(payload))
    elif args.output == "csv":
        _emit(args, payload, "")
    else:
        print(f"group: {label}")
        for i, bp in enumerate(chain.base, start=1):
            kind = "line" if bp.projective else "vector"
            print(f"  base[{i}] {kind} {list(bp.coords)}  orbit {orbits[i - 1]}")
        print(f"sgs size: {len(chain.sgs)}")
        print(f"order: {chain.order()}")
    if oracle is not None and chain.order() != oracle:
        return EXIT_MISMATCH
    return 0


def _cmd_bench(args) -> int:
    config = _config(args)
    if args.suite == "classical":
        recs: list[BenchRecord] = bench_classical_suite(args.method, config, args.seed, **_kw(args))
    else:
        report = print if args.output == "text" else (lambda s: print(s, file=sys.stderr))
        recs = bench_random_suite(args.field, args.dim, args.setsize, args.trials, args.seed,
                                  args.method, config, report=report, **_kw(args))
    sys.stdout.write(format_records(recs, args.output))
    return 0 if all(r.ok for r in recs) else EXIT_MISMATCH


COMMANDS = {"order": _cmd_order, "member": _cmd_member, "chain": _cmd_chain, "bench": _cmd_bench}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return COMMANDS[args.cmd](args)
    except ParseError as exc:
        print(f"bsgs: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BSGSError, ArithmeticError, ValueError) as exc:
        print(f"bsgs: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
