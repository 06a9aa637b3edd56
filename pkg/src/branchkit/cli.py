"""Command-line front end.

Subcommands: branch, decompose, lr, verify, selftest.  Output is JSON by
default (integers only, canonical key order) or TSV with --format tsv.

Exit codes: 0 success, 1 usage or parse error, 2 stable-range violation,
3 verification mismatch.

If BRANCHKIT_CACHE names a file, the Littlewood-Richardson memo is loaded
from it on startup and written back on exit; otherwise the cache is
in-memory only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import lr
from .branching import (
    PAIR_IDS,
    RULE_ID,
    TWO_RANK_PAIRS,
    branch_decompose,
    branching_multiplicity,
    decompose_range_violations,
    query,
    stable_range_violations,
)
from .errors import (
    InvalidLabel,
    NotAPartition,
    ParseError,
    StableRangeViolation,
    UnknownPair,
)
from .partitions import (
    GLLabel,
    format_gl_label,
    format_partition,
    parse_gl_label,
    parse_partition,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_STABLE_RANGE = 2
EXIT_MISMATCH = 3

# which sides carry GL labels, per pair
_GL_BIG = {"gl-diag", "gl-sum", "o-in-gl", "sp-in-gl"}
_GL_SMALL = {"gl-diag", "gl-sum", "gl-in-o", "gl-in-sp"}
_TWO_SMALL = set(TWO_RANK_PAIRS) | {"gl-diag", "o-diag", "sp-diag"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_label(text: str, gl: bool):
    return parse_gl_label(text) if gl else parse_partition(text)


def _format_label(data) -> str:
    if isinstance(data, GLLabel):
        return format_gl_label(data)
    return format_partition(data)


def _format_small_key(key) -> str:
    if isinstance(key, tuple) and key and isinstance(key[0], (tuple, GLLabel)) \
            and not isinstance(key, GLLabel):
        return "|".join(_format_label(k) for k in key)
    return _format_label(key)


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def _emit(record: dict, fmt: str):
    if fmt == "tsv":
        flat = []
        for k, v in record.items():
            if isinstance(v, dict):
                v = ";".join(f"{kk}={vv}" for kk, vv in v.items())
            flat.append(f"{k}\t{v}")
        print("\n".join(flat))
    else:
        print(_dump(record))


def _label_sort_key(key: str):
    return (len(key), key)


def _ranks(args, pair) -> tuple:
    if pair in TWO_RANK_PAIRS:
        if args.m is None:
            raise ParseError(f"{pair} needs both -n and -m")
        return (args.n, args.m)
    return (args.n,)


def _build_query(args):
    pair = args.pair
    if pair not in PAIR_IDS:
        raise UnknownPair(pair)
    ranks = _ranks(args, pair)
    big = _parse_label(args.big, pair in _GL_BIG)
    smalls = [_parse_label(s, pair in _GL_SMALL) for s in args.small]
    want = 2 if pair in _TWO_SMALL else 1
    if len(smalls) != want:
        raise ParseError(f"{pair} expects {want} --small label(s)")
    return query(pair, ranks, big, smalls)


def cmd_branch(args) -> int:
    t0 = time.perf_counter()
    q = _build_query(args)
    violations = stable_range_violations(q)
    record = {
        "pair": q.pair,
        "ranks": list(_ranks(args, q.pair)),
        "big": _format_label(q.big.data),
        "small": [_format_label(s.data) for s in q.small],
    }
    if violations and not args.unsafe:
        raise StableRangeViolation(RULE_ID[q.pair], violations)
    record["result"] = branching_multiplicity(q, unsafe=True)
    record["stable_range"] = not violations
    record["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    _emit(record, args.format)
    return EXIT_OK


def cmd_decompose(args) -> int:
    t0 = time.perf_counter()
    pair = args.pair
    if pair not in PAIR_IDS:
        raise UnknownPair(pair)
    ranks = _ranks(args, pair)
    if pair.endswith("diag"):
        if args.mu is None or args.nu is None:
            raise ParseError(f"{pair} decomposition needs --mu and --nu")
        gl = pair == "gl-diag"
        mu = _parse_label(args.mu, gl)
        nu = _parse_label(args.nu, gl)
        big = (mu, nu)
        echo = {"mu": _format_label(mu), "nu": _format_label(nu)}
    else:
        if args.big is None:
            raise ParseError(f"{pair} decomposition needs --big")
        big = _parse_label(args.big, pair in _GL_BIG)
        echo = {"big": _format_label(big)}
    violations = decompose_range_violations(pair, big, ranks)
    record = {"pair": pair, "ranks": list(ranks)}
    record.update(echo)
    if violations and not args.unsafe:
        raise StableRangeViolation(RULE_ID[pair], violations)
    dec = branch_decompose(pair, big, ranks, bound=args.bound)
    result = {}
    for key in sorted(dec, key=lambda k: _label_sort_key(_format_small_key(k))):
        result[_format_small_key(key)] = dec[key]
    record["result"] = result
    record["stable_range"] = not violations
    record["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    _emit(record, args.format)
    return EXIT_OK


def cmd_lr(args) -> int:
    t0 = time.perf_counter()
    outer = parse_partition(args.outer)
    left = parse_partition(args.left)
    right = parse_partition(args.right)
    record = {
        "outer": format_partition(outer),
        "left": format_partition(left),
        "right": format_partition(right),
        "result": lr.lr_coeff(outer, left, right),
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }
    _emit(record, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import (
        run_duality_sweeps,
        run_grid,
        run_littlewood_consistency,
        run_lr_spot_checks,
        run_padding_probe,
    )

    pairs = PAIR_IDS if args.pair == "all" else (args.pair,)
    for p in pairs:
        if p not in PAIR_IDS:
            raise UnknownPair(p)
    failed = False
    reports = []
    for p in pairs:
        reports.append(run_grid(p, args.max_size))
    if args.pair == "all":
        reports.append(run_littlewood_consistency(args.max_size + 1))
        reports.append(run_duality_sweeps())
        reports.append(run_lr_spot_checks(seed=args.seed))
    for rep in reports:
        print(rep.line())
        if not rep.ok:
            failed = True
            m = rep.mismatches[0]
            print(f"  first counterexample: {m['context']} small={m['small']}"
                  f" formula={m['formula']} oracle={m['oracle']}")
    if args.pair == "all":
        probe = run_padding_probe()
        status = ("no deviations" if probe.ok
                  else f"{len(probe.mismatches)} deviations (finding, not failure)")
        print(f"{probe.pair}: {probe.cases} cases, {status}")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_selftest(args) -> int:
    from .verify import (
        run_duality_sweeps,
        run_grid,
        run_littlewood_consistency,
        run_lr_spot_checks,
    )

    failed = False
    reports = [run_grid(p, 2) for p in PAIR_IDS]
    reports.append(run_littlewood_consistency(3))
    reports.append(run_duality_sweeps(4))
    reports.append(run_lr_spot_checks(count=20))
    for rep in reports:
        print(rep.line())
        failed = failed or not rep.ok
    print("selftest:", "FAIL" if failed else "PASS")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="branchkit",
                     description="Stable branching multiplicities for "
                                 "classical symmetric pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    pb = sub.add_parser("branch", help="one multiplicity")
    pb.add_argument("--pair", required=True)
    pb.add_argument("-n", type=int, required=True)
    pb.add_argument("-m", type=int)
    pb.add_argument("--big", required=True)
    pb.add_argument("--small", nargs="+", required=True)
    pb.add_argument("--unsafe", action="store_true",
                    help="evaluate the formula outside the stable range")
    common(pb)
    pb.set_defaults(func=cmd_branch)

    pd = sub.add_parser("decompose", help="full decomposition")
    pd.add_argument("--pair", required=True)
    pd.add_argument("-n", type=int, required=True)
    pd.add_argument("-m", type=int)
    pd.add_argument("--big")
    pd.add_argument("--mu")
    pd.add_argument("--nu")
    pd.add_argument("--bound", type=int)
    pd.add_argument("--unsafe", action="store_true")
    common(pd)
    pd.set_defaults(func=cmd_decompose)

    pl = sub.add_parser("lr", help="a Littlewood-Richardson coefficient")
    pl.add_argument("--outer", required=True)
    pl.add_argument("--left", required=True)
    pl.add_argument("--right", required=True)
    common(pl)
    pl.set_defaults(func=cmd_lr)

    pv = sub.add_parser("verify", help="formula-vs-oracle grids")
    pv.add_argument("--pair", default="all")
    pv.add_argument("--max-size", type=int, default=3)
    pv.add_argument("--seed", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("selftest", help="quick internal consistency run")
    ps.set_defaults(func=cmd_selftest)
    return parser


def _load_cache(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lr.load_cache_lines(fh)
    except FileNotFoundError:
        pass


def _save_cache(path: str):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        for line in lr.dump_cache_lines():
            fh.write(line + "\n")
    os.replace(tmp, path)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_path = os.environ.get("BRANCHKIT_CACHE")
    if cache_path:
        _load_cache(cache_path)
    try:
        code = args.func(args)
    except StableRangeViolation as exc:
        print(f"stable-range violation: {exc}", file=sys.stderr)
        return EXIT_STABLE_RANGE
    except (ParseError, NotAPartition, InvalidLabel, UnknownPair) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if cache_path:
            _save_cache(cache_path)
    return code


if __name__ == "__main__":
    sys.exit(main())
