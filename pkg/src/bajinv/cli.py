"""Command-line front end.

Exit codes: 0 success or pass, 1 verification failure, 2 bad input.
"""

import argparse
import csv
import io
import json
import re
import sys

from . import codes
from .perm import (
    Permutation, baj, baj_minus_inv, classic_stats, descent_set, inv,
    make_permutation,
)
from .qpoly import json_coeff
from .verify import (
    DEFAULT_MAX_N, distribution, distribution_all, parallel_distribution,
    verify_theorem1, verify_theorem2,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_ints(text: str) -> list[int]:
    """Comma- and/or whitespace-separated integers."""
    parts = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not parts:
        raise ValueError("empty input")
    try:
        return [int(t) for t in parts]
    except ValueError:
        raise ValueError(f"not a list of integers: {text!r}") from None


def parse_permutation(text: str) -> Permutation:
    """Separated integers, or a bare digit string when n <= 9."""
    t = text.strip()
    if re.fullmatch(r"\d+", t) and len(t) > 1:
        if len(t) > 9:
            raise ValueError(
                f"compact digit string {t!r} is ambiguous for n > 9; separate the values")
        return make_permutation(int(c) for c in t)
    return make_permutation(parse_ints(t))


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def _joined(xs, sep=","):
    return sep.join(map(str, xs))


def _perm_arg(args) -> Permutation:
    text = getattr(args, "perm_pos", None) or args.perm
    if text is None:
        raise UsageError("a permutation is required (--perm)")
    return parse_permutation(text)


def cmd_stats(args) -> int:
    p = _perm_arg(args)
    vc = codes.v_encode(p)
    rc = codes.r_encode(vc)
    cs = classic_stats(p)
    record = {
        "n": p.n,
        "perm": list(p.elements),
        "descents": list(descent_set(p)),
        "inv": inv(p),
        "baj": baj(p),
        "baj_minus_inv": baj_minus_inv(p),
        "des": cs.des,
        "maj": cs.maj,
        "v": list(vc.v),
        "r": list(rc.r),
        "k": rc.k,
        "weight": codes.weight(rc),
        "rank": codes.rank(rc),
    }
    if args.format == "json":
        _emit(record)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for key, val in record.items():
            w.writerow([key, _joined(val, " ") if isinstance(val, list) else val])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"n          {p.n}")
        print(f"perm       {_joined(p.elements, ' ')}")
        print(f"descents   {{{_joined(record['descents'], ', ')}}}")
        print(f"inv        {record['inv']}")
        print(f"baj        {record['baj']}")
        print(f"baj-inv    {record['baj_minus_inv']}")
        print(f"des        {cs.des}")
        print(f"maj        {cs.maj}")
        print(f"v          ({_joined(vc.v)})")
        print(f"r          ({_joined(rc.r)})  k={rc.k}")
        print(f"weight     {record['weight']}")
        print(f"rank       {record['rank']}")
    return EXIT_OK


def cmd_encode(args) -> int:
    p = _perm_arg(args)
    vc = codes.v_encode(p)
    rc = codes.r_encode(vc)
    if args.format == "json":
        _emit({"n": p.n, "v": list(vc.v), "r": list(rc.r), "k": rc.k})
    else:
        print(f"v {_joined(vc.v)}")
        print(f"r {_joined(rc.r)} k {rc.k}")
    return EXIT_OK


def cmd_decode(args) -> int:
    if (args.vcode is None) == (args.rcode is None):
        raise UsageError("give exactly one of --vcode or --rcode")
    if args.vcode is not None:
        p = codes.v_decode(codes.VCode(tuple(parse_ints(args.vcode))))
    else:
        if args.k is None:
            raise UsageError("--rcode needs --k")
        r = tuple(parse_ints(args.rcode)) if args.rcode.strip() else ()
        p = codes.decode(codes.RCode(n=len(r) + 1, k=args.k, r=r))
    if args.format == "json":
        _emit({"n": p.n, "perm": list(p.elements)})
    else:
        print(_joined(p.elements, " "))
    return EXIT_OK


def cmd_rank(args) -> int:
    p = _perm_arg(args)
    idx = codes.rank(codes.encode(p))
    if args.format == "json":
        _emit({"n": p.n, "k": p[-1], "idx": idx})
    else:
        print(idx)
    return EXIT_OK


def cmd_unrank(args) -> int:
    if args.n is None or args.k is None or args.idx is None:
        raise UsageError("unrank needs --n, --k and --idx")
    if not 1 <= args.k <= args.n:
        raise ValueError(f"k = {args.k} out of range 1..{args.n}")
    p = codes.decode(codes.unrank(args.n, args.k, args.idx))
    if args.format == "json":
        _emit({"n": p.n, "perm": list(p.elements)})
    else:
        print(_joined(p.elements, " "))
    return EXIT_OK


def _need_n(args):
    if args.n is None:
        raise UsageError("--n is required")
    if args.parts is not None and args.parts < 1:
        raise UsageError("--parts must be positive")


def cmd_verify(args) -> int:
    _need_n(args)
    if args.k is None:
        report = verify_theorem1(args.n, parts=args.parts, max_n=args.max_n)
    else:
        report = verify_theorem2(args.n, args.k, parts=args.parts, max_n=args.max_n)
    if args.format == "json":
        _emit({
            "check": report.what, "n": report.n, "k": report.k,
            "status": report.status,
            "permutations_checked": report.permutations_checked,
            "first_mismatch": (None if report.first_mismatch is None else dict(
                zip(("exponent", "lhs", "rhs"), report.first_mismatch))),
        })
    else:
        label = f"n={report.n} k={report.k}"
        print(f"{report.status.upper()} {report.what} {label}: "
              f"{report.permutations_checked} permutations in {report.elapsed:.3f}s")
        if report.first_mismatch is not None:
            e, lhs, rhs = report.first_mismatch
            print(f"first mismatch at q^{e}: enumerated {lhs}, product {rhs}",
                  file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_dist(args) -> int:
    _need_n(args)
    if args.k is None:
        d = distribution_all(args.n, parts=args.parts, max_n=args.max_n)
    elif args.parts and args.parts > 1:
        d = parallel_distribution(args.n, args.k, args.parts, max_n=args.max_n)
    else:
        d = distribution(args.n, args.k, max_n=args.max_n)
    if args.format == "json":
        _emit({"n": d.n, "k": d.k,
               "coeffs": [json_coeff(c) for c in d.to_qpoly().coeffs]})
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["exponent", "count"])
        w.writerows(d.counts.items())
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len("exponent"), *(len(str(e)) for e in d.counts))
        print(f"{'exponent':>{width}}  count")
        for e, c in d.counts.items():
            print(f"{e:>{width}}  {c}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bajinv",
        description="baj - inv statistics, v/r-codes and exact verification")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--perm", help="permutation, e.g. '5,4,7,2,3,6,1' or 5472361")
    common.add_argument("--vcode")
    common.add_argument("--rcode")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--idx", type=int)
    common.add_argument("--parts", type=int)
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help=f"enumeration ceiling (default {DEFAULT_MAX_N})")
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "stats": cmd_stats, "encode": cmd_encode, "decode": cmd_decode,
        "verify": cmd_verify, "dist": cmd_dist, "rank": cmd_rank,
        "unrank": cmd_unrank,
    }
    for name, fn in handlers.items():
        sp = sub.add_parser(name, parents=[common])
        if name in ("stats", "encode", "rank"):
            sp.add_argument("perm_pos", nargs="?", metavar="PERM")
        sp.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; keep --help at 0
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
