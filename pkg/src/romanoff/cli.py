"""Command-line entry point: every experiment as a subcommand.

Exit codes: 0 success, 1 domain error (bad mathematical input), 2 usage error
(unparseable arguments).  All runs are deterministic; there is no randomness
anywhere, so identical argv gives byte-identical output.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from romanoff import congruence, repro, represent, sawtooth, sieve
from romanoff.arith import order_record
from romanoff.floorpow import (
    ExponentSpec,
    SPLIT,
    gen_sparse_set,
    parse_exponent,
    split_lambda,
)


def _rational(text: str) -> Fraction:
    try:
        return parse_exponent(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rational: {text!r}")


def _spec(text: str) -> ExponentSpec:
    try:
        return ExponentSpec.from_string(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed exponent list: {text!r}")


def _scale(text: str) -> int:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"malformed integer: {text!r}")
    if value != value.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _scale_list(text: str) -> list:
    return [_scale(tok) for tok in text.split(",")]


def _threads(text: str):
    if text == "auto":
        return text
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threads must be a positive integer or 'auto': {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"threads must be >= 1, got {text!r}")
    return n


def _pair_arg(text: str) -> sawtooth.ExponentPair:
    if text.startswith("q="):
        try:
            return sawtooth.pair_family(int(text[2:]))
        except ValueError:
            raise argparse.ArgumentTypeError(f"malformed pair: {text!r}")
    raise argparse.ArgumentTypeError(f"pair must look like q=3, got {text!r}")


def _report_dict(rep) -> dict:
    return repro._report_dict(rep)


def cmd_split(args):
    split = split_lambda(args.r)
    payload = {
        "rs": [str(r) for r in args.r.rs],
        "kind": split.kind,
        "s": split.s,
        "lambda": str(split.lam) if split.lam is not None else None,
        "lambda_float": float(split.lam) if split.lam is not None else None,
    }
    if split.kind == SPLIT:
        plain = [f"kind={split.kind} s={split.s} lambda={split.lam} ({float(split.lam):g})"]
    else:
        plain = [f"kind={split.kind}"]
    return payload, plain, None


def cmd_sparse(args):
    spec = args.r
    split = split_lambda(spec)
    sparse = gen_sparse_set(split, spec, args.x)
    payload = {
        "rs": [str(r) for r in spec.rs],
        "x": args.x,
        "count": len(sparse.values),
        "values": list(sparse.values) if args.list else None,
    }
    if args.list:
        plain = [str(v) for v in sparse.values]
    else:
        plain = [f"count={len(sparse.values)}"]
    rows = ("value", [[v] for v in sparse.values]) if args.list else None
    return payload, plain, rows


def cmd_density(args):
    spec = args.r
    if args.x is None and not args.grid:
        raise ValueError("density needs --x or --grid")
    grid = args.grid if args.grid else [args.x]
    reports = represent.dichotomy_experiment(spec, grid)
    dicts = [_report_dict(r) for r in reports]
    payload = dicts[0] if len(dicts) == 1 and not args.grid else dicts
    plain = [
        f"x={d['x']} density={d['density']:.6f} representable={d['representable']}"
        f" sum_r={d['sum_r']} sum_r2={d['sum_r2']} cs_lower={d['cs_lower']:.6f}"
        for d in dicts
    ]
    header = list(dicts[0].keys())
    rows = (",".join(header), [[d[k] for k in header] for d in dicts])
    return payload, plain, rows


def cmd_check(args):
    witness = represent.check_representable(args.r, args.n)
    payload = {
        "n": args.n,
        "rs": [str(r) for r in args.r.rs],
        "representable": witness is not None,
        "p": witness[0] if witness else None,
        "exponents": list(witness[1]) if witness else None,
    }
    if witness:
        plain = [f"representable: {args.n} = {witness[0]} + " + " + ".join(f"2^{e}" for e in witness[1])]
    else:
        plain = ["not representable"]
    return payload, plain, None


def cmd_order(args):
    rec = order_record(args.d)
    payload = {"d": rec.d, "e2": rec.e2, "pplus": rec.pplus, "mu": rec.mu}
    return payload, [f"d={rec.d} e2={rec.e2} pplus={rec.pplus} mu={rec.mu}"], None


def cmd_congcount(args):
    ell = congruence.reduce_congruence(args.d, args.g)
    if ell is None:
        count = 0
    else:
        count = congruence.count_solutions_reduced(args.d, ell, args.r, args.kmax)
    payload = {
        "d": args.d,
        "g": args.g,
        "r": str(args.r),
        "k_max": args.kmax,
        "ell": ell,
        "count": count,
    }
    if args.oracle:
        query = congruence.CongruenceQuery(d=args.d, g=args.g % args.d, r=args.r, k_max=args.kmax)
        payload["oracle_count"] = congruence.count_solutions_bruteforce(query)
    plain = [f"count={count} ell={ell if ell is not None else 'unsolvable'}"]
    if args.oracle:
        plain.append(f"oracle_count={payload['oracle_count']}")
    return payload, plain, None


def cmd_etsum(args):
    probe = congruence.et_partial_sum(args.n, args.eps)
    payload = {
        "n": probe.n,
        "eps": probe.eps,
        "partial": probe.partial,
        "increments": [{"j": j, "lo": lo, "hi": hi, "value": v} for j, lo, hi, v in probe.increments],
    }
    plain = [f"partial={probe.partial:.9f}"]
    plain += [f"block ({lo},{hi}]: {v:.9f}" for _, lo, hi, v in probe.increments]
    rows = ("j,lo,hi,value", [[j, lo, hi, v] for j, lo, hi, v in probe.increments])
    return payload, plain, rows


def cmd_wsums(args):
    pair = args.pair if args.pair else sawtooth.pair_family(math.floor(args.r1) + 1)
    ws = congruence.weighted_sums(args.x, args.r1, pair)
    payload = {
        "x": ws.X,
        "r1": str(ws.r1),
        "kappa": str(pair.kappa),
        "lambda": str(pair.lambda_),
        "w1": ws.w1,
        "w2": ws.w2,
        "w3": ws.w3,
        "d_count": ws.d_count,
        "e2_cutoff": ws.e2_cutoff,
        "smooth_cutoff": ws.smooth_cutoff,
    }
    plain = [
        f"w1={ws.w1:.9f} w2={ws.w2:.9f} w3={ws.w3:.9f}",
        f"d_count={ws.d_count} e2_cutoff={ws.e2_cutoff:.6f} smooth_cutoff={ws.smooth_cutoff:.6f}",
    ]
    return payload, plain, None


def cmd_psisum(args):
    query = sawtooth.PsiSumQuery(K=args.k, Y=args.y, theta=args.theta, alpha=args.alpha)
    value = sawtooth.psi_sum_dyadic(query)
    payload = {"alpha": str(args.alpha), "y": str(args.y), "theta": args.theta, "k": args.k, "sum": value}
    return payload, [f"sum={value!r}"], None


def cmd_pairs(args):
    pair = sawtooth.pair_family(args.q)
    payload = {"q": args.q, "kappa": str(pair.kappa), "lambda": str(pair.lambda_)}
    return payload, [f"kappa={pair.kappa} lambda={pair.lambda_}"], None


def cmd_lemma1(args):
    if args.scan != "default":
        raise ValueError(f"unknown scan {args.scan!r}; only 'default' is defined")
    result = repro.lemma1_scan()
    payload = {"rows": result["rows"], "max_ratio": result["max_ratio"]}
    header = "alpha,Y,theta,K,sum,bound,ratio"
    rows = (header, [[r["alpha"], r["Y"], r["theta"], r["K"], r["sum"], r["bound"], r["ratio"]] for r in result["rows"]])
    plain = [header] + [",".join(map(str, row)) for row in rows[1]]
    return payload, plain, rows


def cmd_pi(args):
    count = sieve.prime_count(args.x, args.segment_size)
    return {"x": args.x, "count": count}, [str(count)], None


def cmd_pi2(args):
    count = sieve.prime_pairs_count(args.x, args.h, args.segment_size)
    ratio = count * math.log(args.x) ** 2 / (args.x * float(sieve.singular_product(args.h)))
    payload = {"x": args.x, "h": args.h, "count": count, "bound_ratio": ratio}
    return payload, [f"count={count} bound_ratio={ratio:.6f}"], None


def cmd_mertens(args):
    s = sieve.prime_recip_sum(args.z, args.segment_size)
    payload = {"z": args.z, "sum": s, "exp_over_log": math.exp(s) / math.log(args.z)}
    return payload, [f"sum={s!r} exp_over_log={payload['exp_over_log']:.6f}"], None


def cmd_repro(args):
    result = repro.run_experiment(args.name)
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, f"{args.name}.json")
    with open(path, "w") as fh:
        json.dump(result, fh, indent=2, default=str)
        fh.write("\n")
    status = "PASS" if result.get("passed") else "FAIL"
    return result, [f"{args.name}: {status} (report written to {path})"], None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="romanoff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--csv", action="store_true", help="emit CSV")
    common.add_argument("--threads", type=_threads, default="auto",
                        help="worker hint; merges are order-independent so results never change")
    common.add_argument("--segment-size", type=_scale, default=sieve.DEFAULT_SEGMENT,
                        help="sieve segment size in numbers")

    p = sub.add_parser("split", parents=[common], help="classify a spec and solve the lambda split")
    p.add_argument("--r", type=_spec, required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("sparse", parents=[common], help="generate/count the thinned sparse sumset")
    p.add_argument("--r", type=_spec, required=True)
    p.add_argument("--x", type=_scale, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_sparse)

    p = sub.add_parser("density", parents=[common], help="representation density and moments")
    p.add_argument("--r", type=_spec, required=True)
    p.add_argument("--x", type=_scale)
    p.add_argument("--grid", type=_scale_list)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("check", parents=[common], help="representability of one n, with witness")
    p.add_argument("--n", type=_scale, required=True)
    p.add_argument("--r", type=_spec, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("order", parents=[common], help="(d, e2, P+, mu) for odd d")
    p.add_argument("--d", type=_scale, required=True)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("congcount", parents=[common], help="count k with 2^floor(k^r) = g (mod d)")
    p.add_argument("--d", type=_scale, required=True)
    p.add_argument("--g", type=_scale, required=True)
    p.add_argument("--r", type=_rational, required=True)
    p.add_argument("--kmax", type=_scale, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.set_defaults(func=cmd_congcount)

    p = sub.add_parser("etsum", parents=[common], help="partial sums of 1/(d e2(d)^eps)")
    p.add_argument("--n", type=_scale, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_etsum)

    p = sub.add_parser("wsums", parents=[common], help="the three weighted d-sums")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--r1", type=_rational, required=True)
    p.add_argument("--pair", type=_pair_arg, help="exponent pair, e.g. q=3 (default q=floor(r1)+1)")
    p.set_defaults(func=cmd_wsums)

    p = sub.add_parser("psisum", parents=[common], help="dyadic sawtooth sum")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--y", type=_rational, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--k", type=float, required=True)
    p.set_defaults(func=cmd_psisum)

    p = sub.add_parser("pairs", parents=[common], help="the exponent-pair family (1/(4Q-2), 1-(q+1)/(4Q-2))")
    p.add_argument("--q", type=_scale, required=True)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("lemma1", parents=[common], help="ratio scan |psi sum| / dyadic bound")
    p.add_argument("--scan", default="default")
    p.set_defaults(func=cmd_lemma1)

    p = sub.add_parser("pi", parents=[common], help="prime counting")
    p.add_argument("--x", type=_scale, required=True)
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("pi2", parents=[common], help="prime pairs at distance h")
    p.add_argument("--x", type=_scale, required=True)
    p.add_argument("--h", type=_scale, required=True)
    p.set_defaults(func=cmd_pi2)

    p = sub.add_parser("mertens", parents=[common], help="sum of 1/p for 2 < p < z")
    p.add_argument("--z", type=float, required=True)
    p.set_defaults(func=cmd_mertens)

    p = sub.add_parser("repro", parents=[common], help="run a named acceptance experiment")
    p.add_argument("name", choices=sorted(repro.EXPERIMENTS))
    p.add_argument("--out", default="reports")
    p.set_defaults(func=cmd_repro)

    return parser


def _emit_csv(rows) -> str:
    header, body = rows
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header.split(","))
    for row in body:
        writer.writerow(row)
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, plain, rows = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    elif args.csv:
        if rows is None:
            header = list(payload.keys())
            rows = (",".join(header), [[payload[k] for k in header]])
        sys.stdout.write(_emit_csv(rows))
    else:
        for line in plain:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
