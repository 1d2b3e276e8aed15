"""Command-line interface.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage or I/O error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import extremal, oracle
from .enumeration import analyze, enumerate_interval_sus, enumerate_point_sus, build_charging
from .mus import compute_mus
from .query import sus_index
from .suffix_index import build_index
from .text import Interval, SusError, make_text, read_text_file

SCHEMA_VERSION = "1"
ORACLE_LIMIT = 400  # longest single input still compared against the brute-force oracle


class UsageError(Exception):
    pass


def show(data: bytes) -> str:
    """Printable, tab/newline-free rendering of raw bytes."""
    return data.decode("latin-1").encode("unicode_escape").decode("ascii")


def iv_json(iv) -> list:
    return [iv[0], iv[1]]


def jsonable(value):
    if isinstance(value, Fraction):
        return float(value) if value.denominator != 1 else value.numerator
    raise TypeError(type(value))


def load_text(args):
    if args.string is not None and args.file is not None:
        raise UsageError("--string and --file are mutually exclusive")
    if args.string is not None:
        return make_text(args.string)
    if args.file is not None:
        try:
            return read_text_file(args.file)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    raise UsageError("an input is required: --string S or --file PATH")


def emit(args, command: str, params: dict, payload: dict, rows) -> None:
    if args.json:
        doc = {"schemaVersion": SCHEMA_VERSION, "command": command,
               "params": params, "payload": payload}
        json.dump(doc, sys.stdout, default=jsonable)
        sys.stdout.write("\n")
    else:
        for row in rows:
            print("\t".join(str(c) for c in row))


def echo_params(args, **extra) -> dict:
    params = {}
    if getattr(args, "string", None) is not None:
        params["string"] = args.string
    if getattr(args, "file", None) is not None:
        params["file"] = args.file
    params.update(extra)
    return params


def cmd_mus(args) -> int:
    text = load_text(args)
    muslist = compute_mus(build_index(text))
    items = muslist.items
    payload = {"n": text.n, "m": muslist.m,
               "mus": [{"begin": b, "end": e, "substring": show(text[Interval(b, e)])}
                       for b, e in items]}
    rows = [(b, e, show(text[Interval(b, e)])) for b, e in items]
    emit(args, "mus", echo_params(args), payload, rows)
    return 0


def parse_interval(spec: str) -> Interval:
    try:
        s, t = spec.split(":")
        return Interval(int(s), int(t))
    except ValueError as exc:
        raise UsageError(f"interval must look like S:T, got {spec!r}") from exc


def cmd_query(args) -> int:
    text = load_text(args)
    muslist = compute_mus(build_index(text))
    idx = sus_index(muslist)
    if args.point is not None:
        ans = idx.point_sus(args.point, args.method)
        params = echo_params(args, point=args.point)
    else:
        ans = idx.interval_sus(parse_interval(args.interval), args.method)
        params = echo_params(args, interval=args.interval)
    payload = {"query": iv_json(ans.query), "susLength": ans.sus_length,
               "sus": [{"begin": b, "end": e, "substring": show(text[Interval(b, e)])}
                       for b, e in ans.sus_list]}
    rows = [(b, e, ans.sus_length, show(text[Interval(b, e)])) for b, e in ans.sus_list]
    emit(args, "query", params, payload, rows)
    return 0


def cmd_enumerate(args) -> int:
    text = load_text(args)
    muslist = compute_mus(build_index(text))
    counts = {"n": text.n, "m": muslist.m}
    payload = {}
    rows = []
    if args.interval:
        is_set = enumerate_interval_sus(muslist)
        counts["isCount"] = len(is_set)
        if args.decompose:
            payload["is"] = [iv_json(iv) for iv in is_set]
            rows += [("is", b, e, "-") for b, e in is_set]
    else:
        ps_set = enumerate_point_sus(muslist)
        charging = build_charging(ps_set, muslist)
        counts.update(psCount=len(ps_set.ps), lsCount=len(ps_set.ls), msCount=len(ps_set.ms),
                      rsCount=len(ps_set.rs), uCount=len(charging.big_u))
        if args.decompose:
            payload["ls"] = [iv_json(iv) for iv in ps_set.ls]
            payload["ms"] = [iv_json(iv) for iv in ps_set.ms]
            payload["rs"] = [iv_json(iv) for iv in ps_set.rs]
            kind = {iv: "LS" for iv in ps_set.ls}
            kind.update({iv: "MS" for iv in ps_set.ms})
            kind.update({iv: "RS" for iv in ps_set.rs})
            rows += [("ps", b, e, kind[(b, e)]) for b, e in ps_set.ps]
        if args.charging:
            payload["f"] = [{"interval": iv_json(iv), "u": u} for iv, u in sorted(charging.f.items())]
            payload["finv"] = {str(u): [iv_json(iv) for iv in ivs] for u, ivs in charging.finv.items()}
            payload["U"] = charging.big_u
            rows += [("f", b, e, u) for (b, e), u in sorted(charging.f.items())]
            rows += [("finv", u, len(ivs), " ".join(str(iv) for iv in ivs) or "-")
                     for u, ivs in charging.finv.items()]
            rows.append(("U", len(charging.big_u), ",".join(map(str, charging.big_u)) or "-", "-"))
    payload = {**counts, **payload}
    rows = [("count", k, v, "-") for k, v in counts.items()] + rows
    mode = "interval" if args.interval else "point"
    emit(args, "enumerate", echo_params(args, mode=mode, decompose=args.decompose,
                                         charging=args.charging), payload, rows)
    return 0


def _sweep_payload(results) -> list:
    return [{"n": r.n, "sigma": r.sigma, "strings": r.strings, "maxPs": r.max_ps,
             "maxIs": r.max_is, "psWitnesses": r.ps_witnesses, "isWitnesses": r.is_witnesses,
             "violations": r.violations, "mismatches": r.mismatches} for r in results]


def cmd_verify(args) -> int:
    with_oracle = not args.bounds_only
    if args.exhaustive is not None:
        n_max, sigma = args.exhaustive
        results = oracle.sweep(n_max, sigma, budget=args.budget, with_oracle=with_oracle,
                               jobs=args.jobs)
        params = {"mode": "exhaustive", "nMax": n_max, "sigma": sigma, "oracle": with_oracle}
    elif args.random is not None:
        if len(args.random) not in (3, 4):
            raise UsageError("--random takes COUNT MAXLEN SIGMA [SEED]")
        count, max_len, sigma = args.random[:3]
        seed = args.random[3] if len(args.random) == 4 else args.seed
        results = [oracle.verify_random(count, max_len, sigma, seed, with_oracle, jobs=args.jobs)]
        params = {"mode": "random", "count": count, "maxLen": max_len, "sigma": sigma,
                  "seed": seed, "oracle": with_oracle}
    else:
        text = load_text(args)
        a = analyze(text)
        rep = a.report
        mismatches = []
        compared = with_oracle and text.n <= ORACLE_LIMIT
        if compared:
            mismatches = oracle.compare_with_oracle(text, a)
        payload = rep.to_dict()
        payload["oracleCompared"] = compared
        payload["mismatches"] = mismatches
        rows = [("count", k, getattr(rep, k)) for k in
                ("n", "m", "ps_count", "is_count", "ls_count", "ms_count", "rs_count", "u_count")]
        rows.append(("bound", "(3n-1)/2", Fraction(3 * rep.n - 1, 2)))
        rows.append(("tight", "|PS| == (3n-1)/2", str(rep.tight).lower()))
        rows += [("check", f"{c.name} [{c.lhs} {c.relation} {c.rhs}]",
                  "pass" if c.passed else "FAIL") for c in rep.checks]
        rows.append(("oracle", "compared" if compared else "skipped",
                     "mismatch" if mismatches else "ok"))
        rows += [("mismatch", m, "-") for m in mismatches]
        emit(args, "verify", echo_params(args, mode="input", oracle=with_oracle), payload, rows)
        return 0 if rep.ok and not mismatches else 1

    ok = all(r.ok for r in results)
    payload = {"ok": ok, "results": _sweep_payload(results)}
    rows = [("n", "sigma", "strings", "maxPs", "maxIs", "violations", "mismatches")]
    rows += [(r.n, r.sigma, r.strings, r.max_ps, r.max_is, len(r.violations), len(r.mismatches))
             for r in results]
    for r in results:
        rows += [("violation", v, "-", "-", "-", "-", "-") for v in r.violations]
        rows += [("mismatch", m, "-", "-", "-", "-", "-") for m in r.mismatches]
    emit(args, "verify", params, payload, rows)
    return 0 if ok else 1


def cmd_generate(args) -> int:
    family, params = args.family, args.params
    try:
        if family == "point-tight":
            (k,) = params
            spec = extremal.gen_point_tight(int(k))
        elif family == "sigma-family":
            n, sigma = params
            spec = extremal.gen_sigma_family(int(n), int(sigma))
        else:
            (eps,) = params
            spec = extremal.gen_interval_family(eps)
    except ValueError as exc:
        if isinstance(exc, extremal.ParamOutOfRange):
            raise
        raise UsageError(f"bad parameters for {family}: {' '.join(params)}") from exc
    payload = {"family": spec.family, "params": spec.params, "text": show(spec.text.data),
               "n": spec.n, "predicted": spec.predicted_count}
    if spec.predicted_mus_count is not None:
        payload["predictedMusCount"] = spec.predicted_mus_count
    for key in ("x", "gap", "gap_limit", "gap_within_limit"):
        if key in spec.extra:
            payload[key] = spec.extra[key]
    status = 0
    if args.check:
        result = extremal.measure(spec)
        payload.update(measured=result["measured"], musCount=result["mus_count"],
                       match=result["match"])
        status = 0 if result["match"] else 1
    rows = [(k, v if not isinstance(v, (dict, bool)) else json.dumps(v))
            for k, v in payload.items()]
    emit(args, "generate", {"family": family, "params": params, "check": args.check},
         payload, rows)
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--string", help="input text given literally (UTF-8 encoded)")
    common.add_argument("--file", help="input file, raw bytes; one trailing newline is dropped")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify sweeps")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized verification")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="susbounds",
        description="Minimal / shortest unique substrings: queries, enumeration and bound checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mus", parents=[common], help="list minimal unique substrings")
    p.set_defaults(func=cmd_mus)

    p = sub.add_parser("query", parents=[common], help="shortest unique substrings for a query")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", type=int, metavar="P")
    g.add_argument("--interval", metavar="S:T")
    p.add_argument("--method", choices=("window", "scan"), default="window")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate all point or interval SUSs")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--point", action="store_true", help="point SUSs (default)")
    g.add_argument("--interval", action="store_true", help="non-trivial interval SUSs")
    p.add_argument("--decompose", action="store_true", help="list the sets (LS/MS/RS for points)")
    p.add_argument("--charging", action="store_true", help="list f, f^-1 and U")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="check bounds and compare with the oracle")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", nargs=2, type=int, metavar=("NMAX", "SIGMA"))
    g.add_argument("--random", nargs="+", type=int, metavar="N",
                   help="COUNT MAXLEN SIGMA [SEED]")
    p.add_argument("--bounds-only", action="store_true", help="skip the brute-force oracle")
    p.add_argument("--budget", type=int, default=2_000_000,
                   help="maximum number of canonical strings in an exhaustive sweep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="generate an extremal string family")
    p.add_argument("family", choices=("point-tight", "sigma-family", "interval-family"))
    p.add_argument("params", nargs="+", help="k | n sigma | eps as p/q")
    p.add_argument("--check", action="store_true", help="measure and compare with the prediction")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, SusError, ValueError) as exc:
        print(f"susbounds: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
