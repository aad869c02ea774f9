"""Command line front end.

Data goes to stdout, progress and diagnostics to stderr.  Exit codes:
0 success, 1 a campaign or verdict failed, 2 usage error, 3 resource
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, verify
from . import ramanujan as rp
from .errors import ResourceBudgetError, ThresholdDomainError
from .rational import format_fraction, parse_ratio

ENV_CAP = "RAMANUJAN_PRIMES_CAP"
ENV_THREADS = "RAMANUJAN_PRIMES_THREADS"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


@dataclass
class CliConfig:
    cap: int = 1 << 31
    threads: int = 1
    fmt: str = "text"
    seed: int | None = None

    def __post_init__(self):
        if self.cap < 10 ** 6:
            raise ValueError(f"sieve cap must be at least 10^6, got {self.cap}")
        if self.threads < 1:
            raise ValueError(f"thread count must be >= 1, got {self.threads}")
        if self.fmt not in ("text", "json", "csv"):
            raise ValueError(f"unknown output format {self.fmt!r}")


def _config_from(args) -> CliConfig:
    cap = getattr(args, "cap", None)
    if cap is None:
        cap = int(os.environ.get(ENV_CAP, 1 << 31))
    threads = getattr(args, "threads", None)
    if threads is None:
        threads = int(os.environ.get(ENV_THREADS, 1))
    if getattr(args, "json", False):
        fmt = "json"
    elif getattr(args, "csv", False):
        fmt = "csv"
    else:
        fmt = "text"
    return CliConfig(cap=cap, threads=threads, fmt=fmt,
                     seed=getattr(args, "seed", None))


def _parse_k(text: str) -> Fraction:
    k = parse_ratio(text)
    if k <= 1:
        raise ValueError(f"k must exceed 1, got {k}")
    return k


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_compute(args, config: CliConfig) -> int:
    k = _parse_k(args.k)
    cache = rp.TableCache(hard_cap=config.cap)
    table = rp.ramanujan_prefix(k, args.n, cache)
    if config.fmt == "json":
        print(table.to_json())
    else:
        print(" ".join(str(v) for v in table.values))
        print(f"cutoff {table.cutoff} ({table.proof}, profile "
              f"{table.profile})", file=sys.stderr)
    return EXIT_OK


def _cmd_pik(args, config: CliConfig) -> int:
    k = _parse_k(args.k)
    cache = rp.TableCache(hard_cap=config.cap)
    count = rp.pi_k(k, args.x, cache)
    total = cache.get(max(args.x, 2)).pi(args.x)
    if config.fmt == "json":
        payload = {"k": str(k), "x": args.x, "pi_k": count, "pi": total}
        if total:
            rho = rp.rho_k(k, args.x, cache)
            payload["rho"] = f"{rho.numerator}/{rho.denominator}"
        print(json.dumps(payload))
        return EXIT_OK
    print(f"pi_k({args.x}) = {count}")
    print(f"pi({args.x}) = {total}")
    if total:
        print(f"rho_k({args.x}) = {format_fraction(rp.rho_k(k, args.x, cache))}")
    return EXIT_OK


def _cmd_nk(args, config: CliConfig, strict: bool) -> int:
    k = _parse_k(args.k)
    cache = rp.TableCache(hard_cap=config.cap)
    probe = args.probe
    if probe is None:
        bound = 3 if strict else 2
        closed_from = rp._N_CLOSED_FROM if strict else rp._N0_CLOSED_FROM
        if k >= closed_from:
            pi = cache.get(max(10 ** 4, int(bound * float(k) * 2)))
            probe = 2 * max(pi.pi(bound * k.numerator // k.denominator), 1)
        else:
            probe = 500
    est = (rp.empirical_N(k, probe, cache) if strict
           else rp.empirical_N0(k, probe, cache))
    name = "N" if strict else "N_0"
    if config.fmt == "json":
        print(json.dumps({"k": str(k), "name": name, "value": est.value,
                          "kind": est.kind, "probe": est.probe,
                          "closed_form": est.closed_form,
                          "consistent": est.consistent}))
        return EXIT_OK
    print(f"{name}({k}) = {est.value} [{est.kind}]")
    print(f"probe = {est.probe}")
    if est.closed_form is not None:
        print(f"closed form = {est.closed_form}, "
              f"agreement = {'yes' if est.consistent else 'NO'}")
    return EXIT_OK


def _parse_params(text: str | None) -> dict:
    out = {}
    if not text:
        return out
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, raw = chunk.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {chunk!r}")
        key = key.strip()
        raw = raw.strip()
        if key == "profile":
            out[key] = raw
        else:
            out[key] = parse_ratio(raw)
    return out


def _cmd_const(args, config: CliConfig) -> int:
    params = _parse_params(args.params)
    cache = rp.TableCache(hard_cap=config.cap)
    pi = cache.get(10 ** 6)
    try:
        value = bounds.named_threshold(args.name, pi=pi, **params)
    except ResourceBudgetError:
        pi = cache.get(config.cap)
        value = bounds.named_threshold(args.name, pi=pi, **params)
    except TypeError as err:
        names = re.findall(r"'(\w+)'", str(err))
        if "missing" in str(err) and names:
            wanted = ", ".join(f"{n}=..." for n in names)
            raise ValueError(
                f"threshold '{args.name}' needs --params {wanted}") from None
        if "unexpected keyword" in str(err) and names:
            raise ValueError(
                f"threshold '{args.name}' does not take "
                f"parameter '{names[0]}'") from None
        raise
    if config.fmt == "json":
        print(json.dumps({"name": args.name,
                          "params": {k: str(v) for k, v in params.items()},
                          "value": value}))
    else:
        print(f"{value:.12g}")
    return EXIT_OK


def _cmd_verify(args, config: CliConfig) -> int:
    ids = verify.campaign_ids() if args.campaign == "all" else [args.campaign]
    cache = rp.TableCache(hard_cap=config.cap)
    reports = verify.run_all(ids, cache, threads=config.threads,
                             limit=args.limit, mmax=args.mmax,
                             seed=config.seed)
    if config.fmt == "json":
        print(verify.reports_to_json(reports))
    elif config.fmt == "csv":
        print(verify.reports_to_csv(reports), end="")
    else:
        for rep in reports:
            status = "pass" if rep.passed else "FAIL"
            print(f"{rep.id}: {status} ({rep.cases} cases, "
                  f"{rep.elapsed:.2f}s)")
            for note in rep.exceptions:
                print(f"  expected: {note}")
            for failure in rep.failures:
                print(f"  failure: {failure}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def _cmd_mps(args, config: CliConfig) -> int:
    if (args.m is None) == (args.mmax is None):
        raise ValueError("give exactly one of --m or --mmax")
    cache = rp.TableCache(hard_cap=config.cap)
    ms = [args.m] if args.m is not None else range(1, args.mmax + 1)
    worst = EXIT_OK
    rows = []
    for m in ms:
        verdict = rp.mps_holds(m, cache)
        rows.append(verdict)
        if not verdict.holds:
            worst = EXIT_FAILURE
    if config.fmt == "json":
        print(json.dumps([{"m": v.m, "verdict": v.verdict, "n0": v.n0,
                           "r_value": v.r_value,
                           "counterexample": v.counterexample}
                          for v in rows]))
        return worst
    for v in rows:
        extra = f", R = {v.r_value}" if v.r_value is not None else ""
        if v.counterexample:
            extra += f", counterexample n = {v.counterexample[1]}"
        print(f"m={v.m}: {v.verdict} (n0 = {v.n0}{extra})")
    return worst


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramanujan-primes",
        description="k-Ramanujan primes with certified cutoffs, named "
                    "threshold constants, and verification campaigns.")
    parser.add_argument("--cap", type=int, default=None,
                        help=f"sieve hard cap (or ${ENV_CAP})")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker threads for verify (or ${ENV_THREADS})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="R_1..R_n for a given k")
    p.add_argument("--k", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("pik", help="pi_k(x), pi(x) and rho_k(x)")
    p.add_argument("--k", required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--json", action="store_true")

    for name in ("nk", "n0k"):
        p = sub.add_parser(name, help=f"empirical {name.upper()}(k) with "
                           "closed form when applicable")
        p.add_argument("--k", required=True)
        p.add_argument("--probe", type=int, default=None)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("const", help="evaluate a named threshold constant")
    p.add_argument("--name", required=True)
    p.add_argument("--params", default="",
                   help="comma-separated key=value, e.g. k=2,eps1=0.1")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification campaigns")
    p.add_argument("--campaign", required=True,
                   help="campaign id or 'all'")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--mmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("mps", help="interval-conjecture verdicts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--mmax", type=int)
    p.add_argument("--json", action="store_true")
    return parser


_COMMANDS = {
    "compute": _cmd_compute,
    "pik": _cmd_pik,
    "nk": lambda a, c: _cmd_nk(a, c, strict=True),
    "n0k": lambda a, c: _cmd_nk(a, c, strict=False),
    "const": _cmd_const,
    "verify": _cmd_verify,
    "mps": _cmd_mps,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        config = _config_from(args)
        return _COMMANDS[args.command](args, config)
    except ResourceBudgetError as err:
        print(f"resource budget exceeded: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, KeyError, ThresholdDomainError, TypeError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())
