"""``capax`` command line: capacities, spectra, ratios and claim verifiers.

Every invocation prints one JSON document (or CSV with ``--format csv``).
Exit status: 0 success, 1 domain error or failed claim, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from typing import Optional, Sequence

from .ellipsoid import Ellipsoid, capacity, common_period, k_set, spectrum
from .exact import DomainError, format_rational, parse_ext_rational, parse_rational
from .optimize.concave import check_concave_profile, random_concave_profile
from .optimize.convex import GRIDS, sweep_convex_toric
from .optimize.ellipsoids import (
    ellipsoid_grid_max,
    global_ellipsoid_max,
    verify_global_ellipsoid_max,
    verify_local_ellipsoid_max,
    Verdict,
)
from .optimize.two_corner import thresholds, uncovered_parameters
from .ratio import crossover_check, ratio_ellipsoid, ratio_toric, Ordering
from .toric import capacity_toric, load_profile, polydisk_profile, volume

CLAIMS = (
    "prop-ellipsoid-global",
    "prop-ellipsoid-local",
    "prop-toric-concave",
    "prop-toric-convex",
    "thresholds",
    "crossover",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _ellipsoid(text: str) -> Ellipsoid:
    return Ellipsoid([parse_ext_rational(tok) for tok in text.split(",") if tok.strip()])


def _pair(text: str):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 2:
        raise DomainError(f"expected two comma-separated rationals, got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def _body(args):
    """The domain named by --ellipsoid / --polydisk / --profile."""
    given = [x for x in ("ellipsoid", "polydisk", "profile") if getattr(args, x, None)]
    if len(given) != 1:
        raise DomainError("give exactly one of --ellipsoid, --polydisk, --profile")
    if given[0] == "ellipsoid":
        return _ellipsoid(args.ellipsoid)
    if given[0] == "polydisk":
        return polydisk_profile(*_pair(args.polydisk))
    try:
        return load_profile(args.profile)
    except OSError as exc:
        raise DomainError(f"cannot read profile: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"profile is not valid JSON: {exc}") from None


def _cmd_capacity(args):
    body = _body(args)
    value = capacity(body, args.k) if isinstance(body, Ellipsoid) else capacity_toric(body, args.k)
    return {"c_k": format_rational(value)}, None


def _cmd_spectrum(args):
    E = _ellipsoid(args.ellipsoid)
    rows = [
        {"k": k, "value": format_rational(e.value), "source_index": e.source_index, "multiplier": e.multiplier}
        for k, e in enumerate(spectrum(E, args.count), start=1)
    ]
    return {"ellipsoid": E.to_json(), "spectrum": rows}, rows


def _cmd_kset(args):
    E = _ellipsoid(args.ellipsoid)
    ks = k_set(E, args.max_m)
    rows = [{"m": m, "k_m": k} for m, k in enumerate(ks, start=1)]
    return {"ellipsoid": E.to_json(), "tau": format_rational(common_period(E)), "k_set": ks}, rows


def _cmd_ratio(args):
    body = _body(args)
    ratio = ratio_ellipsoid(body, args.k) if isinstance(body, Ellipsoid) else ratio_toric(body, args.k)
    return ratio.to_json(), None


def _cmd_toric(args):
    P = _body(args)
    if isinstance(P, Ellipsoid):
        raise DomainError("toric needs --profile or --polydisk")
    rows = []
    for k in range(1, args.k + 1) if args.all else [args.k]:
        r = ratio_toric(P, k)
        rows.append({
            "k": k,
            "c_k": format_rational(capacity_toric(P, k)),
            "nth_power": format_rational(r.nth_power),
            "approx": round(r.approx, 8),
        })
    payload = {"profile": P.to_json(), "volume": format_rational(volume(P))}
    payload.update(rows[0] if not args.all else {"capacities": rows})
    return payload, rows


def _cmd_search(args):
    if args.n != 2:
        raise DomainError("grid search is only implemented for n = 2")
    E, ratio = global_ellipsoid_max(args.n, args.k)
    result = ellipsoid_grid_max(args.k, args.denom_bound)
    payload = {
        "n": args.n,
        "k": args.k,
        "denom_bound": args.denom_bound,
        "closed_form": {"ellipsoid": E.to_json(), "ratio": ratio.to_json()},
        "grid_max": format_rational(result.max_power),
        "argmax_a1_over_a2": [format_rational(a) for a in result.argmax],
        "agrees": verify_global_ellipsoid_max(args.n, args.k, args.denom_bound),
    }
    return payload, None


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    try:
        return max(1, int(os.environ.get("CAPAX_JOBS", "1")))
    except ValueError:
        raise DomainError("CAPAX_JOBS must be an integer") from None


def _verify(args):
    claim = args.claim
    if args.k is None:
        raise DomainError(f"verify {claim} needs --k")
    if claim == "prop-ellipsoid-global":
        n = args.n or 2
        holds = verify_global_ellipsoid_max(n, args.k, args.denom_bound)
        E, ratio = global_ellipsoid_max(n, args.k)
        return {
            "claim": claim,
            "grid": {"denom_bound": args.denom_bound},
            "verdict": "holds" if holds else "fails",
            "maximizer": E.to_json(),
            "ratio": ratio.to_json(),
        }, holds
    if claim == "prop-ellipsoid-local":
        if not args.ellipsoid:
            raise DomainError("verify prop-ellipsoid-local needs --ellipsoid")
        E = _ellipsoid(args.ellipsoid)
        rep = verify_local_ellipsoid_max(E, args.k)
        in_k = args.k in k_set(E, args.k)
        out = {
            "claim": claim,
            "grid": {"eps": ["1/10", "1/100"], "directions": "default"},
            "candidate": E.to_json(),
            "k_in_K": in_k,
            "ratio": rep.ratio.to_json(),
            "verdict": rep.verdict.value,
        }
        if rep.witness is not None:
            out["witness"] = {"ellipsoid": rep.witness.to_json(), "ratio": rep.witness_ratio.to_json()}
        # the claim: a sampled maximum exactly when k lies in K(E)
        return out, in_k == (rep.verdict is Verdict.CONFIRMED_MAX)
    if claim == "prop-toric-concave":
        if args.profile:
            profiles = [load_profile(args.profile)]
        else:
            rng = random.Random(args.seed)
            profiles = [random_concave_profile(rng) for _ in range(args.count)]
        checks = [check_concave_profile(P, args.k) for P in profiles]
        failures = [P.to_json() for P, c in zip(profiles, checks) if not c.ok]
        holds = not failures
        return {
            "claim": claim,
            "grid": {"profiles": len(profiles), "seed": None if args.profile else args.seed},
            "verdict": "holds" if holds else "fails",
            "bound": format_rational(checks[0].bound),
            "max_nth_power": format_rational(max(c.ratio.nth_power for c in checks)),
            "equality_loci": [P.to_json() for P, c in zip(profiles, checks) if c.ratio.nth_power == c.bound],
            "failures": failures,
        }, holds
    if claim == "prop-toric-convex":
        if args.grid not in GRIDS:
            raise DomainError(f"unknown grid {args.grid!r}; choose from {sorted(GRIDS)}")
        rep = sweep_convex_toric(args.k, GRIDS[args.grid], balanced=not args.unbalanced, jobs=_jobs(args))
        return rep.to_json(), rep.holds
    if claim == "thresholds":
        th = thresholds(args.k)
        gaps = uncovered_parameters(args.k)
        strict = th.l_top < th.u_top and th.l0 < th.u0
        equal = th.l_top == th.u_top and th.l0 == th.u0
        holds = equal if args.k == 2 else (strict and not gaps)
        return {
            "claim": claim,
            "k": args.k,
            "verdict": "holds" if holds else "fails",
            "thresholds": {name: format_rational(v) for name, v in th._asdict().items()},
            "uncovered": [{"i": i, "r": format_rational(a)} for i, a, _ in gaps],
        }, holds
    order = crossover_check(args.k)
    expected = Ordering.GREATER if args.k >= 3 else Ordering.EQUAL if args.k == 2 else Ordering.LESS
    return {"claim": claim, "k": args.k, "verdict": "holds" if order is expected else "fails",
            "polydisk_vs_ellipsoid": order.value}, order is expected


def _add_body(p, profile=True, polydisk=True):
    p.add_argument("--ellipsoid", help="comma-separated parameters, e.g. 1,2 or 1,inf")
    if polydisk:
        p.add_argument("--polydisk", help="two comma-separated side areas a,b")
    if profile:
        p.add_argument("--profile", help="JSON profile file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="capax", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value otherwise
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("capacity", help="c_k of an ellipsoid or toric domain", parents=[fmt])
    _add_body(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("spectrum", help="first terms of the sorted multiple sequence", parents=[fmt])
    p.add_argument("--ellipsoid", required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("kset", help="k_1(E), ..., k_m(E)", parents=[fmt])
    p.add_argument("--ellipsoid", required=True)
    p.add_argument("--max-m", type=int, required=True)

    p = sub.add_parser("ratio", help="capacity ratio c_k / vol^(1/n)", parents=[fmt])
    _add_body(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("toric", help="capacity, volume and ratio of a toric profile", parents=[fmt])
    p.add_argument("--profile")
    p.add_argument("--polydisk")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--all", action="store_true", help="report every k from 1 to --k")

    p = sub.add_parser("search", help="grid search for the best ellipsoid", parents=[fmt])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--denom-bound", type=int, default=30)

    p = sub.add_parser("verify", help="check one claim on a finite grid", parents=[fmt])
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--ellipsoid")
    p.add_argument("--profile")
    p.add_argument("--grid", default="default")
    p.add_argument("--unbalanced", action="store_true")
    p.add_argument("--denom-bound", type=int, default=30)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int)
    return parser


COMMANDS = {
    "capacity": _cmd_capacity,
    "spectrum": _cmd_spectrum,
    "kset": _cmd_kset,
    "ratio": _cmd_ratio,
    "toric": _cmd_toric,
    "search": _cmd_search,
}


def _render(payload, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in payload.items():
            writer.writerow([key, value if isinstance(value, (str, int, float)) else json.dumps(value)])
    return buf.getvalue()


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            payload, holds = _verify(args)
            rows, code = None, 0 if holds else 1
        else:
            payload, rows = COMMANDS[args.command](args)
            code = 0
    except DomainError as exc:
        payload, rows, code = {"error": {"type": "domain_error", "message": str(exc)}}, None, 1
    out.write(_render(payload, rows, args.format))
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
