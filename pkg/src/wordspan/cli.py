"""Command line entry point.

Every subcommand writes one JSON report ``{"command", "status", "payload"}``
to stdout and a short human summary to stderr.  Exit codes: 0 pass, 1 a
checked claim failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import counterexample, experiments, identity, length
from .matrix import Matrix, parse_matrix

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _emit(command: str, ok: bool, payload: dict, summary: str) -> int:
    report = {"command": command, "status": "pass" if ok else "fail", "payload": payload}
    print(json.dumps(report, indent=2))
    print(summary, file=sys.stderr)
    return EXIT_PASS if ok else EXIT_FAIL


def _error(command: str, message: str) -> int:
    print(json.dumps({"command": command, "status": "error", "payload": {"message": message}}, indent=2))
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def cmd_counterexample(args) -> int:
    report = counterexample.symbolic_report()
    checks = report.checks()
    payload = {"polynomials": report.to_json(), "checks": checks}
    lines = [f"{k:>10} = {v}" for k, v in report.to_json().items()]
    lines += [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in checks.items()]
    return _emit("counterexample", all(checks.values()), payload, "\n".join(lines))


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else experiments.default_seed()
    rep = identity.verify_random(args.pairs, seed, args.entry_bound)
    payload = rep.to_json() | {"seed": seed, "entryBound": args.entry_bound}
    summary = (
        f"{rep.pairs_tested} pairs: corrected identity failed on {rep.relation_failures}, "
        f"wrong identity failed on {rep.wrong_rhs_mismatches}"
    )
    return _emit("verify", rep.relation_failures == 0, payload, summary)


def read_matrix_file(path: Path) -> List[Matrix]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    mats = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            mats.append(parse_matrix(line))
        except (ValueError, TypeError) as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
    if not mats:
        raise InputError(f"{path}: no matrices found")
    if len({m.n for m in mats}) > 1:
        raise InputError(f"{path}: matrices have different sizes")
    return mats


def cmd_length(args) -> int:
    mats = read_matrix_file(Path(args.matrices))
    profile = length.length_of(mats)
    payload = {"profile": profile.to_json(), "bounds": None, "certificate": None}
    ok = True
    if profile.generates:
        bounds = length.check_bounds(profile)
        payload["bounds"] = bounds.to_json()
        if profile.n == 3:
            ok = bounds.within_paz
    if len(mats) == 2 and mats[0].n == 3:
        cert = identity.basis_certificate(*mats)
        payload["certificate"] = {
            "detNonzero": cert.det_nonzero,
            "hNonzero": cert.h_nonzero,
            "rank": cert.rank,
        }
        if cert.hypotheses_hold:
            ok = ok and cert.rank == 9 and profile.length == 3
    summary = f"dims {profile.dims}; generates={profile.generates}; length={profile.length}"
    return _emit("length", ok, payload, summary)


def cmd_scatter(args) -> int:
    seed = args.seed if args.seed is not None else experiments.default_seed()
    if not 0.0 < args.window <= 1.0:
        raise InputError("--window must lie in (0, 1]")
    run = experiments.run_scatter(args.pairs, seed, workers=args.workers)
    experiments.emit_csv(run.records, args.out)
    glob = experiments.fit_global(run.records)
    try:
        near = experiments.fit_near_origin(run.records, args.window).to_json()
    except experiments.FitWindowError as exc:
        near = None
        print(f"near-origin fit skipped: {exc}", file=sys.stderr)
    max_err = max(experiments.relation_error(r) for r in run.records)
    payload = {
        "fit": near,
        "globalFit": glob.to_json(),
        "maxRelationError": max_err,
        "rejected": run.rejected,
        "pairs": len(run.records),
        "seed": seed,
        "window": args.window,
        "csv": str(args.out),
    }
    ok = glob.r_squared < 0.999 and max_err <= 1e-8
    summary = f"{len(run.records)} pairs -> {args.out}; global R^2 {glob.r_squared:.4f}"
    if near:
        summary += f"; near-origin fit {near['slope']:.6g}x + {near['intercept']:.3g}"
    return _emit("scatter", ok, payload, summary)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordspan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("counterexample", help="symbolic check of the two-parameter counterexample")
    s.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("verify", help="exact check of the corrected identity on random integer pairs")
    s.add_argument("--pairs", type=int, default=1000)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--entry-bound", type=int, default=9)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("length", help="span dimensions and length of a matrix set")
    s.add_argument("--matrices", required=True, help="file with one matrix literal per line")
    s.set_defaults(func=cmd_length)

    s = sub.add_parser("scatter", help="random float pairs, CSV output and line fits")
    s.add_argument("--pairs", type=int, default=experiments.DEFAULT_PAIRS)
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out", required=True)
    s.add_argument("--window", type=float, default=experiments.DEFAULT_WINDOW)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_scatter)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        return _error(args.command, str(exc))


if __name__ == "__main__":
    sys.exit(main())
