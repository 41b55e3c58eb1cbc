"""Command-line surface: eval, decode, encode, verify, search, spectrum, oracle.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
error.  Search budgets can also be set through environment variables
(SKEWLABS_MAX_FLIPS, SKEWLABS_MAX_RESTARTS, SKEWLABS_WALL_TIME); explicit
flags win over the environment.
"""

import argparse
import datetime
import json
import os
import sys

from . import __version__, codec, oracle, records, seqcore, skewsym
from .search import SearchConfig, run_parallel

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_RESULTS_FILE = "skewlabs-results.jsonl"


def _env_int(name, fallback):
    value = os.environ.get(name)
    return int(value) if value else fallback


def _env_float(name, fallback):
    value = os.environ.get(name)
    return float(value) if value else fallback


def _merit_fields(f: float) -> str:
    return f"F={seqcore.format_merit_factor(f)} F_full={f!r}"


def cmd_eval(args) -> int:
    s = codec.decode(args.hex, args.length)
    report = seqcore.evaluate(s)
    skew = "true" if skewsym.is_skew_symmetric(s) else "false"
    print(
        f"L={report.length} E={report.energy} {_merit_fields(report.merit_factor)} "
        f"PSL={report.psl} skew={skew}"
    )
    return EXIT_OK


def cmd_decode(args) -> int:
    s = codec.decode(args.hex, args.length)
    print("".join("+" if v == 1 else "-" for v in s))
    return EXIT_OK


_CHAR_TO_VALUE = {"+": 1, "0": 1, "-": -1, "1": -1}


def cmd_encode(args) -> int:
    try:
        values = [_CHAR_TO_VALUE[ch] for ch in args.sequence]
    except KeyError as exc:
        raise ValueError(f"sequence characters must be one of + - 0 1, got {exc}") from None
    print(codec.encode(values), len(values))
    return EXIT_OK


def cmd_verify(args) -> int:
    entries = records.load_records(args.dataset)
    failures = 0
    for check in (records.check_record(e) for e in entries):
        flags = []
        if not check.skew_symmetric:
            flags.append("not-skew")
        if not check.merit_matches:
            flags.append("merit-mismatch")
        if not check.energy_matches:
            flags.append("energy-mismatch")
        if not check.parity_ok:
            flags.append("parity")
        status = "ok" if check.ok else "FAIL " + ",".join(flags)
        print(
            f"L={check.entry.length} F={check.entry.merit_factor} "
            f"E={check.energy} F_computed={seqcore.format_merit_factor(check.merit_factor)} "
            f"{status}"
        )
        failures += 0 if check.ok else 1
    print(f"{len(entries) - failures}/{len(entries)} records verified")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_search(args) -> int:
    cfg = SearchConfig(
        length=args.length,
        mode=args.mode,
        seed=args.seed,
        target_energy=args.target_energy,
        max_flips=args.max_flips,
        max_restarts=args.max_restarts,
        wall_time_limit=args.wall_time,
        workers=args.workers,
        share_stop=args.share_stop,
    )
    cfg.validate()
    result = run_parallel(cfg)
    record = {
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "tool": "skewlabs",
        "version": __version__,
        "config": {
            "length": cfg.length,
            "mode": cfg.mode,
            "seed": cfg.seed,
            "target_energy": cfg.target_energy,
            "max_flips": cfg.max_flips,
            "max_restarts": cfg.max_restarts,
            "wall_time_limit": cfg.wall_time_limit,
            "workers": cfg.workers,
            "memory_capacity": cfg.memory_capacity,
            "share_stop": cfg.share_stop,
        },
        "result": {
            "length": cfg.length,
            "mode": result.mode,
            "energy": result.energy,
            "merit_factor": result.merit_factor,
            "hex": codec.encode(result.sequence),
            "flips": result.flips,
            "restarts": result.restarts,
            "wall_time": result.wall_time,
            "seed": result.seed,
            "worker": result.worker,
            "target_reached": result.target_reached,
            "rng": result.rng,
        },
    }
    with open(args.out, "a") as f:
        f.write(json.dumps(record) + "\n")
    reached = "true" if result.target_reached else "false"
    print(
        f"L={cfg.length} mode={cfg.mode} E={result.energy} "
        f"{_merit_fields(result.merit_factor)} flips={result.flips} "
        f"restarts={result.restarts} time={result.wall_time:.3f}s "
        f"target_reached={reached} out={args.out}"
    )
    return EXIT_OK


def cmd_spectrum(args) -> int:
    s = codec.decode(args.hex, args.length)
    values = seqcore.spectrum_modulus(s, args.samples)
    lines = ["t,modulus"]
    for m, value in enumerate(values):
        lines.append(f"{m / args.samples:.9g},{value:.9g}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    result = oracle.exhaustive(args.length, args.mode)
    f = seqcore.merit_factor(result.witness)
    print(
        f"L={result.length} mode={result.mode} E={result.energy} "
        f"optima={result.optima} witness={codec.encode(result.witness)} "
        f"{_merit_fields(f)}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlabs",
        description="Evaluate, verify, and search low-autocorrelation binary sequences.",
    )
    parser.add_argument("--version", action="version", version=f"skewlabs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="energy, merit factor, PSL and skew flag of a hex sequence")
    p.add_argument("hex")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("decode", help="hex to a +/- sequence string")
    p.add_argument("hex")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", help="+/- (or 0/1) sequence string to hex")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", help="recheck the bundled record table (or another dataset)")
    p.add_argument("--dataset", default=None, help="3-column text file: length merit hex")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="stochastic search; appends a JSON line per run")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mode", choices=["full", "skew"], default="skew")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--target-energy", type=int, default=None)
    p.add_argument("--max-flips", type=int, default=_env_int("SKEWLABS_MAX_FLIPS", 10**8))
    p.add_argument("--max-restarts", type=int, default=_env_int("SKEWLABS_MAX_RESTARTS", 10**3))
    p.add_argument("--wall-time", type=float, default=_env_float("SKEWLABS_WALL_TIME", None))
    p.add_argument("--share-stop", action="store_true", help="let workers stop when any reaches the target")
    p.add_argument("--out", default=DEFAULT_RESULTS_FILE)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("spectrum", help="CSV of |p(e^{2 pi i t})| on a uniform t grid")
    p.add_argument("hex")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("oracle", help="exhaustive ground truth at small lengths")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mode", choices=["full", "skew"], default="full")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
