"""Command-line harness: ``skewmul verify | count | bench``.

Exit codes: 0 all products agree, 1 a fast product differs from the naive
one, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import io
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable

from . import skew
from .algebra import Kind, alg_make
from .errors import SkewMulError
from .skew import SkewPoly, fast_mul, naive_mul, skew_random
from .tower import tower_dispatch, tower_make

CSV_HEADER = ["kind", "p", "r", "d", "r1", "r2", "algo", "trial",
              "n_mul", "n_add", "n_inv", "wall_ns", "pass"]

KINDS = ("split", "kummer", "artin", "tower")

FAULT_ENV = "SKEWMUL_INJECT_FAULT"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    kind: str
    p: int
    r: int | None = None
    d: int = 1
    trials: int = 10
    seed: int = 0
    algo: str = "both"
    tower: tuple[int, int] | None = None
    fmt: str = "csv"
    out: str | None = None
    start_trial: int = 0

    def validate(self, need_r: bool = True) -> None:
        if self.kind not in KINDS:
            raise UsageError(f"unknown kind {self.kind!r}")
        if self.trials < 1:
            raise UsageError("trials must be >= 1")
        if self.d < 0:
            raise UsageError("d must be >= 0")
        if self.kind == "tower":
            if self.tower is None:
                raise UsageError("--tower R1:R2 is required for kind=tower")
        elif need_r and self.r is None:
            raise UsageError("--r is required")


@dataclass
class RunRecord:
    kind: str
    p: int
    r: int
    d: int
    r1: int | None
    r2: int | None
    algo: str
    trial: int | None
    n_mul: float
    n_add: float
    n_inv: float
    wall_ns: int
    passed: bool | None

    def as_row(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, float) and v.is_integer():
                return str(int(v))
            return str(v)

        values = dataclasses.astuple(self)
        return [fmt(v) for v in values]

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["pass"] = d.pop("passed")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        d = dict(d)
        d["passed"] = d.pop("pass")
        return cls(**d)


def derive_seed(root: int, *keys) -> int:
    """Counter-based split of the root seed: one independent seed per key tuple."""
    text = ":".join(str(k) for k in (root, *keys))
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


@dataclass
class Instance:
    desc: object
    fast: Callable[[SkewPoly, SkewPoly], SkewPoly]
    r: int
    r1: int | None = None
    r2: int | None = None


def make_instance(cfg: RunConfig, r: int | None = None) -> Instance:
    r = cfg.r if r is None else r
    if cfg.kind == "tower":
        r1, r2 = cfg.tower
        tw = tower_make(cfg.p, r1, r2)
        return Instance(tw.outer, lambda f, g: tower_dispatch(f, g, tw), r2, r1, r2)
    desc = alg_make(Kind(cfg.kind), cfg.p, r, cfg.seed)
    return Instance(desc, fast_mul, r)


def _measure(fn, f, g, ctx):
    with ctx.session() as counter:
        t0 = time.perf_counter_ns()
        h = fn(f, g)
        wall = time.perf_counter_ns() - t0
    return h, counter, wall


def run_trials(cfg: RunConfig, inst: Instance, d: int, point_key,
               repeat: int = 1, warmup: int = 0) -> tuple[list[RunRecord], list[int]]:
    """Per-trial records for every requested algorithm, plus failing trial indices."""
    ctx = inst.desc.ctx
    algos = ["naive", "fast"] if cfg.algo == "both" else [cfg.algo]
    fns = {"naive": naive_mul, "fast": inst.fast}
    records, failures = [], []
    for t in range(cfg.start_trial, cfg.start_trial + cfg.trials):
        s = derive_seed(cfg.seed, *point_key, t)
        f = skew_random(inst.desc, d, derive_seed(s, "f"))
        g = skew_random(inst.desc, d, derive_seed(s, "g"))
        results = {}
        for algo in algos:
            for _ in range(warmup):
                _measure(fns[algo], f, g, ctx)
            walls = []
            for _ in range(repeat):
                h, counter, wall = _measure(fns[algo], f, g, ctx)
                walls.append(wall)
            results[algo] = (h, counter, int(statistics.median(walls)))
        passed = None
        if len(algos) == 2:
            passed = results["naive"][0] == results["fast"][0]
            if not passed:
                failures.append(t)
        for algo in algos:
            _, c, wall = results[algo]
            records.append(RunRecord(cfg.kind, cfg.p, inst.r, d, inst.r1, inst.r2, algo, t,
                                     c.n_mul, c.n_add, c.n_inv, wall, passed))
    return records, failures


def write_records(records: list[RunRecord], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([r.to_dict() for r in records], out, indent=1)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.as_row())


def read_records(text: str, fmt: str) -> list[RunRecord]:
    if fmt == "json":
        return [RunRecord.from_dict(d) for d in json.loads(text)]
    rows = list(csv.reader(io.StringIO(text)))
    if rows[0] != CSV_HEADER:
        raise ValueError(f"unexpected header {rows[0]}")

    def num(s, cast=int):
        return None if s == "" else cast(s)

    out = []
    for row in rows[1:]:
        rec = dict(zip(CSV_HEADER, row))
        out.append(RunRecord(
            rec["kind"], int(rec["p"]), int(rec["r"]), int(rec["d"]), num(rec["r1"]), num(rec["r2"]),
            rec["algo"], num(rec["trial"]), num(rec["n_mul"], float), num(rec["n_add"], float),
            num(rec["n_inv"], float), int(rec["wall_ns"]),
            None if rec["pass"] == "" else rec["pass"] == "true"))
    return out


def _emit(records, cfg: RunConfig, stdout) -> None:
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            write_records(records, cfg.fmt, fh)
    else:
        write_records(records, cfg.fmt, stdout)


def reproduce_command(cfg: RunConfig, trial: int) -> str:
    parts = ["skewmul", "verify", "--kind", cfg.kind, "--p", str(cfg.p)]
    if cfg.kind == "tower":
        parts += ["--tower", f"{cfg.tower[0]}:{cfg.tower[1]}"]
    else:
        parts += ["--r", str(cfg.r)]
    parts += ["--d", str(cfg.d), "--seed", str(cfg.seed), "--start-trial", str(trial), "--trials", "1"]
    return " ".join(parts)


def cmd_verify(cfg: RunConfig, stdout=sys.stdout, stderr=sys.stderr) -> int:
    cfg = dataclasses.replace(cfg, algo="both")
    inst = make_instance(cfg)
    records, failures = run_trials(cfg, inst, cfg.d, ())
    _emit(records, cfg, stdout)
    if failures:
        for t in failures:
            seed = derive_seed(cfg.seed, t)
            print(f"MISMATCH: trial {t} (trial seed {seed}) fast != naive", file=stderr)
            print(f"reproduce: {reproduce_command(cfg, t)}", file=stderr)
        return 1
    print(f"ok: {cfg.trials} trials, fast == naive", file=stderr)
    return 0


def cmd_count(cfg: RunConfig, grid_r: list[int] | None, grid_d: list[int] | None,
              stdout=sys.stdout, stderr=sys.stderr) -> int:
    if bool(grid_r) == bool(grid_d):
        raise UsageError("count needs exactly one non-empty grid: --grid-r or --grid-d")
    if grid_r and cfg.kind == "tower":
        raise UsageError("tower counts sweep --grid-d only")
    points = [(r, cfg.d) for r in grid_r] if grid_r else [(cfg.r, d) for d in grid_d]
    rows = []
    mismatch = False
    for r, d in sorted(points):
        if d < 0:
            raise UsageError("grid degrees must be >= 0")
        inst = make_instance(cfg, r)
        records, failures = run_trials(cfg, inst, d, (r, d))
        mismatch |= bool(failures)
        for algo in dict.fromkeys(rec.algo for rec in records):
            mine = [rec for rec in records if rec.algo == algo]
            n = len(mine)
            rows.append(RunRecord(cfg.kind, cfg.p, inst.r, d, inst.r1, inst.r2, algo, None,
                                  sum(x.n_mul for x in mine) / n, sum(x.n_add for x in mine) / n,
                                  sum(x.n_inv for x in mine) / n,
                                  int(statistics.median(x.wall_ns for x in mine)),
                                  None if mine[0].passed is None else not failures))
            print(f"{algo:>5} r={inst.r} d={d}: total n_mul={sum(x.n_mul for x in mine)} "
                  f"over {n} trials", file=stderr)
    _emit(rows, cfg, stdout)
    return 1 if mismatch else 0


def cmd_bench(cfg: RunConfig, repeat: int = 5, stdout=sys.stdout, stderr=sys.stderr) -> int:
    if repeat < 1:
        raise UsageError("repeat must be >= 1")
    inst = make_instance(cfg)
    records, failures = run_trials(cfg, inst, cfg.d, (), repeat=repeat, warmup=1)
    _emit(records, cfg, stdout)
    return 1 if failures else 0


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _tower_pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R1:R2, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewmul", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", required=True, choices=KINDS)
    common.add_argument("--p", type=int, required=True)
    common.add_argument("--r", type=int)
    common.add_argument("--d", type=int, default=1)
    common.add_argument("--trials", type=int, default=10)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--algo", choices=("naive", "fast", "both"), default="both")
    common.add_argument("--tower", type=_tower_pair, metavar="R1:R2")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    common.add_argument("--start-trial", type=int, default=0,
                        help="index of the first trial (used by reproduction commands)")

    sub.add_parser("verify", parents=[common], help="check fast == naive on random pairs")
    count = sub.add_parser("count", parents=[common], help="operation counts over a grid")
    count.add_argument("--grid-r", type=_int_list)
    count.add_argument("--grid-d", type=_int_list)
    bench = sub.add_parser("bench", parents=[common], help="wall-clock timings")
    bench.add_argument("--repeat", type=int, default=5, help="timed runs per trial (median reported)")
    return parser


def _install_fault_from_env() -> None:
    if os.environ.get(FAULT_ENV):
        def flip(h: SkewPoly) -> SkewPoly:
            coeffs = [list(c) for c in h.coeffs]
            coeffs[0][0] = (coeffs[0][0] + 1) % h.desc.p
            return SkewPoly(h.desc, coeffs)

        skew.fault_hook = flip


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    keys = {f.name for f in dataclasses.fields(RunConfig)}
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in keys})
    _install_fault_from_env()
    try:
        cfg.validate(need_r=not (args.command == "count" and args.grid_r))
        if args.command == "verify":
            return cmd_verify(cfg, stdout, stderr)
        if args.command == "count":
            return cmd_count(cfg, args.grid_r, args.grid_d, stdout, stderr)
        return cmd_bench(cfg, args.repeat, stdout, stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except SkewMulError as exc:
        print(f"error: {exc.code}: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
