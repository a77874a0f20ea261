"""Command-line entry point: ``fermatrl {train,oracle,render,sweep}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Sequence

from .config import ConfigError, apply_overrides, config_from_dict, load_config_dict
from .harness import RunSummary, read_round_csv, run_experiment, write_figures
from .oracle import OracleRefused, brute_force_optimum, fermat_continuous

log = logging.getLogger("fermatrl")


def _load(args: argparse.Namespace, extra: Sequence[str] = ()):
    data = load_config_dict(args.config)
    overrides = list(getattr(args, "set", None) or []) + list(extra)
    if getattr(args, "out", None):
        overrides.append(f"outputs.directory={args.out}")
    return config_from_dict(apply_overrides(data, overrides)), data


def _print_summary(s: RunSummary) -> None:
    d, c = s.oracle_discrete, s.oracle_continuous
    print(f"oracle (discrete):   state={tuple(d.best_state)} T={d.best_time:.6f}")
    ys = ", ".join(f"{y:.4f}" for y in c.best_state)
    print(f"oracle (continuous): ys=({ys}) T={c.best_time:.6f} snell_residual={c.snell_residual:.3g}")
    if s.episode_best_T:
        print(f"final-episode best T: {s.final_best_T:.6f}")
        print(f"greedy state:         {s.greedy_state} T={s.greedy_T:.6f}")
        print(f"converged (rtol {s.convergence_rtol}): {s.converged}")
    else:
        print("training: no episodes run")
    print(f"duration: {s.duration_s:.2f} s")


def cmd_train(args: argparse.Namespace) -> int:
    config, _ = _load(args)
    summary = run_experiment(config)
    _print_summary(summary)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    config, _ = _load(args)
    d = brute_force_optimum(config.medium)
    c = fermat_continuous(config.medium)
    print(f"discrete:   state={d.best_state} T={d.best_time:.6f}")
    ys = ", ".join(f"{y:.4f}" for y in c.best_state)
    print(f"continuous: ys=({ys}) T={c.best_time:.6f}")
    print(f"snell_residual: {c.snell_residual:.3g}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    """Redraw the figures from a previously written rounds CSV."""
    config, _ = _load(args)
    records = read_round_csv(args.csv)
    out = Path(config.outputs.directory)
    out.mkdir(parents=True, exist_ok=True)
    write_figures(config, records, brute_force_optimum(config.medium), out)
    print(f"figures written to {out}")
    return 0


def parse_seeds(text: str) -> List[int]:
    """``"1,2,5"`` or ``"1-10"`` or a mix of both."""
    seeds: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        else:
            seeds.append(int(part))
    return seeds


def _sweep_one(data: dict, overrides: List[str]) -> dict:
    summary = run_experiment(config_from_dict(apply_overrides(data, overrides)))
    return summary.to_dict()


def cmd_sweep(args: argparse.Namespace) -> int:
    seeds = parse_seeds(args.seeds) if args.seeds else []
    if not seeds:
        print("sweep: at least one seed is required (e.g. --seeds 1-10)", file=sys.stderr)
        return 2
    config, data = _load(args)
    root = Path(config.outputs.directory)
    base = list(args.set or [])
    jobs = []
    for seed in seeds:
        jobs.append(base + [f"agent.seed={seed}", f"outputs.directory={root / f'seed_{seed}'}"])

    results: dict = {}
    failures = 0
    with ProcessPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        futures = {seed: pool.submit(_sweep_one, data, ov) for seed, ov in zip(seeds, jobs)}
        for seed, fut in futures.items():
            try:
                results[seed] = fut.result()
            except Exception as exc:  # keep going; report at the end
                failures += 1
                log.error("seed %s failed: %s", seed, exc)
                print(f"seed {seed}: FAILED ({exc})", file=sys.stderr)

    oracle_T = None
    per_seed = []
    for seed in seeds:
        if seed not in results:
            continue
        tr = results[seed]["training"]
        oracle_T = results[seed]["oracle_discrete"]["time"]
        per_seed.append({
            "seed": seed,
            "greedy_T": tr["greedy_T"],
            "final_best_T": tr["final_best_T"],
            "converged": tr["converged"],
        })
        print(f"seed {seed}: final best T={tr['final_best_T']} greedy T={tr['greedy_T']} converged={tr['converged']}")
    done = [p for p in per_seed if p["converged"] is not None]
    rtol = 0.005
    aggregate = {
        "seeds": seeds,
        "oracle_T": oracle_T,
        "per_seed": per_seed,
        "failed": failures,
        "convergence_rate": (sum(p["converged"] for p in done) / len(done)) if done else None,
        "final_best_rate": (
            sum(p["final_best_T"] <= oracle_T * (1 + rtol) for p in done) / len(done)
        ) if done else None,
    }
    root.mkdir(parents=True, exist_ok=True)
    (root / "sweep_summary.json").write_text(json.dumps(aggregate, indent=2) + "\n", encoding="utf-8")
    print(f"convergence rate: {aggregate['convergence_rate']}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermatrl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, outputs: bool = True) -> None:
        p.add_argument("--config", required=True, help="JSON config file (or a bundled name)")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override a config field by dotted path; repeatable")
        if outputs:
            p.add_argument("--out", help="output directory (overrides outputs.directory)")
        p.add_argument("-v", "--verbose", action="count", default=0)

    p = sub.add_parser("train", help="train the agent and write all outputs")
    common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("oracle", help="print the discrete and continuous optima")
    common(p, outputs=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="redraw figures from a rounds CSV")
    common(p)
    p.add_argument("--csv", required=True, help="rounds.csv written by train")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("sweep", help="one experiment per seed plus an aggregate record")
    common(p)
    p.add_argument("--seeds", help='e.g. "1-10" or "1,4,7"')
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    except OracleRefused as exc:
        print(f"oracle refused: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
