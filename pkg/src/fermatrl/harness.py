"""Run experiments end to end and persist their artifacts."""
from __future__ import annotations

import csv
import json
import logging
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from .agent import AgentConfig, QTable, RoundRecord, greedy_state, run_episode
from .config import RunConfig, config_to_dict
from .environment import MoveAction, path_time
from .figures import render_convergence_svg, render_path_svg
from .oracle import OracleResult, brute_force_optimum, fermat_continuous

log = logging.getLogger(__name__)

CSV_HEADER = ["episode", "round", "y_coords", "action", "time_T", "r_score", "reward", "best_T"]
CONVERGENCE_RTOL = 0.005
PATH_SAMPLES = 12


@dataclass
class RunSummary:
    config: dict
    oracle_discrete: OracleResult
    oracle_continuous: OracleResult
    episode_best_T: List[float] = field(default_factory=list)
    greedy_state: Tuple[int, ...] | None = None
    greedy_T: float | None = None
    converged: bool | None = None
    convergence_rtol: float = CONVERGENCE_RTOL
    duration_s: float = 0.0

    @property
    def final_best_T(self) -> float | None:
        return self.episode_best_T[-1] if self.episode_best_T else None

    def to_dict(self, include_timing: bool = False) -> dict:
        """JSON-ready record; timing is left out so files are reproducible."""
        d = {
            "config": self.config,
            "oracle_discrete": self.oracle_discrete.to_dict(),
            "oracle_continuous": self.oracle_continuous.to_dict(),
            "training": {
                "episode_best_T": self.episode_best_T,
                "final_best_T": self.final_best_T,
                "greedy_state": None if self.greedy_state is None else list(self.greedy_state),
                "greedy_T": self.greedy_T,
                "converged": self.converged,
                "convergence_rtol": self.convergence_rtol,
            },
        }
        if include_timing:
            d["duration_s"] = self.duration_s
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def write_round_csv(records: Iterable[RoundRecord], destination) -> None:
    with open(destination, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in records:
            writer.writerow([
                r.episode,
                r.round,
                ";".join(str(y) for y in r.state_after),
                r.action.label,
                _fmt(r.time_T),
                _fmt(r.r_score),
                _fmt(r.reward),
                _fmt(r.best_T),
            ])


def read_round_csv(source) -> List[RoundRecord]:
    with open(source, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [
            RoundRecord(
                int(row[0]),
                int(row[1]),
                tuple(int(y) for y in row[2].split(";")),
                MoveAction.from_label(row[3]),
                float(row[4]),
                float(row[5]),
                float(row[6]),
                float(row[7]),
            )
            for row in reader
        ]


def write_qtable(qtable: QTable, destination) -> None:
    Path(destination).write_text(json.dumps(qtable.to_dict()) + "\n", encoding="utf-8")


def read_qtable(source) -> QTable:
    return QTable.from_dict(json.loads(Path(source).read_text(encoding="utf-8")))


def figure_episodes(config: RunConfig) -> List[int]:
    n = config.agent.episodes
    if config.outputs.figure_episodes is not None:
        return [e for e in config.outputs.figure_episodes if 1 <= e <= n]
    chosen = list(range(10, n + 1, 10))
    if n and n not in chosen:
        chosen.append(n)
    return chosen


def path_episode(config: RunConfig) -> int:
    e = config.outputs.path_episode
    n = config.agent.episodes
    return e if e is not None and 1 <= e <= n else n


def sample_episode_states(records: Sequence[RoundRecord], k: int = PATH_SAMPLES) -> list:
    """Evenly spaced states from one episode, always ending with its last state."""
    if not records:
        return []
    step = max(1, len(records) // k)
    picks = list(records[step - 1 :: step])[:k]
    if picks[-1] is not records[-1]:
        picks[-1] = records[-1]
    return [r.state_after for r in picks]


def train(config: RunConfig) -> Tuple[QTable, List[RoundRecord]]:
    """All episodes with one persistent Q-table and one seeded generator."""
    medium = config.medium
    agent: AgentConfig = config.agent
    rng = random.Random(agent.seed)
    log_scale = config.log_scale(path_time(medium, config.s_ini))
    qtable = QTable(medium.n_actions)
    records: List[RoundRecord] = []
    for episode in range(1, agent.episodes + 1):
        _, recs = run_episode(medium, qtable, agent, episode, rng, config.s_ini, log_scale)
        records.extend(recs)
    return qtable, records


def _prepare_output_dir(config: RunConfig) -> Path | None:
    o = config.outputs
    if not (o.round_csv or o.summary or o.qtable or o.path_svg or o.convergence_svg):
        return None
    out = Path(o.directory)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise OSError(f"output directory {out} is not writable: {exc}") from exc
    return out


def run_experiment(config: RunConfig) -> RunSummary:
    """Oracles, then training, then every enabled output file."""
    t0 = time.perf_counter()
    out = _prepare_output_dir(config)
    medium = config.medium
    discrete = brute_force_optimum(medium)
    continuous = fermat_continuous(medium)
    log.info("oracle optimum %s, T = %.6f", discrete.best_state, discrete.best_time)

    qtable, records = train(config)
    echo = config_to_dict(config)
    # the output location does not change results
    echo["outputs"].pop("directory")
    summary = RunSummary(echo, discrete, continuous)
    if config.agent.episodes:
        rounds = config.agent.rounds_per_episode
        summary.episode_best_T = [
            min([path_time(medium, config.s_ini)] + [r.time_T for r in records[i : i + rounds]])
            for i in range(0, config.agent.episodes * rounds, rounds)
        ]
        summary.greedy_state = greedy_state(
            medium, qtable, config.s_ini, max_steps=config.agent.rounds_per_episode or 1
        )
        summary.greedy_T = path_time(medium, summary.greedy_state)
        summary.converged = summary.greedy_T <= discrete.best_time * (1 + CONVERGENCE_RTOL)
        log.info("greedy state %s, T = %.6f", summary.greedy_state, summary.greedy_T)

    if out is not None:
        o = config.outputs
        if o.round_csv:
            write_round_csv(records, out / "rounds.csv")
        if o.qtable:
            write_qtable(qtable, out / "qtable.json")
        write_figures(config, records, discrete, out)
    summary.duration_s = time.perf_counter() - t0
    if out is not None and config.outputs.summary:
        (out / "summary.json").write_text(summary.to_json(), encoding="utf-8")
    return summary


def write_figures(
    config: RunConfig, records: Sequence[RoundRecord], oracle: OracleResult, out: Path
) -> None:
    o = config.outputs
    if o.path_svg:
        ep = path_episode(config)
        states = sample_episode_states([r for r in records if r.episode == ep])
        render_path_svg(
            config.medium, states, oracle.best_state, out / "path.svg",
            title=f"episode {ep}" if states else "oracle path",
        )
    if o.convergence_svg:
        render_convergence_svg(
            records, oracle.best_time, out / "convergence.svg", episodes=figure_episodes(config)
        )
