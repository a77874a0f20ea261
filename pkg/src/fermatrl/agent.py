"""Tabular Q-learning over interface states.

``epsilon`` follows the exploit convention: with probability ``epsilon`` the
agent takes its best-known action, otherwise a uniformly random one.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from .environment import (
    InterfaceState,
    LayeredMedium,
    MoveAction,
    apply_action,
    check_state,
    path_time,
    r_score,
    reward,
)


class QTable:
    """Sparse state -> action-values map; unvisited states read as zeros."""

    def __init__(self, n_actions: int) -> None:
        self.n_actions = n_actions
        self.values: Dict[InterfaceState, List[float]] = {}

    def get(self, state: InterfaceState) -> List[float]:
        q = self.values.get(state)
        return list(q) if q is not None else [0.0] * self.n_actions

    def __getitem__(self, key: Tuple[InterfaceState, int]) -> float:
        state, a = key
        q = self.values.get(state)
        return 0.0 if q is None else q[a]

    def __setitem__(self, key: Tuple[InterfaceState, int], value: float) -> None:
        state, a = key
        q = self.values.get(state)
        if q is None:
            q = self.values[state] = [0.0] * self.n_actions
        q[a] = value

    def max_value(self, state: InterfaceState) -> float:
        q = self.values.get(state)
        return 0.0 if q is None else max(q)

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator[Tuple[InterfaceState, List[float]]]:
        """Entries in lexicographic state order."""
        for state in sorted(self.values):
            yield state, list(self.values[state])

    def to_dict(self) -> dict:
        return {
            "n_actions": self.n_actions,
            "entries": [{"state": list(s), "values": q} for s, q in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "QTable":
        table = cls(int(data["n_actions"]))
        for entry in data["entries"]:
            values = [float(v) for v in entry["values"]]
            if len(values) != table.n_actions:
                raise ValueError("Q-table entry has the wrong number of action values")
            table.values[tuple(int(y) for y in entry["state"])] = values
        return table


@dataclass(frozen=True)
class AgentConfig:
    epsilon: float = 0.9  # probability of exploiting
    alpha: float = 0.001
    gamma: float = 0.9
    episodes: int = 100
    rounds_per_episode: int = 300
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon: must lie in [0, 1]")
        if not self.alpha > 0:
            raise ValueError("alpha: must be positive")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma: must lie in [0, 1]")
        for name in ("episodes", "rounds_per_episode", "seed"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 0:
                raise ValueError(f"{name}: must be a non-negative integer")


@dataclass(frozen=True)
class RoundRecord:
    """One training step; ``state_after`` is the state reached by ``action``."""

    episode: int
    round: int
    state_after: InterfaceState
    action: MoveAction
    time_T: float
    r_score: float
    reward: float
    best_T: float  # best time within the episode, this round included


def select_action(
    qtable: QTable, state: InterfaceState, epsilon: float, rng: random.Random
) -> MoveAction:
    # draw order per round: exploit coin, then tie-break or random action
    if rng.random() < epsilon:
        q = qtable.get(state)
        best = max(q)
        ties = [a for a, v in enumerate(q) if v == best]
        a = ties[0] if len(ties) == 1 else ties[rng.randrange(len(ties))]
    else:
        a = rng.randrange(qtable.n_actions)
    return MoveAction.from_index(a)


def q_update(
    qtable: QTable,
    s: InterfaceState,
    a: MoveAction,
    r: float,
    s_next: InterfaceState,
    alpha: float,
    gamma: float,
) -> QTable:
    """Watkins update of the single entry ``Q(s, a)``, in place."""
    old = qtable[s, a.index]
    qtable[s, a.index] = old + alpha * (r + gamma * qtable.max_value(s_next) - old)
    return qtable


def run_episode(
    medium: LayeredMedium,
    qtable: QTable,
    config: AgentConfig,
    episode_index: int,
    rng: random.Random,
    s_ini: InterfaceState,
    log_scale: float,
) -> Tuple[QTable, List[RoundRecord]]:
    """Run one fixed-horizon episode from ``s_ini``.

    The best R-score starts at the score of ``s_ini`` and is raised only after
    the round's reward has been computed against the previous best.
    """
    state = check_state(medium, s_ini)
    t_best = path_time(medium, state)
    rs_best = r_score(t_best, log_scale=log_scale)
    records = []
    for rnd in range(1, config.rounds_per_episode + 1):
        action = select_action(qtable, state, config.epsilon, rng)
        nxt = apply_action(medium, state, action)
        t = path_time(medium, nxt)
        rs = r_score(t, log_scale=log_scale)
        r = reward(rs, rs_best)
        if rs > rs_best:
            rs_best = rs
        t_best = min(t_best, t)
        q_update(qtable, state, action, r, nxt, config.alpha, config.gamma)
        records.append(RoundRecord(episode_index, rnd, nxt, action, t, rs, r, t_best))
        state = nxt
    return qtable, records


def greedy_state(
    medium: LayeredMedium, qtable: QTable, s_ini: InterfaceState, max_steps: int
) -> InterfaceState:
    """Follow argmax-Q from ``s_ini`` and return the fastest state visited.

    Ties in Q pick the lowest action index.  The walk stops at the first
    repeated state or after ``max_steps`` moves.
    """
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    state = check_state(medium, s_ini)
    best, t_best = state, path_time(medium, state)
    seen = {state}
    for _ in range(max_steps):
        q = qtable.get(state)
        state = apply_action(medium, state, MoveAction.from_index(q.index(max(q))))
        if state in seen:
            break
        seen.add(state)
        t = path_time(medium, state)
        if t < t_best:
            best, t_best = state, t
    return best
