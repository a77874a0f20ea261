"""Q-learning of least-time light paths through layered refractive media."""
from .agent import AgentConfig, QTable, RoundRecord, greedy_state, q_update, run_episode, select_action
from .config import ConfigError, OutputConfig, RunConfig, load_config, paper_alt, paper_default
from .environment import (
    InterfaceState,
    LayeredMedium,
    MoveAction,
    apply_action,
    path_time,
    r_score,
    reward,
    segment_lengths,
)
from .figures import render_convergence_svg, render_path_svg
from .harness import RunSummary, read_round_csv, run_experiment, train, write_round_csv
from .oracle import (
    NotConverged,
    OracleRefused,
    OracleResult,
    brute_force_optimum,
    fermat_continuous,
    snell_residual,
)

__version__ = "0.1.0"
