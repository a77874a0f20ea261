"""
Training the agent on the air / water / glass stack
===================================================

100 episodes of 300 rounds from the bottom-left corner, with the default
hyperparameters.  Writes the round log, Q-table, summary and both figures
to ``runs/demo_default``.
"""

from fermatrl import paper_default, run_experiment

config = paper_default(outputs={"directory": "runs/demo_default"})
summary = run_experiment(config)

print("oracle optimum:", summary.oracle_discrete.best_state, round(summary.oracle_discrete.best_time, 4))
print("greedy state:  ", summary.greedy_state, round(summary.greedy_T, 4))

# best time found in every 10th episode; the first episodes already get close
for episode in range(10, 101, 10):
    print(f"episode {episode:3d}: best T = {summary.episode_best_T[episode - 1]:.4f}")

print("figures: runs/demo_default/path.svg, runs/demo_default/convergence.svg")
