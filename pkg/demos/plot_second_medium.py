"""
A different stack and a different start
=======================================

Indices (3, 1, 2) and a search that starts from the top-right state (50, 50).
The least-time path now hugs the fast middle slab.
"""

from fermatrl import paper_alt, run_experiment

summary = run_experiment(paper_alt(outputs={"directory": "runs/demo_alt"}))
print("oracle optimum:", summary.oracle_discrete.best_state, round(summary.oracle_discrete.best_time, 4))
print("final-episode best T:", round(summary.final_best_T, 4))
print("greedy state:", summary.greedy_state, "converged:", summary.converged)
