"""
Sensitivity to the random seed
==============================

Repeat both experiments for seeds 1-10 and count how often the final
episode's best path lands within 0.5 % of the grid optimum.  Outputs other
than the summary are switched off to keep it quick.
"""

from fermatrl import paper_alt, paper_default, run_experiment

quiet = {"round_csv": False, "qtable": False, "path_svg": False, "convergence_svg": False}

for name, factory in (("air/water/glass", paper_default), ("n = (3, 1, 2)", paper_alt)):
    hits = 0
    for seed in range(1, 11):
        cfg = factory(agent={"seed": seed}, outputs={"directory": f"runs/demo_sweep/{seed}", **quiet})
        s = run_experiment(cfg)
        ok = s.final_best_T <= s.oracle_discrete.best_time * 1.005
        hits += ok
        print(f"{name:16s} seed {seed:2d}: best T {s.final_best_T:9.4f}  greedy {s.greedy_state}  {'ok' if ok else 'miss'}")
    print(f"{name}: {hits}/10 seeds\n")
