"""
Least-time paths from the two oracles
=====================================

Exhaustive grid scan versus the continuous minimizer for the air / water /
glass stack, and a check of Snell's law at each solution.
"""

from fermatrl import LayeredMedium, brute_force_optimum, fermat_continuous, path_time, snell_residual

medium = LayeredMedium((1.0, 1.3, 1.6), slab_width=50, height=50, start=(0, 0), end=(150, 50))

grid = brute_force_optimum(medium)
print("grid optimum      ", grid.best_state, f"T = {grid.best_time:.4f}")

smooth = fermat_continuous(medium)
print("continuous optimum", tuple(round(y, 3) for y in smooth.best_state), f"T = {smooth.best_time:.4f}")

# n sin(theta) matches across both interfaces at the continuous optimum,
# and only approximately on the grid
print("Snell residual (continuous):", f"{smooth.snell_residual:.2e}")
print("Snell residual (grid):      ", f"{snell_residual(medium, grid.best_state):.4f}")

# the straight line from A to B is slightly slower than the refracted path
straight = tuple(50 * (i + 1) / 3 for i in range(2))
print("straight line T =", round(path_time(medium, straight), 4))
