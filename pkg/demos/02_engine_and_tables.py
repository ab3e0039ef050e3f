"""The brute-force side: mex recursion over the real game graph.

Nothing here trusts the closed forms.  The engine expands option sets
from the rules, memoizes, and computes mex values bottom-up, which is
exactly what makes it a meaningful cross-check for the formulas.
"""

import time

from impartial import DELETE_NIM, NIM, VDN, Outcome, classify, grundy, grundy_grid, mex
from impartial.rulesets import delete_nim_options

print("=== mex, the minimal excludant ===")
for s in ([], [0], [1], [0, 1, 3], [2, 0, 1, 5, 0]):
    print(f"  mex({s}) = {mex(s)}")
print()

print("=== expanding a position by hand ===")
pos = (3, 2)
opts = sorted(delete_nim_options(pos))
print(f"  options of {pos}: {opts}")
memo = {}
for q in opts:
    print(f"    G({q}) = {grundy(q, DELETE_NIM, memo)}")
print(f"  mex of those = {grundy(pos, DELETE_NIM, memo)}")
print()

print("=== the same engine drives all three rulesets ===")
for rules, pos in [(DELETE_NIM, (9, 4)), (VDN, (9, 4)), (NIM, (7, 5, 2))]:
    g = grundy(pos, rules)
    out = classify(pos, rules)
    tag = "previous player wins" if out is Outcome.P else "next player wins"
    print(f"  {rules.name:10s} {str(pos):12s} G = {g}  {out.name}-position ({tag})")
print()

print("=== dense sweeps ===")
t0 = time.perf_counter()
grid = grundy_grid(DELETE_NIM, 2048)
dt = time.perf_counter() - t0
print(f"  full Grundy grid for all x, y <= 2048: {grid.shape[0] ** 2} cells in {dt * 1000:.0f} ms")
print(f"  max Grundy value seen: {int(grid.max())}")
print(f"  spot check: G((2047, 2047)) = {int(grid[2047, 2047])} (2047 + 1 = 2^11)")
