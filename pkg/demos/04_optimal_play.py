"""Optimal play, scripted.

From an N-position the winning strategy is mechanical: always move to a
position of Grundy value zero.  This walks a full game with the engine
playing both sides, then shows the additivity that makes composite
positions tractable.
"""

from impartial import DELETE_NIM, best_move, classify, grundy, make_sum
from impartial.rulesets import delete_nim_options, format_position

print("=== a complete game, engine against engine ===")
pos = (13, 10)
mover = "first"
print(f"start: {format_position(DELETE_NIM, pos)}  (G = {grundy(pos, DELETE_NIM)})")
while delete_nim_options(pos):
    move = best_move(pos, DELETE_NIM)
    if move is None:
        # in a lost position any move will do; take the smallest
        move = sorted(delete_nim_options(pos))[0]
    g = grundy(move, DELETE_NIM)
    print(f"  {mover} player: {format_position(DELETE_NIM, pos)} -> "
          f"{format_position(DELETE_NIM, move)}  (G = {g})")
    pos = move
    mover = "second" if mover == "first" else "first"
print(f"{mover} player has no move and loses")
print()

print("Notice the pattern: the winner always hands over G = 0.")
print()

print("=== sums of games ===")
double = make_sum(DELETE_NIM, DELETE_NIM)
g, h = (3, 2), (5, 0)
combined = (g, h)
print(f"  component values: G({g}) = {grundy(g, DELETE_NIM)}, G({h}) = {grundy(h, DELETE_NIM)}")
print(f"  value of the pair played side by side: {grundy(combined, double)}")
print(f"  XOR of the components: {grundy(g, DELETE_NIM) ^ grundy(h, DELETE_NIM)}")
print()
print(f"  outcome of the sum: {classify(combined, double).name}-position")
move = best_move(combined, double)
print(f"  a winning move in the sum: {combined} -> {move}")
