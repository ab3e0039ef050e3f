"""Tour of the bitwise closed forms.

Delete Nim is played on two heaps.  A move deletes one heap, takes one
stone from the survivor, and splits what is left into two new heaps
(either of which may be empty).  The Grundy value of (x, y) turns out to
be the number of trailing zero bits of (x OR y) + 1, so perfect play
reduces to three machine instructions.
"""

from impartial import (
    INFINITY,
    bit_or,
    delete_nim_grundy,
    delete_nim_grundy_grid,
    nim_sum,
    v2,
    vdn_grundy,
)

print("=== 2-adic valuation ===")
for n in (1, 2, 8, 12, 96, 0):
    print(f"  v2({n}) = {v2(n)}")
print(f"  v2(0) is the distinguished value {INFINITY!r}, not an integer\n")

print("=== nim-sum (bitwise XOR over heaps) ===")
for heaps in ([2, 5, 7], [4, 5, 6], [3, 3]):
    s = nim_sum(heaps)
    verdict = "P-position: second player wins" if s == 0 else "N-position"
    print(f"  nim_sum({heaps}) = {s}  ({verdict})")
print()

print("=== Delete Nim: the formula at work ===")
x, y = 3, 2
print(f"  position ({x}, {y})")
print(f"  x OR y          = {bit_or(x, y)}  (binary {bit_or(x, y):b})")
print(f"  (x OR y) + 1    = {bit_or(x, y) + 1}  (binary {bit_or(x, y) + 1:b})")
print(f"  trailing zeros  = {delete_nim_grundy(x, y)}")
print(f"  so G(({x}, {y})) = {delete_nim_grundy(x, y)}: the first player wins\n")

print("=== the Grundy table has a binary texture ===")
bound = 15
grid = delete_nim_grundy_grid(bound)
header = "     " + " ".join(f"{yy:2d}" for yy in range(bound + 1))
print(header)
for xx in range(bound + 1):
    row = " ".join(f"{int(grid[xx, yy]):2d}" for yy in range(bound + 1))
    print(f"  {xx:2d} {row}")
print()
print("Zeros sit where (x OR y) + 1 is odd, i.e. where x and y are both even.")
print("Large values cluster just below powers of two: G((7, 7)) =", delete_nim_grundy(7, 7))
print()

print("=== VDN is the same table shifted by one ===")
for x, y in [(1, 1), (2, 1), (4, 3), (8, 8)]:
    print(
        f"  vdn G(({x}, {y})) = {vdn_grundy(x, y)}"
        f"   = delete-nim G(({x - 1}, {y - 1})) = {delete_nim_grundy(x - 1, y - 1)}"
    )
