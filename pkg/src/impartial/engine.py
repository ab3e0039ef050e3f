"""Generic Sprague-Grundy machinery: mex, memoized Grundy values over any
ruleset, P/N classification, optimal moves, and a dense bottom-up backend for
the two-heap games used by the large verification sweeps.

The generic path needs nothing from a ruleset beyond ``canonical`` and
``options``.  Grundy values are memoized in a plain dict keyed by
(ruleset name, canonical position); each entry is written exactly once, and
because every writer would compute the identical value the table may be
shared between concurrent workers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import BudgetExceededError, DomainError
from .rulesets import Ruleset, make_sum

MemoTable = dict

__all__ = [
    "MemoTable",
    "mex",
    "grundy",
    "Outcome",
    "classify",
    "best_move",
    "SumCheck",
    "sum_grundy_check",
    "delete_nim_grid",
    "vdn_grid",
    "grundy_grid",
]


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer absent from ``values``.

    Uses a presence bitmap over [0, n]: mex of an n-element set is at most n,
    so larger members cannot matter.
    """
    vals = list(values)
    present = bytearray(len(vals) + 1)
    for v in vals:
        if v <= len(vals):
            present[v] = 1
    return present.index(0)


def grundy(
    pos,
    rules: Ruleset,
    memo: MemoTable | None = None,
    budget: int | None = None,
) -> int:
    """Grundy value of ``pos`` under ``rules``: mex of the option values.

    Iterative postorder over the game graph; the subgraph below (x, 0) has
    depth proportional to x, which would overflow the recursion limit long
    before it strained memory.  ``budget`` caps the number of memoized
    positions and raises BudgetExceededError once exceeded, signalling a
    sweep bound set too high.  The result is independent of the order in
    which ``rules.options`` yields options.
    """
    if memo is None:
        memo = {}
    name = rules.name
    root = (name, rules.canonical(pos))
    if root in memo:
        return memo[root]
    opts_cache: dict = {}
    stack = [root[1]]
    while stack:
        p = stack[-1]
        key = (name, p)
        if key in memo:
            stack.pop()
            continue
        opts = opts_cache.get(p)
        if opts is None:
            opts = list(rules.options(p))
            opts_cache[p] = opts
        pending = [q for q in opts if (name, q) not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[key] = mex(memo[(name, q)] for q in opts)
            opts_cache.pop(p, None)
            if budget is not None and len(memo) > budget:
                raise BudgetExceededError(
                    f"grundy computation exceeded the budget of {budget} positions"
                )
            stack.pop()
    return memo[root]


class Outcome(enum.Enum):
    """Winner under optimal play: P = previous player, N = next (current) player."""

    P = "P"
    N = "N"


def classify(
    pos,
    rules: Ruleset,
    memo: MemoTable | None = None,
    budget: int | None = None,
) -> Outcome:
    """P-position iff the Grundy value is 0."""
    return Outcome.P if grundy(pos, rules, memo, budget) == 0 else Outcome.N


def best_move(
    pos,
    rules: Ruleset,
    memo: MemoTable | None = None,
    budget: int | None = None,
    value_fn: Callable | None = None,
) -> Optional[tuple]:
    """A winning option (Grundy value 0) from an N-position, or None from a
    P-position or terminal position.

    A position is an N-position exactly when some option has value 0, so no
    separate classification pass is needed.  Ties break to the smallest
    canonical option in lexicographic order.  ``value_fn`` may supply option
    values from a precomputed dense grid instead of the generic engine.
    """
    p = rules.canonical(pos)
    if value_fn is None:
        table = {} if memo is None else memo

        def value_fn(q):
            return grundy(q, rules, memo=table, budget=budget)

    for q in sorted(rules.options(p)):
        if value_fn(q) == 0:
            return q
    return None


@dataclass(frozen=True)
class SumCheck:
    """Result of checking G(g + h) == G(g) XOR G(h) on one pair of positions."""

    sum_value: int
    xor_value: int

    @property
    def equal(self) -> bool:
        return self.sum_value == self.xor_value


def sum_grundy_check(
    g,
    h,
    left: Ruleset,
    right: Ruleset,
    memo: MemoTable | None = None,
    budget: int | None = None,
) -> SumCheck:
    """Grundy value of the disjoint sum (g, h) by direct mex recursion over
    the sum graph, compared against the XOR of the component values."""
    if memo is None:
        memo = {}
    rules = make_sum(left, right)
    sum_value = grundy((g, h), rules, memo=memo, budget=budget)
    xor_value = grundy(g, left, memo=memo, budget=budget) ^ grundy(
        h, right, memo=memo, budget=budget
    )
    return SumCheck(sum_value, xor_value)


# --- dense backend -----------------------------------------------------------
#
# The sweeps over two-heap grids dominate runtime, and the option set of a
# two-heap position is the union of one or two complete anti-diagonals:
#
#   Delete Nim (x, y): canonical pairs summing to x - 1 and to y - 1
#   VDN        (x, y): canonical nonempty pairs summing to x and to y
#
# so a bottom-up pass over anti-diagonals can keep, per diagonal, the *set*
# of Grundy values on it as a bitmask, and evaluate each position as the mex
# of the union of its two diagonals' masks.  This is the same mex recursion
# as the generic path (tests pin the two against each other), with no closed
# form involved.

_MASK_WIDTH = 62  # values must fit a uint64 bitmask with headroom for the +1


def _mex_of_masks(masks: np.ndarray) -> np.ndarray:
    # mex of a value set stored as a bitmask = index of the lowest zero bit;
    # (~m) & (m + 1) isolates it, and log2 of an exact power of two is exact.
    low_zero = (~masks) & (masks + np.uint64(1))
    return np.log2(low_zero.astype(np.float64)).astype(np.int16)


def _value_mask(gv: np.ndarray) -> np.uint64:
    if int(gv.max(initial=0)) >= _MASK_WIDTH:
        raise RuntimeError("grundy values exceed the dense backend's bitmask width")
    return np.bitwise_or.reduce(np.left_shift(np.uint64(1), gv.astype(np.uint64)))


def _check_cells(bound: int, budget: int | None) -> None:
    cells = (bound + 1) * (bound + 1)
    if budget is not None and cells > budget:
        raise BudgetExceededError(
            f"dense sweep to bound {bound} needs {cells} cells, budget is {budget}"
        )


def delete_nim_grid(bound: int, budget: int | None = None) -> np.ndarray:
    """Grundy values of every Delete Nim position with 0 <= x, y <= bound,
    computed bottom-up by mex recursion.

    ``diag_mask[s]`` holds the Grundy values on the anti-diagonal a + b == s
    as a bitmask; position (x, y) is the mex of the union of the masks for
    s = x - 1 and s = y - 1 (an empty heap contributes nothing).
    """
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    _check_cells(bound, budget)
    n = bound
    grid = np.zeros((n + 1, n + 1), dtype=np.int16)
    diag_mask = np.zeros(max(n, 1), dtype=np.uint64)
    for t in range(2 * n + 1):
        xs = np.arange(max(0, t - n), min(n, t) + 1)
        ys = t - xs
        mx = np.where(xs >= 1, diag_mask[np.maximum(xs, 1) - 1], np.uint64(0))
        my = np.where(ys >= 1, diag_mask[np.maximum(ys, 1) - 1], np.uint64(0))
        gv = _mex_of_masks(mx | my)
        grid[xs, ys] = gv
        if t < n:  # the full anti-diagonal t lies in the grid and gets looked up later
            diag_mask[t] = _value_mask(gv)
    return grid


def vdn_grid(bound: int, budget: int | None = None) -> np.ndarray:
    """Grundy values of every VDN position with 1 <= x, y <= bound, computed
    bottom-up by mex recursion; row and column 0 hold -1 (not VDN positions).

    ``split_mask[s]`` holds the Grundy values of the splits of a heap of s
    stones, i.e. of the anti-diagonal a + b == s with a, b >= 1.
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    _check_cells(bound, budget)
    n = bound
    grid = np.full((n + 1, n + 1), -1, dtype=np.int16)
    split_mask = np.zeros(n + 1, dtype=np.uint64)
    for t in range(2, 2 * n + 1):
        xs = np.arange(max(1, t - n), min(n, t - 1) + 1)
        ys = t - xs
        gv = _mex_of_masks(split_mask[xs] | split_mask[ys])
        grid[xs, ys] = gv
        if t <= n:  # splits of a heap of t stones are exactly this anti-diagonal
            split_mask[t] = _value_mask(gv)
    return grid


def grundy_grid(rules: Ruleset, bound: int, budget: int | None = None) -> np.ndarray:
    """Dense Grundy table for a two-heap ruleset; index as grid[x, y] in
    either heap order."""
    if rules.name == "delete-nim":
        return delete_nim_grid(bound, budget)
    if rules.name == "vdn":
        return vdn_grid(bound, budget)
    raise ValueError(f"no dense backend for ruleset {rules.name!r}")
