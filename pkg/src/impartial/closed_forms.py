"""O(1) bitwise formulas: nim-sum, binary OR, 2-adic valuation, and the
closed-form Grundy values of Delete Nim and VDN.

Everything here is a pure stateless function; the vectorized ``*_grid``
variants exist so the verification sweeps can evaluate the formulas on
millions of positions without a Python-level loop.
"""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable, Union

import numpy as np

from .errors import DomainError

__all__ = [
    "INFINITY",
    "Valuation",
    "v2",
    "nim_sum",
    "bouton_is_p",
    "bit_or",
    "delete_nim_grundy",
    "vdn_grundy",
    "delete_nim_grundy_grid",
    "vdn_grundy_grid",
]


class _InfiniteValuation:
    """The 2-adic valuation of zero.

    A dedicated singleton rather than an integer sentinel: it compares
    unequal to every integer and arithmetic on it raises TypeError instead
    of silently wrapping.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _InfiniteValuation()

Valuation = Union[int, _InfiniteValuation]


def v2(n: int) -> Valuation:
    """Largest v such that 2**v divides n, i.e. the count of trailing zero
    bits; INFINITY for n == 0."""
    if n < 0:
        raise DomainError(f"v2 is defined for non-negative integers, got {n}")
    if n == 0:
        return INFINITY
    return (n & -n).bit_length() - 1


def nim_sum(heaps: Iterable[int]) -> int:
    """XOR fold of the heap sizes; 0 for an empty sequence."""
    return reduce(xor, heaps, 0)


def bouton_is_p(heaps: Iterable[int]) -> bool:
    """Bouton's criterion: a Nim position is a P-position iff its nim-sum is 0."""
    return nim_sum(heaps) == 0


def bit_or(a: int, b: int) -> int:
    """Bitwise inclusive OR."""
    return a | b


def delete_nim_grundy(x: int, y: int) -> int:
    """Closed-form Grundy value of Delete Nim position (x, y): v2((x | y) + 1).

    The valuation argument is >= 1, so the result is always a finite integer.
    """
    if x < 0 or y < 0:
        raise DomainError(f"Delete Nim heaps must be >= 0, got ({x}, {y})")
    m = (x | y) + 1
    return (m & -m).bit_length() - 1


def vdn_grundy(x: int, y: int) -> int:
    """Closed-form Grundy value of VDN position (x, y): v2(((x-1) | (y-1)) + 1)."""
    if x < 1 or y < 1:
        raise DomainError(f"VDN heaps must be >= 1, got ({x}, {y})")
    m = ((x - 1) | (y - 1)) + 1
    return (m & -m).bit_length() - 1


def _v2_of_positive(m: np.ndarray) -> np.ndarray:
    # m & -m isolates the lowest set bit; log2 of an exact power of two is exact.
    low = m & -m
    return np.log2(low.astype(np.float64)).astype(np.int16)


def delete_nim_grundy_grid(bound: int) -> np.ndarray:
    """Closed form evaluated on the full grid: grid[x, y] == delete_nim_grundy(x, y)
    for all 0 <= x, y <= bound."""
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    xs = np.arange(bound + 1, dtype=np.int64)
    return _v2_of_positive((xs[:, None] | xs[None, :]) + 1)


def vdn_grundy_grid(bound: int) -> np.ndarray:
    """Closed form for VDN on 1 <= x, y <= bound; row and column 0 hold -1
    (a VDN heap is never empty)."""
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    xs = np.arange(bound, dtype=np.int64)  # the shifted values x - 1
    grid = np.full((bound + 1, bound + 1), -1, dtype=np.int16)
    grid[1:, 1:] = _v2_of_positive((xs[:, None] | xs[None, :]) + 1)
    return grid
