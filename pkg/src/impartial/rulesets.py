"""The three game rulesets (Delete Nim, VDN, Nim) plus disjoint sums:
canonical position forms, option enumeration, and the text syntax shared by
the CLI and verification reports.

Positions are plain tuples.  Two-heap positions are unordered pairs kept in
canonical order x >= y; Nim positions are sorted descending with zero heaps
dropped.  Option functions accept either heap order and always return sets
of canonical positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import BudgetExceededError, DomainError, ParseError

Pair = tuple[int, int]

# Enumerating the options of a heap of size s materializes ~s/2 positions, so
# a single oversized heap could exhaust memory before any engine budget check
# runs.  Closed forms stay O(1) at any width; only enumeration is capped.
ENUMERATION_LIMIT = 1 << 20


def canonical_pair(x: int, y: int) -> Pair:
    """Unordered pair in canonical order: larger heap first."""
    return (x, y) if x >= y else (y, x)


def canonical_nim(heaps: Iterable[int]) -> tuple[int, ...]:
    """Nim canonical form: sorted descending, zero heaps dropped."""
    return tuple(sorted((h for h in heaps if h != 0), reverse=True))


def validate_delete_nim(p: Pair) -> Pair:
    x, y = p
    if x < 0 or y < 0:
        raise DomainError(f"Delete Nim heaps must be >= 0, got ({x}, {y})")
    return x, y


def validate_vdn(p: Pair) -> Pair:
    x, y = p
    if x < 1 or y < 1:
        raise DomainError(f"VDN heaps must be >= 1, got ({x}, {y})")
    return x, y


def validate_nim(p: Iterable[int]) -> tuple[int, ...]:
    heaps = tuple(p)
    if any(h < 0 for h in heaps):
        raise DomainError(f"Nim heaps must be >= 0, got {heaps}")
    return heaps


def _check_enumerable(s: int) -> None:
    if s > ENUMERATION_LIMIT:
        raise BudgetExceededError(
            f"enumerating the options of a heap of {s} stones exceeds the "
            f"limit of {ENUMERATION_LIMIT}"
        )


def delete_nim_options(p: Pair) -> set[Pair]:
    """All positions reachable from Delete Nim position p.

    Choosing the heap of s >= 1 stones deletes the other heap, removes one
    stone, and optionally splits the remainder: every canonical (a, b) with
    a + b == s - 1 is reachable, with "no split" being the pair (s - 1, 0).
    An empty heap cannot be chosen; (0, 0) is terminal.
    """
    x, y = validate_delete_nim(p)
    opts: set[Pair] = set()
    for s in (x, y):
        if s >= 1:
            _check_enumerable(s)
            # (s - 1 - a, a) for a <= (s - 1) / 2 enumerates exactly the
            # canonical pairs summing to s - 1.
            opts.update((s - 1 - a, a) for a in range((s - 1) // 2 + 1))
    return opts


def vdn_options(p: Pair) -> set[Pair]:
    """All positions reachable from VDN position p: delete one heap and split
    the other into two nonempty heaps.  A heap of one stone cannot be split;
    (1, 1) is terminal."""
    x, y = validate_vdn(p)
    opts: set[Pair] = set()
    for s in (x, y):
        if s >= 2:
            _check_enumerable(s)
            opts.update((s - a, a) for a in range(1, s // 2 + 1))
    return opts


def nim_options(p: Iterable[int]) -> set[tuple[int, ...]]:
    """All positions reachable from Nim position p by shrinking one heap to
    any smaller size (possibly zero)."""
    heaps = canonical_nim(validate_nim(p))
    opts: set[tuple[int, ...]] = set()
    for i, h in enumerate(heaps):
        _check_enumerable(h)
        rest = heaps[:i] + heaps[i + 1 :]
        opts.update(canonical_nim(rest + (v,)) for v in range(h))
    return opts


@dataclass(frozen=True)
class Ruleset:
    """A game: canonical form plus option enumeration over tuple positions.

    ``options`` must return canonical positions; the engine relies on this
    to memoize without re-canonicalizing children.
    """

    name: str
    canonical: Callable
    options: Callable
    validate: Callable


def _canonical_two_heap(p: Pair) -> Pair:
    return canonical_pair(*p)


DELETE_NIM = Ruleset("delete-nim", _canonical_two_heap, delete_nim_options, validate_delete_nim)
VDN = Ruleset("vdn", _canonical_two_heap, vdn_options, validate_vdn)
NIM = Ruleset("nim", canonical_nim, nim_options, validate_nim)

RULESETS = {r.name: r for r in (DELETE_NIM, VDN, NIM)}


def sum_options(p, left: Ruleset, right: Ruleset) -> set:
    """Options of the disjoint sum position (g, h): a move is a move in
    exactly one component."""
    g, h = p
    g, h = left.canonical(g), right.canonical(h)
    return {(q, h) for q in left.options(g)} | {(g, q) for q in right.options(h)}


def make_sum(left: Ruleset, right: Ruleset) -> Ruleset:
    """Ruleset for the disjoint sum of two games; positions are pairs
    (left_position, right_position), terminal exactly when both components
    are terminal."""

    def _canonical(p):
        return (left.canonical(p[0]), right.canonical(p[1]))

    def _options(p):
        return sum_options(p, left, right)

    def _validate(p):
        g, h = p
        left.validate(g)
        right.validate(h)
        return p

    return Ruleset(f"{left.name}+{right.name}", _canonical, _options, _validate)


def parse_position(rules: Ruleset, text: str):
    """Parse the shared text syntax: two-heap games as ``x,y``, Nim as a
    comma-separated heap list.  Whitespace around commas is ignored.
    Returns the canonical position; raises ParseError / DomainError."""
    if rules.name not in RULESETS:
        raise ParseError(f"no text syntax for ruleset {rules.name!r}")
    parts = [s.strip() for s in text.split(",")]
    if any(not s for s in parts):
        raise ParseError(f"malformed position {text!r}")
    try:
        values = tuple(int(s) for s in parts)
    except ValueError as exc:
        raise ParseError(f"malformed position {text!r}") from exc
    if rules.name in ("delete-nim", "vdn") and len(values) != 2:
        raise ParseError(f"{rules.name} positions are pairs x,y, got {text!r}")
    rules.validate(values)
    return rules.canonical(values)


def format_position(rules: Ruleset, pos) -> str:
    """Inverse of parse_position on canonical positions.  The empty Nim
    position renders as ``0`` (which parses back to the same canonical
    position)."""
    if rules.name == "nim" and not pos:
        return "0"
    return ",".join(str(v) for v in pos)
