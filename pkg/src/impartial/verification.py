"""Exhaustive brute-force verification of the closed forms and the classical
identities on bounded position grids.

Every check runs two independent routes against each other (bottom-up mex
recursion versus a closed formula, or an explicit certificate versus direct
enumeration) and emits a VerificationReport.  Sweeps are exhaustive within
their bounds, never sampled.  Grids may be partitioned across worker
threads; reports are identical for any worker count (chunks merge in
canonical position order), apart from the elapsed time.

Mismatch convention: ``expected`` is the brute-force / oracle side,
``actual`` is the closed-form / theorem side.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable

import numpy as np

from . import closed_forms, engine, isomorphism, rulesets
from .errors import DomainError

__all__ = [
    "VerificationReport",
    "Mismatch",
    "verify_delete_nim_formula",
    "verify_vdn_formula",
    "verify_bouton",
    "verify_proof_steps",
    "proof_step_failures",
    "verify_sum_theorem",
    "verify_isomorphism",
    "CHECK_NAMES",
    "DEFAULT_BOUNDS",
    "run_check",
    "run_all",
    "reports_to_json",
]

Mismatch = tuple[str, object, object]  # (position text, expected, actual)


@dataclass
class VerificationReport:
    """Outcome of one exhaustive check."""

    name: str
    bound: object  # int, or (max_heaps, max_size) for the Bouton sweep
    positions_checked: int
    mismatches: list[Mismatch]
    elapsed: float  # seconds

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_record(self) -> dict:
        """Machine-readable record; the schema is documented in the README."""
        bound = list(self.bound) if isinstance(self.bound, tuple) else self.bound
        return {
            "name": self.name,
            "bound": bound,
            "checked": self.positions_checked,
            "mismatches": [
                {"position": p, "expected": e, "actual": a}
                for p, e, a in self.mismatches
            ],
            "elapsed-milliseconds": round(self.elapsed * 1000.0, 3),
            "passed": self.passed,
        }

    def text_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bound = (
            "x".join(str(b) for b in self.bound)
            if isinstance(self.bound, tuple)
            else self.bound
        )
        return (
            f"[{status}] {self.name}: bound={bound} "
            f"checked={self.positions_checked} mismatches={len(self.mismatches)} "
            f"elapsed={self.elapsed * 1000.0:.1f}ms"
        )


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_record() for r in reports], indent=2)


def _chunks(n_items: int, workers: int) -> list[range]:
    """Split range(n_items) into at most ``workers`` contiguous chunks."""
    if n_items <= 0:
        return []
    workers = max(1, min(workers, n_items))
    step = -(-n_items // workers)
    return [range(i, min(i + step, n_items)) for i in range(0, n_items, step)]


def _map_chunks(fn: Callable, chunks: list[range], workers: int) -> list:
    if workers <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, chunks))


def verify_delete_nim_formula(
    bound: int, workers: int = 1, budget: int | None = None
) -> VerificationReport:
    """Engine Grundy values versus v2((x | y) + 1) for all 0 <= y <= x <= bound."""
    t0 = time.perf_counter()
    eng = engine.delete_nim_grid(bound, budget=budget)
    formula = closed_forms.delete_nim_grundy_grid(bound)

    def compare(rows: range) -> tuple[int, list[Mismatch]]:
        checked = 0
        found: list[Mismatch] = []
        for x in rows:
            row_e = eng[x, : x + 1]
            row_f = formula[x, : x + 1]
            checked += x + 1
            if not np.array_equal(row_e, row_f):
                for y in np.flatnonzero(row_e != row_f):
                    found.append((f"{x},{y}", int(row_e[y]), int(row_f[y])))
        return checked, found

    results = _map_chunks(compare, _chunks(bound + 1, workers), workers)
    checked = sum(c for c, _ in results)
    mismatches = [m for _, ms in results for m in ms]
    return VerificationReport(
        "delete-nim", bound, checked, mismatches, time.perf_counter() - t0
    )


def verify_vdn_formula(
    bound: int, workers: int = 1, budget: int | None = None
) -> VerificationReport:
    """Engine Grundy values on VDN rules versus v2(((x-1) | (y-1)) + 1) for
    all 1 <= y <= x <= bound."""
    t0 = time.perf_counter()
    eng = engine.vdn_grid(bound, budget=budget)
    formula = closed_forms.vdn_grundy_grid(bound)

    def compare(rows: range) -> tuple[int, list[Mismatch]]:
        checked = 0
        found: list[Mismatch] = []
        for i in rows:
            x = i + 1
            row_e = eng[x, 1 : x + 1]
            row_f = formula[x, 1 : x + 1]
            checked += x
            if not np.array_equal(row_e, row_f):
                for j in np.flatnonzero(row_e != row_f):
                    found.append((f"{x},{j + 1}", int(row_e[j]), int(row_f[j])))
        return checked, found

    results = _map_chunks(compare, _chunks(bound, workers), workers)
    checked = sum(c for c, _ in results)
    mismatches = [m for _, ms in results for m in ms]
    return VerificationReport(
        "vdn", bound, checked, mismatches, time.perf_counter() - t0
    )


def verify_bouton(
    max_heaps: int, max_size: int, workers: int = 1, budget: int | None = None
) -> VerificationReport:
    """Engine P/N classification versus the nim-sum criterion for every Nim
    position with at most ``max_heaps`` heaps, each of at most ``max_size``
    stones."""
    if max_heaps < 1 or max_size < 0:
        raise DomainError(f"need max_heaps >= 1 and max_size >= 0, got ({max_heaps}, {max_size})")
    t0 = time.perf_counter()
    positions: list[tuple[int, ...]] = [()]
    for k in range(1, max_heaps + 1):
        positions.extend(
            tuple(sorted(c, reverse=True))
            for c in combinations_with_replacement(range(1, max_size + 1), k)
        )
    memo: engine.MemoTable = {}

    def check(chunk: range) -> list[Mismatch]:
        found: list[Mismatch] = []
        for i in chunk:
            p = positions[i]
            eng_p = engine.classify(p, rulesets.NIM, memo=memo, budget=budget)
            formula_p = closed_forms.bouton_is_p(p)
            if (eng_p is engine.Outcome.P) != formula_p:
                found.append(
                    (
                        rulesets.format_position(rulesets.NIM, p),
                        eng_p.value,
                        "P" if formula_p else "N",
                    )
                )
        return found

    results = _map_chunks(check, _chunks(len(positions), workers), workers)
    mismatches = [m for ms in results for m in ms]
    return VerificationReport(
        "bouton",
        (max_heaps, max_size),
        len(positions),
        mismatches,
        time.perf_counter() - t0,
    )


def proof_step_failures(x: int, y: int) -> list[Mismatch]:
    """Certificate checks for one Delete Nim position (empty list if both hold).

    With h the closed-form value of (x, y): (a) no option may have closed-form
    value h; (b) for every v < h, some heap s has bit v set (try x, then y)
    and the constructed option (s - 2**v, 2**v - 1) must be a legal option
    with closed-form value v.  Together with termination this certifies that
    the closed form satisfies the defining mex recursion at (x, y).
    """
    pos_text = f"{x},{y}"
    h = closed_forms.delete_nim_grundy(x, y)
    opts = rulesets.delete_nim_options((x, y))
    found: list[Mismatch] = []
    hits = sorted(q for q in opts if closed_forms.delete_nim_grundy(*q) == h)
    if hits:
        found.append(
            (
                pos_text,
                f"no option with value {h}",
                f"option {hits[0][0]},{hits[0][1]} has value {h}",
            )
        )
    for v in range(h):
        bit = 1 << v
        if x & bit:
            q = rulesets.canonical_pair(x - bit, bit - 1)
        elif y & bit:
            q = rulesets.canonical_pair(y - bit, bit - 1)
        else:
            found.append((pos_text, f"a heap with bit {v} set", "neither heap has it"))
            continue
        if q not in opts:
            found.append(
                (pos_text, f"constructed option {q[0]},{q[1]} to be legal", "not an option")
            )
        value = closed_forms.delete_nim_grundy(*q)
        if value != v:
            found.append(
                (
                    pos_text,
                    f"a constructed option with value {v}",
                    f"option {q[0]},{q[1]} has value {value}",
                )
            )
    return found


def verify_proof_steps(bound: int, workers: int = 1) -> VerificationReport:
    """Run the per-position certificate checks for all 0 <= y <= x <= bound."""
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    t0 = time.perf_counter()
    canon = [(x, y) for x in range(bound + 1) for y in range(x + 1)]

    def check(chunk: range) -> list[Mismatch]:
        found: list[Mismatch] = []
        for i in chunk:
            found.extend(proof_step_failures(*canon[i]))
        return found

    results = _map_chunks(check, _chunks(len(canon), workers), workers)
    mismatches = [m for ms in results for m in ms]
    return VerificationReport(
        "proof-steps", bound, len(canon), mismatches, time.perf_counter() - t0
    )


def verify_sum_theorem(
    bound: int, workers: int = 1, budget: int | None = None
) -> VerificationReport:
    """Direct mex recursion on Delete Nim sum graphs versus the XOR of the
    component values, for every ordered pair of canonical positions with
    coordinates <= bound."""
    if bound < 0:
        raise DomainError(f"bound must be >= 0, got {bound}")
    t0 = time.perf_counter()
    comps = [(x, y) for x in range(bound + 1) for y in range(x + 1)]
    pairs = [(g, h) for g in comps for h in comps]
    memo: engine.MemoTable = {}

    def check(chunk: range) -> list[Mismatch]:
        found: list[Mismatch] = []
        for i in chunk:
            g, h = pairs[i]
            res = engine.sum_grundy_check(
                g, h, rulesets.DELETE_NIM, rulesets.DELETE_NIM, memo=memo, budget=budget
            )
            if not res.equal:
                found.append(
                    (f"{g[0]},{g[1]}+{h[0]},{h[1]}", res.sum_value, res.xor_value)
                )
        return found

    results = _map_chunks(check, _chunks(len(pairs), workers), workers)
    mismatches = [m for ms in results for m in ms]
    return VerificationReport(
        "sum", bound, len(pairs), mismatches, time.perf_counter() - t0
    )


def verify_isomorphism(
    bound: int, workers: int = 1, budget: int | None = None
) -> VerificationReport:
    """Option-set commutation under the VDN -> Delete Nim map for all
    1 <= y <= x <= bound, plus Grundy commutation on the same domain
    (each side computed by its own game's engine)."""
    t0 = time.perf_counter()
    iso = isomorphism.check_isomorphism(bound)
    mismatches: list[Mismatch] = [
        (f"{p[0]},{p[1]}", "equal option sets", reason) for p, reason in iso.failures
    ]
    vdn_values = engine.vdn_grid(bound, budget=budget)
    dn_values = engine.delete_nim_grid(bound - 1, budget=budget)
    for x in range(1, bound + 1):
        for y in range(1, x + 1):
            if vdn_values[x, y] != dn_values[x - 1, y - 1]:
                mismatches.append(
                    (f"{x},{y}", int(dn_values[x - 1, y - 1]), int(vdn_values[x, y]))
                )
    checked = bound * (bound + 1) // 2
    return VerificationReport(
        "iso", bound, checked, mismatches, time.perf_counter() - t0
    )


CHECK_NAMES = ["delete-nim", "vdn", "bouton", "sum", "proof-steps", "iso"]

# Each default completes in seconds on commodity hardware via the dense
# backend; the delete-nim sweep is the acceptance-scale one.
DEFAULT_BOUNDS: dict = {
    "delete-nim": 4096,
    "vdn": 256,
    "bouton": (3, 16),
    "sum": 12,
    "proof-steps": 128,
    "iso": 64,
}


def run_check(
    name: str,
    bound=None,
    workers: int = 1,
    budget: int | None = None,
) -> VerificationReport:
    """Run one named check at ``bound`` (defaults per DEFAULT_BOUNDS)."""
    if name not in CHECK_NAMES:
        raise ValueError(f"unknown check {name!r}; expected one of {CHECK_NAMES}")
    if bound is None:
        bound = DEFAULT_BOUNDS[name]
    if name == "delete-nim":
        return verify_delete_nim_formula(bound, workers=workers, budget=budget)
    if name == "vdn":
        return verify_vdn_formula(bound, workers=workers, budget=budget)
    if name == "bouton":
        heaps, size = bound
        return verify_bouton(heaps, size, workers=workers, budget=budget)
    if name == "sum":
        return verify_sum_theorem(bound, workers=workers, budget=budget)
    if name == "proof-steps":
        return verify_proof_steps(bound, workers=workers)
    return verify_isomorphism(bound, workers=workers, budget=budget)


def run_all(
    bounds: dict | None = None, workers: int = 1, budget: int | None = None
) -> list[VerificationReport]:
    """Run every check, in the fixed CHECK_NAMES order."""
    merged = dict(DEFAULT_BOUNDS)
    if bounds:
        merged.update(bounds)
    return [
        run_check(name, merged[name], workers=workers, budget=budget)
        for name in CHECK_NAMES
    ]
