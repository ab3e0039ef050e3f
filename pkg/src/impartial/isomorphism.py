"""The componentwise-decrement map from VDN positions to Delete Nim
positions, and an exhaustive check that it commutes with option enumeration
(i.e. that it is a game isomorphism)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .rulesets import (
    Pair,
    canonical_pair,
    delete_nim_options,
    validate_delete_nim,
    validate_vdn,
    vdn_options,
)

__all__ = ["vdn_to_delete", "delete_to_vdn", "IsoCheckResult", "check_isomorphism"]


def vdn_to_delete(p: Pair) -> Pair:
    """Map VDN position (x, y) to Delete Nim position (x - 1, y - 1)."""
    x, y = validate_vdn(p)
    return canonical_pair(x - 1, y - 1)


def delete_to_vdn(p: Pair) -> Pair:
    """Inverse map: Delete Nim position (x, y) to VDN position (x + 1, y + 1)."""
    x, y = validate_delete_nim(p)
    return canonical_pair(x + 1, y + 1)


@dataclass
class IsoCheckResult:
    """Outcome of the exhaustive option-set commutation sweep."""

    bound: int
    failures: list[tuple[Pair, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_isomorphism(bound: int) -> IsoCheckResult:
    """For every VDN position with 1 <= y <= x <= bound, check that mapping
    each VDN option componentwise gives exactly the Delete Nim options of the
    mapped position.  Counterexamples are recorded, not raised."""
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    result = IsoCheckResult(bound)
    for x in range(1, bound + 1):
        for y in range(1, x + 1):
            p = (x, y)
            mapped = {vdn_to_delete(q) for q in vdn_options(p)}
            direct = delete_nim_options(vdn_to_delete(p))
            if mapped != direct:
                extra = sorted(mapped - direct)
                missing = sorted(direct - mapped)
                result.failures.append((p, f"extra={extra} missing={missing}"))
    return result
