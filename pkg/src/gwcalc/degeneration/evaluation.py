from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import MissingInvariant
from .enumeration import Caps, Profile, enumerate_admissible_triples, profile_dimension_check
from .model import MINUS, PLUS, ComponentKey, GeometryModel, Marking
from .partitions import zeta

__all__ = ["InvariantTable", "evaluate_degeneration", "canonical_key"]


def canonical_key(genus: int, degree: Sequence[int], insertions: Sequence[str],
                  contacts: Sequence[Sequence[int]]) -> ComponentKey:
    """Normalize a connected relative invariant's key (sorted labels and contacts)."""
    return (
        int(genus),
        tuple(int(d) for d in degree),
        tuple(sorted(insertions)),
        tuple(sorted(tuple(int(x) for x in c) for c in contacts)),
    )


@dataclass
class InvariantTable:
    """Connected relative invariants; disconnected ones are products of these."""

    entries: dict[ComponentKey, Fraction] = field(default_factory=dict)

    def set(self, genus, degree, insertions, contacts, value) -> None:
        self.entries[canonical_key(genus, degree, insertions, contacts)] = Fraction(value)

    def lookup(self, key: ComponentKey, side: str) -> Fraction:
        try:
            return self.entries[key]
        except KeyError:
            g, deg, labels, contacts = key
            raise MissingInvariant(
                f"{side} table has no entry for genus={g} degree={list(deg)} "
                f"insertions={list(labels)} contacts={[list(c) for c in contacts]}") from None

    def __len__(self) -> int:
        return len(self.entries)


def evaluate_degeneration(genus: int, markings: Sequence[Marking], plus_table: InvariantTable,
                          minus_table: InvariantTable, geometry: GeometryModel,
                          caps: Caps = Caps()) -> Fraction:
    """Sum over admissible triples of zeta(mu) times the glued relative invariants.

    Triples failing the dimension count contribute nothing and are skipped
    without table lookups.  The dual-basis sum is carried by the basis index
    stored per slot; each equivalence class of triples is counted once.
    """

    def passes(profile: Profile, resolved) -> bool:
        return profile_dimension_check(profile, resolved, geometry).passed

    total = Fraction(0)
    for t in enumerate_admissible_triples(genus, markings, geometry, caps, passes):
        term = zeta(t.mu)
        for comp in t.gamma_plus.components:
            term *= plus_table.lookup(t.component_key(PLUS, comp, geometry), "+")
        for comp in t.gamma_minus.components:
            term *= minus_table.lookup(t.component_key(MINUS, comp, geometry), "-")
        total += term
    return total
