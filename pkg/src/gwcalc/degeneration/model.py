"""Data model for the degeneration formula of a threefold X = X+ u_Z X-.

The ``+`` side is described concretely by a small integer lattice of curve
classes together with the linear functionals the dimension count needs
(pairing with c1 and with the divisor Z).  The ``-`` side is left generic:
its component classes are recorded only through their contact with Z.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .partitions import Partition

__all__ = [
    "Marking",
    "GeometryModel",
    "RelativeGraphComponent",
    "RelativeGraph",
    "AdmissibleTriple",
    "ComponentKey",
]

PLUS, MINUS = "+", "-"


@dataclass(frozen=True)
class Marking:
    """An absolute insertion: a label, its real degree (2 per psi power included) and a side."""

    label: str
    degree: int
    side: str = MINUS

    def __post_init__(self):
        if self.side not in (PLUS, MINUS, "any"):
            raise ValueError(f"side must be '+', '-' or 'any', got {self.side!r}")
        if self.degree < 0:
            raise ValueError("insertion degree must be non-negative")


def _dot(f: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(f, v))


@dataclass(frozen=True)
class GeometryModel:
    """Lattice data for the ``+`` piece of a degeneration and the gluing divisor.

    ``degree_bounds`` is the degree budget: an inclusive box for every
    coordinate, applied to each connected component's class and to the total.
    ``constraints`` are linear equalities imposed on the total ``+`` class
    only, e.g. its intersection with an exceptional divisor.
    """

    name: str
    lattice_rank: int
    c1_plus: tuple[int, ...]
    divisor_pairing: tuple[int, ...]
    divisor_coh_degrees: tuple[int, ...]
    divisor_dim: int = 4
    constraints: tuple[tuple[tuple[int, ...], int], ...] = ()
    degree_bounds: tuple[tuple[int, int], ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        r = self.lattice_rank
        object.__setattr__(self, "c1_plus", tuple(self.c1_plus))
        object.__setattr__(self, "divisor_pairing", tuple(self.divisor_pairing))
        object.__setattr__(self, "divisor_coh_degrees", tuple(self.divisor_coh_degrees))
        object.__setattr__(self, "constraints",
                           tuple((tuple(f), int(v)) for f, v in self.constraints))
        bounds = tuple(tuple(b) for b in self.degree_bounds) or tuple((0, 6) for _ in range(r))
        object.__setattr__(self, "degree_bounds", bounds)
        if len(self.c1_plus) != r or len(self.divisor_pairing) != r or len(bounds) != r:
            raise ValueError(f"{self.name}: functionals and bounds must have length {r}")
        if any(len(f) != r for f, _ in self.constraints):
            raise ValueError(f"{self.name}: constraint functionals must have length {r}")
        if any(lo > hi for lo, hi in bounds):
            raise ValueError(f"{self.name}: empty degree bound")
        degs = sorted(self.divisor_coh_degrees)
        if not degs:
            raise ValueError(f"{self.name}: the divisor needs a cohomology basis")
        if degs != sorted(self.divisor_dim - d for d in degs):
            raise ValueError(f"{self.name}: divisor degrees {degs} are not Poincare symmetric")
        if any(d < 0 or d > self.divisor_dim for d in degs):
            raise ValueError(f"{self.name}: divisor degrees must lie in [0, {self.divisor_dim}]")

    def c1(self, cls: tuple[int, ...]) -> int:
        return _dot(self.c1_plus, cls)

    def contact(self, cls: tuple[int, ...]) -> int:
        return _dot(self.divisor_pairing, cls)

    def in_bounds(self, cls: tuple[int, ...]) -> bool:
        return all(lo <= c <= hi for c, (lo, hi) in zip(cls, self.degree_bounds))

    def satisfies_constraints(self, cls: tuple[int, ...]) -> bool:
        return all(_dot(f, cls) == v for f, v in self.constraints)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.lattice_rank

    def classes(self, contact: int) -> Iterator[tuple[int, ...]]:
        """Lattice points in the degree box meeting the divisor ``contact`` times."""
        ranges = [range(lo, hi + 1) for lo, hi in self.degree_bounds]
        for cls in itertools.product(*ranges):
            if self.contact(cls) == contact:
                yield cls

    def total_classes(self, contact: int) -> Iterator[tuple[int, ...]]:
        for cls in self.classes(contact):
            if self.satisfies_constraints(cls):
                yield cls

    def dual_degree(self, basis_index: int) -> int:
        """Degree of the dual class delta^i paired against delta_i."""
        return self.divisor_dim - self.divisor_coh_degrees[basis_index]

    def max_contact(self) -> int:
        """Largest divisor contact attainable inside the degree box."""
        return max(
            sum(f * (hi if f > 0 else lo) for f, (lo, hi) in zip(self.divisor_pairing, self.degree_bounds)),
            0,
        )


# (genus, degree, sorted insertion labels, sorted (contact order, delta degree, basis index))
ComponentKey = tuple[int, tuple[int, ...], tuple[str, ...], tuple[tuple[int, int, int], ...]]


@dataclass(frozen=True, order=True)
class RelativeGraphComponent:
    """A connected relative graph: genus, class, absolute marks and relative slots.

    ``slots`` index the parts of the partition of the triple the component
    belongs to; ``rel_marks`` are the matching contact orders.
    """

    genus: int
    degree: tuple[int, ...]
    abs_marks: tuple[int, ...]
    slots: tuple[int, ...]
    rel_marks: tuple[int, ...] = field(compare=False)

    @property
    def contact(self) -> int:
        return sum(self.rel_marks)

    def is_stable(self) -> bool:
        if any(self.degree):
            return True
        return 2 * self.genus - 2 + len(self.abs_marks) + len(self.slots) > 0


@dataclass(frozen=True)
class RelativeGraph:
    components: tuple[RelativeGraphComponent, ...]

    def __len__(self) -> int:
        return len(self.components)

    @property
    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    @property
    def degree(self) -> tuple[int, ...]:
        if not self.components:
            return ()
        return tuple(map(sum, zip(*(c.degree for c in self.components))))

    @property
    def marks(self) -> tuple[int, ...]:
        return tuple(sorted(i for c in self.components for i in c.abs_marks))

    @property
    def slots(self) -> tuple[int, ...]:
        return tuple(sorted(j for c in self.components for j in c.slots))


@dataclass(frozen=True)
class AdmissibleTriple:
    """Two relative graphs glued along the slots of ``mu``.

    Slot ``j`` on the ``+`` side is identified with slot ``j`` on the ``-``
    side, so the matching is the identity on slot indices.  ``basis[j]``
    selects the class delta_i of H*(Z) placed on the ``+`` side at slot j;
    the ``-`` side receives its dual, whose degree is ``delta_degrees[j]``.
    """

    gamma_plus: RelativeGraph
    gamma_minus: RelativeGraph
    mu: Partition
    basis: tuple[int, ...]
    delta_degrees: tuple[int, ...]
    markings: tuple[Marking, ...]
    genus: int

    @property
    def matching(self) -> tuple[tuple[int, int], ...]:
        return tuple((j, j) for j in range(len(self.mu)))

    @property
    def genus_split(self) -> tuple[int, int]:
        return self.gamma_plus.genus, self.gamma_minus.genus

    @property
    def component_counts(self) -> tuple[int, int]:
        return len(self.gamma_plus), len(self.gamma_minus)

    def genus_relation_holds(self) -> bool:
        g1, g2 = self.genus_split
        k1, k2 = self.component_counts
        return self.genus == g1 + g2 + len(self.mu) + 1 - k1 - k2

    def glued_connected(self) -> bool:
        comps = [(PLUS, c) for c in self.gamma_plus.components] + \
                [(MINUS, c) for c in self.gamma_minus.components]
        if not comps:
            return False
        parent = list(range(len(comps)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        owner: dict[int, list[int]] = {}
        for idx, (_, c) in enumerate(comps):
            for j in c.slots:
                owner.setdefault(j, []).append(idx)
        for idxs in owner.values():
            for i in idxs[1:]:
                parent[find(i)] = find(idxs[0])
        return len({find(i) for i in range(len(comps))}) == 1

    def component_key(self, side: str, comp: RelativeGraphComponent,
                      geometry: "GeometryModel") -> ComponentKey:
        contacts = []
        for j in comp.slots:
            i = self.basis[j]
            deg = geometry.divisor_coh_degrees[i] if side == PLUS else geometry.dual_degree(i)
            contacts.append((self.mu[j], deg, i))
        labels = tuple(sorted(self.markings[k].label for k in comp.abs_marks))
        return comp.genus, comp.degree, labels, tuple(sorted(contacts))

    def profile(self) -> dict:
        return {
            "mu": list(self.mu.parts),
            "delta_degrees": list(self.delta_degrees),
            "genus_split": list(self.genus_split),
            "components": list(self.component_counts),
            "plus_degree": list(self.gamma_plus.degree),
        }
