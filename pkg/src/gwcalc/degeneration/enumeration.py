"""Enumeration of admissible triples and the virtual dimension filter."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from ..errors import CapExceeded
from .model import (
    MINUS,
    PLUS,
    AdmissibleTriple,
    GeometryModel,
    Marking,
    RelativeGraph,
    RelativeGraphComponent,
)
from .partitions import Partition, enumerate_partitions

__all__ = [
    "Caps",
    "Profile",
    "DimensionCheck",
    "enumerate_admissible_triples",
    "dimension_filter",
    "profile_dimension_check",
]


@dataclass(frozen=True)
class Caps:
    """Enumeration limits.  ``max_triples`` guards against runaway enumerations."""

    max_components: int = 3
    max_mu: int = 6
    max_triples: int = 200_000

    def __post_init__(self):
        if self.max_components < 1 or self.max_mu < 1 or self.max_triples < 1:
            raise ValueError("caps must be positive")


@dataclass(frozen=True)
class Profile:
    """The data the dimension count depends on: mu, total + class, basis choice."""

    mu: Partition
    plus_class: tuple[int, ...]
    basis: tuple[int, ...]


@dataclass(frozen=True)
class DimensionCheck:
    passed: bool
    lhs: int
    rhs: int
    equation: str

    def __bool__(self) -> bool:
        return self.passed


def _format_half(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def profile_dimension_check(profile: Profile, markings: Sequence[Marking],
                            geometry: GeometryModel) -> DimensionCheck:
    """Virtual dimension balance for one profile (real dimensions, threefold X).

    A relative moduli space on the ``+`` side has dimension
    2 c1(A+) + 2 m+ + 2 l(mu) - 2 |mu|; the ``-`` side contributes what its
    insertions and dual divisor classes require.  Their sum must equal the
    absolute dimension (the total insertion degree) plus dim_R(Z) l(mu).
    """
    mu = profile.mu
    ell, size = len(mu), mu.size
    plus = [mk for mk in markings if mk.side == PLUS]
    minus = [mk for mk in markings if mk.side == MINUS]
    c1 = geometry.c1(profile.plus_class)
    dual = [geometry.dual_degree(i) for i in profile.basis]
    dim_plus = 2 * c1 + 2 * len(plus) + 2 * ell - 2 * size if (ell or plus or any(profile.plus_class)) else 0
    dim_minus = sum(mk.degree for mk in minus) + sum(dual)
    lhs = dim_plus + dim_minus
    rhs = sum(mk.degree for mk in markings) + geometry.divisor_dim * ell
    kappa = Fraction(sum(mk.degree for mk in plus), 2) - len(plus)
    slope = Fraction(geometry.divisor_dim, 2) - 1
    equation = (
        f"1/2*sum(deg delta) + c1(A+) - |mu| = kappa + {_format_half(slope)}*l(mu): "
        f"{_format_half(Fraction(sum(dual), 2))} + {c1} - {size} = "
        f"{_format_half(kappa)} + {_format_half(slope * ell)}"
    )
    return DimensionCheck(lhs == rhs, lhs, rhs, equation)


def dimension_filter(triple: AdmissibleTriple, geometry: GeometryModel) -> DimensionCheck:
    profile = Profile(triple.mu, triple.gamma_plus.degree or geometry.zero(), triple.basis)
    return profile_dimension_check(profile, triple.markings, geometry)


def _set_partitions(items: tuple[int, ...], max_blocks: int) -> Iterator[list[tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, max_blocks):
        for i in range(len(part)):
            yield part[:i] + [(first,) + part[i]] + part[i + 1:]
        if len(part) < max_blocks:
            yield [(first,)] + part


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if total == 0:
            yield ()
        return
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def _class_splits(geometry: GeometryModel, total: tuple[int, ...],
                  contacts: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ways to write ``total`` as a sum of in-box classes with prescribed contacts."""
    if len(contacts) == 1:
        if geometry.in_bounds(total) and geometry.contact(total) == contacts[0]:
            yield (total,)
        return
    for first in geometry.classes(contacts[0]):
        rest = tuple(t - f for t, f in zip(total, first))
        for tail in _class_splits(geometry, rest, contacts[1:]):
            yield (first,) + tail


def _mark_assignments(marks: Sequence[int], k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    for choice in itertools.product(range(k), repeat=len(marks)):
        yield tuple(tuple(m for m, c in zip(marks, choice) if c == i) for i in range(k))


def _resolve_sides(markings: Sequence[Marking]) -> Iterator[tuple[Marking, ...]]:
    options = [[mk] if mk.side != "any" else [replace(mk, side=PLUS), replace(mk, side=MINUS)]
               for mk in markings]
    for combo in itertools.product(*options):
        yield tuple(combo)


def _canonical_key(plus, minus, mu: Partition, basis: tuple[int, ...]):
    """Smallest encoding over slot permutations that fix mu and over component order."""
    best = None
    block_perms = [list(itertools.permutations(b)) for b in mu.blocks()]
    for choice in itertools.product(*block_perms):
        sigma = {}
        for block, perm in zip(mu.blocks(), choice):
            for old, new in zip(block, perm):
                sigma[old] = new
        new_basis = [0] * len(basis)
        for old, new in sigma.items():
            new_basis[new] = basis[old]

        def enc(comps):
            return tuple(sorted((c.genus, c.degree, c.abs_marks, tuple(sorted(sigma[j] for j in c.slots)))
                                for c in comps))

        key = (enc(plus), enc(minus), tuple(new_basis))
        if best is None or key < best:
            best = key
    return best


def enumerate_admissible_triples(
    genus: int,
    markings: Sequence[Marking],
    geometry: GeometryModel,
    caps: Caps = Caps(),
    profile_filter: Optional[Callable[[Profile, tuple[Marking, ...]], bool]] = None,
) -> list[AdmissibleTriple]:
    """All admissible triples of total genus ``genus`` within the caps.

    A triple glues a (possibly disconnected) ``+`` graph to a ``-`` graph
    along the parts of mu: the result is connected, the genus relation
    g = g1 + g2 + l(mu) + 1 - |G1| - |G2| holds, the ``+`` class meets the
    geometry's constraints, every component is stable, and the markings are
    split according to their sides.  Triples are returned once per class
    under component relabeling and permutations of equal parts of mu, in a
    deterministic order.

    ``profile_filter`` prunes whole profiles before graphs are expanded; any
    predicate that depends only on the profile gives the same result as
    filtering the full output.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    found: dict = {}

    def emit(key, triple):
        if key not in found:
            if len(found) >= caps.max_triples:
                raise CapExceeded(
                    f"more than {caps.max_triples} admissible triples; raise max_triples or tighten caps")
            found[key] = triple

    for resolved in _resolve_sides(markings):
        plus_marks = tuple(i for i, mk in enumerate(resolved) if mk.side == PLUS)
        minus_marks = tuple(i for i, mk in enumerate(resolved) if mk.side == MINUS)
        _empty_mu_triples(genus, resolved, plus_marks, minus_marks, geometry, profile_filter, emit)
        for size in range(1, caps.max_mu + 1):
            for mu in enumerate_partitions(size):
                _triples_for_mu(genus, mu, resolved, plus_marks, minus_marks, geometry, caps,
                                profile_filter, emit)
    return [found[k] for k in sorted(found)]


def _empty_mu_triples(genus, resolved, plus_marks, minus_marks, geometry, profile_filter, emit):
    mu = Partition(())
    if plus_marks and minus_marks:
        return  # connectedness forces a nonempty partition
    if not plus_marks:
        # the whole curve lies on the generic - side; the + class is zero
        zero = geometry.zero()
        if geometry.satisfies_constraints(zero) and geometry.in_bounds(zero):
            profile = Profile(mu, zero, ())
            if profile_filter is None or profile_filter(profile, resolved):
                comp = RelativeGraphComponent(genus, (0,), minus_marks, (), ())
                triple = AdmissibleTriple(RelativeGraph(()), RelativeGraph((comp,)), mu, (), (),
                                          resolved, genus)
                emit((0, (), (), ((genus, (0,), minus_marks, ()),), ()), triple)
    if not minus_marks:
        for cls in geometry.total_classes(0):
            if not any(cls):
                continue
            profile = Profile(mu, cls, ())
            if profile_filter is not None and not profile_filter(profile, resolved):
                continue
            comp = RelativeGraphComponent(genus, cls, plus_marks, (), ())
            triple = AdmissibleTriple(RelativeGraph((comp,)), RelativeGraph(()), mu, (), (),
                                      resolved, genus)
            emit((0, (), ((genus, cls, plus_marks, ()),), (), ()), triple)


def _triples_for_mu(genus, mu, resolved, plus_marks, minus_marks, geometry, caps, profile_filter, emit):
    ell = len(mu)
    slots = tuple(range(ell))
    n_basis = len(geometry.divisor_coh_degrees)
    for plus_class in geometry.total_classes(mu.size):
        for basis in itertools.product(range(n_basis), repeat=ell):
            profile = Profile(mu, plus_class, basis)
            if profile_filter is not None and not profile_filter(profile, resolved):
                continue
            deltas = tuple(geometry.dual_degree(i) for i in basis)
            for plus_blocks in _set_partitions(slots, caps.max_components):
                plus_contacts = [sum(mu[j] for j in b) for b in plus_blocks]
                splits = list(_class_splits(geometry, plus_class, plus_contacts))
                if not splits:
                    continue
                for minus_blocks in _set_partitions(slots, caps.max_components):
                    k1, k2 = len(plus_blocks), len(minus_blocks)
                    free = genus - ell - 1 + k1 + k2
                    if free < 0 or not _connected(plus_blocks, minus_blocks):
                        continue
                    for g1 in range(free + 1):
                        for pg in _compositions(g1, k1):
                            for mg in _compositions(free - g1, k2):
                                for degs in splits:
                                    for pm in _mark_assignments(plus_marks, k1):
                                        for mm in _mark_assignments(minus_marks, k2):
                                            plus = tuple(
                                                RelativeGraphComponent(pg[i], degs[i], pm[i], plus_blocks[i],
                                                                       tuple(mu[j] for j in plus_blocks[i]))
                                                for i in range(k1))
                                            minus = tuple(
                                                RelativeGraphComponent(
                                                    mg[i], (sum(mu[j] for j in minus_blocks[i]),), mm[i],
                                                    minus_blocks[i], tuple(mu[j] for j in minus_blocks[i]))
                                                for i in range(k2))
                                            if not all(c.is_stable() for c in plus + minus):
                                                continue
                                            key = (mu.size, tuple(-p for p in mu)) + _canonical_key(plus, minus, mu, basis)
                                            triple = AdmissibleTriple(
                                                RelativeGraph(tuple(sorted(plus))),
                                                RelativeGraph(tuple(sorted(minus))),
                                                mu, basis, deltas, resolved, genus)
                                            emit(key, triple)


def _connected(plus_blocks, minus_blocks) -> bool:
    # bipartite graph on blocks, joined through shared slots
    k1 = len(plus_blocks)
    parent = list(range(k1 + len(minus_blocks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    where = {}
    for i, b in enumerate(plus_blocks):
        for j in b:
            where[j] = i
    for i, b in enumerate(minus_blocks):
        for j in b:
            parent[find(k1 + i)] = find(where[j])
    return len({find(i) for i in range(len(parent))}) == 1
