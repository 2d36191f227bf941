"""Generalized BPS numbers from genus series, and back.

For a class with positive c1 pairing ``c`` the BPS numbers ``n_g`` are defined by

    sum_g u^(2g) GW_g = sum_g u^(2g) n_g S(u)^(2g-2+c),    S(u) = sin(u/2)/(u/2).

For c1-trivial classes the kernel becomes a multiple-cover sum over the
divisors d of the class,

    sum_g u^(2g) GW_{g,A} = sum_{d | A} sum_g u^(2g) n_{g,A/d} (1/d) (sin(du/2)/(u/2))^(2g-2),

which couples A to every A/d.  Either way the system is lower triangular in
genus with unit diagonal and is solved by forward substitution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .correspondence import CorrespondenceKind, GenusSequence, apply_blowup
from .errors import MissingDivisorData, NegativeC1
from .series import EvenSeries, RationalLike, as_rational, format_rational, series_pow, sinc_half, sinc_scaled

__all__ = [
    "ClassDescriptor",
    "Insertion",
    "BPSRecord",
    "IntegralityReport",
    "BlowupBPSReport",
    "reduce_insertions",
    "gw_to_bps",
    "gw_family_to_bps",
    "bps_to_gw",
    "bps_family_to_gw",
    "check_integrality",
    "verify_blowup_bps_invariance",
]


@dataclass(frozen=True)
class ClassDescriptor:
    """A nonzero curve class in a chosen lattice basis, with its c1 pairing."""

    coords: tuple[int, ...]
    c1_pairing: int

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if not self.coords or all(c == 0 for c in self.coords):
            raise ValueError("class must be nonzero")

    @property
    def divisibility(self) -> int:
        d = 0
        for c in self.coords:
            d = gcd(d, c)
        return d

    def divisors(self) -> list[int]:
        n = self.divisibility
        return [d for d in range(1, n + 1) if n % d == 0]

    def quotient(self, d: int) -> ClassDescriptor:
        if any(c % d for c in self.coords) or self.c1_pairing % d:
            raise ValueError(f"{d} does not divide {self.coords}")
        return ClassDescriptor(tuple(c // d for c in self.coords), self.c1_pairing // d)


@dataclass(frozen=True)
class Insertion:
    """A cohomology insertion by real degree; degree-2 items carry D.A."""

    degree: int
    pairing: Optional[Fraction] = None

    def __post_init__(self):
        if not 0 <= self.degree <= 6:
            raise ValueError(f"insertion degree {self.degree} outside [0, 6]")
        if (self.degree == 2) != (self.pairing is not None):
            raise ValueError("a divisor pairing is given exactly for degree-2 insertions")
        if self.pairing is not None:
            object.__setattr__(self, "pairing", as_rational(self.pairing))


def reduce_insertions(insertions: Sequence[Insertion],
                      cls: Optional[ClassDescriptor] = None) -> tuple[Fraction, tuple[Insertion, ...]]:
    """Strip divisor insertions via the divisor equation.

    Returns the accumulated scalar and the remaining insertions.  Classes of
    degree 0 or 1 make the BPS number vanish.  Odd degrees above 1 are not
    covered by the divisor-equation extension and are refused.
    """
    scalar = Fraction(1)
    kept = []
    for item in insertions:
        if item.degree <= 1:
            return Fraction(0), ()
        if item.degree == 2:
            scalar *= item.pairing
        elif item.degree % 2:
            raise ValueError(f"odd-degree insertion of degree {item.degree} is not supported")
        else:
            kept.append(item)
    return scalar, tuple(kept)


@dataclass(frozen=True)
class BPSRecord:
    values: tuple[Fraction, ...]
    cls: ClassDescriptor
    insertions: tuple[Insertion, ...] = ()

    def __init__(self, values: Iterable[RationalLike], cls: ClassDescriptor,
                 insertions: Iterable[Insertion] = ()):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in values))
        object.__setattr__(self, "cls", cls)
        object.__setattr__(self, "insertions", tuple(insertions))

    @property
    def order(self) -> int:
        return len(self.values) - 1


def _solve_unit_triangular(target: Sequence[Fraction], kernels: Sequence[EvenSeries]) -> list[Fraction]:
    # target_h = sum_{g <= h} n_g * kernels[g][h - g]
    n: list[Fraction] = []
    for h in range(len(target)):
        acc = target[h]
        for g in range(h):
            acc -= n[g] * kernels[g][h - g]
        n.append(acc / kernels[h][0])
    return n


def _expand(n: Sequence[Fraction], kernels: Sequence[EvenSeries]) -> list[Fraction]:
    G = len(n)
    out = [Fraction(0)] * G
    for g, ng in enumerate(n):
        if ng == 0:
            continue
        for k in range(G - g):
            out[g + k] += ng * kernels[g][k]
    return out


def _fano_kernels(c1: int, order: int) -> list[EvenSeries]:
    s = sinc_half(order)
    return [series_pow(s, 2 * g - 2 + c1) for g in range(order + 1)]


def _cover_kernels(d: int, order: int) -> list[EvenSeries]:
    base = sinc_scaled(d, order)
    return [series_pow(base, 2 * g - 2).scale(Fraction(1, d)) for g in range(order + 1)]


def _check_c1(c1: int) -> None:
    if c1 < 0:
        raise NegativeC1(f"c1 pairing {c1} < 0: all invariants of the class vanish")


def gw_to_bps(gw: GenusSequence, cls: ClassDescriptor,
              insertions: Sequence[Insertion] = (),
              family: Optional[Mapping[tuple[int, ...], GenusSequence]] = None) -> BPSRecord:
    """BPS numbers of ``cls`` from its genus series.

    When the class is c1-trivial, ``family`` must supply the insertion-free
    genus series of every proper quotient ``cls/d``; ``gw`` itself may carry
    divisor insertions, which are divided out and restored.
    """
    _check_c1(cls.c1_pairing)
    order = gw.order
    scalar, reduced = reduce_insertions(insertions, cls)
    if scalar == 0:
        return BPSRecord([0] * (order + 1), cls, insertions)
    if cls.c1_pairing > 0:
        n = _solve_unit_triangular(gw.values, _fano_kernels(cls.c1_pairing, order))
        return BPSRecord(n, cls, insertions)
    if reduced:
        raise ValueError("c1-trivial classes take no insertions beyond divisors")
    members = dict(family or {})
    members[cls.coords] = GenusSequence((v / scalar for v in gw.values), 0, gw.label)
    solved = gw_family_to_bps(members, order=order, only=cls.coords)
    return BPSRecord((scalar * v for v in solved[cls.coords].values), cls, insertions)


def gw_family_to_bps(family: Mapping[tuple[int, ...], GenusSequence], order: Optional[int] = None,
                     only: Optional[tuple[int, ...]] = None) -> dict[tuple[int, ...], BPSRecord]:
    """Solve the multiple-cover system for every class in a c1-trivial family.

    Classes are processed from least to most divisible so that each ``A/d``
    is solved before it feeds the subtraction for ``A``.
    """
    if order is None:
        order = min(seq.order for seq in family.values())
    targets = [only] if only is not None else list(family)
    needed: set[tuple[int, ...]] = set()
    for coords in targets:
        cls = ClassDescriptor(coords, 0)
        for d in cls.divisors():
            q = cls.quotient(d).coords
            if q not in family:
                raise MissingDivisorData(f"no genus series for class {q} = {coords}/{d}")
            needed.add(q)
    solved: dict[tuple[int, ...], BPSRecord] = {}
    primitive = _cover_kernels(1, order)
    for coords in sorted(needed, key=lambda c: (ClassDescriptor(c, 0).divisibility, c)):
        cls = ClassDescriptor(coords, 0)
        seq = family[coords]
        if seq.order < order:
            raise ValueError(f"series for {coords} is known only to genus {seq.order}")
        target = list(seq.values[: order + 1])
        for d in cls.divisors()[1:]:
            lower = solved[cls.quotient(d).coords].values
            for g, v in enumerate(_expand(lower, _cover_kernels(d, order))):
                target[g] -= v
        solved[coords] = BPSRecord(_solve_unit_triangular(target, primitive), cls)
    return {c: solved[c] for c in targets}


def bps_to_gw(record: BPSRecord,
              family: Optional[Mapping[tuple[int, ...], BPSRecord]] = None) -> GenusSequence:
    """Genus series from BPS numbers; c1-trivial classes need their quotients in ``family``."""
    cls = record.cls
    _check_c1(cls.c1_pairing)
    order = record.order
    if cls.c1_pairing > 0:
        values = _expand(record.values, _fano_kernels(cls.c1_pairing, order))
        return GenusSequence(values, cls.c1_pairing)
    scalar, reduced = reduce_insertions(record.insertions, cls)
    if scalar == 0:
        return GenusSequence([0] * (order + 1), 0)
    if reduced:
        raise ValueError("c1-trivial classes take no insertions beyond divisors")
    members = dict(family or {})
    members[cls.coords] = BPSRecord((v / scalar for v in record.values), cls)
    out = bps_family_to_gw(members, only=cls.coords)[cls.coords]
    return GenusSequence((scalar * v for v in out.values), 0)


def bps_family_to_gw(family: Mapping[tuple[int, ...], BPSRecord],
                     only: Optional[tuple[int, ...]] = None) -> dict[tuple[int, ...], GenusSequence]:
    targets = [only] if only is not None else list(family)
    out = {}
    for coords in targets:
        cls = ClassDescriptor(coords, 0)
        order = family[coords].order
        total = [Fraction(0)] * (order + 1)
        for d in cls.divisors():
            q = cls.quotient(d).coords
            if q not in family:
                raise MissingDivisorData(f"no BPS numbers for class {q} = {coords}/{d}")
            lower = family[q].values[: order + 1]
            if len(lower) < order + 1:
                raise ValueError(f"BPS numbers for {q} are known only to genus {len(lower) - 1}")
            for g, v in enumerate(_expand(lower, _cover_kernels(d, order))):
                total[g] += v
        out[coords] = GenusSequence(total, 0)
    return out


@dataclass
class IntegralityReport:
    per_genus: list[bool]
    offending: list[int] = field(default_factory=list)

    @property
    def integral(self) -> bool:
        return not self.offending

    def to_json(self) -> dict:
        return {"integral": self.integral, "per_genus": self.per_genus, "offending": self.offending}


def check_integrality(record: BPSRecord) -> IntegralityReport:
    per = [v.denominator == 1 for v in record.values]
    return IntegralityReport(per, [g for g, ok in enumerate(per) if not ok])


_SHIFTS = {CorrespondenceKind.POINT_PRIMARY: 2, CorrespondenceKind.CURVE: 1}


@dataclass
class BlowupBPSReport:
    kind: CorrespondenceKind
    downstairs: BPSRecord
    upstairs: BPSRecord

    @property
    def mismatches(self) -> list[int]:
        return [g for g, (a, b) in enumerate(zip(self.downstairs.values, self.upstairs.values)) if a != b]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "passed": self.passed,
            "downstairs": [format_rational(v) for v in self.downstairs.values],
            "upstairs": [format_rational(v) for v in self.upstairs.values],
        }


def verify_blowup_bps_invariance(P: GenusSequence, c1A: int,
                                 kind: CorrespondenceKind = CorrespondenceKind.POINT_PRIMARY) -> BlowupBPSReport:
    """Compare BPS numbers of the blown-down series with those of the blown-up one.

    ``P`` is the blown-up genus series; its class pairs with c1 to ``c1A``
    minus 2 (point) or 1 (curve).  The BPS numbers of both sides must agree.
    """
    if kind not in _SHIFTS:
        raise ValueError(f"BPS invariance is stated for point and curve blow-ups, not {kind.value}")
    _check_c1(c1A)
    c1_up = c1A - _SHIFTS[kind]
    _check_c1(c1_up)
    if c1_up == 0:
        raise ValueError("the blown-up class must pair positively with c1")
    H = apply_blowup(kind, P)
    down = gw_to_bps(H, ClassDescriptor((1,), c1A))
    up = gw_to_bps(P, ClassDescriptor((1,), c1_up))
    return BlowupBPSReport(kind, down, up)
