"""Exact identity checks behind the blow-up formulae, run as one suite.

Every check is an exact comparison; a check either holds identically or it
fails with the offending genera listed in its detail.
"""
from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .bps import (
    ClassDescriptor,
    BPSRecord,
    bps_family_to_gw,
    bps_to_gw,
    check_integrality,
    gw_family_to_bps,
    gw_to_bps,
    verify_blowup_bps_invariance,
)
from .correspondence import (
    CorrespondenceKind,
    GenusSequence,
    apply_blowup,
    closed_form,
    convolve,
    deconvolve,
    generating_function_check,
    impulse,
    verify_closed_form,
)
from .degeneration import (
    PRESET_NAMES,
    Caps,
    InvariantTable,
    enumerate_admissible_triples,
    enumerate_partitions,
    evaluate_degeneration,
    get_preset,
    survivors_report,
    zeta,
    Partition,
)
from .series import EvenSeries, series_add, series_inverse, series_mul, series_pow, sin_u_over_u, sinc_half


@dataclass
class CheckResult:
    key: str
    statement: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"[{mark}] {self.key}: {self.statement}{tail}"

    def to_json(self) -> dict:
        return {"key": self.key, "statement": self.statement, "passed": self.passed, "detail": self.detail}


def random_rational(rng: random.Random, max_num: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_sequence(rng: random.Random, order: int, nonzero_head: bool = False) -> GenusSequence:
    vals = [random_rational(rng) for _ in range(order + 1)]
    while nonzero_head and vals[0] == 0:
        vals[0] = random_rational(rng)
    return GenusSequence(vals)


def point_preset_tables(I: GenusSequence, K: GenusSequence,
                        minus_label: str = "alpha1") -> tuple[InvariantTable, InvariantTable]:
    """Tables for the (P3, H) cut: <[pt] | [pt]>_{g,L,(1)} and <alpha | 1>_{g,(1)}."""
    geo = get_preset("p3-point").geometry
    pt = geo.divisor_coh_degrees.index(4)
    plus, minus = InvariantTable(), InvariantTable()
    for g, v in enumerate(I.values):
        plus.set(g, (1,), ["[pt]"], [(1, 4, pt)], v)
    for g, v in enumerate(K.values):
        minus.set(g, (1,), [minus_label], [(1, 0, pt)], v)
    return plus, minus


def _mismatch_detail(left, right) -> str:
    bad = [g for g, (a, b) in enumerate(zip(left, right)) if a != b]
    if len(left) != len(right):
        return f"length {len(left)} vs {len(right)}"
    return f"mismatch at g={bad}" if bad else ""


def check_point_primary(order: int) -> CheckResult:
    rep = verify_closed_form(CorrespondenceKind.POINT_PRIMARY, order)
    sinc2 = series_pow(sinc_half(order), 2).coeffs
    ok = rep.passed and rep.solved.values == sinc2
    return CheckResult("point-primary", f"point blow-up coefficients (-1)^g 2/(2g+2)! = sinc(u/2)^2, g<={order}",
                       ok, _mismatch_detail(rep.solved.values, sinc2))


def check_point_descendant(order: int) -> CheckResult:
    rep = verify_closed_form(CorrespondenceKind.POINT_DESCENDANT, order)
    ok = rep.passed and rep.solved.values == sin_u_over_u(order).coeffs
    return CheckResult("point-descendant", f"tau_1[pt] coefficients (-1)^g/(2g+1)! = sin(u)/u, g<={order}",
                       ok, _mismatch_detail(rep.solved.values, rep.expected.values))


def check_exceptional_tau(order: int) -> CheckResult:
    rep = verify_closed_form(CorrespondenceKind.EXCEPTIONAL_TAU, order)
    relation = impulse(order).linear_combination(3, closed_form(CorrespondenceKind.POINT_DESCENDANT, order), -2)
    ok = rep.passed and rep.solved.values == relation.values
    return CheckResult("exceptional-tau", f"tau_1 E coefficients = 3*delta - 2*(sin u/u), g<={order}",
                       ok, _mismatch_detail(rep.solved.values, relation.values))


def check_curve(order: int) -> CheckResult:
    rep = verify_closed_form(CorrespondenceKind.CURVE, order)
    ok = rep.passed and rep.solved.values == sinc_half(order).coeffs
    return CheckResult("curve", f"curve coefficients (-1)^g/((2g+1)! 4^g) = sin(u/2)/(u/2), g<={order}",
                       ok, _mismatch_detail(rep.solved.values, rep.expected.values))


def check_generating_function(order: int, trials: int = 50, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    order = min(order, 8)
    failures = [t for t in range(trials) if not generating_function_check(random_sequence(rng, order))]
    return CheckResult("generating-function", f"F^X = sinc(u/2)^2 F^X~ on {trials} random sequences, G={order}",
                       not failures, f"failed trials {failures}" if failures else "")


def check_survivors(g_max: int, caps: Caps) -> CheckResult:
    bad = []
    for name in PRESET_NAMES:
        rep = survivors_report(name, min(g_max, 5), caps)
        runs = rep.profiles_by_run()
        expected_runs = {(g, m) for g in range(rep.g_max + 1) for m in rep.m_values}
        if not rep.matches_expected or set(runs) != expected_runs or \
                any(p != {rep.expected} for p in runs.values()):
            bad.append(name)
    return CheckResult("survivor-profiles", "dimension filter leaves exactly the expected profiles on all presets",
                       not bad, f"failing presets {bad}" if bad else "")


def check_degeneration_oracle(order: int, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    order = min(order, 6)
    I, K = random_sequence(rng, order), random_sequence(rng, order)
    plus, minus = point_preset_tables(I, K)
    preset = get_preset("p3-point")
    evaluated = [evaluate_degeneration(g, preset.markings(1), plus, minus, preset.geometry)
                 for g in range(order + 1)]
    expected = convolve(I, K).values
    return CheckResult("degeneration-sum", f"degeneration sum on the point preset = convolve(I, K), g<={order}",
                       tuple(evaluated) == expected, _mismatch_detail(evaluated, expected))


def check_bps_round_trip(order: int, trials: int = 50, seed: int = 2) -> CheckResult:
    rng = random.Random(seed)
    order = min(order, 8)
    failures = []
    for t in range(trials):
        if t % 2 == 0:
            c1 = rng.randint(1, 6)
            gw = random_sequence(rng, order)
            cls = ClassDescriptor((1,), c1)
            back = bps_to_gw(gw_to_bps(gw, cls))
            if back.values != gw.values:
                failures.append(t)
        else:
            x, y = rng.randint(1, 3), rng.randint(0, 3)
            base = (x // gcd(x, y), y // gcd(x, y))
            div = rng.randint(1, 4)
            family = {tuple(k * b for b in base): random_sequence(rng, order) for k in range(1, div + 1)}
            top = tuple(div * b for b in base)
            needed = {ClassDescriptor(top, 0).quotient(d).coords for d in ClassDescriptor(top, 0).divisors()}
            family = {c: s for c, s in family.items() if c in needed}
            bps = gw_family_to_bps(family)
            back = bps_family_to_gw(bps)
            if any(back[c].values != family[c].values for c in family):
                failures.append(t)
    return CheckResult("bps-round-trip", f"bps_to_gw(gw_to_bps(x)) = x on {trials} inputs, both branches, G={order}",
                       not failures, f"failed trials {failures}" if failures else "")


def check_bps_blowup(order: int, trials: int = 50, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    order = min(order, 8)
    failures = []
    for t in range(trials):
        P = random_sequence(rng, order)
        if not verify_blowup_bps_invariance(P, rng.randint(3, 8), CorrespondenceKind.POINT_PRIMARY):
            failures.append(("point", t))
        if not verify_blowup_bps_invariance(P, rng.randint(2, 8), CorrespondenceKind.CURVE):
            failures.append(("curve", t))
    H = closed_form(CorrespondenceKind.POINT_PRIMARY, order)
    line = gw_to_bps(H, ClassDescriptor((1,), 4))
    concrete = list(line.values) == [1] + [0] * order and check_integrality(line).integral
    via_blowup = verify_blowup_bps_invariance(impulse(order), 4)
    ok = not failures and concrete and via_blowup.passed and list(via_blowup.upstairs.values) == [1] + [0] * order
    detail = []
    if failures:
        detail.append(f"failed trials {failures}")
    if not concrete:
        detail.append("P3 line through two points does not give n = (1, 0, ...)")
    return CheckResult("bps-blowup", f"BPS numbers unchanged by point/curve blow-up on {trials} inputs; "
                       "n_g(P3, [pt],[pt]) = (1, 0, ...)", ok, "; ".join(detail))


def check_properties(order: int, seed: int = 4) -> CheckResult:
    rng = random.Random(seed)
    order = min(order, 8)
    problems = []

    def rs():
        return EvenSeries(random_rational(rng) for _ in range(order + 1))

    for _ in range(20):
        a, b, c = rs(), rs(), rs()
        if series_mul(a, b) != series_mul(b, a):
            problems.append("commutativity")
        if series_mul(series_mul(a, b), c) != series_mul(a, series_mul(b, c)):
            problems.append("associativity")
        if series_mul(a, series_add(b, c)) != series_add(series_mul(a, b), series_mul(a, c)):
            problems.append("distributivity")
        if a.coeffs[0] != 0 and series_mul(a, series_inverse(a)).coeffs != (1,) + (0,) * order:
            problems.append("inverse")
        C, P = random_sequence(rng, order), random_sequence(rng, order, nonzero_head=True)
        if deconvolve(convolve(C, P), P).values != C.values:
            problems.append("deconvolve")
    if zeta(Partition((1,))) != 1 or len(enumerate_partitions(5)) != 7:
        problems.append("partitions")
    preset = get_preset("p3-point")
    for g in range(3):
        for t in enumerate_admissible_triples(g, preset.markings(1), preset.geometry, Caps(2, 3)):
            g1, g2 = t.genus_split
            k1, k2 = t.component_counts
            if g != g1 + g2 + len(t.mu) + 1 - k1 - k2:
                problems.append("genus relation")
                break
    return CheckResult("properties", "ring axioms, deconvolve o convolve, partition identities, genus relation",
                       not problems, f"violated: {sorted(set(problems))}" if problems else "")


def run_suite(order: int = 10, caps: Optional[Caps] = None) -> list[CheckResult]:
    caps = caps or Caps()
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_point_primary(order),
        lambda: check_point_descendant(order),
        lambda: check_exceptional_tau(order),
        lambda: check_curve(order),
        lambda: check_generating_function(order),
        lambda: check_survivors(order, caps),
        lambda: check_degeneration_oracle(order),
        lambda: check_bps_round_trip(order),
        lambda: check_bps_blowup(order),
        lambda: check_properties(order),
    ]
    return [c() for c in checks]
