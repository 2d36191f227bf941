"""The degenerations behind the blow-up formulae, and their survivor reports.

Each preset fixes the ``+`` piece of a symplectic cut, the insertions that
live there, and the single (mu, delta-degree) profile the dimension count
is expected to leave.  Lattice coordinates are chosen so that the pairings
with c1 and with the gluing divisor are the ones used in the dimension
arguments:

* ``p3-point``: (P^3, H), classes b*L.  c1 = 4b, H.A = b.
* ``p3tilde-point``: (P^3 blown up at a point, H), classes a*F + b*L with
  F the strict transform of a line through the point.  c1 = 2a + 4b,
  H.A = a + b, and E.A = a = 1 on the total class.
* ``curve-plus``: (P_C(N+O), Z), classes a*F + k*C0 with C0 the zero
  section.  c1 = 3a + c*k, Z.A = a, where c = c1(X).[C] > 0.
* ``curve-tilde-plus``: (P_E(N_E+O), Z), classes a*F + beta with beta in E
  pushing forward to k*[C] and meeting E s times.  c1 = 2a + c*k - s,
  Z.A = a, and E.A = a + s = 1 on the total class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .enumeration import Caps, Profile, enumerate_admissible_triples, profile_dimension_check
from .model import MINUS, PLUS, GeometryModel, Marking

__all__ = ["Preset", "PRESETS", "get_preset", "curve_presets", "survivors_report", "SurvivorReport"]

P2_DEGREES = (0, 2, 4)


def _ruled_surface_degrees(curve_genus: int) -> tuple[int, ...]:
    # P^1-bundle over a genus-h curve: b0=1, b1=2h, b2=2, b3=2h, b4=1
    return (0,) + (1,) * (2 * curve_genus) + (2, 2) + (3,) * (2 * curve_genus) + (4,)


@dataclass(frozen=True)
class Preset:
    name: str
    geometry: GeometryModel
    plus_markings: tuple[Marking, ...]
    expected: tuple[tuple[int, ...], tuple[int, ...]]
    source: str
    min_markings: int = 0
    curve_c1: Optional[int] = None
    minus_degree: int = 4

    def markings(self, m: int) -> tuple[Marking, ...]:
        minus = tuple(Marking(f"alpha{i + 1}", self.minus_degree, MINUS) for i in range(m))
        return self.plus_markings + minus

    def profile_key(self, triple) -> tuple:
        key = (tuple(triple.mu.parts), tuple(triple.delta_degrees))
        if self.curve_c1 is not None:
            k = triple.gamma_plus.degree[1] if triple.gamma_plus.degree else 0
            key += (self.curve_c1 * k,)
        return key

    def expected_key(self) -> tuple:
        key = self.expected
        if self.curve_c1 is not None:
            key += (0,)
        return key


def _point_geometry(bound: int) -> GeometryModel:
    return GeometryModel(
        name="(P3, H)",
        lattice_rank=1,
        c1_plus=(4,),
        divisor_pairing=(1,),
        divisor_coh_degrees=P2_DEGREES,
        degree_bounds=((0, bound),),
        labels=("L",),
    )


def _point_tilde_geometry(bound: int) -> GeometryModel:
    return GeometryModel(
        name="(P3~, H)",
        lattice_rank=2,
        c1_plus=(2, 4),
        divisor_pairing=(1, 1),
        divisor_coh_degrees=P2_DEGREES,
        constraints=(((1, 0), 1),),
        degree_bounds=((0, bound), (0, bound)),
        labels=("F", "L"),
    )


def _curve_geometry(c: int, curve_genus: int, bound: int, section_bound: int) -> GeometryModel:
    return GeometryModel(
        name="(P_C(N+O), Z)",
        lattice_rank=2,
        c1_plus=(3, c),
        divisor_pairing=(1, 0),
        divisor_coh_degrees=_ruled_surface_degrees(curve_genus),
        degree_bounds=((0, bound), (0, section_bound)),
        labels=("F", "C0"),
    )


def _curve_tilde_geometry(c: int, curve_genus: int, bound: int, section_bound: int) -> GeometryModel:
    return GeometryModel(
        name="(P_E(N_E+O), Z)",
        lattice_rank=3,
        c1_plus=(2, c, -1),
        divisor_pairing=(1, 0, 0),
        divisor_coh_degrees=_ruled_surface_degrees(curve_genus),
        constraints=(((1, 0, 1), 1),),
        degree_bounds=((0, bound), (0, section_bound), (-bound, bound)),
        labels=("F", "k", "s"),
    )


def curve_presets(c: int = 1, curve_genus: int = 0, bound: int = 6, section_bound: int = 2) -> dict[str, Preset]:
    """Curve blow-up presets for a curve with c1(X).[C] = c and genus ``curve_genus``."""
    if c < 1:
        raise ValueError("the blown-up curve must satisfy c1(X).[C] > 0")
    return {
        "curve-plus": Preset(
            "curve-plus",
            _curve_geometry(c, curve_genus, bound, section_bound),
            (Marking("[C]", 4, PLUS),),
            ((1,), (0,)),
            "absolute side of the curve blow-up: [C] on P_C(N+O)",
            min_markings=1,
            curve_c1=c,
        ),
        "curve-tilde-plus": Preset(
            "curve-tilde-plus",
            _curve_tilde_geometry(c, curve_genus, bound, section_bound),
            (),
            ((1,), (0,)),
            "blown-up side of the curve blow-up: cut along E",
            min_markings=1,
            curve_c1=c,
        ),
    }


def _build_presets(bound: int = 6) -> dict[str, Preset]:
    presets = {
        "p3-point": Preset(
            "p3-point", _point_geometry(bound), (Marking("[pt]", 6, PLUS),), ((1,), (0,)),
            "point insertion cut off into (P3, H)"),
        "p3tilde-point": Preset(
            "p3tilde-point", _point_tilde_geometry(bound), (), ((1,), (0,)),
            "blown-up side cut along E into (P3~, H)"),
        "p3-point-tau": Preset(
            "p3-point-tau", _point_geometry(bound), (Marking("tau1[pt]", 8, PLUS),), ((1,), (2,)),
            "descendant point insertion cut off into (P3, H)"),
        "p3tilde-point-e2": Preset(
            "p3tilde-point-e2", _point_tilde_geometry(bound), (Marking("-E^2", 4, PLUS),), ((1,), (2,)),
            "-E^2 insertion on the blown-up side"),
        "p3tilde-point-tau-e": Preset(
            "p3tilde-point-tau-e", _point_tilde_geometry(bound), (Marking("tau1E", 4, PLUS),), ((1,), (2,)),
            "tau_1 E insertion on the blown-up side"),
    }
    presets.update(curve_presets(bound=bound))
    return presets


PRESETS: dict[str, Preset] = _build_presets()
PRESET_NAMES = ("p3-point", "p3tilde-point", "p3-point-tau", "curve-plus", "curve-tilde-plus")


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(sorted(PRESETS))}") from None


@dataclass
class SurvivorReport:
    preset: str
    caps: Caps
    g_max: int
    m_values: tuple[int, ...]
    entries: list[dict] = field(default_factory=list)
    profiles: list[tuple] = field(default_factory=list)
    expected: tuple = ()
    cap_warnings: list[str] = field(default_factory=list)

    @property
    def matches_expected(self) -> bool:
        return self.profiles == [self.expected]

    def profiles_by_run(self) -> dict[tuple[int, int], set]:
        out: dict[tuple[int, int], set] = {}
        for e in self.entries:
            out.setdefault((e["g"], e["m"]), set()).add(e["profile"])
        return out

    def to_json(self) -> dict:
        return {
            "preset": self.preset,
            "caps": {"max_components": self.caps.max_components, "max_mu": self.caps.max_mu},
            "g_max": self.g_max,
            "m_values": list(self.m_values),
            "profiles": [_profile_json(p) for p in self.profiles],
            "expected": _profile_json(self.expected),
            "matches_expected": self.matches_expected,
            "cap_warnings": self.cap_warnings,
            "survivors": [
                {k: v for k, v in e.items() if k != "profile"} for e in self.entries
            ],
        }


def _profile_json(p: tuple) -> dict:
    out = {"mu": list(p[0]), "delta_degrees": list(p[1])}
    if len(p) > 2:
        out["curve_c1_part"] = p[2]
    return out


def survivors_report(preset: Preset | str, g_max: int, caps: Caps = Caps(),
                     m_values: Optional[Iterable[int]] = None) -> SurvivorReport:
    """Triples passing the dimension filter, for genera 0..g_max and each marking count.

    By default m runs from the preset's minimum up to 3.
    """
    if isinstance(preset, str):
        preset = get_preset(preset)
    if m_values is None:
        m_values = range(preset.min_markings, 4)
    m_values = tuple(m_values)
    geometry = preset.geometry

    def passes(profile: Profile, markings) -> bool:
        return profile_dimension_check(profile, markings, geometry).passed

    report = SurvivorReport(preset.name, caps, g_max, m_values, expected=preset.expected_key())
    seen = set()
    for g in range(g_max + 1):
        for m in m_values:
            for t in enumerate_admissible_triples(g, preset.markings(m), geometry, caps, passes):
                key = preset.profile_key(t)
                seen.add(key)
                entry = {"g": g, "m": m, **t.profile(), "profile": key}
                report.entries.append(entry)
                if t.mu.size == caps.max_mu:
                    report.cap_warnings.append(f"g={g} m={m}: survivor at |mu| = max_mu = {caps.max_mu}")
                if max(t.component_counts) == caps.max_components:
                    report.cap_warnings.append(
                        f"g={g} m={m}: survivor uses max_components = {caps.max_components}")
    if caps.max_mu < geometry.max_contact():
        report.cap_warnings.append(
            f"degree budget allows |mu| up to {geometry.max_contact()}; enumerated |mu| <= {caps.max_mu}")
    report.profiles = sorted(seen)
    return report
