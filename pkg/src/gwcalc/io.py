"""JSON documents for sequences, series, BPS records, geometries and tables."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .bps import BPSRecord, ClassDescriptor, Insertion
from .correspondence import GenusSequence
from .degeneration import GeometryModel, InvariantTable, Marking, canonical_key
from .errors import ParseError
from .series import EvenSeries, format_rational, parse_rational

PathLike = Union[str, Path]


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def load_json(path: PathLike) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _require(doc: Any, key: str, where: str) -> Any:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    return doc[key]


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _values(raw: Any, where: str) -> list:
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of 'p/q' strings")
    out = []
    for i, v in enumerate(raw):
        if isinstance(v, int) and not isinstance(v, bool):
            v = str(v)
        out.append(parse_rational(v, f"{where}[{i}]"))
    if not out:
        raise ParseError(f"{where}: empty value list")
    return out


def series_to_json(s: EvenSeries) -> list[str]:
    return [format_rational(c) for c in s.coeffs]


def series_from_json(raw: Any, where: str = "series") -> EvenSeries:
    return EvenSeries(_values(raw, where))


def sequence_to_json(seq: GenusSequence) -> dict:
    return {
        "label": seq.label,
        "c1_pairing": seq.c1_pairing,
        "values": [format_rational(v) for v in seq.values],
    }


def sequence_from_json(doc: Any, where: str = "sequence") -> GenusSequence:
    values = _values(_require(doc, "values", where), f"{where}.values")
    c1 = _int(doc.get("c1_pairing", 0), f"{where}.c1_pairing")
    label = doc.get("label", "")
    if not isinstance(label, str):
        raise ParseError(f"{where}.label: expected a string")
    return GenusSequence(values, c1, label)


def _insertions_to_json(items) -> list:
    return [[i.degree, None if i.pairing is None else format_rational(i.pairing)] for i in items]


def _insertions_from_json(raw: Any, where: str) -> tuple[Insertion, ...]:
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of [degree, pairing]")
    out = []
    for i, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{where}[{i}]: expected [degree, 'p/q' or null]")
        deg = _int(item[0], f"{where}[{i}][0]")
        pairing = None if item[1] is None else parse_rational(str(item[1]), f"{where}[{i}][1]")
        try:
            out.append(Insertion(deg, pairing))
        except ValueError as exc:
            raise ParseError(f"{where}[{i}]: {exc}") from None
    return tuple(out)


def bps_to_json(rec: BPSRecord) -> dict:
    return {
        "class": list(rec.cls.coords),
        "c1_pairing": rec.cls.c1_pairing,
        "insertions": _insertions_to_json(rec.insertions),
        "values": [format_rational(v) for v in rec.values],
    }


def class_from_json(doc: dict, where: str) -> ClassDescriptor:
    coords = _require(doc, "class", where)
    if not isinstance(coords, list) or not coords:
        raise ParseError(f"{where}.class: expected a nonempty list of integers")
    coords = tuple(_int(c, f"{where}.class") for c in coords)
    c1 = _int(_require(doc, "c1_pairing", where), f"{where}.c1_pairing")
    try:
        return ClassDescriptor(coords, c1)
    except ValueError as exc:
        raise ParseError(f"{where}.class: {exc}") from None


def bps_from_json(doc: Any, where: str = "bps") -> BPSRecord:
    cls = class_from_json(doc, where)
    ins = _insertions_from_json(doc.get("insertions", []), f"{where}.insertions")
    return BPSRecord(_values(_require(doc, "values", where), f"{where}.values"), cls, ins)


def insertions_from_json(doc: dict, where: str) -> tuple[Insertion, ...]:
    return _insertions_from_json(doc.get("insertions", []), f"{where}.insertions")


def geometry_to_json(geo: GeometryModel) -> dict:
    return {
        "name": geo.name,
        "lattice_rank": geo.lattice_rank,
        "c1_plus": list(geo.c1_plus),
        "divisor_pairing": list(geo.divisor_pairing),
        "divisor_coh_degrees": list(geo.divisor_coh_degrees),
        "divisor_dim": geo.divisor_dim,
        "constraints": [{"functional": list(f), "value": v} for f, v in geo.constraints],
        "degree_bounds": [list(b) for b in geo.degree_bounds],
        "labels": list(geo.labels),
    }


def geometry_from_json(doc: Any, where: str = "geometry") -> GeometryModel:
    try:
        return GeometryModel(
            name=doc.get("name", "custom"),
            lattice_rank=_int(_require(doc, "lattice_rank", where), f"{where}.lattice_rank"),
            c1_plus=tuple(_require(doc, "c1_plus", where)),
            divisor_pairing=tuple(_require(doc, "divisor_pairing", where)),
            divisor_coh_degrees=tuple(_require(doc, "divisor_coh_degrees", where)),
            divisor_dim=_int(doc.get("divisor_dim", 4), f"{where}.divisor_dim"),
            constraints=tuple((tuple(c["functional"]), c["value"]) for c in doc.get("constraints", [])),
            degree_bounds=tuple(tuple(b) for b in doc.get("degree_bounds", [])),
            labels=tuple(doc.get("labels", [])),
        )
    except (TypeError, KeyError) as exc:
        raise ParseError(f"{where}: malformed geometry ({exc})") from None
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def markings_from_json(raw: Any, where: str = "markings") -> tuple[Marking, ...]:
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list")
    out = []
    for i, item in enumerate(raw):
        try:
            out.append(Marking(str(item["label"]), _int(item["degree"], f"{where}[{i}].degree"),
                               item.get("side", "-")))
        except (TypeError, KeyError) as exc:
            raise ParseError(f"{where}[{i}]: expected {{label, degree, side}} ({exc})") from None
        except ValueError as exc:
            raise ParseError(f"{where}[{i}]: {exc}") from None
    return tuple(out)


def table_to_json(table: InvariantTable) -> dict:
    entries = []
    for (g, deg, labels, contacts), value in sorted(table.entries.items()):
        entries.append({
            "genus": g,
            "degree": list(deg),
            "insertions": list(labels),
            "contacts": [list(c) for c in contacts],
            "value": format_rational(value),
        })
    return {"entries": entries}


def table_from_json(doc: Any, where: str = "table") -> InvariantTable:
    raw = _require(doc, "entries", where)
    table = InvariantTable()
    for i, e in enumerate(raw):
        w = f"{where}.entries[{i}]"
        key = canonical_key(
            _int(_require(e, "genus", w), f"{w}.genus"),
            _require(e, "degree", w),
            _require(e, "insertions", w),
            _require(e, "contacts", w),
        )
        table.entries[key] = parse_rational(str(_require(e, "value", w)), f"{w}.value")
    return table
