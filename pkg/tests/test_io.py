import json
from fractions import Fraction

import pytest

from gwcalc import GenusSequence, sinc_half
from gwcalc import io
from gwcalc.bps import BPSRecord, ClassDescriptor, Insertion
from gwcalc.degeneration import InvariantTable, get_preset
from gwcalc.errors import ParseError


def test_sequence_round_trip():
    seq = GenusSequence([1, Fraction(-1, 12), 3], 4, "H")
    doc = io.sequence_to_json(seq)
    assert doc == {"label": "H", "c1_pairing": 4, "values": ["1", "-1/12", "3"]}
    assert io.sequence_from_json(json.loads(io.dumps(doc))) == seq


def test_series_round_trip():
    s = sinc_half(3)
    assert io.series_from_json(io.series_to_json(s)) == s


def test_bps_round_trip():
    rec = BPSRecord([1, 0], ClassDescriptor((2, 1), 3), (Insertion(2, Fraction(1, 2)), Insertion(4)))
    doc = io.bps_to_json(rec)
    assert doc["insertions"] == [[2, "1/2"], [4, None]]
    assert io.bps_from_json(doc) == rec


def test_geometry_and_table_round_trip():
    geo = get_preset("p3tilde-point").geometry
    assert io.geometry_from_json(io.geometry_to_json(geo)) == geo
    table = InvariantTable()
    table.set(1, (1,), ["b", "a"], [(1, 4, 2)], Fraction(5, 3))
    back = io.table_from_json(io.table_to_json(table))
    assert back.entries == table.entries


def test_parse_errors_name_the_field():
    with pytest.raises(ParseError, match=r"values\[1\]"):
        io.sequence_from_json({"values": ["1", "1/0"]}, "H")
    with pytest.raises(ParseError, match="missing field 'values'"):
        io.sequence_from_json({}, "H")
    with pytest.raises(ParseError, match="c1_pairing"):
        io.sequence_from_json({"values": ["1"], "c1_pairing": "two"})
    with pytest.raises(ParseError):
        io.sequence_from_json({"values": [0.5]})


def test_load_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"values": [1,\n}')
    with pytest.raises(ParseError, match="line 2"):
        io.load_json(p)
