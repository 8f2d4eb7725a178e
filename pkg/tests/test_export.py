import csv
import io
import json

import pytest

from origami_rings.construction import generate
from origami_rings.export import (
    csv_text,
    from_json_document,
    json_text,
    point_records,
    text_table,
    to_json_document,
)


def test_point_records_tag_birth_level(triangle):
    levels = generate(triangle, 2)
    records = point_records(levels)
    assert len(records) == 8
    assert sorted(r.level for r in records) == [0, 0, 1, 1, 2, 2, 2, 2]
    # one shared conductor for the whole document
    assert len({r.conductor for r in records}) == 1


def test_json_document_shape(four_slopes):
    levels = generate(four_slopes, 1)
    doc = to_json_document(four_slopes, levels)
    assert doc["schema"] == 1
    assert doc["kind"] == "origami-points"
    assert doc["k_max"] == 1
    assert doc["truncated"] is False
    assert doc["slopes"] == ["0", "pi/4", "pi/3", "2pi/3"]
    assert len(doc["points"]) == 8
    json.dumps(doc)  # must be serializable as-is


def test_json_round_trip_is_exact(four_slopes):
    levels = generate(four_slopes, 2)
    doc = json.loads(json_text(four_slopes, levels))
    back_u, back_levels = from_json_document(doc)
    assert back_u == four_slopes
    assert (back_u.alpha, back_u.beta) == (four_slopes.alpha, four_slopes.beta)
    assert [len(l) for l in back_levels] == [len(l) for l in levels]
    for orig, rebuilt in zip(levels, back_levels):
        assert set(orig.points) == set(rebuilt.points)


def test_from_json_document_rejects_other_schemas(triangle):
    doc = to_json_document(triangle, generate(triangle, 1))
    doc["schema"] = 99
    with pytest.raises(ValueError):
        from_json_document(doc)
    doc["schema"] = 1
    doc["kind"] = "something-else"
    with pytest.raises(ValueError):
        from_json_document(doc)


def test_csv_shape(triangle):
    text = csv_text(generate(triangle, 1), precision=6)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["level", "re", "im", "conductor", "r", "s"]
    assert len(rows) == 5
    # exact coefficient vectors ride along, semicolon-joined
    assert all(";" in row[4] or "/" not in row[4] for row in rows[1:])
    apex = [row for row in rows[1:] if row[2].startswith("0.866")]
    assert len(apex) == 1


def test_text_table(triangle):
    table = text_table(generate(triangle, 1), precision=6)
    lines = table.splitlines()
    assert lines[0].split() == ["level", "re", "im"]
    assert lines[-1].startswith("4 points")


def test_precision_controls_decimals(triangle):
    doc = to_json_document(triangle, generate(triangle, 1), precision=4)
    ims = {pt["im"] for pt in doc["points"]}
    assert "0.8660" in ims
