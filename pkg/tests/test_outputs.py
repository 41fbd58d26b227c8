from __future__ import annotations

import hashlib
import json
import math

import pytest

from contribscope.errors import DataError
from contribscope.outputs import (
    RunManifest,
    json_bytes,
    sha256_file,
    write_csv,
    write_json,
)


def test_csv_fixed_decimals_and_lf(tmp_path):
    path = tmp_path / "table.csv"
    write_csv(path, [{"name": "a", "value": 0.1234567}, {"name": "b", "value": 2.0}])
    blob = path.read_bytes()
    assert blob == b"name,value\na,0.123457\nb,2.000000\n"


def test_csv_explicit_columns_and_missing_cells(tmp_path):
    path = tmp_path / "table.csv"
    write_csv(path, [{"b": 1}], columns=["a", "b", "c"])
    assert path.read_text() == "a,b,c\n,1,\n"


def test_csv_empty_rows_need_columns(tmp_path):
    path = tmp_path / "table.csv"
    with pytest.raises(DataError):
        write_csv(path, [])
    write_csv(path, [], columns=["x", "y"])
    assert path.read_text() == "x,y\n"


def test_csv_quotes_delimiters_and_booleans(tmp_path):
    path = tmp_path / "table.csv"
    write_csv(path, [{"text": 'say "hi", twice', "flag": True, "gone": float("nan")}])
    assert path.read_text() == 'text,flag,gone\n"say ""hi"", twice",true,\n'


def test_json_bytes_sorted_rounded_stable():
    blob = json_bytes({"b": 1.0000000499, "a": [float("nan"), 3]})
    obj = json.loads(blob)
    assert list(obj) == ["a", "b"]
    assert obj["b"] == 1.0
    assert obj["a"] == [None, 3]
    assert blob.endswith(b"\n")
    assert json_bytes({"b": 1.0000000499, "a": [float("nan"), 3]}) == blob


def test_json_rounding_is_six_decimals():
    obj = json.loads(json_bytes({"x": math.pi}))
    assert obj["x"] == 3.141593


def test_write_json_round_trip(tmp_path):
    path = tmp_path / "out.json"
    write_json(path, {"nested": {"values": [1.5, 2.25]}})
    assert json.loads(path.read_text()) == {"nested": {"values": [1.5, 2.25]}}


def test_sha256_file_matches_hashlib(tmp_path):
    path = tmp_path / "blob.bin"
    path.write_bytes(b"some bytes" * 1000)
    assert sha256_file(path) == hashlib.sha256(b"some bytes" * 1000).hexdigest()


def test_manifest_records_digests_no_timestamps(tmp_path):
    source = tmp_path / "in.txt"
    source.write_text("input data")
    produced = tmp_path / "out.csv"
    write_csv(produced, [{"k": 1}])
    manifest = RunManifest(command="stats", config={"seed": 42}, version="0.1.0")
    manifest.add_input(source)
    manifest.add_output(produced)
    target = tmp_path / "manifest.json"
    manifest.write(target)
    obj = json.loads(target.read_text())
    assert obj["command"] == "stats"
    assert obj["config"] == {"seed": 42}
    assert obj["inputs"] == {"in.txt": sha256_file(source)}
    assert obj["outputs"] == {"out.csv": sha256_file(produced)}
    assert "time" not in target.read_text().lower()
    # same content -> same manifest bytes
    again = tmp_path / "manifest2.json"
    manifest.write(again)
    assert target.read_bytes() == again.read_bytes()
