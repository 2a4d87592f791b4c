"""Tests for long-format CSV ingestion."""
from __future__ import annotations

import pytest

from lognormal_cat.errors import InvalidTable, NonPositiveObservation, TooFewGroups, TooFewObservations
from lognormal_cat.utils.table import load_table, parse_table


class TestParseTable:
    def test_groups_in_order_of_appearance(self) -> None:
        table = parse_table("group,value\nb,1.5\na,2\nb,3e0\na,0.25\n")
        assert table.labels == ["b", "a"]
        assert table.groups == {"b": [1.5, 3.0], "a": [2.0, 0.25]}
        assert [s.n for s in table.to_samples()] == [2, 2]

    def test_header_case_bom_and_blank_lines(self) -> None:
        table = parse_table("\ufeffGroup, Value\r\nx,1\r\n\r\nx,2\r\ny,3\r\ny,4\r\n")
        assert table.labels == ["x", "y"]

    @pytest.mark.parametrize(
        "text, error, line",
        [
            ("group,value\na,1\na,0\nb,1\nb,2\n", NonPositiveObservation, "line 3"),
            ("group,value\na,1\na,2\nb,-3\nb,2\n", NonPositiveObservation, "line 4"),
            ("group,value\na,1\na,nan\n", NonPositiveObservation, "line 3"),
            ("group,value\na,1\na,x\n", InvalidTable, "line 3"),
            ("group,value\na,1,2\n", InvalidTable, "line 2"),
            ("group,value\n,1\n", InvalidTable, "line 2"),
            ("label,value\na,1\n", InvalidTable, "line 1"),
            ("", InvalidTable, "line 1"),
        ],
    )
    def test_bad_rows_name_their_line(self, text, error, line) -> None:
        with pytest.raises(error, match=line):
            parse_table(text)

    def test_needs_two_groups(self) -> None:
        with pytest.raises(TooFewGroups):
            parse_table("group,value\na,1\na,2\n")

    def test_needs_two_rows_per_group(self) -> None:
        with pytest.raises(TooFewObservations, match="'b'"):
            parse_table("group,value\na,1\na,2\nb,3\n")


class TestLoadTable:
    def test_missing_file(self, tmp_path) -> None:
        with pytest.raises(InvalidTable, match="not found"):
            load_table(tmp_path / "absent.csv")

    def test_not_utf8(self, tmp_path) -> None:
        path = tmp_path / "latin.csv"
        path.write_bytes(b"group,value\n\xe9,1\n")
        with pytest.raises(InvalidTable, match="UTF-8"):
            load_table(path)
