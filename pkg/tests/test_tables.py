from tables import csv_cell, format_csv


def test_cells():
    assert [csv_cell(v) for v in (True, False, None, 10 ** 25, 0.5)] == ["true", "false", "", "1" + "0" * 25, "0.5"]


def test_header_and_rows():
    assert format_csv(["m", "count"], [["0", "1"], [1, None]]) == "m,count\n0,1\n1,\n"


def test_header_only():
    assert format_csv(["x", "density"], []) == "x,density\n"
