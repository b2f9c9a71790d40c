import polyfault


def test_counts():
    assert polyfault.count_tilings(2, 3) == 2
    assert polyfault.count_tilings(4, 12, kind="faultfree") == 48
    assert polyfault.count_tilings(2, 3, kind="domino") == 3
    assert polyfault.count_tilings(2, 6, method="enumerate") == 4


def test_enumerate_and_analyze():
    tilings = polyfault.enumerate_tilings(4, 6, faultfree=True)
    assert len(tilings) == 2
    report = polyfault.analyze(tilings[0])
    assert report["fault_lines"] == []
    assert report["h_crossing_number"] >= 1


def test_construct():
    tiling = polyfault.construct_faultfree(9, 9)
    assert tiling["rows"] == 9 and tiling["cols"] == 9
    assert polyfault.analyze(tiling)["fault_lines"] == []


def test_series_values():
    assert polyfault.series_value("5x3t", 6) == 163968
    assert polyfault.series_value("4x3t", 4) == 48
    assert polyfault.series_value("6x6t-lower", 2) == 384


def test_upper_bound_and_render():
    bound = polyfault.tromino_upper_bound(4, 6)
    assert bound["holds"]
    art = polyfault.render_ascii(polyfault.construct_faultfree(4, 6))
    rows = art.strip().split("\n")
    assert len(rows) == 4 and all(len(r) == 6 for r in rows)
