"""Exact counting, analysis and construction of L-tromino tilings."""

import json

from _polyfault import (
    analyze as _analyze,
    construct_faultfree as _construct_faultfree,
    construct_min_crossing as _construct_min_crossing,
    count_tilings,
    enumerate_tilings as _enumerate_tilings,
    render_ascii as _render_ascii,
    series_value,
    tromino_upper_bound,
    verify as _verify,
)

__all__ = [
    "count_tilings",
    "enumerate_tilings",
    "construct_faultfree",
    "construct_min_crossing",
    "analyze",
    "series_value",
    "tromino_upper_bound",
    "render_ascii",
    "verify",
]


def enumerate_tilings(rows, cols, faultfree=False, limit=0):
    """Tilings of the rows x cols rectangle as dicts, canonical order."""
    return [json.loads(doc) for doc in _enumerate_tilings(rows, cols, faultfree, limit)]


def construct_faultfree(rows, cols):
    return json.loads(_construct_faultfree(rows, cols))


def construct_min_crossing(rows, cols):
    return json.loads(_construct_min_crossing(rows, cols))


def analyze(tiling):
    if not isinstance(tiling, str):
        tiling = json.dumps(tiling)
    return json.loads(_analyze(tiling))


def render_ascii(tiling):
    if not isinstance(tiling, str):
        tiling = json.dumps(tiling)
    return _render_ascii(tiling)


def verify(suite="quick"):
    return json.loads(_verify(suite))
