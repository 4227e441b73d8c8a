"""Symplectic root systems over F2."""

import json

from ._core import (
    CapExceeded,
    Graph,
    Srs,
    SymrootError,
    ade_srs,
    ade_table,
    build_by_extension,
    coclique_bound,
    complete_graph,
    dynkin_graph,
    enumerate_quotients,
    group_summary,
    isomorphic,
    minimal_srs,
    parse_graph,
    path_graph,
    restrict,
    root_count,
    space_type,
    srs_from_json,
    symbolic,
    weyl_group_order,
)
from ._core import extend_minimal as _extend_minimal
from ._core import verify as _verify


def extend_minimal(srs, indicator):
    """Returns the extended SRS and its witness as a dict."""
    out, witness = _extend_minimal(srs, indicator)
    return out, json.loads(witness)


def verify(suite="all", quick=True, seed=20240611):
    return json.loads(_verify(suite, quick, seed))


__all__ = [
    "CapExceeded",
    "Graph",
    "Srs",
    "SymrootError",
    "ade_srs",
    "ade_table",
    "build_by_extension",
    "coclique_bound",
    "complete_graph",
    "dynkin_graph",
    "enumerate_quotients",
    "extend_minimal",
    "group_summary",
    "isomorphic",
    "minimal_srs",
    "parse_graph",
    "path_graph",
    "restrict",
    "root_count",
    "space_type",
    "srs_from_json",
    "symbolic",
    "verify",
    "weyl_group_order",
]
