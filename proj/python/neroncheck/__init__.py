"""Combinatorial Neron-model criteria for labelled dual graphs."""

import json as _json

from ._core import (
    ConsistencyError,
    Error,
    Graph,
    InvalidGraph,
    InvalidParameter,
    NotDisciplined,
    SizeLimitExceeded,
    arithmetic_genus,
    betti_one,
    contract,
    random_graph,
    resolve,
)
from . import _core

__all__ = [
    "ConsistencyError",
    "Error",
    "Graph",
    "InvalidGraph",
    "InvalidParameter",
    "NotDisciplined",
    "SizeLimitExceeded",
    "arithmetic_genus",
    "betti_one",
    "check",
    "component_group",
    "contract",
    "load",
    "purity_report",
    "random_graph",
    "resolve",
    "resolve_with_trace",
]


def load(description):
    """Build a Graph from a JSON string or an already-decoded dict."""
    if not isinstance(description, str):
        description = _json.dumps(description)
    return Graph.from_json(description)


def check(graph, criterion="all"):
    """Verdicts keyed by criterion name."""
    return _json.loads(_core.check_json(graph, criterion))


def purity_report(graph):
    return _json.loads(_core.purity_report_json(graph))


def component_group(graph, param):
    return _json.loads(_core.component_group_json(graph, param))


def resolve_with_trace(graph):
    return _json.loads(_core.resolve_json(graph))
