"""Clique counts in k-critical graphs: generation, exact colouring and census audits.

Graphs are passed as graph6 strings throughout.
"""

import json

from ._core import (
    ArgumentError,
    DecodeError,
    FalsificationError,
    StreamError,
    UnsupportedSize,
    canonical,
    check_certificate_json,
    chromatic_number,
    clique_count,
    clique_rank,
    cliques,
    coloring,
    complete,
    construct_w,
    criticality,
    cycle,
    edges,
    from_edges,
    generate,
    is_isomorphic,
    order,
    wheel,
)
from ._core import census_json as _census_json
from ._core import trace_json as _trace_json

__all__ = [
    "ArgumentError",
    "DecodeError",
    "FalsificationError",
    "StreamError",
    "UnsupportedSize",
    "canonical",
    "census",
    "check_certificate",
    "chromatic_number",
    "clique_count",
    "clique_rank",
    "cliques",
    "coloring",
    "complete",
    "construct_w",
    "criticality",
    "cycle",
    "edges",
    "from_edges",
    "generate",
    "is_isomorphic",
    "order",
    "trace",
    "wheel",
]


def census(k, n_min, n_max, graphs=None, checks=None, jobs=1, timing=False):
    """Run the census audits; `graphs` (graph6 strings) replaces the internal generator."""
    graphs = None if graphs is None else list(graphs)
    return json.loads(_census_json(k, n_min, n_max, graphs, checks, jobs, timing))


def trace(graph6, k):
    """Certificate for t_{k-1} <= n - k + 3 on a k-critical graph, as a dict."""
    return json.loads(_trace_json(graph6, k))


def check_certificate(certificate):
    """Returns (ok, reasons) for a certificate dict or JSON string."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return check_certificate_json(certificate)
