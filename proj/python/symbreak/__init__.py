"""Automorphisms, distinguishing numbers and indices of graph products.

The heavy lifting happens in the compiled ``_core`` extension; this module
re-exports it and turns claim reports into plain dictionaries.
"""

import json as _json

from ._core import (
    BudgetExceeded,
    Error,
    Graph,
    InvalidArgument,
    ParseError,
    UndefinedQuantity,
    are_isomorphic,
    automorphisms,
    cartesian,
    claims,
    complement,
    complete,
    complete_bipartite,
    conormal,
    conormal_power,
    cycle,
    distinguishing_index,
    distinguishing_number,
    dominating_vertices,
    enumerate_graphs,
    group_order,
    has_false_twins,
    is_connected,
    is_distinguishing,
    is_rigid,
    is_traceable,
    path,
)
from ._core import _check_json


def check(claim, *graphs, **options):
    """Run one claim verifier and return its report as a dict.

    Options: mode, seed, power, node_limit, retries, timeout.
    """
    return _json.loads(_check_json(claim, list(graphs), **options))


__all__ = [name for name in dir() if not name.startswith("_")]
