"""Partial automorphism monoids of graphs."""

import json as _json

from . import _pautkit
from ._pautkit import (
    ConditionsFailed,
    FormatError,
    LimitExceeded,
    NotationError,
    build_graph,
    compose,
    deck,
    find_deck_counterexamples,
    invert,
    paut_isomorphic,
    pseudo_similar_pairs,
)

__all__ = [
    "ConditionsFailed",
    "FormatError",
    "LimitExceeded",
    "NotationError",
    "build_graph",
    "check",
    "compose",
    "deck",
    "enumerate_paut",
    "find_deck_counterexamples",
    "green",
    "invert",
    "paut_isomorphic",
    "pseudo_similar_pairs",
    "realize",
    "table",
]


def _text(x):
    return x if isinstance(x, str) else _json.dumps(x)


def enumerate_paut(graph, jobs=1):
    """PAut of a graph6 string or edge list, as a monoid dump."""
    return _json.loads(_pautkit.enumerate_paut(graph, jobs))


def green(monoid):
    return _json.loads(_pautkit.green(_text(monoid)))


def check(monoid, digraph=False, jobs=1):
    return _json.loads(_pautkit.check(_text(monoid), digraph, jobs))


def table(monoid):
    return _json.loads(_pautkit.table(_text(monoid)))


def realize(table_doc, validate=False):
    return _json.loads(_pautkit.realize(_text(table_doc), validate))
