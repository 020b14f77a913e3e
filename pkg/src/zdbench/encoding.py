"""Canonical JSON-safe encoding of carrier elements (nested int tuples)."""

from __future__ import annotations


def to_jsonable(x):
    if isinstance(x, tuple):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (list, frozenset, set)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    return x


def from_jsonable(x):
    if isinstance(x, list):
        return tuple(from_jsonable(v) for v in x)
    return x
