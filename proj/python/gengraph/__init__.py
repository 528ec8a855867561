"""Generating graphs of finite groups."""

import json as _json

from ._core import (
    Group,
    build_group,
    canonical_spec,
    complete_product_td,
    generating_graph,
    nilpotent_structure,
    td_bounds,
    version,
)
from ._core import verify_json as _verify_json


def verify(groups=None, checks=None, jobs=1, budget=10_000_000, max_order=200):
    """Run verifier checks; returns the report as a dict.

    `groups` is a list of specs (default catalog when None), `checks` a list
    of check ids (all when None).
    """
    return _json.loads(_verify_json(list(groups or []), list(checks or []), jobs, budget, max_order))


__all__ = [
    "Group",
    "build_group",
    "canonical_spec",
    "complete_product_td",
    "generating_graph",
    "nilpotent_structure",
    "td_bounds",
    "verify",
    "version",
]
