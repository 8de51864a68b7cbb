"""Finite posets, Scott topologies and Scott-closed-set lattices."""

import json

from ._core import (
    FinitePoset,
    OrderError,
    enumerate_posets,
    isomorphic,
    johnstone_truncate,
    poset_from_json,
    verification_suites,
)
from . import _core


def analyze(poset, canonical=False):
    """Classification record (counts, flags, per-element data) as a dict."""
    return json.loads(_core.analyze_json(poset, canonical))


def sobrify(poset):
    """Hull-kernel sobrification of the Scott space, as a space document."""
    return json.loads(_core.sobrify_json(poset))


def verify(suite, n, jobs=1):
    """Run one verification suite over every poset class of size <= n."""
    return json.loads(_core.verify_json(suite, n, jobs))


def sample(family, seed, trials):
    """Randomized order-axiom check of a symbolic dcpo ('johnstone'/'kou')."""
    return json.loads(_core.sample_json(family, seed, trials))


__all__ = [
    "FinitePoset",
    "OrderError",
    "analyze",
    "enumerate_posets",
    "isomorphic",
    "johnstone_truncate",
    "poset_from_json",
    "sample",
    "sobrify",
    "verification_suites",
    "verify",
]
