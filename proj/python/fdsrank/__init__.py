"""Rank, periodic rank and fixed points of finite dynamical systems on a digraph."""

import json

from ._core import (
    Digraph,
    Error,
    Fds,
    Limits,
    ParseError,
    SizeLimitExceeded,
    blowup,
    conjunctive,
    conjunctive_rank,
    cycle_packing_number,
    fixed_points,
    fixtures,
    format_fds,
    format_graph,
    interaction_graph,
    max_cycle_cover,
    max_independent_arcs,
    maxper_witness,
    maxrank_witness,
    minrank_classify,
    minrank_exact,
    modular_complete,
    nilpotent_class_two,
    parse_fds,
    parse_graph,
    periodic_rank,
    rank,
    run_acceptance,
    star_witness,
    transversal_number,
)
from . import _core


def analyze(d, q, strict=False, limits=None):
    return json.loads(_core.analyze_json(d, q, strict, limits or Limits()))


def enumerate_stats(d, q, strict=False, limits=None, threads=0):
    return json.loads(_core.enumerate_json(d, q, strict, limits or Limits(), threads))


def fix_bounds_report(d, q, strict=False, limits=None):
    return json.loads(_core.bounds_json(d, q, strict, limits or Limits()))


def canonical(d, limits=None):
    return json.loads(_core.canonical_json(d, limits or Limits()))


def entropy(d, limits=None):
    """(exact text, float value) of the polymatroid bound."""
    return _core.entropy(d, limits or Limits())
