"""Exact Hilbert series of algebras attached to layered graphs."""

from ._core import (
    Error,
    Graph,
    GraphError,
    closed_complete,
    closed_dual_complete,
    closed_dual_lnq,
    closed_lnq,
    closed_qn,
    denominator,
    dual_series,
    gen_boolean,
    gen_complete,
    gen_subspace,
    hilbert_series,
    mobius,
    q_binomial,
    run_cli,
    vertex_series,
    word_counts,
)

__all__ = [
    "Error",
    "Graph",
    "GraphError",
    "closed_complete",
    "closed_dual_complete",
    "closed_dual_lnq",
    "closed_lnq",
    "closed_qn",
    "denominator",
    "dual_series",
    "gen_boolean",
    "gen_complete",
    "gen_subspace",
    "hilbert_series",
    "mobius",
    "q_binomial",
    "run_cli",
    "vertex_series",
    "word_counts",
]
