"""Friendship-paradox analytics for truncated power-law networks."""

from ._core import (
    INFINITE,
    SWITCH_EPS,
    Branch,
    Error,
    FitResult,
    GeneratorOptions,
    Graph,
    Model,
    Moment,
    ParadoxStats,
    PowerLawSpec,
    PredictionResult,
    alpha_from_moment,
    cdf,
    central_point_dominance,
    components,
    drop_report,
    ff_total_adjacency,
    fit_alpha,
    generate,
    global_efficiency,
    kff_from_histogram,
    make_graphical,
    normalization_constant,
    pdf,
    predict,
    read_edge_list,
    sample_continuous,
    sample_degrees,
    stats_from_degrees,
    stats_from_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
