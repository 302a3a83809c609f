"""Star saturation numbers of graphs: exact solvers, a constructive builder and experiments."""

import json as _json

from ._satstar import (
    ConfigError,
    Graph,
    alpha_p,
    construct,
    count_sets,
    log_phi,
    max_sparse_set,
    predict,
    sat_generic,
    solve,
    verify,
)
from ._satstar import run_experiment as _run_experiment

__all__ = [
    "ConfigError",
    "Graph",
    "alpha_p",
    "construct",
    "count_sets",
    "log_phi",
    "max_sparse_set",
    "predict",
    "run_experiment",
    "sat_generic",
    "solve",
    "verify",
]


def run_experiment(config, out_dir=None, workers=None):
    """Run an experiment from a config dict or JSON string.

    Returns (csv_text, summary_dict). Files are written only when out_dir is given.
    """
    text = config if isinstance(config, str) else _json.dumps(config)
    csv_text, summary = _run_experiment(text, out_dir, workers)
    return csv_text, _json.loads(summary)
