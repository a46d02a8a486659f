"""Numerical checks of operator inequalities for unital positive maps."""

import json as _json
import os as _os

from ._core import (
    DEFAULT_TOLERANCE,
    ConvergenceError,
    DimensionError,
    DomainError,
    HypothesisError,
    UnknownCheckError,
    alpha_constant,
    beta0_constant,
    beta_p_constant,
    connection,
    counterexample_T,
    eigh,
    generalized_kantorovich,
    geometric_mean,
    kantorovich_constant,
    loewner_margin,
    matrix_power,
    mond_pecaric_beta,
    parse_angle,
    riccati_residual,
)
from . import _core


def _default_seed():
    return int(_os.environ.get("OPINEQ_SEED", "42"))


def list_checks():
    return _json.loads(_core._list_checks())


def evaluate(name, instance, tol=DEFAULT_TOLERANCE):
    """Run one check on an instance given as a dict in the CLI fixture format."""
    return _json.loads(_core._evaluate(name, _json.dumps(instance), tol))


def run_suite(names=(), dims=(2, 4, 6), trials=200, seed=None, tol=DEFAULT_TOLERANCE, threads=0):
    seed = _default_seed() if seed is None else seed
    return _json.loads(_core._run_suite(list(names), list(dims), trials, seed, tol, threads))


def falsify(name, grid=False, budget=1000, seed=None, dims=(2, 3, 4), tol=DEFAULT_TOLERANCE):
    seed = _default_seed() if seed is None else seed
    return _json.loads(_core._falsify(name, grid, budget, seed, list(dims), tol))
