"""Riemannian geometry over F2: connection moduli, curvature and de Morgan duality.

Every report is returned as plain Python data (dicts and lists), in the same
shape as the JSON written by the ``f2geom`` command line tool.
"""

import json

from . import _f2geom
from ._f2geom import (
    DEFAULT_ENUM_CAP,
    InconsistentSecondOrder,
    InvalidInput,
    SearchSpaceTooLarge,
    solve_linear,
)

__all__ = [
    "DEFAULT_ENUM_CAP",
    "InconsistentSecondOrder",
    "InvalidInput",
    "SearchSpaceTooLarge",
    "classify",
    "curvature",
    "demorgan",
    "models",
    "solve_linear",
    "verify",
]


def _constraints(constraints):
    if isinstance(constraints, str):
        return [c for c in constraints.split(",") if c]
    return list(constraints)


def models():
    """Built-in models with their geometry labels."""
    return json.loads(_f2geom.models_json())


def classify(input, omega="", constraints=("qlc",), strategy="reduced", sigma_invertible=False,
             constant_only=False, enum_cap=DEFAULT_ENUM_CAP):
    """Classify bimodule connections on a model name, graph file or algebra file."""
    return json.loads(_f2geom.classify_json(input, omega, _constraints(constraints), strategy,
                                            sigma_invertible, constant_only, enum_cap))


def curvature(input, omega="", constraints=("qlc",), strategy="reduced", sigma_invertible=False,
              connection=None, lift=None, enum_cap=DEFAULT_ENUM_CAP):
    """Curvature of the classified connections, with Ricci, S and Eins for each lift."""
    return json.loads(_f2geom.curvature_json(input, omega, _constraints(constraints), strategy,
                                             sigma_invertible, connection, lift, enum_cap))


def verify(*targets):
    """Reports for built-in models, "boolean-view", "de-morgan", "generalized-duality" or "all"."""
    return json.loads(_f2geom.verify_json(list(targets) or ["all"]))


def demorgan(input, omega=""):
    """De Morgan duality report for a model, a graph file or an algebra file."""
    return json.loads(_f2geom.demorgan_json(input, omega))
