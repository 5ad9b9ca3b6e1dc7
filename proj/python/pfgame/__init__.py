"""Dominion tests for nonlinear Perron-Frobenius eigenproblems.

Node labels are 1-based throughout. Reports come back as plain dicts with the
same keys as the CLI's JSON output.
"""

import json
from pathlib import Path

from ._pfgame import (
    Operator,
    ParseError,
    Tensor,
    hyperarcs,
    mean_payoff,
    parse_operator,
    parse_tensor,
    tensor_decide,
    to_dot,
)
from . import _pfgame as _core

__all__ = [
    "Operator",
    "ParseError",
    "Tensor",
    "certify",
    "decide_existence",
    "decide_uniqueness",
    "hyperarcs",
    "load_operator",
    "load_tensor",
    "mean_payoff",
    "parse_operator",
    "parse_tensor",
    "second_eigenvector",
    "solve",
    "tensor_decide",
    "tensor_solve",
    "to_dot",
]


def load_operator(path):
    return parse_operator(Path(path).read_text())


def load_tensor(path):
    return parse_tensor(Path(path).read_text())


def decide_existence(op, path="auto", threads=1):
    return json.loads(_core._decide_existence(op, path, threads))


def decide_uniqueness(op, u, path="auto", threads=1):
    return json.loads(_core._decide_uniqueness(op, list(u), path, threads))


def certify(op, I, J, steps=50):
    return json.loads(_core._certify(op, list(I), list(J), steps))


def second_eigenvector(op, u, I, J):
    return json.loads(_core._second_eigenvector(op, list(u), list(I), list(J)))


def solve(op, x0=None, tol=1e-10, max_iters=100000, damping=0.5):
    if x0 is None:
        x0 = [0.0] * op.dim
    return json.loads(_core._solve(op, list(x0), tol, max_iters, damping))


def tensor_solve(t, tol=1e-10, max_iters=100000, damping=0.5):
    return json.loads(_core._tensor_solve(t, tol, max_iters, damping))
