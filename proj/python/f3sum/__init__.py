"""Triple hypergeometric series evaluation and summation identity checks."""

import json

from . import _core
from ._core import F3Error, identity_ids, pochhammer

__all__ = ["F3Error", "evaluate", "check", "suite", "lemma", "identity_ids", "pochhammer"]


def _text(x):
    return x if isinstance(x, str) else repr(x)


def evaluate(params, x, backend="float64", tol=1e-15, max_degree=100, stall_window=3):
    """Sum the series for a parameter dict and arguments (x1, x2, x3)."""
    text = params if isinstance(params, str) else json.dumps(params)
    out = _core.eval_json(text, [_text(v) for v in x], backend, tol, max_degree, stall_window)
    return json.loads(out)


def check(identity, instance, backend="float64", tol=1e-8):
    """Check one identity or special case on an instance dict."""
    text = instance if isinstance(instance, str) else json.dumps(instance)
    return json.loads(_core.check_json(identity, text, backend, tol))


def suite(seed=42, instances=25, lemma_instances=50, threads=1):
    """Run the seeded suite; returns (summary dict, csv text)."""
    summary, csv = _core.suite(seed, instances, lemma_instances, threads)
    return json.loads(summary), csv


def lemma(name, n, params):
    """Exact terminating series and closed form, as "p/q" strings."""
    return json.loads(_core.lemma_json(name, n, [_text(p) for p in params]))
