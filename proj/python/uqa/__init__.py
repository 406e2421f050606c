"""Exact cyclic adjoint modules of quantized enveloping algebras.

Nodes are numbered from 1, matching the ``uqa`` command line. Report
functions return the same JSON documents as the command line, decoded.
"""

import json

from . import _core
from ._core import DEFAULT_CAP, Algebra, CapExceeded

__all__ = [
    "Algebra",
    "CapExceeded",
    "DEFAULT_CAP",
    "closure",
    "decompose",
    "poset",
    "lattice",
    "verify_cominuscule",
    "selfcheck",
]


def closure(alg, elem, levi=None, x=None, cap=DEFAULT_CAP):
    """Closure report for ad(U_q(levi)) applied to ``elem``."""
    return json.loads(_core.closure_json(alg, elem, levi, x, cap))


def decompose(alg, elem, levi=None, x=None, cap=DEFAULT_CAP):
    return json.loads(_core.decompose_json(alg, elem, levi, x, cap))


def poset(alg, elem, levi=None, x=None, probes=16, seed=1, cap=DEFAULT_CAP):
    """Interval below the module of ``elem``, with a lattice verdict on its nodes."""
    return json.loads(_core.poset_json(alg, elem, levi, x, probes, seed, cap))


def lattice(alg, elems, levi=None, x=None, probes=16, seed=1, cap=DEFAULT_CAP):
    return json.loads(_core.lattice_json(alg, list(elems), levi, x, probes, seed, cap))


def verify_cominuscule(alg, x, ns=range(0, 6), cap=DEFAULT_CAP):
    return json.loads(_core.fiber_json(alg, x, list(ns), cap))


def selfcheck(alg, hopf_samples=20, law_samples=30, max_height=5, seed=1):
    return _core.selfcheck(alg, hopf_samples, law_samples, max_height, seed)
