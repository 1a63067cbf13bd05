"""Python access to the tropwall toolkit.

Rational numbers are passed as strings ("3/4") or ints and returned as
strings. Fans and polytopes come back as decoded JSON artifacts.
"""

import json

from . import _core

format_version = _core.format_version
ParseError = _core.ParseError


def _strs(v):
    return [str(x) for x in v]


def parse_ideal(text, ring=(), laurent=False):
    """Returns (variable names, generators)."""
    return _core.parse_ideal(text, list(ring), laurent)


def groebner_basis(text, order="grevlex", ring=()):
    return _core.groebner_basis(text, order, list(ring))


def initial_ideal(text, weight, ring=(), laurent=False):
    return _core.initial_ideal(text, _strs(weight), list(ring), laurent)


def tropicalize(text, ring=(), laurent=False, budget=10000):
    return json.loads(_core.tropicalize(text, list(ring), laurent, budget))


def groebner_fan(text, ring=(), budget=10000):
    return json.loads(_core.groebner_fan(text, list(ring), budget))


def plot_fan(fan):
    return json.loads(_core.plot_fan(json.dumps(fan)))


def plucker_ideal(k, n):
    return _core.plucker_ideal(k, n)


def plucker_coords(matrix):
    return _core.plucker_coords([_strs(r) for r in matrix])


def toric_ideal(A):
    return _core.toric_ideal([list(r) for r in A])


def ehrhart(A):
    """Returns (coefficients, constant term first; normalized volume)."""
    return _core.ehrhart([list(r) for r in A])


def no_body(M):
    return json.loads(_core.no_body([_strs(r) for r in M]))


def kappa(text, cone1, cone2, ring=()):
    return _core.kappa(text, cone1, cone2, list(ring))


def run_acceptance(long_run=False):
    return _core.run_acceptance(long_run)
