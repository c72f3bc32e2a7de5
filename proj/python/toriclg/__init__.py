"""Exact toolkit for toric Landau-Ginzburg models and their duals.

Matrix-level functions take lists of Python ints and return ints and
Fractions. The model-level functions take a model file (dict or JSON text)
and return the same report the ``tlg`` command line prints, parsed into a
dict whose integers and rationals are decimal and "p/q" strings.
"""

import json
from fractions import Fraction

from ._core import (
    ConsistencyError,
    InputError,
    KopaseticError,
    TlgError,
    canonical_form,
    cokernel,
    facets,
    hermite_normal_form,
    is_reflexive,
    kernel_basis,
    kopasetic_check,
    lattice_points,
    left_kernel_basis,
    run_cli,
    smith_normal_form,
    vertices,
)
from ._core import run_command as _run_command

__all__ = [
    "ConsistencyError", "InputError", "KopaseticError", "TlgError",
    "canonical_form", "cokernel", "facets", "hermite_normal_form", "is_reflexive",
    "kernel_basis", "kopasetic_check", "lattice_points", "left_kernel_basis",
    "smith_normal_form", "vertices", "run_cli",
    "model_file", "number", "check", "dualize", "analyze", "sigma", "bb", "bh",
    "givental", "poly", "plot",
]


def model_file(kind, data):
    return {"format_version": "1", "kind": kind, "data": data}


def number(text):
    """Decimal or "p/q" report string to int or Fraction."""
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


def _text(model):
    return model if isinstance(model, str) else json.dumps(model)


def _alpha(alpha_prime):
    if alpha_prime is None:
        return ""
    return ",".join(str(a) for a in alpha_prime)


def _run(command, model, **kw):
    return json.loads(_run_command(command, _text(model), **kw))


def check(model, numeric=False):
    return _run("check", model, numeric=numeric)


def dualize(model, numeric=False):
    return _run("dualize", model, numeric=numeric)


def analyze(model, alpha_prime=None, section=""):
    return _run("analyze", model, alpha_prime=_alpha(alpha_prime), section=section)


def sigma(model, section=""):
    return _run("sigma", model, section=section)


def bb(model):
    return _run("bb", model)


def bh(model):
    return _run("bh", model)


def givental(model):
    return _run("givental", model)


def poly(model, bound=None):
    return _run("poly", model, bound=-1 if bound is None else bound)


def plot(model):
    """SVG text."""
    return _run_command("plot", _text(model))
