"""Exact verification of Galilei-invariant wave equations for massless fields.

Thin wrappers around the C++ core; every verification returns the same
report dictionaries the command-line tool prints as JSON.
"""

import json as _json

from . import _core

convention = _core.convention
labels = _core.labels
catalogue_names = _core.catalogue_names
catalog_export = _core.catalog_export


def _wrap(fn):
    def call(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


reps_list = _wrap(_core.reps_list)
reps_check = _wrap(_core.reps_check)
reps_indecomposable = _wrap(_core.reps_indecomposable)
contract = _wrap(_core.contract)
covariance = _wrap(_core.covariance)
reduce = _wrap(_core.reduce)
potentials = _wrap(_core.potentials)
limits = _wrap(_core.limits)

__all__ = [
    "convention",
    "labels",
    "catalogue_names",
    "catalog_export",
    "reps_list",
    "reps_check",
    "reps_indecomposable",
    "contract",
    "covariance",
    "reduce",
    "potentials",
    "limits",
]
