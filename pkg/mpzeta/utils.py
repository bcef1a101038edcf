#!/usr/bin/env python

#   MpZeta 1.0, boundary terms and mean-periodicity of zeta functions.
#               Copyright (C) 2022  The MpZeta developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#      the Free Software Foundation, either version 3 of the License, or
#                  (at your option) any later version.
#
#     This program is distributed in the hope that it will be useful,
#     but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#              GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see https://www.gnu.org/licenses/.


"""Auxiliary routines for the construction of curves and models from dictionaries and JSON files."""

import os
import json

from mpzeta.lfunc.elliptic import EllipticCurve, ModelData


__all__ = ["build_curve", "build_model", "load_curve", "load_model", "curve_labels", "DATA_DIR"]


DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
CURVE_KEYS = ["a1", "a2", "a3", "a4", "a6", "conductor", "sign"]


def _require(data, keys, what):
    for key in keys:
        if key not in data:
            raise ValueError("The %s description lacks the key %r." % (what, key))


def build_curve(data):
    """Prepare an elliptic curve from a dictionary.

    Parameters
    ----------
    data : dict
        The keys ``a1, a2, a3, a4, a6`` (Weierstrass coefficients), ``conductor`` and ``sign`` (the root
        number) are required. ``label``, ``rank`` and ``bad_primes`` (a list of ``{"p": p, "type": kind}``
        overrides) are optional.

    Returns
    -------
    output : mpzeta.lfunc.elliptic.EllipticCurve

    Raises
    ------
    ValueError
        If a required key is missing or a value is invalid.
    """
    _require(data, CURVE_KEYS, "curve")
    try:
        ainvs = [int(data[key]) for key in CURVE_KEYS[:5]]
        conductor = int(data["conductor"])
        sign = int(data["sign"])
    except (TypeError, ValueError):
        raise ValueError("The curve description holds a non-integer coefficient, conductor or sign.")
    bad_primes = None
    if "bad_primes" in data:
        bad_primes = {}
        for entry in data["bad_primes"]:
            _require(entry, ["p", "type"], "bad prime")
            bad_primes[int(entry["p"])] = entry["type"]
    rank = data.get("rank")
    return EllipticCurve(ainvs, conductor, sign, data.get("label"), None if rank is None else int(rank), bad_primes)


def build_model(data):
    """Prepare the bad-fiber data of a model from a dictionary with keys ``fiber_sizes`` and ``curve_label``."""
    _require(data, ["fiber_sizes"], "model")
    return ModelData([int(q) for q in data["fiber_sizes"]], data.get("curve_label"))


def _load_json(fn):
    if not os.path.isfile(fn):
        raise IOError("File %s does not exist." % fn)
    with open(fn) as f:
        try:
            return json.load(f)
        except ValueError as e:
            raise ValueError("File %s is not valid JSON (%s)." % (fn, e))


def curve_labels():
    """The labels of the curves shipped with the package."""
    return sorted(fn[:-5] for fn in os.listdir(os.path.join(DATA_DIR, "curves")) if fn.endswith(".json"))


def load_curve(label_or_path):
    """Load a shipped curve by label, such as ``"11a1"``, or a curve JSON file by path.

    Raises
    ------
    ValueError
        If the label is unknown or the file holds an invalid description.
    IOError
        If a path is given that does not exist.
    """
    if label_or_path.endswith(".json") or os.path.sep in label_or_path:
        return build_curve(_load_json(label_or_path))
    fn = os.path.join(DATA_DIR, "curves", "%s.json" % label_or_path)
    if not os.path.isfile(fn):
        raise ValueError("Unknown curve label %s, known are %s." % (label_or_path, ", ".join(curve_labels())))
    return build_curve(_load_json(fn))


def load_model(fn):
    """Load a model JSON file."""
    return build_model(_load_json(fn))
