"""Exact pairings of Harish-Chandra module classes.

Thin wrappers over the compiled core: JSON results become dicts, exact
rationals become Fractions, characters become {weight tuple: int}.
"""

import json
from fractions import Fraction

from . import _core
from ._core import CapExceeded, suite_names, weyl_order

__all__ = [
    "CapExceeded",
    "catalog",
    "character",
    "denominator_symmetry",
    "ext_abelian_graded",
    "homology",
    "pair",
    "pairing_matrix",
    "root_system",
    "suite_names",
    "torus_pairing",
    "verify",
    "weyl_dimension",
    "weyl_order",
]


def _char(j):
    return {tuple(t["w"]): int(t["c"]) for t in j["terms"]}


def _char_json(c, rank=None):
    if not c:
        if rank is None:
            raise ValueError("rank needed for an empty character")
    else:
        rank = len(next(iter(c)))
    terms = [{"w": list(w), "c": str(k)} for w, k in sorted(c.items()) if k]
    return json.dumps({"rank": rank, "terms": terms})


def root_system(type):
    return json.loads(_core.root_system(type))


def weyl_dimension(type, weight):
    return int(_core.weyl_dimension(type, list(weight)))


def character(type, weight, method="weyl"):
    """Character of the irreducible module (method weyl or freudenthal), or the
    closed-form Euler class of its n-homology (method euler)."""
    return _char(json.loads(_core.character(type, list(weight), method)))


def homology(type, weight, word="", method="modular", cap_dim=None):
    """n-homology degree by degree, as a list of characters. word picks the
    positive system w R^+ (1-based simple reflections joined by '.')."""
    args = [type, list(weight), word, method]
    if cap_dim is not None:
        args.append(cap_dim)
    j = json.loads(_core.homology(*args))
    return [_char(d["class"]) for d in j["degrees"]]


def catalog(preset, type="A1", bound=2, lo=-3, hi=3, stubs=3):
    """Catalog as a JSON-ready dict; pass it back to pair / pairing_matrix."""
    return json.loads(_core.catalog(preset, type, bound, lo, hi, stubs))


def pairing_matrix(cat, kind="elliptic"):
    j = json.loads(_core.pairing_matrix(json.dumps(cat), kind))
    return j["labels"], [[Fraction(v) for v in row] for row in j["matrix"]]


def pair(cat, left, right, kind="elliptic"):
    return Fraction(json.loads(_core.pair(json.dumps(cat), left, right, kind))["value"])


def verify(suites=(), config="", **settings):
    """Runs verification suites; returns the per-suite reports."""
    return json.loads(_core.verify(config, list(suites), settings))


def ext_abelian_graded(nu, d):
    return [int(x) for x in _core.ext_abelian_graded([str(Fraction(x)) for x in nu], d)]


def torus_pairing(a, b, rank=None):
    return int(_core.torus_pairing(_char_json(a, rank), _char_json(b, rank)))


def denominator_symmetry(type):
    return _core.denominator_symmetry(type)
