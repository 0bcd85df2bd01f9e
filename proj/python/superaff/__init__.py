"""Python front end for the superaff C++ core.

Rationals come back from the extension as strings and are handed out as Fractions.
"""

from fractions import Fraction

from . import _core
from ._core import ConstructionError, RejectedLevelError, UsageError, schema_version

__all__ = [
    "ConstructionError",
    "RejectedLevelError",
    "UsageError",
    "classify",
    "levels",
    "root_data",
    "run_cli",
    "schema_version",
    "verify",
    "weyl_order",
    "witness_count",
]


def _weight(w):
    return {"level": Fraction(w["level"]), "pairings": [Fraction(p) for p in w["pairings"]]}


def root_data(algebra):
    d = _core.root_data(algebra)
    d["h_dual"] = Fraction(d["h_dual"])
    d["rho_pairings"] = [Fraction(x) for x in d["rho_pairings"]]
    d["cartan"] = [[Fraction(x) for x in row] for row in d["cartan"]]
    return d


def weyl_order(algebra):
    return _core.weyl_order(algebra)


def levels(algebra, u_max=10):
    return [dict(l, level=Fraction(l["level"])) for l in _core.levels(algebra, u_max)]


def classify(algebra, u, unchecked_level=False):
    return [_weight(w) for w in _core.classify(algebra, u, unchecked_level)]


def verify(algebra, u, unchecked_level=False):
    r = _core.verify(algebra, u, unchecked_level)
    r["level"] = Fraction(r["level"])
    r["found"] = [_weight(w) for w in r["found"]]
    r["expected"] = [_weight(w) for w in r["expected"]]
    return r


def witness_count(algebra):
    return _core.witness_count(algebra)


def run_cli(*args):
    return _core.run_cli(list(args))
