"""Python front end for the fsmaps C++ library.

Partitions are given as strings like "2,1". Series come back as dicts with
"text", "lo", "hi" and "terms"; maps and dessins as the JSON dicts used by the
command-line tool.
"""

import json

from . import _fsmaps
from ._fsmaps import InvalidInput, identities, set_threads

__all__ = [
    "InvalidInput",
    "census",
    "count_dessins",
    "enumerate_hypermaps",
    "enumerate_maps",
    "hurwitz",
    "hurwitz_brute",
    "identities",
    "join",
    "set_threads",
    "simplify",
    "split",
    "verify",
]


def _partition(p):
    if isinstance(p, str):
        return p
    return ",".join(str(int(x)) for x in p)


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def hurwitz(lambda_, mu, kind="strict", order=6):
    if kind == "strict":
        return json.loads(_fsmaps.strict_hurwitz(_partition(lambda_), _partition(mu)))
    if kind == "weak":
        return json.loads(_fsmaps.weak_hurwitz(_partition(lambda_), _partition(mu), order))
    raise ValueError("kind must be 'strict' or 'weak'")


def hurwitz_brute(lambda_, mu, k, kind="strict"):
    """Exact rational as a "p/q" string."""
    return _fsmaps.hurwitz_brute(kind, _partition(lambda_), _partition(mu), k)


def enumerate_maps(lambda_, edges, fully_simple=False):
    return json.loads(_fsmaps.enumerate_maps(_partition(lambda_), edges, fully_simple))


def enumerate_hypermaps(lambda_, bound, fully_simple=False):
    return json.loads(_fsmaps.enumerate_hypermaps(_partition(lambda_), bound, fully_simple))


def count_dessins(lambda_, mu, k):
    return _fsmaps.count_dessins(_partition(lambda_), _partition(mu), k)


def census(edges):
    return [json.loads(s) for s in _fsmaps.map_census(edges)]


def simplify(map_):
    return json.loads(_fsmaps.simplify(_dump(map_)))


def split(map_):
    return json.loads(_fsmaps.split(_dump(map_)))


def join(fully_simple, dessin):
    return json.loads(_fsmaps.join(_dump(fully_simple), _dump(dessin)))


def verify(identity, d_max=4, bound=3, order=6, trials=10000, seed=20240601):
    return [json.loads(s) for s in _fsmaps.verify(identity, d_max, bound, order, trials, seed)]
