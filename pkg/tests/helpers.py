"""Per-session caches so expensive catalog analyses run once."""

from functools import lru_cache

from freecurves.arrangements import singular_points, weak_combinatorics
from freecurves.catalog import CATALOG
from freecurves.syzygy import classify

GOLDEN = sorted(n for n, e in CATALOG.items() if e.expected is not None and not e.extended)
ALL_BUILT = sorted(n for n, e in CATALOG.items() if not e.extended)


@lru_cache(maxsize=None)
def arrangement(name):
    return CATALOG[name].arrangement()


@lru_cache(maxsize=None)
def analysis(name):
    return classify(arrangement(name).polynomial())


@lru_cache(maxsize=None)
def weak(name, aggregate=True):
    return weak_combinatorics(arrangement(name), aggregate)


@lru_cache(maxsize=None)
def points(name, aggregate=True):
    return tuple(singular_points(arrangement(name), aggregate))
