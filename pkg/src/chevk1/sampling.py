"""Seeded random inputs.

All generators take a ``random.Random`` instance, so a run is reproduced by
its seed.  The algorithms are deliberately plain:

* ``random_vector``: entries drawn uniformly from ``[-bound, bound]``
  (or ``[0, n)`` for Z/n), resampled until the row is unimodular.
* ``random_word``: ``length`` x-letters, each with a uniformly chosen root
  and a uniform nonzero scalar in ``[-scalar_bound, scalar_bound]``.
"""

from __future__ import annotations

from .group import X, realize, representation
from .rings import NotUnimodular, ResidueRing, unimodular_certificate

__all__ = ["random_scalar", "random_vector", "random_word", "random_element"]


def random_scalar(rng, ring, bound=999):
    if isinstance(ring, ResidueRing):
        return ring(rng.randrange(ring.modulus))
    return ring(rng.randint(-bound, bound))


def random_vector(rng, ring, n, bound=999, unimodular=True, tries=10_000):
    for _ in range(tries):
        v = [random_scalar(rng, ring, bound) for _ in range(n)]
        if not unimodular:
            return v
        try:
            unimodular_certificate(v)
            return v
        except NotUnimodular:
            continue
    raise RuntimeError(f"no unimodular vector found in {tries} draws")  # pragma: no cover


def random_word(rng, rep, ring, length, scalar_bound=3):
    rep = representation(rep) if isinstance(rep, str) else rep
    roots = rep.system.roots
    scalars = [s for s in range(-scalar_bound, scalar_bound + 1) if s]
    return tuple(X(rng.choice(roots), ring(rng.choice(scalars))) for _ in range(length))


def random_element(rng, rep, ring, min_len=15, max_len=30, scalar_bound=3, unit_corner=False):
    """A random elementary word and its matrix; optionally resampled until the
    highest-weight corner is a unit."""
    rep = representation(rep) if isinstance(rep, str) else rep
    while True:
        word = random_word(rng, rep, ring, rng.randint(min_len, max_len), scalar_bound)
        g = realize(rep, word, ring)
        if not unit_corner or g.entry(0, 0).is_unit():
            return word, g
