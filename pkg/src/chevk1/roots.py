"""Simply-laced root systems in simple-root coordinates (Bourbaki numbering).

Roots are tuples of integers over the fundamental basis.  Only types A, D,
E6 and E7 are supported; all roots have the same length, so coroots and
roots share coordinates and the Cartan matrix is symmetric.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "UnsupportedType", "NotARoot", "NotClosed", "NoSuchElement",
    "RootSystem", "Subsystem", "root_system", "subsystem", "named_subsystem",
    "find_weyl_conjugator", "apply_weyl_word",
]


class UnsupportedType(ValueError):
    pass


class NotARoot(ValueError):
    pass


class NotClosed(ValueError):
    pass


class NoSuchElement(LookupError):
    pass


def _dynkin_edges(kind, rank):
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if kind == "E":
        # 1-3-4-5-6(-7), with 2 attached to 4
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, rank)]
    raise UnsupportedType(kind)


def cartan_matrix(kind, rank):
    a = 2 * np.eye(rank, dtype=np.int64)
    for i, j in _dynkin_edges(kind, rank):
        a[i - 1, j - 1] = a[j - 1, i - 1] = -1
    return a


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A simply-laced root system.

    ``roots`` lists positive roots by (height, coefficients) followed by the
    negative roots in the same order.
    """

    label: str
    kind: str
    rank: int
    cartan: np.ndarray = field(repr=False)
    positive: tuple = field(repr=False)

    @property
    def roots(self):
        return self.positive + tuple(neg(r) for r in self.positive)

    @property
    def simple(self):
        return tuple(self.simple_root(i) for i in range(1, self.rank + 1))

    def simple_root(self, i):
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    @property
    def highest_root(self):
        return self.positive[-1]

    def __contains__(self, r):
        return tuple(r) in self._rootset

    @property
    def _rootset(self):
        s = self.__dict__.get("_rs")
        if s is None:
            s = frozenset(self.roots)
            object.__setattr__(self, "_rs", s)
        return s

    def pairing(self, v, s):
        """The integer <v, s^vee> for a root-lattice vector v and a root s."""
        return int(np.asarray(v) @ self.cartan @ np.asarray(s))

    def reflect(self, s, v):
        """Reflection of the root-lattice vector v in the root s."""
        s = tuple(s)
        if s not in self:
            raise NotARoot(s)
        k = self.pairing(v, s)
        return tuple(int(x) - k * y for x, y in zip(v, s))

    def is_positive(self, r):
        return all(x >= 0 for x in r) and any(r)

    def __repr__(self):
        return f"RootSystem({self.label})"


def neg(r):
    return tuple(-x for x in r)


def height(r):
    return sum(r)


def _generate_positive(cartan):
    rank = cartan.shape[0]
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(rank):
            k = int(np.asarray(r) @ cartan[:, i])
            s = tuple(x - k * (j == i) for j, x in enumerate(r))
            if s not in seen and all(x >= 0 for x in s) and any(s):
                seen.add(s)
                queue.append(s)
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def root_system(label):
    """Build the root system with the given label, e.g. ``"E6"`` or ``"D5"``.

    >>> len(root_system("E6").roots)
    72
    """
    m = re.fullmatch(r"([A-Z])(\d+)", label.strip())
    if not m:
        raise UnsupportedType(label)
    kind, rank = m.group(1), int(m.group(2))
    if not (kind == "A" and rank >= 1 or kind == "D" and rank >= 3 or kind == "E" and rank in (6, 7)):
        raise UnsupportedType(f"{label} is not supported (simply-laced A_l, D_l, E6, E7 only)")
    a = cartan_matrix(kind, rank)
    return RootSystem(f"{kind}{rank}", kind, rank, a, _generate_positive(a))


@dataclass(frozen=True, eq=False)
class Subsystem:
    """A closed subsystem of ``ambient`` given by a chosen simple system."""

    ambient: RootSystem
    generators: tuple
    roots: frozenset = field(repr=False)
    label: str = ""

    def __contains__(self, r):
        return tuple(r) in self.roots

    @property
    def complement(self):
        return tuple(r for r in self.ambient.roots if r not in self.roots)


def subsystem(ambient, keep, extra=(), label=""):
    """The subsystem generated by the simple roots with indices ``keep``
    (1-based) together with the roots in ``extra``.
    """
    gens = [ambient.simple_root(i) for i in keep] + [tuple(r) for r in extra]
    for g in gens:
        if g not in ambient:
            raise NotARoot(g)
    for i, g in enumerate(gens):
        for h in gens[i + 1:]:
            if g == h or g == neg(h):
                raise ValueError(f"collinear generators {g}, {h}")
    members = set(gens) | {neg(g) for g in gens}
    queue = deque(sorted(members))
    while queue:
        r = queue.popleft()
        for g in gens:
            s = ambient.reflect(g, r)
            if s not in members:
                members.add(s)
                queue.append(s)
    for a in members:
        for b in members:
            c = tuple(x + y for x, y in zip(a, b))
            if c in ambient and c not in members:
                raise NotClosed(f"{a} + {b} = {c} is a root outside the subsystem")
    return Subsystem(ambient, tuple(gens), frozenset(members), label)


_NAMED = {
    # label: (ambient, kept simple roots, add highest root?)
    "D5@E6": ("E6", (2, 3, 4, 5, 6), False),
    "D5'@E6": ("E6", (1, 2, 3, 4, 5), False),
    "A5@E6": ("E6", (1, 3, 4, 5, 6), False),
    "A1+D6@E7": ("E7", (2, 3, 4, 5, 6, 7), True),
    "E6@E7": ("E7", (1, 2, 3, 4, 5, 6), False),
}


@lru_cache(maxsize=None)
def named_subsystem(label):
    """Subsystems used by the reduction and congruence modules, by label."""
    try:
        amb, keep, with_delta = _NAMED[label]
    except KeyError:
        raise UnsupportedType(f"unknown subsystem label {label!r}") from None
    phi = root_system(amb)
    extra = (phi.highest_root,) if with_delta else ()
    return subsystem(phi, keep, extra, label)


def apply_weyl_word(system, word, v):
    """Apply reflections in order: first ``word[0]``, then ``word[1]``, ..."""
    for s in word:
        v = system.reflect(s, v)
    return v


def find_weyl_conjugator(sub, source, target):
    """A list of roots of ``sub`` whose reflections, applied in order, carry
    ``source`` to ``target``.  Breadth-first, so the word is shortest in the
    reflections by the subsystem's generators; ties break lexicographically.
    """
    phi = sub.ambient
    source, target = tuple(source), tuple(target)
    if source not in phi or target not in phi:
        raise NotARoot(source if source not in phi else target)
    gens = sorted(sub.generators)
    parent = {source: None}
    queue = deque([source])
    while queue:
        r = queue.popleft()
        if r == target:
            word = []
            while parent[r] is not None:
                r, g = parent[r]
                word.append(g)
            return word[::-1]
        for g in gens:
            s = phi.reflect(g, r)
            if s not in parent:
                parent[s] = (r, g)
                queue.append(s)
    raise NoSuchElement(f"{target} is not in the W-orbit of {source}")
