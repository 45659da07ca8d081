"""Weights and weight diagrams of minuscule representations.

A weight λ of the representation with highest weight μ = ϖ_k is stored by
its depth vector: the coefficients of μ − λ over the simple roots.  The
highest weight is the zero vector.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .roots import RootSystem, root_system

__all__ = [
    "NotMinuscule", "WeightDiagram", "weight_orbit", "build_diagram",
    "diagram", "parse_rep_label", "is_minuscule",
]


class NotMinuscule(ValueError):
    pass


def is_minuscule(system, k):
    kind, l = system.kind, system.rank
    if kind == "A":
        return 1 <= k <= l
    if kind == "D":
        return k in (1, l - 1, l)
    if system.label == "E6":
        return k in (1, 6)
    if system.label == "E7":
        return k == 7
    return False


def weight_pairing(system, k, depth, root):
    """<λ, root^vee> for λ = ϖ_k − depth."""
    a = system.cartan
    val = root[k - 1]
    for j, rj in enumerate(root):
        if rj:
            val -= rj * sum(int(a[j, i]) * d for i, d in enumerate(depth))
    return val


def _canonical(depth):
    return (sum(depth), depth)


def weight_orbit(system, k):
    """All weights of the minuscule representation with highest weight ϖ_k,
    as depth vectors in canonical order (depth, then lexicographic).
    """
    if not is_minuscule(system, k):
        raise NotMinuscule(f"({system.label}, w{k}) is not in the minuscule list")
    top = (0,) * system.rank
    seen = {top}
    queue = deque([top])
    while queue:
        d = queue.popleft()
        for i in range(1, system.rank + 1):
            s = system.simple_root(i)
            p = weight_pairing(system, k, d, s)
            if p:
                e = tuple(x + p * y for x, y in zip(d, s))
                if e not in seen:
                    seen.add(e)
                    queue.append(e)
    return sorted(seen, key=_canonical)


@dataclass(frozen=True, eq=False)
class WeightDiagram:
    """Hasse diagram of the weights of a minuscule representation.

    Nodes are numbered from 0 internally (``nodes[0]`` is μ); JSON and DOT
    output number them from 1.  An edge ``(a, b, i)`` means
    ``nodes[a] - α_i == nodes[b]``.
    """

    system: RootSystem
    highest: int
    nodes: tuple
    edges: tuple = field(repr=False)

    @property
    def label(self):
        return f"{self.system.label}:w{self.highest}"

    def __len__(self):
        return len(self.nodes)

    @property
    def index(self):
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = {d: n for n, d in enumerate(self.nodes)}
            object.__setattr__(self, "_index", idx)
        return idx

    def pairing(self, node, root):
        return weight_pairing(self.system, self.highest, self.nodes[node], root)

    def shift(self, node, root):
        """Index of the weight nodes[node] + root, or None."""
        d = tuple(x - y for x, y in zip(self.nodes[node], root))
        return self.index.get(d)

    def difference(self, a, b):
        """The root-lattice vector weight(a) − weight(b)."""
        return tuple(y - x for x, y in zip(self.nodes[a], self.nodes[b]))

    def level_decomposition(self, k):
        """Partition node indices by the coefficient of α_k in μ − λ."""
        levels = {}
        for n, d in enumerate(self.nodes):
            levels.setdefault(d[k - 1], []).append(n)
        return [levels[c] for c in sorted(levels)]

    def level_of(self, node, k):
        return self.nodes[node][k - 1]

    def suborbit(self, sub, seed):
        """Node indices of the orbit of ``seed`` under the Weyl group of ``sub``."""
        seen = {seed}
        queue = deque([seed])
        while queue:
            n = queue.popleft()
            for g in sub.generators:
                p = self.pairing(n, g)
                if p:
                    m = self.shift(n, tuple(-p * x for x in g))
                    if m not in seen:
                        seen.add(m)
                        queue.append(m)
        return sorted(seen)

    def to_json(self):
        return {
            "rep": self.label,
            "nodes": [{"index": n + 1, "depth": list(d)} for n, d in enumerate(self.nodes)],
            "edges": [[a + 1, b + 1, i] for a, b, i in self.edges],
        }

    def to_dot(self):
        lines = [f'digraph "{self.label}" {{', "  rankdir=RL;"]
        for n, d in enumerate(self.nodes):
            lines.append(f'  n{n + 1} [label="{n + 1}\\n{"".join(map(str, d))}"];')
        for a, b, i in self.edges:
            lines.append(f'  n{a + 1} -> n{b + 1} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def dumps(self):
        return json.dumps(self.to_json())


def build_diagram(system, k, orbit=None):
    if orbit is None:
        orbit = weight_orbit(system, k)
    nodes = tuple(sorted(orbit, key=_canonical))
    index = {d: n for n, d in enumerate(nodes)}
    edges = []
    for a, d in enumerate(nodes):
        for i in range(1, system.rank + 1):
            e = tuple(x + (j == i - 1) for j, x in enumerate(d))
            b = index.get(e)
            if b is not None:
                edges.append((a, b, i))
    return WeightDiagram(system, k, nodes, tuple(edges))


def parse_rep_label(label):
    """``"E6:w1"`` -> ("E6", 1)."""
    m = re.fullmatch(r"\s*([A-Z]\d+)\s*:\s*w(\d+)\s*", label)
    if not m:
        raise ValueError(f"bad representation label {label!r}, expected e.g. 'E6:w1'")
    return m.group(1), int(m.group(2))


@lru_cache(maxsize=None)
def diagram(label):
    """Cached weight diagram for a label such as ``"E7:w7"``."""
    name, k = parse_rep_label(label)
    return build_diagram(root_system(name), k)
