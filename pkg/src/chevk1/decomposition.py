"""Chevalley–Matsumoto decomposition ``g = v g1 u`` for a matrix with an
invertible highest-weight corner.

``v`` is a product of root elements x_{-α}, ``u`` of x_α, with α running over
the positive roots having coefficient 1 at the pivot simple root α_k (the
unipotent radical of the maximal parabolic); both radicals are abelian.
``g1`` keeps the α_k-levels of the weight diagram invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import GroupElement, X, realize
from .roots import neg

__all__ = ["NonInvertibleCorner", "DecompositionError", "ParabolicSplit",
           "chevalley_matsumoto", "pivot_root_index", "radical_roots"]


class NonInvertibleCorner(ArithmeticError):
    pass


class DecompositionError(AssertionError):
    """A postcondition of the decomposition failed (g is not in the group)."""


@dataclass(frozen=True)
class ParabolicSplit:
    v: GroupElement
    g1: GroupElement
    u: GroupElement
    pivot: int

    def product(self):
        return self.v @ self.g1 @ self.u


def pivot_root_index(diagram):
    """The unique simple root α_k with μ − α_k a weight."""
    ks = [i for a, _, i in diagram.edges if a == 0]
    if len(ks) != 1:
        raise ValueError(f"{diagram.label}: expected one edge out of the highest weight, got {ks}")
    return ks[0]


def radical_roots(system, k):
    """Positive roots with nonzero α_k-coefficient, by increasing height."""
    return [a for a in system.positive if a[k - 1] > 0]


def chevalley_matsumoto(g, pivot=None):
    """Split ``g`` as ``v @ g1 @ u``.

    Raises :class:`NonInvertibleCorner` if ``g[μ, μ]`` is not a unit.
    """
    rep = g.rep
    diag = rep.diagram
    ring = g.ring
    k = pivot_root_index(diag) if pivot is None else pivot
    if pivot is not None and diag.shift(0, neg(diag.system.simple_root(k))) is None:
        raise ValueError(f"mu - alpha_{k} is not a weight of {diag.label}")
    corner_inv = g.entry(0, 0).try_invert()
    if corner_inv is None:
        raise NonInvertibleCorner(f"corner {g.entry(0, 0)} is not a unit")
    sigma = radical_roots(diag.system, k)

    # v^{-1} g: clear column mu below the corner
    v_word = []
    h = g
    done = []
    for alpha in sigma:
        node = diag.shift(0, neg(alpha))
        s = rep.sign(neg(alpha), 0)
        a = h.entry(node, 0) * corner_inv
        if s < 0:
            a = -a
        if not a.is_zero():
            v_word.append(X(neg(alpha), a))
            h = h.left_word((X(neg(alpha), -a),))
        done.append(node)
        if any(not h.entry(i, 0).is_zero() for i in done):
            raise DecompositionError("clearing disturbed an already cleared entry")
    if any(not h.entry(i, 0).is_zero() for i in range(1, rep.n)):
        raise DecompositionError("column mu is not cleared; g is not in the group")

    # g1 = h u^{-1}: clear row mu right of the corner
    u_word = []
    for alpha in sigma:
        node = diag.shift(0, neg(alpha))
        s = rep.sign(alpha, node)
        b = h.entry(0, node) * corner_inv
        if s < 0:
            b = -b
        if not b.is_zero():
            u_word.append(X(alpha, b))
            h = h.times_word((X(alpha, -b),))
    g1 = GroupElement(rep, ring, h.cols)
    if any(not g1.entry(0, j).is_zero() for j in range(1, rep.n)):
        raise DecompositionError("row mu is not cleared; g is not in the group")
    for j, col in enumerate(g1.cols):
        lj = diag.level_of(j, k)
        if any(diag.level_of(i, k) != lj for i in col):
            raise DecompositionError("g1 does not preserve the levels of the pivot root")

    v = realize(rep, tuple(v_word), ring)
    u = realize(rep, tuple(u_word), ring)
    return ParabolicSplit(v, g1, u, k)

