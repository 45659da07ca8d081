import random

import pytest
from hypothesis import given, settings, strategies as st

from chevk1.group import (
    GroupElement, H, Letter, W, X, apply_word, gen_h, gen_w, gen_x, invert_word,
    realize, representation, word_from_json, word_to_json, z_gen,
)
from chevk1.rings import ZZ, NotAUnit, ResidueRing, parse_ring
from chevk1.roots import neg
from oracles import steinberg_failures

Z5 = ResidueRing(5)
POLY = parse_ring("quot(poly(Z; xi, zeta); xi^2)")
UNIV = parse_ring("quot(poly(Z[1/2]; xi, zeta); xi^2)")


def _basis(n, i, ring):
    return [ring.one if j == i else ring.zero for j in range(n)]


def test_x_alpha1_fixes_top_weight():
    rep = representation("E6:w1")
    g = gen_x(rep, rep.system.simple_root(1), Z5(3))
    assert g.column(0) == _basis(27, 0, Z5)


def test_x_of_zero_is_identity():
    rep = representation("E6:w1")
    for a in rep.system.roots:
        assert gen_x(rep, a, Z5(0)).is_identity()


def test_x_alpha1_off_diagonal_count():
    rep = representation("E6:w1")
    g = gen_x(rep, rep.system.simple_root(1), Z5(2))
    off = sum(1 for j, col in enumerate(g.cols) for i, v in col.items() if i != j and not v.is_zero())
    edges = sum(1 for _, _, i in rep.diagram.edges if i == 1)
    assert off == edges == 6


def test_action_formula():
    rep = representation("E6:w1")
    a1 = rep.system.simple_root(1)
    xi = Z5(2)
    v = apply_word(rep, (X(a1, xi),), _basis(27, 1, Z5))
    assert v == [xi] + [Z5.one] + [Z5.zero] * 25


def test_a1_examples():
    rep = representation("A1:w1")
    a1 = rep.system.simple_root(1)
    xi, zeta = POLY.gen("xi"), POLY.gen("zeta")
    z = z_gen(rep, a1, xi, zeta)
    assert z.dense() == [[1 + zeta * xi, xi], [-(zeta * zeta * xi), 1 - zeta * xi]]
    eps = ZZ(-1)
    assert gen_w(rep, a1, eps).dense() == [[0, -1], [1, 0]]
    assert gen_w(rep, a1, ZZ.one).dense() == [[0, 1], [-1, 0]]


def test_z_degenerate_cases():
    rep = representation("E6:w1")
    a = rep.system.roots[10]
    assert z_gen(rep, a, Z5(3), Z5(0)) == gen_x(rep, a, Z5(3))
    assert z_gen(rep, a, Z5(0), Z5(4)).is_identity()


def test_h_is_diagonal_with_pairing_exponents():
    rep = representation("E7:w7")
    xi, zeta = UNIV.gen("xi"), UNIV.gen("zeta")
    for i in (1, 4, 7):
        a = rep.system.simple_root(i)
        eps = 1 + zeta * xi
        h = gen_h(rep, a, eps)
        for n in range(rep.n):
            p = rep.diagram.pairing(n, a)
            assert set(h.cols[n]) == {n}
            assert h.cols[n][n] == eps ** p if p >= 0 else h.cols[n][n] == eps.inverse() ** (-p)
    assert gen_h(rep, rep.system.simple_root(3), UNIV.one).is_identity()


def test_torus_is_multiplicative():
    rep = representation("E6:w1")
    for a in rep.system.roots[::9]:
        assert gen_h(rep, a, Z5(2)) @ gen_h(rep, a, Z5(3)) == gen_h(rep, a, Z5(6))


def test_w_and_h_need_units():
    with pytest.raises(NotAUnit):
        W((1,), ZZ(2))
    with pytest.raises(NotAUnit):
        H((1,), ZZ(0))


def test_unipotence():
    for label in ("E6:w1", "E7:w7", "D5:w1"):
        rep = representation(label)
        for a in rep.system.roots:
            m = gen_x(rep, a, ZZ(1)).dense()
            n = len(m)
            d = [[m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
            nz = [(i, j) for i in range(n) for j in range(n) if d[i][j] != 0]
            # (M - I)^2 = 0: no path i <- k <- j through nonzero entries
            cols = {j for _, j in nz}
            rows = {i for i, _ in nz}
            assert not (cols & rows)


def test_weyl_conjugation_gives_root_elements():
    rep = representation("E6:w1")
    phi = rep.system
    for b in phi.simple:
        w = gen_w(rep, b, ZZ.one)
        winv = w.inverse()
        for a in phi.roots[::5]:
            c = w @ gen_x(rep, a, ZZ(1)) @ winv
            target = phi.reflect(b, a)
            assert c in (gen_x(rep, target, ZZ(1)), gen_x(rep, target, ZZ(-1)))


def test_root_pairs_are_sl2_pairs():
    rep = representation("E6:w1")
    for a in rep.system.positive:
        pa = {(s, d) for s, d, _ in rep.pairs(a)}
        pb = {(d, s) for s, d, _ in rep.pairs(neg(a))}
        assert pa == pb


def test_steinberg_relations_d5():
    failures, checked, table = steinberg_failures("D5:w1", Z5, 2, 3)
    assert failures == []
    assert checked == 40 + 40 * 38
    for (a, b), n in table.items():
        assert table[b, a] == -n


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_inverse_and_word_roundtrip(seed):
    rng = random.Random(seed)
    rep = representation("D5:w1")
    ring = ResidueRing(6)
    word = tuple(X(rng.choice(rep.system.roots), ring(rng.randrange(6))) for _ in range(8))
    word += (H(rep.system.simple_root(2), ring(5)), W(rep.system.simple_root(4), ring(1)))
    g = realize(rep, word, ring)
    assert (g @ g.inverse()).is_identity()
    assert realize(rep, invert_word(word), ring) == g.inverse()
    bare = GroupElement(rep, ring, g.cols)  # no word attached: matrix inverse
    assert (bare @ bare.inverse()).is_identity()
    assert word_from_json(word_to_json(word), ring) == word
    v = [ring(rng.randrange(6)) for _ in range(10)]
    assert apply_word(rep, word, v) == g.act(v)


def test_identity_inverse():
    rep = representation("E6:w1")
    assert GroupElement.identity(rep, Z5).inverse().is_identity()


def test_letter_expansion():
    a = (1, 0, 0, 0, 0, 0)
    h = Letter("h", a, Z5(2))
    assert [l.kind for l in h.expand()] == ["x"] * 6
    assert h.inverse().scalar == Z5(3)
    assert W(a, Z5(2)).inverse().scalar == Z5(3)
