import itertools

import numpy as np
import pytest

from chevk1.roots import (
    NoSuchElement, NotARoot, UnsupportedType, apply_weyl_word,
    cartan_matrix, find_weyl_conjugator, named_subsystem, neg, root_system,
    subsystem,
)


@pytest.mark.parametrize("label, count", [("A1", 2), ("A5", 30), ("D5", 40), ("D6", 60), ("E6", 72), ("E7", 126)])
def test_root_counts(label, count):
    phi = root_system(label)
    assert len(phi.roots) == count
    assert len(phi.positive) == count // 2


def test_e_cartan_matrix_is_bourbaki():
    a = cartan_matrix("E", 6)
    # 1-3-4-5-6 chain with 2 attached to 4
    edges = {(i + 1, j + 1) for i, j in itertools.combinations(range(6), 2) if a[i, j] == -1}
    assert edges == {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}
    assert np.array_equal(a, a.T)


def test_highest_root_of_e7():
    assert root_system("E7").highest_root == (2, 2, 3, 4, 3, 2, 1)


def test_unsupported_types():
    for label in ("E8", "B3", "G2", "D2"):
        with pytest.raises(UnsupportedType):
            root_system(label)


def test_reflection_examples():
    e6 = root_system("E6")
    a1, a2, a3 = e6.simple_root(1), e6.simple_root(2), e6.simple_root(3)
    assert e6.reflect(a1, a1) == neg(a1)
    assert e6.reflect(a1, a3) == (1, 0, 1, 0, 0, 0)
    assert e6.reflect(a1, a2) == a2
    with pytest.raises(NotARoot):
        e6.reflect((1, 1, 0, 0, 0, 0), a1)


@pytest.mark.parametrize("label", ["E6", "E7"])
def test_reflection_closure_and_sum_law(label):
    phi = root_system(label)
    for a in phi.roots:
        for b in phi.roots:
            assert phi.reflect(a, b) in phi
            if a != b and a != neg(b):
                s = tuple(x + y for x, y in zip(a, b))
                assert (s in phi) == (phi.pairing(b, a) == -1)


@pytest.mark.parametrize("label", ["E6", "E7", "D5"])
def test_highest_root_is_unique_maximal(label):
    phi = root_system(label)
    maximal = [r for r in phi.positive
               if all(tuple(x + y for x, y in zip(r, s)) not in phi for s in phi.simple)]
    assert maximal == [phi.highest_root]


def test_subsystems():
    e6 = root_system("E6")
    assert len(subsystem(e6, (2, 3, 4, 5, 6)).roots) == 40
    e7 = root_system("E7")
    delta = subsystem(e7, (2, 3, 4, 5, 6, 7), (e7.highest_root,))
    assert len(delta.roots) == 62
    assert len(delta.complement) == 64
    a1 = root_system("A1")
    assert subsystem(a1, (1,)).roots == frozenset(a1.roots)


def test_collinear_generators_rejected():
    e6 = root_system("E6")
    with pytest.raises(ValueError):
        subsystem(e6, (1,), ((-1, 0, 0, 0, 0, 0),))


@pytest.mark.parametrize("label", ["D5@E6", "D5'@E6", "A5@E6", "A1+D6@E7", "E6@E7"])
def test_named_subsystems_are_closed(label):
    sub = named_subsystem(label)
    phi = sub.ambient
    for a in sub.roots:
        for b in sub.roots:
            c = tuple(x + y for x, y in zip(a, b))
            assert c not in phi or c in sub


def test_conjugator_examples():
    delta = named_subsystem("A1+D6@E7")
    a1 = delta.ambient.simple_root(1)
    assert find_weyl_conjugator(delta, a1, a1) == []
    d5 = named_subsystem("D5@E6")
    e6 = d5.ambient
    with pytest.raises(NoSuchElement):
        find_weyl_conjugator(d5, e6.simple_root(2), e6.simple_root(1))


def test_transitivity_on_complement():
    delta = named_subsystem("A1+D6@E7")
    phi = delta.ambient
    a1 = phi.simple_root(1)
    for r in delta.complement:
        word = find_weyl_conjugator(delta, r, a1)
        assert all(b in delta for b in word)
        assert apply_weyl_word(phi, word, r) == a1
    # the orbit of a1 is exactly the complement
    orbit, frontier = {a1}, [a1]
    while frontier:
        r = frontier.pop()
        for g in delta.generators:
            s = phi.reflect(g, r)
            if s not in orbit:
                orbit.add(s)
                frontier.append(s)
    assert orbit == set(delta.complement)
