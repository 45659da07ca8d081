"""Elementary reduction of unimodular vectors to a vector with 1 on top.

``reduce_dl`` handles the vector representation of D_l (any copy of it
inside a larger minuscule module, given as a :class:`DlBlock`).
``reduce_e6`` runs the four-step reduction for the 27-dimensional module of
E6, and ``surjective_stability_witness`` combines it with the
Chevalley–Matsumoto decomposition.

Every routine returns a word of x-letters; callers never have to trust the
algorithm, since the result is checked by replaying the word.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import factorint

from .decomposition import chevalley_matsumoto
from .group import X, apply_word, representation
from .rings import (
    Ideal, Integers, LocalizedIntegers, NotUnimodular, ResidueRing,
    UnsupportedRing, _crt, _strip, asr_transform, quotient_by_element,
    unimodular_certificate,
)
from .roots import named_subsystem

__all__ = [
    "InternalPostconditionFailure", "DlBlock", "dl_block", "reduce_dl",
    "reduce_e6", "surjective_stability_witness", "minimize_word",
    "strategy_name",
]


class InternalPostconditionFailure(AssertionError):
    pass


@dataclass(frozen=True)
class DlBlock:
    """A W(D_l)-orbit of weights forming a copy of the vector representation.

    ``opposite[n]`` is the unique other node whose difference with ``n`` is
    not a root of the subsystem (the weight −λ in the usual ±ε_i notation).
    """

    nodes: tuple
    top: int
    opposite: dict
    subsystem: object

    @property
    def middle(self):
        return [n for n in self.nodes if n not in (self.top, self.opposite[self.top])]


def dl_block(rep, sub, seed):
    diag = rep.diagram
    nodes = tuple(diag.suborbit(sub, seed))
    if len(nodes) < 6 or len(nodes) % 2:
        raise ValueError(f"orbit of size {len(nodes)} is not a D_l vector representation (l >= 3)")
    opp = {}
    for a in nodes:
        far = [b for b in nodes if b != a and diag.difference(b, a) not in sub]
        if len(far) != 1:
            raise ValueError("orbit is not a D_l vector representation")
        opp[a] = far[0]
    return DlBlock(nodes, nodes[0], opp, sub)


def strategy_name(ring):
    if isinstance(ring, ResidueRing):
        return "semilocal"
    if isinstance(ring, (Integers, LocalizedIntegers)):
        return "euclidean"
    raise UnsupportedRing(f"no reduction strategy for {ring}")


class _Run:
    """A vector together with the word applied to it so far (newest letters
    on the left, so the word is the product acting on the start vector)."""

    def __init__(self, rep, vector):
        self.rep = rep
        self.diag = rep.diagram
        self.v = list(vector)
        self.ring = self.v[0].ring
        self.word = []

    def push(self, src, dst, c):
        """Add c * v[src] to v[dst] with the root element for weight(dst) − weight(src)."""
        c = self.ring(c)
        if c.is_zero():
            return
        root = self.diag.difference(dst, src)
        s = self.rep.sign(root, src)
        self.apply((X(root, c if s > 0 else -c),))

    def apply(self, letters):
        letters = tuple(letters)
        self.v = apply_word(self.rep, letters, self.v)
        self.word = list(letters) + self.word


# ---------------------------------------------------------------------------
# D_l

def _finish_from_unit(run, blk, node):
    """Given a unit at ``node`` of the block, make the top coordinate 1."""
    v, top, opp = run.v, blk.top, blk.opposite
    if v[top] == 1:
        return
    if node != top and node != opp[top]:
        run.push(node, top, (1 - v[top]) * v[node].inverse())
        return
    mid = blk.middle[0]
    run.push(node, mid, (1 - run.v[mid]) * run.v[node].inverse())
    run.push(mid, top, 1 - run.v[top])


def _unit_node(run, blk):
    for n in blk.middle + [blk.top, blk.opposite[blk.top]]:
        if run.v[n].is_unit():
            return n
    return None


def _core(ring, x):
    """Write x = unit * core with core an integer free of inverted primes."""
    if isinstance(ring, Integers):
        return ring.one, x.value
    num = x.value.numerator
    core = _strip(num, ring.primes)
    return ring(x.value / core) if core else ring.one, core


def _euclid(run, blk):
    ring = run.ring
    opp = blk.opposite
    for _ in range(100_000):
        n = _unit_node(run, blk)
        if n is not None:
            return _finish_from_unit(run, blk, n)
        cores = {m: _core(ring, run.v[m]) for m in blk.nodes}
        nonzero = [(abs(c), m) for m, (_, c) in cores.items() if c]
        if not nonzero:
            raise NotUnimodular("block coordinates are all zero")
        _, p = min(nonzero, key=lambda t: (t[0], blk.nodes.index(t[1])))
        up, cp = cores[p]
        bad = [m for m in blk.nodes if m != p and cores[m][1] % cp]
        if not bad:
            raise NotUnimodular(f"every block coordinate is divisible by {run.v[p]}")
        near = [m for m in bad if m != opp[p]]
        if near:
            m = near[0]
            uq, cq = cores[m]
            r = cq % abs(cp)
            if 2 * r > abs(cp):
                r -= abs(cp)
            t = (cq - r) // cp
            run.push(p, m, -(uq * t * up.inverse()))
            continue
        q = opp[p]
        mid = next(m for m in blk.nodes if m not in (p, q))
        um, cm = cores[opp[mid]]
        k = um * (cm // cp) * up.inverse()
        run.push(p, opp[mid], -k)
        run.push(q, mid, 1)
    raise InternalPostconditionFailure("euclidean reduction did not terminate")  # pragma: no cover


def _semilocal(run, blk):
    ring = run.ring
    n = ring.modulus
    node = _unit_node(run, blk)
    if node is not None:
        return _finish_from_unit(run, blk, node)
    factors = [p ** k for p, k in sorted(factorint(n).items())]
    start = list(run.v)
    for q in factors:
        local = ResidueRing(q) if q < n else ring
        sub = _Run(run.rep, [local(x.value) for x in start])
        node = _unit_node(sub, blk)
        if node is None:
            raise NotUnimodular(f"block coordinates are not unimodular modulo {q}")
        _finish_from_unit(sub, blk, node)
        if q == n:
            run.apply(sub.word)
        else:
            others = n // q
            run.apply(X(l.root, ring(_crt([l.scalar.value, 0], [q, others]))) for l in sub.word)


def _reduce_block(rep, blk, vector):
    run = _Run(rep, vector)
    if strategy_name(run.ring) == "semilocal":
        _semilocal(run, blk)
    else:
        _euclid(run, blk)
    return run


def reduce_dl(vector, rep=None, block=None):
    """A word h of x-letters with (h v)[top] = 1.

    With ``block=None`` the vector lives in the (D_l, ϖ_1) module itself and
    the top is the highest weight.  Raises :class:`NotUnimodular` if the
    block coordinates do not generate the unit ideal.
    """
    vector = list(vector)
    if rep is None:
        rep = f"D{len(vector) // 2}:w1"
    if isinstance(rep, str):
        rep = representation(rep)
    if block is None:
        phi = rep.system
        if phi.kind != "D" or rep.diagram.highest != 1:
            raise ValueError("reduce_dl without a block needs a (D_l, w1) representation")
        from .roots import subsystem
        block = dl_block(rep, subsystem(phi, range(1, phi.rank + 1)), 0)
    unimodular_certificate([vector[n] for n in block.nodes])
    run = _reduce_block(rep, block, vector)
    if run.v[block.top] != 1:
        raise InternalPostconditionFailure("top coordinate is not 1 after D_l reduction")
    return tuple(run.word)


# ---------------------------------------------------------------------------
# E6

def _check(cond, msg):
    if not cond:
        raise InternalPostconditionFailure(msg)


def _is_unimodular(row):
    try:
        unimodular_certificate(row)
        return True
    except NotUnimodular:
        return False


def reduce_e6(vector, trace=None):
    """A word h of x-letters over E6 with (h v)[μ] = 1 for a unimodular
    27-vector v (coordinates in the canonical node order of ``E6:w1``).

    Steps: (1) an ASR transform inside the 6-weight A5-orbit of μ makes the
    coordinates other than μ unimodular; (2) a Bezout combination of the
    16 level-one coordinates makes v[μ] ≡ 1 modulo the level-two ideal;
    (3) the D5 reduction over R/<v[μ]> puts a unit-modulo-v[μ] on top of
    level two; (4) the D5 reduction for the second copy of D5 (simple roots
    1..5) finishes.  When ``trace`` is a list, one record per step is
    appended.
    """
    rep = representation("E6:w1")
    diag = rep.diagram
    vector = list(vector)
    if len(vector) != 27:
        raise ValueError("expected 27 coordinates")
    ring = vector[0].ring
    vector = [ring(x) for x in vector]
    strategy_name(ring)
    unimodular_certificate(vector)
    run = _Run(rep, vector)
    mu = 0
    if run.v[mu] == 1:
        return ()
    levels = diag.level_decomposition(1)
    level1, level2 = levels[1], levels[2]

    def record(step, **extra):
        if trace is not None:
            trace.append({"step": step, "letters": len(run.word),
                          "vector": [ring.format(x) for x in run.v], **extra})

    # Step 1
    a5_orbit = diag.suborbit(named_subsystem("A5@E6"), mu)
    others = [n for n in a5_orbit if n != mu]
    t = asr_transform([run.v[n] for n in others] + [run.v[mu]], len(others) + 1)
    for n, ti in zip(others, t):
        run.push(mu, n, ti)
    cert = unimodular_certificate(run.v[1:])
    record(1, asr=[ring.format(x) for x in t], certificate=[ring.format(c) for c in cert])

    # Step 2
    rest = level1 + level2
    cert = unimodular_certificate([run.v[n] for n in rest])
    scale = 1 - run.v[mu]
    for n, c in zip(level1, cert):
        run.push(n, mu, scale * c)
    ideal = Ideal([run.v[n] for n in level2], ring)
    _check(ideal.contains(run.v[mu] - 1), "step 2: v[mu] is not 1 modulo the level-two ideal")
    record(2, certificate=[ring.format(c) for c in cert])

    # Step 3
    d5 = named_subsystem("D5@E6")
    blk3 = dl_block(rep, d5, level2[0])
    _check(set(blk3.nodes) == set(level2), "step 3: level two is not a D5 orbit")
    quotient = quotient_by_element(run.v[mu])
    modulus = None
    if quotient is not None:
        target, project, lift = quotient
        modulus = str(target)
        sub = _reduce_block(rep, blk3, [project(x) for x in run.v])
        _check(sub.v[blk3.top] == 1, "step 3: reduction modulo v[mu] failed")
        run.apply(X(l.root, lift(l.scalar)) for l in sub.word)
    _check(_is_unimodular([run.v[mu], run.v[blk3.top]]),
           "step 3: (v[mu], v[top of level two]) is not unimodular")
    record(3, quotient=modulus)

    # Step 4
    blk4 = dl_block(rep, named_subsystem("D5'@E6"), mu)
    _check(blk3.top in blk4.nodes, "step 4: second D5 orbit misses the top of level two")
    sub = _reduce_block(rep, blk4, run.v)
    run.apply(sub.word)
    _check(run.v[mu] == 1, "step 4: top coordinate is not 1")
    record(4)
    return tuple(run.word)


def surjective_stability_witness(g, trace=None):
    """For g in (E6, ϖ1): an elementary word h with (h g)[μ, μ] = 1 and the
    Chevalley–Matsumoto split of h g."""
    if g.rep.label != "E6:w1":
        raise ValueError("expected an element of E6:w1")
    column = g.column(0)
    h = reduce_e6(column, trace)
    hg = g.left_word(h)
    _check(hg.entry(0, 0) == 1, "corner of h g is not 1")
    return h, chevalley_matsumoto(hg)


def minimize_word(rep, word, vector, top=0):
    """Greedily drop letters while (h v)[top] = 1 still holds."""
    if isinstance(rep, str):
        rep = representation(rep)
    word = list(word)
    i = 0
    while i < len(word):
        trial = word[:i] + word[i + 1:]
        if apply_word(rep, trial, vector)[top] == 1:
            word = trial
        else:
            i += 1
    return tuple(word)
