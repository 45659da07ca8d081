"""Relative elementary subgroups in (E7, ϖ7) and explicit membership words.

The ambient data is E7 with the subsystem Δ = A1 + D6 generated by the
highest root δ and α2, ..., α7, the ring R = Z[1/2][ξ, ζ]/(ξ²) and the
ideal I = (ξ).  A :class:`MembershipCertificate` is a word whose letters
each lie visibly in E(Δ, R) (root in Δ) or in E(Φ, I) (x-letter with scalar
in I), and whose product equals a prescribed z_α(ξ, ζ).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .group import H, W, X, gen_h, realize, representation, z_gen, z_word
from .rings import (
    Ideal, RelationNotPreserved, TwoNotInvertible, ZZ, evaluate_hom, parse_ring,
)
from .roots import apply_weyl_word, find_weyl_conjugator, named_subsystem, neg

__all__ = [
    "RelativeContext", "MembershipCertificate", "universal_context",
    "verify_z_factorization", "verify_h_delta_product", "h_delta_factors",
    "z_membership_word", "general_z_membership", "specialize_certificate",
    "transitivity_sweep", "sweep", "identity_suite",
]

E7_REP = "E7:w7"
DELTA = "A1+D6@E7"
TAG_DELTA = "E(Delta,R)"
TAG_IDEAL = "E(Phi,I)"


@dataclass(frozen=True)
class RelativeContext:
    ring: object
    ideal: Ideal
    rep_label: str = E7_REP
    delta_label: str = DELTA

    @property
    def rep(self):
        return representation(self.rep_label)

    @property
    def delta(self):
        return named_subsystem(self.delta_label)

    def tag(self, letter):
        """The subgroup a letter visibly belongs to, or None."""
        if letter.root in self.delta:
            if letter.kind == "x" or letter.scalar.is_unit():
                return TAG_DELTA
        if letter.kind == "x" and self.ideal.contains(letter.scalar):
            return TAG_IDEAL
        return None


def universal_context(with_half=True):
    """R = Z[1/2][ξ, ζ]/(ξ²) (or Z[ξ, ζ]/(ξ²)) with I = (ξ)."""
    base = "Z[1/2]" if with_half else "Z"
    ring = parse_ring(f"quot(poly({base}; xi, zeta); xi^2)")
    return RelativeContext(ring, Ideal([ring.gen("xi")], ring))


@dataclass
class MembershipCertificate:
    """A tagged word for z_root(xi, zeta) in E(Φ, Δ, R, I)."""

    context: RelativeContext
    root: tuple
    xi: object
    zeta: object
    word: tuple
    tags: tuple = field(default=())

    def __post_init__(self):
        if not self.tags:
            self.tags = tuple(self.context.tag(l) for l in self.word)

    def target(self):
        return z_gen(self.context.rep, self.root, self.xi, self.zeta)

    def replay(self):
        return realize(self.context.rep, self.word, self.context.ring)

    def check(self):
        """Every letter carries a valid tag and the word replays to the target."""
        retagged = tuple(self.context.tag(l) for l in self.word)
        return (None not in retagged and retagged == tuple(self.tags)
                and self.replay() == self.target())

    def tag_counts(self):
        return {t: self.tags.count(t) for t in (TAG_DELTA, TAG_IDEAL)}


def _report(check, ok, start, **details):
    return {"check": check, "status": "pass" if ok else "fail",
            "elapsed": round(time.perf_counter() - start, 3), **details}


def verify_z_factorization(ring=None, rep=E7_REP):
    """z_{α1}(ξ, ζ) == x_{α1}(ξ) x_{-α1}(-ζ²ξ) h_{α1}(1 + ζξ), exactly."""
    start = time.perf_counter()
    if ring is None:
        ring = universal_context().ring
    xi, zeta = ring.gen("xi"), ring.gen("zeta")
    rep = representation(rep)
    a1 = rep.system.simple_root(1)
    lhs = z_gen(rep, a1, xi, zeta)
    rhs = realize(rep, (X(a1, xi), X(neg(a1), -(zeta * zeta * xi)), H(a1, 1 + zeta * xi)), ring)
    return _report("z-factorization", lhs == rhs, start, ring=str(ring), rep=rep.label)


def h_delta_factors(xi, zeta):
    """The pairs (α_i, (1 + ζξ/2)^{m_i}) with δ = Σ m_i α_i, reduced mod ξ²."""
    phi = representation(E7_REP).system
    delta = phi.highest_root
    ring = xi.ring
    eps = 1 + zeta * xi * ring(2).inverse()
    return [(phi.simple_root(i + 1), eps ** m) for i, m in enumerate(delta)]


def verify_h_delta_product(ring=None):
    """h_δ(1 + ζξ/2) == Π h_{α_i}((1 + ζξ/2)^{m_i}) in (E7, ϖ7), plus the
    diagonal law entry(λ, λ) = 1 + <λ, δ∨> ζξ/2."""
    start = time.perf_counter()
    if ring is None:
        ring = universal_context().ring
    if not ring(2).is_unit():
        raise TwoNotInvertible(f"2 is not invertible in {ring}")
    rep = representation(E7_REP)
    phi = rep.system
    delta = phi.highest_root
    xi, zeta = ring.gen("xi"), ring.gen("zeta")
    half = ring(2).inverse()
    eps = 1 + zeta * xi * half
    lhs = gen_h(rep, delta, eps)
    factors = h_delta_factors(xi, zeta)
    rhs = realize(rep, tuple(H(r, s) for r, s in factors), ring)
    ok = lhs == rhs
    diag_ok = True
    for n in range(rep.n):
        p = rep.diagram.pairing(n, delta)
        col = lhs.cols[n]
        if set(col) != {n} or col[n] != 1 + p * zeta * xi * half:
            diag_ok = False
    return _report("h_delta-product", ok and diag_ok, start, delta=list(delta),
                   factors=[str(s) for _, s in factors])


def z_membership_word(xi, zeta, context=None):
    """The tagged word for z_{α1}(ξ, ζ):

    x_{α1}(ξ) x_{-α1}(-ζ²ξ) h_δ(1 + ζξ/2) Π_{i=7..2} h_{α_i}(ε_i)^{-1},
    where h_{α1}(1 + ζξ) has been rewritten through the h_δ identity.
    """
    ctx = context or universal_context()
    ring = ctx.ring
    phi = ctx.rep.system
    a1 = phi.simple_root(1)
    eps = 1 + zeta * xi * ring(2).inverse()
    word = [X(a1, xi), X(neg(a1), -(zeta * zeta * xi)), H(phi.highest_root, eps)]
    factors = h_delta_factors(xi, zeta)
    for root, s in reversed(factors[1:]):
        word.append(H(root, s.inverse()))
    return MembershipCertificate(ctx, a1, xi, zeta, tuple(word))


def _conjugation_sign(rep, weyl, root):
    """ε with n x_{α1}(1) n^{-1} = x_root(ε) for n = w_{β1}(1)...w_{βk}(1)."""
    n = realize(rep, tuple(W(b, ZZ.one) for b in weyl), ZZ)
    a1 = rep.system.simple_root(1)
    conj = n @ realize(rep, (X(a1, ZZ.one),), ZZ) @ n.inverse()
    for eps in (1, -1):
        if conj == realize(rep, (X(root, ZZ(eps)),), ZZ):
            return eps
    raise AssertionError(f"conjugate of x_{a1} is not a root element for {root}")


def general_z_membership(root, xi, zeta, context=None):
    """A tagged word for z_root(ξ, ζ), for any root of E7."""
    ctx = context or universal_context()
    rep = ctx.rep
    root = tuple(root)
    a1 = rep.system.simple_root(1)
    if root in ctx.delta:
        return MembershipCertificate(ctx, root, xi, zeta, z_word(root, xi, zeta))
    if root == a1:
        return z_membership_word(xi, zeta, ctx)
    weyl = find_weyl_conjugator(ctx.delta, root, a1)
    # root = s_{β1} ... s_{βk}(α1)
    eps = _conjugation_sign(rep, weyl, root)
    one = ctx.ring.one
    left = tuple(x for b in weyl for x in W(b, one).expand())
    right = tuple(x for b in reversed(weyl) for x in W(b, -one).expand())
    inner = z_membership_word(xi * eps, zeta * eps, ctx)
    return MembershipCertificate(ctx, root, xi, zeta, left + inner.word + right)


def specialize_certificate(cert, assignment, target, ideal_generators):
    """Push a certificate through the evaluation homomorphism ``assignment``
    (variable name -> element of ``target``).  The E(Φ, I) letters must land
    in the ideal generated by ``ideal_generators``.

    Raises :class:`TwoNotInvertible` if 2 is not a unit in ``target`` and
    :class:`RelationNotPreserved` if the image of ξ does not square to zero.
    """
    if not target(2).is_unit():
        raise TwoNotInvertible(f"2 is not invertible in {target}")
    a = target(assignment["xi"])
    if not (a * a).is_zero():
        raise RelationNotPreserved(f"xi -> {a} does not satisfy xi^2 = 0")

    def ev(x):
        return evaluate_hom(x, assignment, target)

    ideal = Ideal([target(g) for g in ideal_generators], target)
    ctx = RelativeContext(target, ideal, cert.context.rep_label, cert.context.delta_label)
    word = tuple(type(l)(l.kind, l.root, ev(l.scalar)) for l in cert.word)
    out = MembershipCertificate(ctx, cert.root, ev(cert.xi), ev(cert.zeta), word, cert.tags)
    for letter, tag in zip(word, cert.tags):
        if ctx.tag(letter) != tag and not (tag == TAG_IDEAL and letter.scalar.is_zero()):
            raise ValueError(f"specialized letter {letter} lost its tag {tag}")
    return out


def transitivity_sweep(context=None):
    """Certificates for z_α(ξ, ζ) for every α in Φ(E7) outside Δ."""
    ctx = context or universal_context()
    xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
    return [general_z_membership(r, xi, zeta, ctx) for r in ctx.delta.complement]


def _sweep_one(root):
    ctx = universal_context()
    xi, zeta = ctx.ring.gen("xi"), ctx.ring.gen("zeta")
    a1 = ctx.rep.system.simple_root(1)
    weyl = find_weyl_conjugator(ctx.delta, root, a1)
    cert = general_z_membership(root, xi, zeta, ctx)
    return {"root": list(root), "weyl": len(weyl),
            "lands_on_alpha1": apply_weyl_word(ctx.rep.system, weyl, root) == a1,
            "letters": len(cert.word), "certified": cert.check()}


def sweep(jobs=1):
    """One record per root of Φ∖Δ; ``jobs > 1`` spreads the roots over
    processes without changing the order of the records."""
    roots = universal_context().delta.complement
    if jobs <= 1:
        return [_sweep_one(r) for r in roots]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(_sweep_one, roots))


def identity_suite(jobs=1):
    """All identity checks for the E7 congruence computation, as reports."""
    reports = [
        verify_z_factorization(universal_context(True).ring),
        verify_z_factorization(universal_context(False).ring),
        verify_z_factorization(universal_context(False).ring, rep="A1:w1"),
        verify_h_delta_product(),
    ]
    start = time.perf_counter()
    records = sweep(jobs)
    elapsed = round(time.perf_counter() - start, 3)
    landed = sum(r["lands_on_alpha1"] for r in records)
    certified = sum(r["certified"] for r in records)
    reports.append({"check": "weyl-transitivity",
                    "status": "pass" if landed == len(records) == 64 else "fail",
                    "elapsed": elapsed, "roots": len(records), "landed": landed})
    reports.append({"check": "z-certificates",
                    "status": "pass" if certified == len(records) == 64 else "fail",
                    "elapsed": elapsed, "passed": certified, "total": len(records),
                    "max_letters": max(r["letters"] for r in records)})
    return reports
