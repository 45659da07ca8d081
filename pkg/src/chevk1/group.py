"""Root elements, generator words and their exact matrices in minuscule
representations.

Simple root elements act along the edges of the weight diagram with sign +1:
``x_{α_i}(ξ) e^λ = e^λ + ξ e^{λ+α_i}`` and dually for ``-α_i``.  A
non-simple root α is reached from a simple root by a shortest chain of
simple reflections (at each step the smallest index i with <α, α_i> = 1 is
peeled off), and ``x_α`` is defined as the conjugate of the simple root
element by the corresponding ``w_{α_i}(1)``.  The same chain is used for α
and −α, so ``x_α`` and ``x_{-α}`` always form an SL2 pair.

Matrices use the column convention: column ν of g is ``g e^ν``.  They are
stored sparsely as one ``{row: RingElement}`` dict per column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .rings import DescriptorMismatch, NotAUnit, RingElement
from .roots import NotARoot, neg
from .weights import WeightDiagram, diagram

__all__ = [
    "Letter", "X", "W", "H", "Representation", "representation", "GroupElement",
    "gen_x", "gen_w", "gen_h", "z_gen", "realize", "apply_word", "invert_word",
    "commutator", "word_to_json", "word_from_json",
]


@dataclass(frozen=True)
class Letter:
    """One generator: ``x`` (root element), ``w`` or ``h`` (torus/Weyl, unit scalar)."""

    kind: str
    root: tuple
    scalar: RingElement

    def __post_init__(self):
        if self.kind not in ("x", "w", "h"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        object.__setattr__(self, "root", tuple(int(c) for c in self.root))
        if self.kind != "x" and not self.scalar.is_unit():
            raise NotAUnit(f"{self.kind}-letter scalar {self.scalar} is not a unit")

    def inverse(self):
        if self.kind == "x":
            return Letter("x", self.root, -self.scalar)
        if self.kind == "h":
            return Letter("h", self.root, self.scalar.inverse())
        return Letter("w", self.root, -self.scalar)

    def expand(self):
        """The letter as a word of x-letters, following the defining formulas
        w_α(ε) = x_α(ε) x_{-α}(-ε^{-1}) x_α(ε) and h_α(ε) = w_α(ε) w_α(-1)."""
        if self.kind == "x":
            return (self,)
        if self.kind == "w":
            e = self.scalar
            return (X(self.root, e), X(neg(self.root), -e.inverse()), X(self.root, e))
        one = self.scalar.ring.one
        return W(self.root, self.scalar).expand() + W(self.root, -one).expand()

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.root))}; {self.scalar})"


def X(root, scalar):
    return Letter("x", root, scalar)


def W(root, scalar):
    return Letter("w", root, scalar)


def H(root, scalar):
    return Letter("h", root, scalar)


def invert_word(word):
    return tuple(letter.inverse() for letter in reversed(word))


def _expand(word):
    for letter in word:
        yield from letter.expand()


class Representation:
    """Sign tables of the root elements for one minuscule weight diagram."""

    def __init__(self, diag: WeightDiagram):
        self.diagram = diag
        self.system = diag.system
        self.n = len(diag)
        self._pairs = {}
        self.chains = {}
        self._build()

    @property
    def label(self):
        return self.diagram.label

    def _simple_matrix(self, i, sign):
        e = np.zeros((self.n, self.n), dtype=np.int64)
        for a, b, lab in self.diagram.edges:
            if lab == i:
                # nodes[a] - α_i = nodes[b]
                if sign > 0:
                    e[a, b] = 1
                else:
                    e[b, a] = 1
        return e

    def _build(self):
        phi = self.system
        n = self.n
        eye = np.eye(n, dtype=np.int64)
        mats = {}
        wj, wj_inv = {}, {}
        for i in range(1, phi.rank + 1):
            a = phi.simple_root(i)
            ep, em = self._simple_matrix(i, 1), self._simple_matrix(i, -1)
            mats[a], mats[neg(a)] = ep, em
            self.chains[a] = self.chains[neg(a)] = ()
            xp = lambda c: eye + c * ep  # noqa: E731
            xm = lambda c: eye + c * em  # noqa: E731
            wj[i] = xp(1) @ xm(-1) @ xp(1)
            wj_inv[i] = xp(-1) @ xm(1) @ xp(-1)
            assert (wj[i] @ wj_inv[i] == eye).all()
        for alpha in phi.positive:
            if alpha in mats:
                continue
            j = next(i for i in range(1, phi.rank + 1)
                     if phi.pairing(alpha, phi.simple_root(i)) == 1)
            beta = tuple(x - (k == j - 1) for k, x in enumerate(alpha))
            mats[alpha] = wj[j] @ mats[beta] @ wj_inv[j]
            mats[neg(alpha)] = wj[j] @ mats[neg(beta)] @ wj_inv[j]
            self.chains[alpha] = self.chains[neg(alpha)] = (j,) + self.chains[beta]
        for root, m in mats.items():
            pairs = []
            for src in range(n):
                dst = self.diagram.shift(src, root)
                for r in range(n):
                    v = int(m[r, src])
                    if v and r != dst:
                        raise AssertionError(f"x_{root} moves {src} outside {dst}")
                if dst is not None:
                    s = int(m[dst, src])
                    if s not in (1, -1):
                        raise AssertionError(f"x_{root} has coefficient {s} at ({dst},{src})")
                    pairs.append((src, dst, s))
            self._pairs[root] = tuple(pairs)

    def pairs(self, root):
        """Triples ``(src, dst, sign)``: x_root(c) sends e^src to e^src + sign*c*e^dst."""
        try:
            return self._pairs[tuple(root)]
        except KeyError:
            raise NotARoot(root) from None

    def sign(self, root, src):
        for s, d, sg in self.pairs(root):
            if s == src:
                return sg
        raise ValueError(f"weight {src} + {root} is not a weight")

    def canonical_weyl_word(self, root):
        """Indices j_1, ..., j_m with x_root conjugate to a simple root
        element by w_{j_1}(1) ... w_{j_m}(1)."""
        return self.chains[tuple(root)]


@lru_cache(maxsize=None)
def representation(label):
    """Cached :class:`Representation` for a label such as ``"E6:w1"``."""
    return Representation(diagram(label))


def _rep(rep):
    return representation(rep) if isinstance(rep, str) else rep


# ---------------------------------------------------------------------------
# column operations

def _col_axpy(col_to, col_from, c):
    """col_to += c * col_from (in place)."""
    for r, v in col_from.items():
        t = c * v
        if r in col_to:
            s = col_to[r] + t
            if s.is_zero():
                del col_to[r]
            else:
                col_to[r] = s
        elif not t.is_zero():
            col_to[r] = t


def _right_x(rep, cols, root, c):
    if c.is_zero():
        return
    for src, dst, s in rep.pairs(root):
        _col_axpy(cols[src], cols[dst], c if s > 0 else -c)


def _left_x(rep, cols, root, c):
    if c.is_zero():
        return
    prs = rep.pairs(root)
    for col in cols:
        updates = []
        for src, dst, s in prs:
            v = col.get(src)
            if v is not None:
                updates.append((dst, v * c if s > 0 else -(v * c)))
        for dst, t in updates:
            if dst in col:
                s = col[dst] + t
                if s.is_zero():
                    del col[dst]
                else:
                    col[dst] = s
            elif not t.is_zero():
                col[dst] = t


class GroupElement:
    """An N x N matrix over a ring, optionally with the word that produced it."""

    __slots__ = ("rep", "ring", "cols", "word")

    def __init__(self, rep, ring, cols, word=None):
        self.rep = _rep(rep)
        self.ring = ring
        self.cols = cols
        self.word = None if word is None else tuple(word)

    @classmethod
    def identity(cls, rep, ring):
        rep = _rep(rep)
        return cls(rep, ring, [{i: ring.one} for i in range(rep.n)], ())

    @classmethod
    def from_dense(cls, rep, ring, rows):
        rep = _rep(rep)
        n = rep.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected a {n}x{n} matrix")
        cols = [{} for _ in range(n)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                v = ring(v)
                if not v.is_zero():
                    cols[j][i] = v
        return cls(rep, ring, cols)

    @property
    def n(self):
        return self.rep.n

    def entry(self, i, j):
        return self.cols[j].get(i, self.ring.zero)

    def column(self, j):
        return [self.entry(i, j) for i in range(self.n)]

    def dense(self):
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def copy_cols(self):
        return [dict(c) for c in self.cols]

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.rep is other.rep and self.ring == other.ring and self.cols == other.cols

    __hash__ = None

    def is_identity(self):
        return all(c == {i: self.ring.one} for i, c in enumerate(self.cols))

    def _check(self, other):
        if self.rep is not other.rep:
            raise DescriptorMismatch(f"{self.rep.label} vs {other.rep.label}")
        if self.ring != other.ring:
            raise DescriptorMismatch(f"{self.ring} vs {other.ring}")

    def __matmul__(self, other):
        return self.multiply(other)

    def multiply(self, other):
        self._check(other)
        out = []
        zero = self.ring.zero
        for bcol in other.cols:
            acc = {}
            for k, b in bcol.items():
                for r, a in self.cols[k].items():
                    acc[r] = acc.get(r, zero) + a * b
            out.append({r: v for r, v in acc.items() if not v.is_zero()})
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return GroupElement(self.rep, self.ring, out, word)

    def times_word(self, word):
        """self * (realized word), by column operations."""
        cols = self.copy_cols()
        for letter in _expand(word):
            _right_x(self.rep, cols, letter.root, self.ring(letter.scalar))
        w = None if self.word is None else self.word + tuple(word)
        return GroupElement(self.rep, self.ring, cols, w)

    def left_word(self, word):
        """(realized word) * self, by row operations."""
        cols = self.copy_cols()
        for letter in reversed(list(_expand(word))):
            _left_x(self.rep, cols, letter.root, self.ring(letter.scalar))
        w = None if self.word is None else tuple(word) + self.word
        return GroupElement(self.rep, self.ring, cols, w)

    def inverse(self):
        """Inverse via the reversed word of inverted letters, or via the
        division-free adjugate when no word is attached."""
        if self.word is not None:
            return realize(self.rep, invert_word(self.word), self.ring)
        return GroupElement.from_dense(self.rep, self.ring, _inverse_matrix(self.dense(), self.ring))

    def act(self, vector):
        vector = [self.ring(v) for v in vector]
        out = [self.ring.zero] * self.n
        for j, col in enumerate(self.cols):
            vj = vector[j]
            if vj.is_zero():
                continue
            for r, a in col.items():
                out[r] = out[r] + a * vj
        return out

    def to_json(self):
        return [[self.ring.format(self.entry(i, j)) for j in range(self.n)] for i in range(self.n)]

    def __repr__(self):
        return f"GroupElement({self.rep.label}, {self.ring}, letters={None if self.word is None else len(self.word)})"


def realize(rep, word, ring):
    """The matrix of a word (product of its letters, left to right)."""
    return GroupElement.identity(rep, ring).times_word(tuple(word))


def apply_word(rep, word, vector):
    """(realized word) applied to a coordinate vector; letters act right to left."""
    rep = _rep(rep)
    v = list(vector)
    ring = v[0].ring
    for letter in reversed(list(_expand(word))):
        c = ring(letter.scalar)
        if c.is_zero():
            continue
        updates = []
        for src, dst, s in rep.pairs(letter.root):
            if not v[src].is_zero():
                updates.append((dst, v[src] * c if s > 0 else -(v[src] * c)))
        for dst, t in updates:
            v[dst] = v[dst] + t
    return v


def gen_x(rep, root, xi):
    rep = _rep(rep)
    return realize(rep, (X(root, xi),), xi.ring)


def gen_w(rep, root, eps):
    rep = _rep(rep)
    return realize(rep, (W(root, eps),), eps.ring)


def gen_h(rep, root, eps):
    rep = _rep(rep)
    return realize(rep, (H(root, eps),), eps.ring)


def z_word(root, xi, zeta):
    """z_α(ξ, ζ) = x_{-α}(-ζ) x_α(ξ) x_{-α}(ζ) as a word."""
    return (X(neg(root), -zeta), X(root, xi), X(neg(root), zeta))


def z_gen(rep, root, xi, zeta):
    return realize(_rep(rep), z_word(root, xi, zeta), xi.ring)


def commutator(a, b):
    """[a, b] = a b a^{-1} b^{-1}."""
    return a @ b @ a.inverse() @ b.inverse()


# ---------------------------------------------------------------------------
# division-free inverse (Berkowitz characteristic polynomial)

def _charpoly(m, ring):
    """Coefficients c_0..c_n of det(tI - M) = sum c_k t^(n-k), c_0 = 1."""
    n = len(m)
    zero, one = ring.zero, ring.one
    poly = [one]
    for r in range(n):
        # leading (r+1)x(r+1) block: a = M[r][r], R = M[r][:r], C = M[:r][r], A = M[:r][:r]
        a = m[r][r]
        row = m[r][:r]
        col = [m[i][r] for i in range(r)]
        # Toeplitz column: 1, -a, -R C, -R A C, ...
        t = [one, -a]
        vec = col
        for _ in range(r):
            t.append(-sum((x * y for x, y in zip(row, vec)), zero))
            vec = [sum((m[i][k] * vec[k] for k in range(r)), zero) for i in range(r)]
        new = []
        for k in range(r + 2):
            s = zero
            for j in range(min(k, r) + 1):
                if k - j < len(t):
                    s = s + t[k - j] * poly[j]
            new.append(s)
        poly = new
    return poly


def _inverse_matrix(m, ring):
    n = len(m)
    c = _charpoly(m, ring)
    det = c[n] if n % 2 == 0 else -c[n]
    dinv = det.try_invert()
    if dinv is None:
        raise NotAUnit(f"determinant {det} is not a unit")
    # Cayley-Hamilton: M^n + c1 M^(n-1) + ... + cn I = 0
    # => M^{-1} = -(M^(n-1) + c1 M^(n-2) + ... + c_{n-1} I) / c_n
    zero = ring.zero
    acc = [[ring.one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(1, n):
        acc = [[sum((acc[i][l] * m[l][j] for l in range(n)), zero) for j in range(n)] for i in range(n)]
        for i in range(n):
            acc[i][i] = acc[i][i] + c[k]
    cinv = c[n].inverse()
    return [[-(x * cinv) for x in row] for row in acc]


# ---------------------------------------------------------------------------
# JSON

def word_to_json(word):
    return [{"kind": l.kind, "root": list(l.root), "scalar": l.scalar.to_json()} for l in word]


def word_from_json(data, ring):
    return tuple(Letter(d["kind"], tuple(d["root"]), ring.parse(d["scalar"])) for d in data)
