"""Exact commutative rings: integers, residue rings, localizations of the
integers, polynomial rings over those, and quotients of polynomial rings by
powers of variables (e.g. ``xi^2 = 0``).

Every ring is a frozen descriptor object; elements are :class:`RingElement`
instances holding a canonical payload, so equality of elements is equality of
payloads.  Division is never exposed; use :meth:`RingElement.try_invert`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from sympy import factorint

__all__ = [
    "RingError", "DescriptorMismatch", "NotAUnit", "NotUnimodular",
    "UnsupportedRing", "TwoNotInvertible", "RelationNotPreserved",
    "Ring", "Integers", "ResidueRing", "LocalizedIntegers", "PolynomialRing",
    "QuotientRing", "RingElement", "Ideal", "ZZ", "parse_ring",
    "try_invert", "unimodular_certificate", "asr_transform",
    "maximal_ideals_containing", "evaluate_hom", "quotient_by_element",
]


class RingError(Exception):
    """Base class for ring-level errors."""


class DescriptorMismatch(RingError):
    pass


class NotAUnit(RingError):
    pass


class NotUnimodular(RingError):
    pass


class UnsupportedRing(RingError):
    pass


class TwoNotInvertible(RingError):
    """Raised when a denominator of the source ring is not a unit in the target."""


class RelationNotPreserved(RingError):
    pass


def _ext_gcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _ext_gcd_row(values):
    """Bezout coefficients for a list of integers: sum(c*v) = gcd >= 0."""
    g, coeffs = 0, []
    for v in values:
        g2, x, y = _ext_gcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
        g = g2
    return g, coeffs


def _strip(n, primes):
    """Remove all factors of the given primes from the integer n."""
    for p in primes:
        if n == 0:
            break
        while n % p == 0:
            n //= p
    return n


def _coprime_part(a, b):
    """Largest divisor of a that is coprime to b (a != 0)."""
    a = abs(a)
    g = math.gcd(a, b)
    while g > 1:
        a //= g
        g = math.gcd(a, b)
    return a


class Ring:
    """Abstract ring descriptor.

    Subclasses implement arithmetic on raw payloads (``_add``, ``_mul``,
    ``_neg``, ``_invert``) plus coercion and serialization.
    """

    @property
    def zero(self):
        return RingElement(self, self._coerce(0))

    @property
    def one(self):
        return RingElement(self, self._coerce(1))

    def __call__(self, value):
        if isinstance(value, RingElement):
            if value.ring != self:
                raise DescriptorMismatch(f"{value.ring} vs {self}")
            return value
        return RingElement(self, self._coerce(value))

    def parse(self, obj):
        """Parse the JSON serialization of an element."""
        return RingElement(self, self._parse(obj))

    def format(self, x):
        return self._format(x.value)

    def is_nilpotent(self, x):
        return self._is_nilpotent(self(x).value)

    def _is_nilpotent(self, v):
        return self._is_zero(v)

    def _is_zero(self, v):
        return v == 0

    def _hash(self, v):
        return hash(v)

    def _sub(self, a, b):
        return self._add(a, self._neg(b))


@dataclass(frozen=True)
class Integers(Ring):
    def __str__(self):
        return "Z"

    def _coerce(self, value):
        if isinstance(value, str):
            return self._parse(value)
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return int(value)
        return int(value)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _invert(self, a):
        return a if a in (1, -1) else None

    def _format(self, v):
        return str(v)

    def _parse(self, obj):
        return int(str(obj).strip())


@dataclass(frozen=True)
class ResidueRing(Ring):
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")

    def __str__(self):
        return f"Z/{self.modulus}"

    def _coerce(self, value):
        if isinstance(value, str):
            return self._parse(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.modulus
            inv = self._invert(value.denominator % self.modulus)
            if inv is None:
                raise NotAUnit(f"{value.denominator} in {self}")
            return num * inv % self.modulus
        return int(value) % self.modulus

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _mul(self, a, b):
        return a * b % self.modulus

    def _neg(self, a):
        return -a % self.modulus

    def _invert(self, a):
        if math.gcd(a, self.modulus) != 1:
            return None
        return pow(a, -1, self.modulus)

    def _is_nilpotent(self, v):
        rad = math.prod(factorint(self.modulus))
        return v % rad == 0

    def _format(self, v):
        return str(v)

    def _parse(self, obj):
        return int(str(obj).strip()) % self.modulus

    def primes(self):
        return sorted(factorint(self.modulus))


@dataclass(frozen=True)
class LocalizedIntegers(Ring):
    """The integers with the given primes inverted, e.g. ``primes=(2,)`` is Z[1/2]."""

    primes: tuple

    def __post_init__(self):
        ps = tuple(sorted(set(int(p) for p in self.primes)))
        if not ps or any(len(factorint(p)) != 1 or factorint(p)[p] != 1 for p in ps):
            raise ValueError(f"expected a nonempty set of primes, got {self.primes}")
        object.__setattr__(self, "primes", ps)

    def __str__(self):
        return "Z[" + ",".join(f"1/{p}" for p in self.primes) + "]"

    def _coerce(self, value):
        if isinstance(value, str):
            return self._parse(value)
        v = Fraction(value)
        if _strip(v.denominator, self.primes) != 1:
            raise NotAUnit(f"denominator {v.denominator} is not invertible in {self}")
        return v

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _invert(self, a):
        if a == 0 or abs(_strip(a.numerator, self.primes)) != 1:
            return None
        return 1 / a

    def _format(self, v):
        if v.denominator == 1:
            return str(v.numerator)
        if self.primes == (2,):
            return f"{v.numerator}/2^{v.denominator.bit_length() - 1}"
        return f"{v.numerator}/{v.denominator}"

    def _parse(self, obj):
        s = str(obj).strip().replace(" ", "")
        m = re.fullmatch(r"(-?\d+)/(\d+)\^(\d+)", s)
        if m:
            v = Fraction(int(m.group(1)), int(m.group(2)) ** int(m.group(3)))
        else:
            v = Fraction(s)
        return self._coerce(v)

    def residue(self, v, m):
        """Image of the payload v in Z/m (m coprime to the inverted primes)."""
        return v.numerator * pow(v.denominator, -1, m) % m


ZZ = Integers()


def _monomial_key(exps, variables):
    parts = [f"{x}^{e}" for x, e in zip(variables, exps) if e]
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class PolynomialRing(Ring):
    """Polynomials in named variables over Z, Z/n or a localization of Z.

    Payloads are dicts ``{exponent tuple: base payload}`` without zero
    coefficients; they are never mutated after construction.
    """

    base: Ring
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if isinstance(self.base, (PolynomialRing, QuotientRing)):
            raise UnsupportedRing("nested polynomial rings are not supported")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    def __str__(self):
        return f"poly({self.base}; {', '.join(self.variables)})"

    @property
    def nvars(self):
        return len(self.variables)

    def gens(self):
        return tuple(self.gen(x) for x in self.variables)

    def gen(self, name):
        i = self.variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return RingElement(self, self._reduce({e: self.base._coerce(1)}))

    def _reduce(self, d):
        return d

    def _coerce(self, value):
        if isinstance(value, dict) and all(isinstance(e, tuple) for e in value):
            # a raw payload: normalize coefficients and drop zeros
            out = {}
            for e, c in value.items():
                c = self.base._coerce(c)
                if len(e) != self.nvars:
                    raise ValueError(f"exponent {e} does not match {self.nvars} variables")
                if not self.base._is_zero(c):
                    out[e] = c
            return self._reduce(out)
        if isinstance(value, (str, dict)):
            return self._parse(value)
        c = self.base._coerce(value)
        if self.base._is_zero(c):
            return {}
        return {(0,) * self.nvars: c}

    def _add(self, a, b):
        base = self.base
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = base._add(out[e], c)
                if base._is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return out

    def _neg(self, a):
        return {e: self.base._neg(c) for e, c in a.items()}

    def _mul(self, a, b):
        base = self.base
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if not self._allowed(e):
                    continue
                c = base._mul(c1, c2)
                if e in out:
                    out[e] = base._add(out[e], c)
                else:
                    out[e] = c
        return {e: c for e, c in out.items() if not base._is_zero(c)}

    def _allowed(self, e):
        return True

    def _is_zero(self, v):
        return not v

    def _hash(self, v):
        return hash(frozenset(v.items()))

    def _nilpotent_monomial(self, e):
        return False

    def _is_nilpotent(self, v):
        return all(self._nilpotent_monomial(e) or self.base._is_nilpotent(c)
                   for e, c in v.items())

    def _invert(self, a):
        # a = c0 * (1 + m) with m nilpotent  <=>  a is a unit
        const = (0,) * self.nvars
        c0 = a.get(const)
        if c0 is None:
            return None
        c0inv = self.base._invert(c0)
        if c0inv is None:
            return None
        for e, c in a.items():
            if e != const and not (self._nilpotent_monomial(e) or self.base._is_nilpotent(c)):
                return None
        m = self._add(self._mul(a, {const: c0inv}), self._neg({const: self.base._coerce(1)}))
        neg_m = self._neg(m)
        total = {const: self.base._coerce(1)}
        term = total
        for _ in range(10_000):
            term = self._mul(term, neg_m)
            if not term:
                break
            total = self._add(total, term)
        else:  # pragma: no cover
            raise RingError("geometric series did not terminate")
        return self._mul(total, {const: c0inv})

    def _sorted_items(self, v):
        return sorted(v.items(), key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0])))

    def _format(self, v):
        return {_monomial_key(e, self.variables): self.base._format(c)
                for e, c in self._sorted_items(v)}

    def _parse(self, obj):
        if isinstance(obj, str):
            s = obj.strip()
            if s.startswith("{"):
                import json
                obj = json.loads(s)
            else:
                obj = {"1": s}
        out = {}
        for key, coeff in obj.items():
            e = [0] * self.nvars
            key = key.strip()
            if key != "1":
                for part in key.split("*"):
                    name, _, power = part.strip().partition("^")
                    e[self.variables.index(name.strip())] += int(power) if power else 1
            e = tuple(e)
            c = self.base._parse(coeff)
            if not self._allowed(e) or self.base._is_zero(c):
                continue
            out[e] = self.base._add(out[e], c) if e in out else c
        return {e: c for e, c in out.items() if not self.base._is_zero(c)}

    def constant_term(self, x):
        return RingElement(self.base, self(x).value.get((0,) * self.nvars, self.base._coerce(0)))


@dataclass(frozen=True)
class QuotientRing(PolynomialRing):
    """A polynomial ring modulo monomial relations ``var^k = 0`` (k >= 2)."""

    relations: tuple = ()

    def __init__(self, base, relations):
        if not isinstance(base, PolynomialRing) or isinstance(base, QuotientRing):
            raise UnsupportedRing("quotients are only taken of polynomial rings")
        rels = []
        for var, k in relations:
            if var not in base.variables:
                raise ValueError(f"unknown variable {var}")
            if int(k) < 2:
                raise ValueError("relations must be var^k with k >= 2")
            rels.append((var, int(k)))
        object.__setattr__(self, "base", base.base)
        object.__setattr__(self, "variables", base.variables)
        object.__setattr__(self, "relations", tuple(sorted(rels)))
        PolynomialRing.__post_init__(self)

    @property
    def polynomial_ring(self):
        return PolynomialRing(self.base, self.variables)

    def __str__(self):
        rels = ", ".join(f"{v}^{k}" for v, k in self.relations)
        return f"quot({self.polynomial_ring}; {rels})"

    def _bounds(self):
        return [(self.variables.index(v), k) for v, k in self.relations]

    def _allowed(self, e):
        return all(e[i] < k for i, k in self._bounds())

    def _nilpotent_monomial(self, e):
        return any(e[i] > 0 for i, _ in self._bounds())

    def _reduce(self, d):
        return {e: c for e, c in d.items() if self._allowed(e)}

    def _coerce(self, value):
        return self._reduce(PolynomialRing._coerce(self, value))


class RingElement:
    """An immutable element of a :class:`Ring` in canonical form."""

    __slots__ = ("ring", "value", "_h")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value
        self._h = None

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise DescriptorMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        return self.ring._coerce(other)

    def __add__(self, other):
        return RingElement(self.ring, self.ring._add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.ring, self.ring._sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return RingElement(self.ring, self.ring._sub(self._other(other), self.value))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring._mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.value))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring._coerce(other)
        except (TypeError, ValueError, RingError):
            return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.ring, self.ring._hash(self.value)))
        return self._h

    def __bool__(self):
        return not self.ring._is_zero(self.value)

    def is_zero(self):
        return self.ring._is_zero(self.value)

    def is_unit(self):
        return self.ring._invert(self.value) is not None

    def try_invert(self):
        """Return the inverse, or ``None`` if the element is not a unit."""
        inv = self.ring._invert(self.value)
        return None if inv is None else RingElement(self.ring, inv)

    def inverse(self):
        inv = self.try_invert()
        if inv is None:
            raise NotAUnit(f"{self} is not a unit in {self.ring}")
        return inv

    def to_json(self):
        return self.ring.format(self)

    def __str__(self):
        f = self.ring.format(self)
        if isinstance(f, dict):
            if not f:
                return "0"
            out = ""
            for k, c in f.items():
                k = k.replace("^1*", "*").removesuffix("^1")
                neg = c.startswith("-")
                c = c.lstrip("-")
                term = c if k == "1" else (k if c == "1" else f"{c}*{k}")
                out += (" - " if neg else " + ") + term if out else ("-" if neg else "") + term
            return out
        return f

    def __repr__(self):
        return f"RingElement({self}, {self.ring})"


def try_invert(a):
    return a.try_invert()


# ---------------------------------------------------------------------------
# ring grammar

def _split_top(s, sep):
    depth, parts, cur = 0, [], []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_ring(text):
    """Parse a ring descriptor string.

    >>> str(parse_ring("quot(poly(Z[1/2]; xi, zeta); xi^2)"))
    'quot(poly(Z[1/2]; xi, zeta); xi^2)'
    """
    s = text.strip()
    if s == "Z":
        return ZZ
    m = re.fullmatch(r"Z/(\d+)", s)
    if m:
        return ResidueRing(int(m.group(1)))
    m = re.fullmatch(r"Z\[(.*)\]", s)
    if m:
        primes = set()
        for part in m.group(1).split(","):
            num, _, den = part.strip().partition("/")
            if num.strip() != "1" or not den:
                raise ValueError(f"bad localization {text!r}")
            primes.update(factorint(int(den)))
        return LocalizedIntegers(tuple(primes))
    for head in ("poly", "quot"):
        if s.startswith(head + "(") and s.endswith(")"):
            inner = _split_top(s[len(head) + 1:-1], ";")
            if len(inner) != 2:
                raise ValueError(f"bad descriptor {text!r}")
            if head == "poly":
                names = [v.strip() for v in inner[1].split(",") if v.strip()]
                return PolynomialRing(parse_ring(inner[0]), tuple(names))
            base = parse_ring(inner[0])
            rels = []
            for r in inner[1].split(","):
                var, _, k = r.strip().partition("^")
                rels.append((var.strip(), int(k) if k else 1))
            return QuotientRing(base, rels)
    raise ValueError(f"cannot parse ring descriptor {text!r}")


# ---------------------------------------------------------------------------
# ideals, unimodularity, ASR

def _same_ring(elements):
    rings = {e.ring for e in elements}
    if len(rings) != 1:
        raise DescriptorMismatch(f"mixed descriptors: {sorted(map(str, rings))}")
    return rings.pop()


def _integer_content(ring, elements):
    """gcd of the elements viewed as integers (numerators, with inverted primes
    stripped for localizations); for Z/n the gcd includes n."""
    if isinstance(ring, Integers):
        return reduce(math.gcd, (e.value for e in elements), 0)
    if isinstance(ring, ResidueRing):
        return reduce(math.gcd, (e.value for e in elements), ring.modulus)
    if isinstance(ring, LocalizedIntegers):
        g = reduce(math.gcd, (e.value.numerator for e in elements), 0)
        return _strip(g, ring.primes)
    raise UnsupportedRing(f"no integer content for {ring}")


class Ideal:
    """A finitely generated ideal, given by generators."""

    def __init__(self, generators, ring=None):
        gens = list(generators)
        if ring is None:
            ring = _same_ring(gens)
        self.ring = ring
        self.generators = [ring(g) for g in gens]

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]}, {self.ring})"

    def contains(self, x):
        x = self.ring(x)
        if x.is_zero():
            return True
        ring = self.ring
        if isinstance(ring, (Integers, ResidueRing, LocalizedIntegers)):
            g = _integer_content(ring, self.generators)
            if isinstance(ring, Integers):
                return g != 0 and x.value % g == 0
            if isinstance(ring, ResidueRing):
                return x.value % g == 0
            return g != 0 and x.value.numerator % g == 0
        if isinstance(ring, PolynomialRing):
            idx = []
            for g in self.generators:
                items = list(g.value.items())
                if len(items) != 1 or sum(items[0][0]) != 1 or ring.base._invert(items[0][1]) is None:
                    raise UnsupportedRing("polynomial ideal membership needs variable generators")
                idx.append(items[0][0].index(1))
            return all(any(e[i] > 0 for i in idx) for e in x.value)
        raise UnsupportedRing(str(ring))

    def maximal_ideals(self):
        return maximal_ideals_containing(self)


def maximal_ideals_containing(ideal):
    """Labels ``"(p)"`` of all maximal ideals containing the given ideal.

    Supported for Z, Z/n and localizations of Z.  The zero ideal of Z has
    infinitely many and raises :class:`UnsupportedRing`.
    """
    if not isinstance(ideal, Ideal):
        ideal = Ideal(ideal)
    ring = ideal.ring
    if not isinstance(ring, (Integers, ResidueRing, LocalizedIntegers)):
        raise UnsupportedRing(f"maximal ideals are not enumerable over {ring}")
    g = _integer_content(ring, ideal.generators)
    if g == 0:
        raise UnsupportedRing("the zero ideal is contained in infinitely many maximal ideals")
    return [f"({p})" for p in sorted(factorint(g))]


def _reduced_part(ring, e):
    """Drop the obviously nilpotent part of a polynomial payload."""
    return {m: c for m, c in e.value.items()
            if not (ring._nilpotent_monomial(m) or ring.base._is_nilpotent(c))}


def unimodular_certificate(row):
    """Bezout coefficients ``c`` with ``sum(c[i] * row[i]) == 1``.

    Raises :class:`NotUnimodular` if the entries generate a proper ideal and
    :class:`UnsupportedRing` when the implemented strategies cannot decide.
    """
    row = list(row)
    if not row:
        raise ValueError("empty row")
    ring = _same_ring(row)
    for i, r in enumerate(row):
        inv = r.try_invert()
        if inv is not None:
            return [inv if j == i else ring.zero for j in range(len(row))]
    if isinstance(ring, Integers):
        g, cs = _ext_gcd_row([r.value for r in row])
        if g != 1:
            raise NotUnimodular(f"entries generate ({g})")
        return [ring(c) for c in cs]
    if isinstance(ring, ResidueRing):
        g, cs = _ext_gcd_row([r.value for r in row] + [ring.modulus])
        if g != 1:
            raise NotUnimodular(f"entries generate ({g}) in {ring}")
        return [ring(c) for c in cs[:-1]]
    if isinstance(ring, LocalizedIntegers):
        g, cs = _ext_gcd_row([r.value.numerator for r in row])
        if g == 0 or _strip(g, ring.primes) != 1:
            raise NotUnimodular(f"entries generate ({g}) in {ring}")
        return [ring(Fraction(c * r.value.denominator, g)) for c, r in zip(cs, row)]
    if isinstance(ring, PolynomialRing):
        const = (0,) * ring.nvars
        reduced = [_reduced_part(ring, r) for r in row]
        if any(set(d) - {const} for d in reduced):
            raise UnsupportedRing(f"cannot decide unimodularity of non-constant rows over {ring}")
        base_row = [RingElement(ring.base, r.value.get(const, ring.base._coerce(0))) for r in row]
        cs = unimodular_certificate(base_row)
        lifted = [ring(c.value) for c in cs]
        s = sum((c * r for c, r in zip(lifted, row)), ring.zero)
        sinv = s.inverse()
        return [c * sinv for c in lifted]
    raise UnsupportedRing(str(ring))


def asr_transform(row, n=None):
    """Return ``t[0..n-2]`` such that every maximal ideal containing
    ``<row[i] + t[i]*row[-1]>`` already contains ``<row>``.

    Over Z/n (including fields) this works for every row of length >= 2; over
    Z and its localizations for length >= 3, with a bounded search for
    length 2.
    """
    row = list(row)
    if n is None:
        n = len(row)
    if len(row) != n:
        raise ValueError(f"row has length {len(row)}, expected {n}")
    if n < 2:
        raise ValueError("ASR needs rows of length at least 2")
    ring = _same_ring(row)
    last = row[-1]
    t = [ring.zero] * (n - 1)
    if last.is_zero():
        return t
    if isinstance(ring, ResidueRing):
        # for each prime p of n not dividing last, force row[0] + t*last = 1 mod p
        residues, moduli = [], []
        for p, k in factorint(ring.modulus).items():
            q = p ** k
            lv = last.value % q
            if lv % p == 0:
                residues.append(0)
            else:
                residues.append((1 - row[0].value) * pow(lv, -1, q) % q)
            moduli.append(q)
        t[0] = ring(_crt(residues, moduli))
        return t
    if isinstance(ring, (Integers, LocalizedIntegers)):
        primes = ring.primes if isinstance(ring, LocalizedIntegers) else ()

        def num(x):
            v = x.value
            return _strip(v if isinstance(v, int) else v.numerator, primes)

        def residue(x, m):
            v = x.value
            return v % m if isinstance(v, int) else ring.residue(v, m)

        lnum = num(last)
        if n == 2:
            return [_asr2_search(row, ring)]
        if row[0].is_zero():
            t[0] = ring.one
        first = row[0] + t[0] * last
        m = _coprime_part(num(first), lnum)
        if m > 1:
            t[1] = ring((1 - residue(row[1], m)) * pow(residue(last, m), -1, m) % m)
        return t
    raise UnsupportedRing(f"no ASR oracle for {ring}")


def _asr2_search(row, ring, bound=2000):
    for k in range(bound):
        for t in ((k, -k) if k else (0,)):
            tt = ring(t)
            if _asr_holds(row, [tt]):
                return tt
    raise UnsupportedRing(f"no ASR_2 transform found for {[str(r) for r in row]} in {ring}")


def _asr_holds(row, t):
    """Check the ASR postcondition via maximal ideals (Z, Z/n, localizations)."""
    ring = row[0].ring
    new = [r + ti * row[-1] for r, ti in zip(row, t)]
    gnew = _integer_content(ring, new)
    gold = _integer_content(ring, row)
    if gnew == 0:
        return gold == 0
    return set(maximal_ideals_containing(Ideal(new, ring))) <= set(
        maximal_ideals_containing(Ideal(row, ring)) if gold else [])


def _crt(residues, moduli):
    x, m = 0, 1
    for r, q in zip(residues, moduli):
        # solve x + m*k = r mod q
        k = (r - x) * pow(m, -1, q) % q
        x, m = x + m * k, m * q
    return x % m


def quotient_by_element(a):
    """The ring R/<a> for R in {Z, Z/n, localizations of Z}.

    Returns ``(target, project, lift)`` with ``project: R -> R/<a>`` and
    ``lift`` choosing integer coset representatives, or ``None`` when ``a``
    is a unit (the quotient is the zero ring).
    """
    ring = a.ring
    if a.is_unit():
        return None
    if a.is_zero():
        return ring, (lambda x: x), (lambda y: y)
    if isinstance(ring, Integers):
        target = ResidueRing(abs(a.value))
        return target, (lambda x: target(x.value)), (lambda y: ring(y.value))
    if isinstance(ring, ResidueRing):
        g = math.gcd(a.value, ring.modulus)
        if g == ring.modulus:  # pragma: no cover - a would be zero
            return ring, (lambda x: x), (lambda y: y)
        target = ResidueRing(g)
        return target, (lambda x: target(x.value)), (lambda y: ring(y.value))
    if isinstance(ring, LocalizedIntegers):
        m = abs(_strip(a.value.numerator, ring.primes))
        target = ResidueRing(m)
        return target, (lambda x: target(ring.residue(x.value, m))), (lambda y: ring(y.value))
    raise UnsupportedRing(f"quotients of {ring} are not supported")


def evaluate_hom(e, assignment, target=None):
    """Image of a polynomial under the evaluation homomorphism ``var -> value``.

    Denominators of the coefficient ring must be units in the target
    (:class:`TwoNotInvertible` otherwise); for a quotient source every
    relation ``var^k = 0`` must hold for the assigned value
    (:class:`RelationNotPreserved`).
    """
    src = e.ring
    if not isinstance(src, PolynomialRing):
        raise UnsupportedRing("evaluation needs a polynomial source ring")
    values = [assignment[v] for v in src.variables]
    if target is None:
        target = _same_ring(values)
    values = [target(v) for v in values]
    base = src.base
    if isinstance(base, LocalizedIntegers):
        for p in base.primes:
            if not target(p).is_unit():
                raise TwoNotInvertible(f"{p} is not invertible in {target}")
    elif isinstance(base, ResidueRing):
        if not (target(base.modulus)).is_zero():
            raise UnsupportedRing(f"{base} does not map to {target}")
    if isinstance(src, QuotientRing):
        for var, k in src.relations:
            if not (values[src.variables.index(var)] ** k).is_zero():
                raise RelationNotPreserved(f"{var}^{k} does not vanish on the assigned value")
    out = target.zero
    for exps, c in e.value.items():
        if isinstance(c, Fraction):
            term = target(c.numerator) * target(c.denominator).inverse()
        else:
            term = target(c)
        for v, k in zip(values, exps):
            if k:
                term = term * v ** k
        out = out + term
    return out
