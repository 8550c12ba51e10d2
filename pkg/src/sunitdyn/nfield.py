"""Monogenic number fields: exact element arithmetic, norms, prime
splitting, valuations, support and naive heights.

A field is Q[x]/(f) for a monic squarefree integer polynomial f, with
O_K = Z[theta] either automatic (trivial discriminant obstruction) or
asserted by the caller. Prime splitting is read off the factorization of
f mod p (Kummer-Dedekind), which is exactly what monogenicity buys.

Valuations use the classical inverse-ideal trick: for P = (p, g(theta))
the element W(theta)/p with W = lift((f mod p)/g) lies in P^{-1} \\ O_K,
so it has valuation exactly -1 at P and >= 0 everywhere else; v_P of an
integral element is the number of times one can multiply by it and stay
integral. No ideal arithmetic needed, and the inner loop is pure integer
work.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import fppoly, intpoly
from .errors import (
    DetectedReducibleError,
    DivisionByZeroError,
    IndexDivisorError,
    NotMonicError,
    NotSquarefreeError,
    ZeroElementError,
)
from .intutil import factorize, fraction_valuation, int_valuation

_IRRED_TEST_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)


class NumberField:
    """Q[x]/(f) for monic squarefree integer f, presented in the power basis.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, coeffs, assert_monogenic: bool = False):
        coeffs = tuple(int(c) for c in coeffs)
        poly = intpoly.normalize(coeffs)
        n = intpoly.degree(poly)
        if n < 1:
            raise NotMonicError("defining polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise NotMonicError("defining polynomial must be monic")
        self.poly = poly
        self.degree = n
        self.discriminant = intpoly.discriminant(poly)
        if self.discriminant == 0:
            raise NotSquarefreeError("defining polynomial has a repeated factor")
        self.assert_monogenic = bool(assert_monogenic)
        self.irreducible_certified, factor_hint = self._certify_irreducible()
        if factor_hint is not None:
            raise DetectedReducibleError(
                f"defining polynomial has the rational root {factor_hint}"
            )
        r1 = intpoly.real_root_count(poly)
        self.signature = (r1, (n - r1) // 2)
        # theta^k for k = n .. 2n-2, as integer coordinate rows
        rows = []
        prev = [-c for c in poly[:-1]]
        rows.append(tuple(prev))
        for _ in range(n - 2):
            shifted = [0] + prev[:-1]
            top = prev[-1]
            prev = [shifted[i] + top * rows[0][i] for i in range(n)]
            rows.append(tuple(prev))
        self._reduction_rows = tuple(rows)
        self._places_cache: dict[int, tuple[PrimePlace, ...]] = {}
        self._zero = FieldElement(self, (Fraction(0),) * n)
        self._one = FieldElement(self, (Fraction(1),) + (Fraction(0),) * (n - 1))

    # -- construction helpers -------------------------------------------

    def _certify_irreducible(self):
        poly, n = self.poly, self.degree
        if n == 1:
            return True, None
        if poly[0] == 0:
            return False, 0
        # monic => every rational root is an integer dividing the constant term
        for r in sorted(_divisors(abs(poly[0]))):
            for root in (r, -r):
                if intpoly.evaluate(poly, root) == 0:
                    return False, root
        if n in (2, 3):
            # reducible in degree 2 or 3 forces a rational root
            return True, None
        feasible = set(range(1, n))
        for p in _IRRED_TEST_PRIMES:
            if self.discriminant % p == 0:
                continue
            degs = [fppoly.degree(g) for g, _ in fppoly.factor(poly, p)]
            sums = {0}
            for d in degs:
                sums |= {s + d for s in sums}
            feasible &= sums
            if not feasible:
                return True, None
        return False, None

    def element(self, coords) -> FieldElement:
        """Element from a rational scalar or a coordinate sequence."""
        if isinstance(coords, FieldElement):
            if coords.field is not self and coords.field != self:
                raise ValueError("element belongs to a different field")
            return coords
        if isinstance(coords, (int, Fraction, str)):
            c = Fraction(coords)
            return FieldElement(
                self, (c,) + (Fraction(0),) * (self.degree - 1)
            )
        vals = [Fraction(v) for v in coords]
        if len(vals) > self.degree:
            raise ValueError("too many coordinates")
        vals += [Fraction(0)] * (self.degree - len(vals))
        return FieldElement(self, tuple(vals))

    def zero(self) -> FieldElement:
        return self._zero

    def one(self) -> FieldElement:
        return self._one

    def generator(self) -> FieldElement:
        if self.degree == 1:
            return self.element(-self.poly[0])
        coords = [Fraction(0)] * self.degree
        coords[1] = Fraction(1)
        return FieldElement(self, tuple(coords))

    @property
    def is_rationals(self) -> bool:
        return self.degree == 1

    # -- arithmetic core --------------------------------------------------

    def _reduce_product(self, conv):
        n = self.degree
        coords = list(conv[:n]) + [Fraction(0)] * (n - len(conv[:n]))
        for k in range(n, len(conv)):
            ck = conv[k]
            if ck:
                row = self._reduction_rows[k - n]
                for i in range(n):
                    if row[i]:
                        coords[i] += ck * row[i]
        return tuple(coords)

    def multiply(self, a: FieldElement, b: FieldElement) -> FieldElement:
        n = self.degree
        if n == 1:
            return FieldElement(self, (a.coords[0] * b.coords[0],))
        conv = [Fraction(0)] * (2 * n - 1)
        for i, ca in enumerate(a.coords):
            if ca:
                for j, cb in enumerate(b.coords):
                    if cb:
                        conv[i + j] += ca * cb
        return FieldElement(self, self._reduce_product(conv))

    def inverse(self, a: FieldElement) -> FieldElement:
        if a.is_zero():
            raise DivisionByZeroError("inverse of zero")
        if self.degree == 1:
            return FieldElement(self, (1 / a.coords[0],))
        # extended Euclid against the defining polynomial over Q
        f = tuple(Fraction(c) for c in self.poly)
        g = intpoly.normalize(a.coords)
        r0, r1 = f, g
        t0, t1 = (), (Fraction(1),)
        while r1:
            q, r = intpoly.divmod_frac(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, intpoly.sub(t0, intpoly.mul(q, t1))
        if intpoly.degree(r0) != 0:
            raise DivisionByZeroError(
                "element is a zero divisor (defining polynomial is reducible)"
            )
        inv_t = tuple(c / r0[0] for c in t0)
        coords = list(inv_t) + [Fraction(0)] * (self.degree - len(inv_t))
        return FieldElement(self, tuple(coords[: self.degree]))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"NumberField({list(self.poly)})"


def _divisors(n: int):
    if n == 1:
        return [1]
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return out


class FieldElement:
    """Element in the power basis; coordinates are exact rationals."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def is_integral_coords(self) -> bool:
        """All power-basis coordinates integral (= membership in Z[theta])."""
        return all(c.denominator == 1 for c in self.coords)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a + b for a, b in zip(self.coords, o.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, tuple(a - b for a, b in zip(self.coords, o.coords))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.multiply(self, o)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return self.field.inverse(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.multiply(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, FieldElement) else other
        if not isinstance(o, FieldElement):
            return NotImplemented
        return self.field == o.field and self.coords == o.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.poly, self.coords))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*th")
            else:
                terms.append(f"{c}*th^{i}")
        return " + ".join(terms) if terms else "0"

    # -- norms, heights ------------------------------------------------------

    def norm(self) -> Fraction:
        """Field norm, as the resultant of f with the coordinate polynomial."""
        if self.field.degree == 1:
            return self.coords[0]
        g = intpoly.normalize(self.coords)
        return intpoly.resultant(self.field.poly, g)

    def height(self) -> int:
        """Common-denominator coordinate height; height(0) = 1."""
        den = 1
        for c in self.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        m = den
        for c in self.coords:
            m = max(m, abs(c.numerator * (den // c.denominator)))
        return m

    def sort_key(self):
        return (self.height(), self.coords)

    def clear_denominators(self):
        """(integer coordinate list, positive integer D) with self = coords/D."""
        den = 1
        for c in self.coords:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in self.coords], den


class PrimePlace:
    """Finite place of K: prime p plus a monic irreducible factor of f mod p."""

    __slots__ = ("field", "p", "generator_poly", "ramification", "residue_degree",
                 "_anti_uniformizer")

    def __init__(self, field, p, generator_poly, ramification, residue_degree):
        self.field = field
        self.p = p
        self.generator_poly = tuple(generator_poly)
        self.ramification = ramification
        self.residue_degree = residue_degree
        self._anti_uniformizer = None

    def __eq__(self, other):
        return (
            isinstance(other, PrimePlace)
            and self.p == other.p
            and self.generator_poly == other.generator_poly
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.p, self.generator_poly))

    def __repr__(self):
        return f"PrimePlace(p={self.p}, g={list(self.generator_poly)}, e={self.ramification}, f={self.residue_degree})"

    def sort_key(self):
        return (self.p, self.generator_poly)

    def anti_uniformizer_coords(self):
        """Integer coordinates W of W(theta) with W(theta)/p in P^{-1} \\ O_K."""
        if self._anti_uniformizer is None:
            p = self.p
            fbar = fppoly.normalize(self.field.poly, p)
            w, r = fppoly.divmod_(fbar, self.generator_poly, p)
            if r:
                raise ArithmeticError("generator does not divide f mod p")
            coords = [0] * self.field.degree
            # reduce lift(w) mod f is unnecessary: deg w < deg f
            for i, c in enumerate(w):
                coords[i] = c
            self._anti_uniformizer = tuple(coords)
        return self._anti_uniformizer


def primes_above(field: NumberField, p: int) -> tuple[PrimePlace, ...]:
    """Places of K above the rational prime p, in deterministic order.

    Requires p to not divide disc(f) unless monogenicity was asserted;
    otherwise the splitting read from f mod p could be wrong.
    """
    cached = field._places_cache.get(p)
    if cached is not None:
        return cached
    if field.discriminant % p == 0 and not field.assert_monogenic and field.degree > 1:
        raise IndexDivisorError(
            f"{p} divides disc(f) = {field.discriminant}; "
            "pass assert_monogenic=True if O_K = Z[theta] is known"
        )
    places = tuple(
        PrimePlace(field, p, g, e, fppoly.degree(g))
        for g, e in fppoly.factor(field.poly, p)
    )
    total = sum(pl.ramification * pl.residue_degree for pl in places)
    if total != field.degree:
        raise ArithmeticError("sum e*f != n; factorization bug")
    field._places_cache[p] = places
    return places


def _integral_valuation(field: NumberField, coords, place: PrimePlace) -> int:
    """v_P of an element of Z[theta] given by integer coordinates."""
    p = place.p
    n = field.degree
    w = place.anti_uniformizer_coords()
    rows = field._reduction_rows
    v = 0
    cur = list(coords)
    while True:
        conv = [0] * (2 * n - 1)
        for i, ca in enumerate(cur):
            if ca:
                for j, cb in enumerate(w):
                    if cb:
                        conv[i + j] += ca * cb
        nxt = conv[:n]
        for k in range(n, 2 * n - 1):
            ck = conv[k]
            if ck:
                row = rows[k - n]
                for i in range(n):
                    if row[i]:
                        nxt[i] += ck * row[i]
        if any(c % p for c in nxt):
            return v
        cur = [c // p for c in nxt]
        v += 1


def valuation(a: FieldElement, place: PrimePlace) -> int:
    """Exact valuation v_P(a), normalized so a uniformizer has valuation 1."""
    if a.is_zero():
        raise ZeroElementError("valuation of zero")
    field = a.field
    if field.degree == 1:
        return fraction_valuation(a.coords[0], place.p)
    ints, den = a.clear_denominators()
    v = _integral_valuation(field, ints, place)
    if den % place.p == 0:
        v -= place.ramification * int_valuation(den, place.p)
    return v


def support(a: FieldElement) -> tuple[PrimePlace, ...]:
    """All finite places where a has nonzero valuation, sorted.

    Candidate primes come from the norm of the cleared-denominator integral
    part together with the denominator itself; using norm(a) alone would
    miss primes whose contributions cancel across conjugate places.
    """
    if a.is_zero():
        raise ZeroElementError("support of zero")
    field = a.field
    if field.degree == 1:
        q = a.coords[0]
        primes = sorted(set(factorize(q.numerator)) | set(factorize(q.denominator)))
        return tuple(
            pl for p in primes for pl in primes_above(field, p) if valuation(a, pl)
        )
    ints, den = a.clear_denominators()
    b = FieldElement(field, tuple(Fraction(c) for c in ints))
    nb = b.norm()
    assert nb.denominator == 1
    candidates = set(factorize(int(nb)))
    if den > 1:
        candidates |= set(factorize(den))
    out = []
    for p in sorted(candidates):
        for pl in primes_above(field, p):
            if valuation(a, pl) != 0:
                out.append(pl)
    return tuple(out)
