"""Univariate polynomial arithmetic over a finite field.

Polynomials are dense immutable coefficient tuples, constant term first,
normalized so the zero polynomial is the empty tuple and the last
coefficient of anything else is nonzero.  Degrees in this package never
exceed single digits, so no asymptotically fast arithmetic is attempted.

Factorization is squarefree decomposition followed by distinct-degree and
Cantor-Zassenhaus equal-degree splitting.  The splitting is randomized
internally but the returned factorization is sorted canonically, so the
output does not depend on the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import FieldMismatchError, ZeroPolynomialError
from .gf import FieldElement, FiniteField


class Polynomial:
    """A univariate polynomial over a fixed finite field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs=()):
        cs = [field.element(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- basic queries --------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 stands in for deg(0) = -infinity."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    # -- arithmetic -----------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, [other])
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.field.element(other)
            return Polynomial(self.field, [a * c for a in self.coeffs])
        o = self._check(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial(self.field)
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < o.degree:
            return Polynomial(self.field), self
        rem = list(self.coeffs)
        db = o.degree
        inv_lead = o.leading.inverse()
        quo = [self.field.zero] * (len(rem) - db)
        for shift in range(len(rem) - db - 1, -1, -1):
            c = rem[shift + db] * inv_lead
            quo[shift] = c
            if c:
                for i, bi in enumerate(o.coeffs):
                    rem[shift + i] = rem[shift + i] - c * bi
        return Polynomial(self.field, quo), Polynomial(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, point):
        """Evaluate by Horner's rule at a field element."""
        point = self.field.element(point)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "Polynomial":
        p = self.field.p
        out = []
        for k in range(1, len(self.coeffs)):
            out.append(self.coeffs[k] * (k % p))
        return Polynomial(self.field, out)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        if self.is_monic():
            return self
        return self * self.leading.inverse()

    def map_coefficients(self, fn, field: FiniteField | None = None) -> "Polynomial":
        return Polynomial(field or self.field, [fn(c) for c in self.coeffs])

    def sort_key(self):
        """Canonical ordering key: degree, then coefficient indices."""
        return (len(self.coeffs), tuple(c.index() for c in self.coeffs))

    # -- plumbing -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == Polynomial(self.field, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return render(self, "x")

    def __repr__(self):
        return "Polynomial(%s, %s)" % (self.field, self)


def render(a: Polynomial, var: str = "x") -> str:
    """Render with explicit '*' and '^' so the CLI parser can read it back."""
    if a.is_zero():
        return "0"
    n = a.field.n
    terms = []
    for k in range(a.degree, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        cs = str(c)
        if n > 1 and "+" in cs and k > 0:
            cs = "(%s)" % cs
        if k == 0:
            terms.append(cs)
        else:
            xs = var if k == 1 else "%s^%d" % (var, k)
            terms.append(xs if cs == "1" else "%s*%s" % (cs, xs))
    return "+".join(terms)


def constant(field: FiniteField, c) -> Polynomial:
    return Polynomial(field, [c])


def x(field: FiniteField) -> Polynomial:
    return Polynomial(field, [0, 1])


def from_roots(field: FiniteField, roots) -> Polynomial:
    """The monic polynomial prod (x - r)^m for (root, multiplicity) pairs.

    Bare elements are accepted with multiplicity 1.
    """
    out = constant(field, 1)
    for item in roots:
        r, m = item if isinstance(item, tuple) else (item, 1)
        out = out * Polynomial(field, [-field.element(r), 1]) ** m
    return out


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    if a.field != b.field:
        raise FieldMismatchError("gcd of polynomials over different fields")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def powmod(a: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    """a^e reduced mod `mod`, by binary exponentiation."""
    result = constant(a.field, 1) % mod
    base = a % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


@dataclass(frozen=True)
class Factorization:
    """leading * prod(base^multiplicity) with monic, distinct, sorted bases."""

    leading: FieldElement
    factors: tuple[tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = constant(self.leading.field, self.leading)
        for base, mult in self.factors:
            out = out * base**mult
        return out

    def __iter__(self):
        return iter(self.factors)


def squarefree_decomposition(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic squarefree parts with multiplicities; product recovers a/leading.

    Handles the characteristic-p collapse: when the running derivative
    vanishes, the leftover is a p-th power whose root is extracted by
    mapping each coefficient through the inverse Frobenius c -> c^(p^(n-1)).
    """
    if a.is_zero():
        raise ZeroPolynomialError("cannot decompose the zero polynomial")
    field = a.field
    p = field.p
    a = a.monic()
    out: dict[int, Polynomial] = {}

    def accumulate(f: Polynomial, scale: int):
        if f.degree < 1:
            return
        d = f.derivative()
        if d.is_zero():
            accumulate(_pth_root(f), scale * p)
            return
        c = gcd(f, d)
        w = f // c
        mult = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                key = mult * scale
                out[key] = out.get(key, constant(field, 1)) * z
            w = y
            c = c // y
            mult += 1
        if c.degree > 0:
            accumulate(_pth_root(c), scale * p)

    accumulate(a, 1)
    parts = [(f.monic(), m) for m, f in out.items()]
    parts.sort(key=lambda item: (item[1], item[0].sort_key()))
    return parts


def _pth_root(a: Polynomial) -> Polynomial:
    """The p-th root of a polynomial all of whose exponents are multiples of p."""
    field = a.field
    p, n = field.p, field.n
    root_power = p ** (n - 1)
    out = []
    for k in range(0, a.degree + 1, p):
        out.append(a.coefficient(k) ** root_power)
    return Polynomial(field, out)


def _distinct_degree(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split a monic squarefree polynomial into (product, factor-degree) pieces."""
    field = a.field
    q = field.order
    out = []
    h = x(field) % a
    k = 0
    while a.degree >= 2 * (k + 1):
        k += 1
        h = powmod(h, q, a)
        g = gcd(h - x(field), a)
        if g.degree > 0:
            out.append((g, k))
            a = a // g
            h = h % a
    if a.degree > 0:
        out.append((a, a.degree))
    return out


def _equal_degree(a: Polynomial, k: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus splitting of a product of degree-k irreducibles."""
    if a.degree == k:
        return [a]
    field = a.field
    q = field.order
    while True:
        r = Polynomial(field, [field.from_index(rng.randrange(q))
                               for _ in range(a.degree)])
        if r.degree < 1:
            continue
        if field.p == 2:
            acc = r % a
            t = acc
            for _ in range(k * field.n - 1):
                t = t * t % a
                acc = (acc + t) % a
            s = acc
        else:
            s = powmod(r, (q**k - 1) // 2, a) - 1
        g = gcd(s, a)
        if 0 < g.degree < a.degree:
            return _equal_degree(g, k, rng) + _equal_degree(a // g, k, rng)


def factor(a: Polynomial, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles over the owner field.

    The seed drives only the internal equal-degree splitting; the result is
    canonical (bases sorted by degree, then coefficient tuple) regardless.
    """
    if a.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    leading = a.leading
    found: list[tuple[Polynomial, int]] = []
    for part, mult in squarefree_decomposition(a):
        for prod, k in _distinct_degree(part):
            for irr in _equal_degree(prod, k, rng):
                found.append((irr, mult))
    found.sort(key=lambda item: item[0].sort_key())
    return Factorization(leading, tuple(found))


def roots_in_field(a: Polynomial) -> list[FieldElement]:
    """Roots lying in the owner field, with multiplicity, in enumeration order.

    Exhaustive evaluation for fields of size <= 256; above that, the linear
    factors are isolated with gcd(a, x^q - x) and split.
    """
    if a.is_zero():
        raise ZeroPolynomialError("the zero polynomial has every root")
    field = a.field
    if field.order <= 256:
        out = []
        for r in field:
            if not a(r):
                mult = 0
                lin = Polynomial(field, [-r, 1])
                rest = a
                while True:
                    quo, rem = divmod(rest, lin)
                    if not rem.is_zero():
                        break
                    rest = quo
                    mult += 1
                out.extend([r] * mult)
        return out
    linear_part = gcd(powmod(x(field), field.order, a) - x(field), a)
    out = []
    if linear_part.degree >= 1:
        for irr in _equal_degree(linear_part, 1, random.Random(0)):
            root = -irr.coefficient(0)
            mult = 0
            rest = a
            while True:
                quo, rem = divmod(rest, irr)
                if not rem.is_zero():
                    break
                rest = quo
                mult += 1
            out.extend([root] * mult)
    out.sort(key=lambda r: r.index())
    return out


def is_irreducible(a: Polynomial) -> bool:
    """Rabin irreducibility test; constants are rejected."""
    if a.degree < 1:
        raise ZeroPolynomialError("irreducibility is undefined for constants")
    a = a.monic()
    n = a.degree
    field = a.field
    q = field.order
    h = x(field) % a
    for _ in range(n):
        h = powmod(h, q, a)
    if h != x(field) % a:
        return False
    divisors = set()
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            divisors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        divisors.add(m)
    for ell in divisors:
        h = x(field) % a
        for _ in range(n // ell):
            h = powmod(h, q, a)
        if gcd(h - x(field), a).degree != 0:
            return False
    return True


def random_irreducible(field: FiniteField, degree: int, seed: int = 0) -> Polynomial:
    """A random monic irreducible of the given degree, from a seeded draw."""
    if degree < 1:
        raise ValueError("degree must be positive")
    rng = random.Random(seed)
    while True:
        cand = Polynomial(
            field,
            [field.from_index(rng.randrange(field.order)) for _ in range(degree)]
            + [field.one],
        )
        if is_irreducible(cand):
            return cand
