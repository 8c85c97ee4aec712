"""Arithmetic in finite fields F_p and explicit extensions F_{p^n}.

An extension is presented as F_p[y]/(m(y)) where m is the lexicographically
least monic irreducible polynomial of degree n over F_p, coefficients
compared most-significant first.  That convention makes every field, and
therefore every printed element, reproducible across runs without a table
of Conway polynomials.  Elements store their coordinate vector with
respect to the power basis 1, t, ..., t^(n-1) of t = y mod m; prime fields
(n = 1) skip modulus reduction entirely.

An embedding F_{p^m} -> F_{p^n} (for m | n) sends the small generator to
the lexicographically least root of the small modulus in the big field.
The choice is fixed per ordered pair of fields but is NOT guaranteed to be
compatible across towers of three or more fields; nothing in this package
needs more than a base field plus one extension at a time.
"""

from __future__ import annotations

import functools

from .errors import (
    FieldMismatchError,
    GeneratorUnavailableError,
    NotASubfieldError,
    NotPrimeError,
)

#: Largest supported field size; keeps element indices inside machine words.
MAX_FIELD_ORDER = 2**62


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Minimal F_p[y] arithmetic on plain int lists, used only to find the
# canonical modulus.  General polynomial arithmetic lives in poly.py; this
# copy keeps the field constructor self-contained and gives the test suite
# an independent irreducibility route to check poly.is_irreducible against.


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _fp_rem(_fp_trim(prod), mod, p)


def _fp_rem(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        q = a[-1] * inv_lead % p
        for i, mi in enumerate(mod):
            a[shift + i] = (a[shift + i] - q * mi) % p
        _fp_trim(a)
    return a


def _fp_powmod(a, e, mod, p):
    result = [1]
    base = _fp_rem(a, mod, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, mod, p)
        base = _fp_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a = _fp_rem(a, b, p)
        a, b = b, a
    return a


def _fp_is_irreducible(f, p):
    """Rabin test for a monic polynomial over F_p given as an int list."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    h = x
    for _ in range(n):
        h = _fp_powmod(h, p, f, p)
    if _fp_sub_int(h, x, p):
        return False
    for ell in _prime_divisors(n):
        h = x
        for _ in range(n // ell):
            h = _fp_powmod(h, p, f, p)
        g = _fp_gcd(_fp_sub_int(h, x, p), f, p)
        if len(g) != 1:
            return False
    return True


def _lex_least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Canonical modulus: least monic irreducible of degree n over F_p.

    Candidates y^n + c_{n-1} y^{n-1} + ... + c_0 are tried in ascending
    lexicographic order of (c_{n-1}, ..., c_0).
    """
    for idx in range(p**n):
        coeffs = [(idx // p**i) % p for i in range(n)]
        cand = coeffs + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError("no irreducible of degree %d over F_%d" % (n, p))


# ---------------------------------------------------------------------------


class FieldElement:
    """An element of a :class:`FiniteField`, as coordinates over F_p."""

    __slots__ = ("field", "coords")

    def __init__(self, field: "FiniteField", coords: tuple[int, ...]):
        self.field = field
        self.coords = coords

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    "cannot mix elements of %r and %r" % (self.field, other.field)
                )
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coords, o.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coords, o.coords))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "FieldElement":
        return self.field._inv(self)

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self, iterations: int = 1) -> "FieldElement":
        """The image under the p-power Frobenius applied `iterations` times."""
        m = iterations % self.field.n
        out = self
        for _ in range(m):
            out = out ** self.field.p
        return out

    def in_subfield(self, m: int) -> bool:
        """True iff the element lies in the subfield F_{p^m}; needs m | n."""
        if self.field.n % m != 0:
            raise NotASubfieldError(
                "F_%d^%d has no subfield of degree %d" % (self.field.p, self.field.n, m)
            )
        return self.frobenius(m) == self

    def index(self) -> int:
        """Position of the element in the field's enumeration order."""
        p = self.field.p
        out = 0
        for c in reversed(self.coords):
            out = out * p + c
        return out

    # -- plumbing -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, int):
            return self.coords == self.field.element(other).coords
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __str__(self):
        terms = []
        for i in range(self.field.n - 1, -1, -1):
            c = self.coords[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else "%d*t" % c)
            else:
                terms.append("t^%d" % i if c == 1 else "%d*t^%d" % (c, i))
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return "%s(%s)" % (self.field, self)


class FiniteField:
    """The finite field F_{p^n} with the canonical modulus.

    Use :func:`make_field` rather than the constructor; repeated calls with
    the same (p, n) return the identical object.
    """

    __slots__ = ("p", "n", "order", "modulus", "_red", "_hash")

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = modulus
        self._hash = hash((p, n, modulus))
        # x^k mod modulus for k = n .. 2n-2, as coordinate tuples
        red = []
        if n > 1:
            cur = [(-modulus[i]) % p for i in range(n)]
            red.append(tuple(cur))
            for _ in range(n - 2):
                nxt = [0] + cur[:-1]
                carry = cur[-1]
                if carry:
                    for i in range(n):
                        nxt[i] = (nxt[i] - carry * modulus[i]) % p
                cur = nxt
                red.append(tuple(cur))
        self._red = tuple(red)

    # -- element constructors ------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int (a residue) or coordinate sequence to an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element of %r is not in %r" % (value.field, self))
            return value
        if isinstance(value, int):
            coords = [value % self.p] + [0] * (self.n - 1)
            return FieldElement(self, tuple(coords))
        coords = [int(c) % self.p for c in value]
        if len(coords) > self.n:
            raise ValueError("coordinate vector longer than extension degree")
        coords += [0] * (self.n - len(coords))
        return FieldElement(self, tuple(coords))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def gen(self) -> FieldElement:
        """The power-basis generator t; unavailable in prime fields."""
        if self.n == 1:
            raise GeneratorUnavailableError("F_%d has no extension generator" % self.p)
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def from_index(self, idx: int) -> FieldElement:
        if not 0 <= idx < self.order:
            raise ValueError("index out of range")
        p = self.p
        coords = []
        for _ in range(self.n):
            coords.append(idx % p)
            idx //= p
        return FieldElement(self, tuple(coords))

    # -- internal arithmetic -------------------------------------------

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p, n = self.p, self.n
        if n == 1:
            return FieldElement(self, (a.coords[0] * b.coords[0] % p,))
        ac, bc = a.coords, b.coords
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    prod[i + j] += ai * bj
        out = [c % p for c in prod[:n]]
        for k in range(n, 2 * n - 1):
            c = prod[k] % p
            if c:
                row = self._red[k - n]
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % p
        return FieldElement(self, tuple(out))

    def _inv(self, a: FieldElement) -> FieldElement:
        if not a:
            raise ZeroDivisionError("inverse of zero in %r" % self)
        p, n = self.p, self.n
        if n == 1:
            return FieldElement(self, (pow(a.coords[0], p - 2, p),))
        # extended Euclid in F_p[y] against the modulus
        r0, r1 = list(self.modulus), _fp_trim(list(a.coords))
        s0, s1 = [], [1]
        while r1:
            q, r = _fp_divmod_int(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub_int(s0, _fp_mul_int(q, s1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        inv = [c * lead_inv % p for c in s0]
        inv += [0] * (n - len(inv))
        return FieldElement(self, tuple(inv[:n]))

    # -- container protocol ---------------------------------------------

    def __iter__(self):
        for idx in range(self.order):
            yield self.from_index(idx)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if isinstance(other, FiniteField):
            return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.n == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d)" % (self.p, self.n)

    def modulus_string(self) -> str:
        """The defining polynomial rendered in the variable y."""
        if self.n == 1:
            return "y"
        terms = []
        for i in range(self.n, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("y" if c == 1 else "%d*y" % c)
            else:
                terms.append("y^%d" % i if c == 1 else "%d*y^%d" % (c, i))
        return "+".join(terms)


def _fp_mul_int(a, b, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _fp_trim(prod)


def _fp_sub_int(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _fp_trim(out)


def _fp_divmod_int(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _fp_trim(a)
    return _fp_trim(q), a


def make_field(p: int, n: int = 1) -> FiniteField:
    """Construct F_{p^n} with the canonical (lex-least) modulus.

    Deterministic: equal inputs return the identical descriptor object.
    """
    return _make_field(p, n)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, n: int) -> FiniteField:
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if not _is_prime(p):
        raise NotPrimeError("%d is not prime" % p)
    if p**n > MAX_FIELD_ORDER:
        raise OverflowError("field order %d^%d exceeds 2^62" % (p, n))
    if n == 1:
        return FiniteField(p, 1, (0, 1))
    return FiniteField(p, n, _lex_least_irreducible(p, n))


def enumerate_field(field: FiniteField):
    """All elements of the field exactly once, in enumeration order.

    The order is ascending lexicographic on the coordinate tuple read
    most-significant first, starting at 0; equivalently ascending
    :meth:`FieldElement.index`.
    """
    return iter(field)


_EMBED_CACHE: dict[tuple[FiniteField, FiniteField], tuple] = {}
_PROJECT_CACHE: dict[tuple[FiniteField, FiniteField], dict] = {}


def _embedding_powers(src: FiniteField, dst: FiniteField):
    """Images of 1, t_src, t_src^2, ... under the canonical embedding."""
    key = (src, dst)
    cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached
    from . import poly  # deferred: poly depends on this module

    modulus_in_dst = poly.Polynomial(dst, [int(c) for c in src.modulus])
    roots = poly.roots_in_field(modulus_in_dst)
    if not roots:
        raise NotASubfieldError(
            "modulus of %r has no root in %r" % (src, dst)
        )
    root = min(roots, key=lambda r: r.index())
    powers = [dst.one]
    for _ in range(src.n - 1):
        powers.append(powers[-1] * root)
    cached = tuple(powers)
    _EMBED_CACHE[key] = cached
    return cached


def embed(a: FieldElement, target: FiniteField) -> FieldElement:
    """Map an element of F_{p^m} into F_{p^n} along the canonical embedding.

    Requires m | n.  The embedding sends the source generator to the
    lexicographically least root of the source modulus in the target and
    is fixed per ordered pair of fields.
    """
    src = a.field
    if src == target:
        return a
    if src.p != target.p or target.n % src.n != 0:
        raise NotASubfieldError("%r is not a subfield of %r" % (src, target))
    if src.n == 1:
        return target.element(a.coords[0])
    powers = _embedding_powers(src, target)
    out = target.zero
    for c, tp in zip(a.coords, powers):
        if c:
            out = out + tp * c
    return out


def project_to_subfield(a: FieldElement, m: int) -> FieldElement:
    """The preimage of `a` in F_{p^m} under the canonical embedding.

    Requires that `a` actually lies in the embedded copy of F_{p^m}.
    """
    big = a.field
    if big.n == m:
        return a
    if big.n % m != 0:
        raise NotASubfieldError("no subfield of degree %d in %r" % (m, big))
    small = make_field(big.p, m)
    key = (small, big)
    table = _PROJECT_CACHE.get(key)
    if table is None:
        table = {embed(b, big): b for b in small}
        _PROJECT_CACHE[key] = table
    try:
        return table[a]
    except KeyError:
        raise NotASubfieldError("%r does not lie in the subfield F_%d^%d"
                                % (a, big.p, m)) from None
