"""Vectorized scanning kernel for exhaustive standard-form enumerations.

Everything here works on element *indices* (positions in a field's
enumeration order) so that whole coefficient grids can be pushed through
numpy at once: field addition and multiplication become table lookups via
fancy indexing.  Candidates are standard-form pairs (g, h) for a fixed
degree d, laid out stratum by stratum: for each h-degree e, g is monic of
degree d with a zero coefficient at x^e and h is monic of degree e, and
the free coefficients are the base-q digits of a candidate id.  The object
model in scan.py walks candidates in exactly this order, which keeps the
two routes interchangeable and cross-checkable.

The kernel answers one narrow question: which candidates have a monic
Wronskian equal to one of a list of target polynomials.  For squarefree
targets that filter also implies coprimality of the pair (a common factor
u would contribute u^2 to the Wronskian), so the kernel refuses
non-squarefree targets; callers route those through the object path.
"""

from __future__ import annotations

import numpy as np

from . import poly
from .gf import FiniteField

#: Cap on table-driven fields; every kernel field in the package is <= 49.
MAX_TABLE_ORDER = 1024

_CHUNK = 1 << 18

_TABLE_CACHE: dict[FiniteField, "FieldTables"] = {}


class FieldTables:
    """Index-based add/mul/neg tables for a small field."""

    def __init__(self, field: FiniteField):
        q = field.order
        if q > MAX_TABLE_ORDER:
            raise ValueError("field too large for table-driven scanning")
        elems = list(field)
        add = np.empty((q, q), dtype=np.int16)
        mul = np.empty((q, q), dtype=np.int16)
        for i, a in enumerate(elems):
            for j in range(i, q):
                b = elems[j]
                s = (a + b).index()
                m = (a * b).index()
                add[i, j] = add[j, i] = s
                mul[i, j] = mul[j, i] = m
        self.field = field
        self.add = add
        self.mul = mul
        self.neg = np.array([(-a).index() for a in elems], dtype=np.int16)


def tables_for(field: FiniteField) -> FieldTables:
    t = _TABLE_CACHE.get(field)
    if t is None:
        t = FieldTables(field)
        _TABLE_CACHE[field] = t
    return t


def _zero_scalar(v) -> bool:
    return not isinstance(v, np.ndarray) and v == 0


def _mul(t, a, b):
    if _zero_scalar(a) or _zero_scalar(b):
        return 0
    return t.mul[a, b]


def _add(t, a, b):
    if _zero_scalar(a):
        return b
    if _zero_scalar(b):
        return a
    return t.add[a, b]


def _sub(t, a, b):
    if _zero_scalar(b):
        return a
    return _add(t, a, t.neg[b])


def _poly_mul(t, a, b):
    """Schoolbook product of coefficient lists whose entries are scalar
    indices or index arrays; the zero polynomial is the empty list."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            term = _mul(t, ai, bj)
            out[i + j] = _add(t, out[i + j], term)
    return out


def _derivative(t, coeffs, p):
    out = []
    for k in range(1, len(coeffs)):
        m = k % p
        if m == 0:
            out.append(0)
        elif m == 1:
            out.append(coeffs[k])
        else:
            out.append(_mul(t, m, coeffs[k]))
    return out


def stratum_sizes(q: int, degree: int) -> list[int]:
    return [q ** (degree - 1 + e) for e in range(degree)]


def candidate_count(q: int, degree: int) -> int:
    return sum(stratum_sizes(q, degree))


def decode_candidate(q: int, degree: int, e: int, cid: int):
    """The coefficient index tuples (g, h) for a candidate id in stratum e."""
    digits = []
    rest = cid
    for _ in range(degree - 1 + e):
        digits.append(rest % q)
        rest //= q
    g = []
    pos = 0
    for k in range(degree):
        if k == e:
            g.append(0)
        else:
            g.append(digits[pos])
            pos += 1
    g.append(1)
    h = digits[degree - 1:] + [1]
    return tuple(g), tuple(h)


def scan_wronskian_targets(field: FiniteField, degree: int, targets):
    """All standard-form candidates whose monic Wronskian is one of `targets`.

    `targets` are monic squarefree polynomials over `field`.  Yields
    (target_position, e, candidate_id); candidates come out in scan order
    (stratum, then id), so results are deterministic.
    """
    for target in targets:
        if not target.is_monic():
            raise ValueError("targets must be monic")
        if target.degree > 0 and poly.gcd(target, target.derivative()).degree != 0:
            raise ValueError("kernel targets must be squarefree")
    t = tables_for(field)
    q = field.order
    p = field.p
    target_idx = [tuple(c.index() for c in w.coeffs) for w in targets]
    for e in range(degree):
        nfree = degree - 1 + e
        total = q**nfree
        gpos = [k for k in range(degree) if k != e]
        for lo in range(0, total, _CHUNK):
            ids = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
            cols = [((ids // q**j) % q).astype(np.int16) for j in range(nfree)]
            g = [0] * (degree + 1)
            g[degree] = 1
            for j, k in enumerate(gpos):
                g[k] = cols[j]
            h = [0] * (e + 1)
            h[e] = 1
            for j in range(e):
                h[j] = cols[degree - 1 + j]
            dg = _derivative(t, g, p)
            dh = _derivative(t, h, p)
            left = _poly_mul(t, h, dg)
            right = _poly_mul(t, g, dh)
            width = max(len(left), len(right), degree + e)
            wr = []
            for k in range(width):
                a = left[k] if k < len(left) else 0
                b = right[k] if k < len(right) else 0
                wr.append(_sub(t, a, b))
            for pos, tgt in enumerate(target_idx):
                w = len(tgt) - 1
                if w >= width:
                    continue  # Wronskian degree is at most d+e-1 in this stratum
                mask = np.ones(len(ids), dtype=bool)
                for k in range(w + 1, width):
                    mask &= np.asarray(wr[k] == 0)
                alpha = wr[w]
                mask &= np.asarray(alpha != 0)
                if not mask.any():
                    continue
                for k in range(w):
                    want = _mul(t, alpha, tgt[k])
                    mask &= np.asarray(wr[k] == want)
                    if not mask.any():
                        break
                for cid in ids[mask]:
                    yield pos, e, int(cid)
