"""Ideal arithmetic in R = P/Q for a polynomial ring P over GF(p^e) and a
quotient ideal Q.

Ideals are represented by generator lifts in P; every derived quantity goes
through the cached reduced Groebner basis of (gens ∪ Q), so results are
independent of the particular generator list.  All implemented workflows deal
with m-primary ideals (m the irrelevant maximal ideal), for which the affine
computation agrees with the localized one.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import IdealCoreError, NonLocalInputError, RingMismatchError
from .groebner import GroebnerBasis, buchberger, divide_exact, ideal_equal, normal_form
from .poly import BLOCK, GREVLEX, Poly, PolyRing, TermOrder, parse_poly

#: reserved name of the auxiliary elimination variable
_AUX = "@t"


class RingSpec:
    """Ambient ring R = k[x_1..x_d]/Q with distinguished maximal ideal
    m = (x_1, .., x_d)."""

    def __init__(self, field, names, quotient=()):
        self.poly_ring = PolyRing(field, names)
        qgens = []
        for q in quotient:
            if isinstance(q, str):
                q = parse_poly(self.poly_ring, q)
            elif q.ring != self.poly_ring:
                raise RingMismatchError("quotient generator in a different ring")
            if not q.is_zero():
                qgens.append(q)
        self.quotient_gens = tuple(qgens)
        if self.quotient_gb.is_unit_ideal():
            raise IdealCoreError("quotient ideal is the unit ideal")

    @property
    def field(self):
        return self.poly_ring.field

    @property
    def names(self):
        return self.poly_ring.names

    @property
    def nvars(self):
        return self.poly_ring.nvars

    @cached_property
    def quotient_gb(self):
        return buchberger(list(self.quotient_gens), ring=self.poly_ring)

    @cached_property
    def dim(self):
        """Krull dimension of R."""
        return krull_dim(self.zero_ideal())

    def zero_ideal(self):
        return Ideal(self, ())

    def unit_ideal(self):
        return Ideal(self, (self.poly_ring.one(),))

    @cached_property
    def maximal_ideal(self):
        return Ideal(self, tuple(self.poly_ring.gen(i) for i in range(self.nvars)))

    def parse(self, text):
        return parse_poly(self.poly_ring, text)

    def ideal(self, *gens):
        return Ideal(
            self,
            tuple(self.parse(g) if isinstance(g, str) else g for g in gens),
        )

    def __eq__(self, other):
        return (
            isinstance(other, RingSpec)
            and self.poly_ring == other.poly_ring
            and self.quotient_gens == other.quotient_gens
        )

    def __hash__(self):
        return hash((self.poly_ring, self.quotient_gens))

    def __repr__(self):
        base = f"{self.field!r}[{','.join(self.names)}]"
        if self.quotient_gens:
            return f"{base}/({', '.join(str(q) for q in self.quotient_gens)})"
        return base


class Ideal:
    """Finitely generated ideal of R, given by generator lifts in P."""

    def __init__(self, ring: RingSpec, gens):
        self.ring = ring
        checked = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring.poly_ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                checked.append(g)
        self.gens = tuple(checked)
        self._powers = {}

    @cached_property
    def gb(self) -> GroebnerBasis:
        return buchberger(
            list(self.gens) + list(self.ring.quotient_gens), ring=self.ring.poly_ring
        )

    def contains(self, f):
        if isinstance(f, str):
            f = self.ring.parse(f)
        return self.gb.contains(f)

    def contains_ideal(self, other):
        return all(self.gb.contains(g) for g in other.gens)

    def equals(self, other):
        self._check(other)
        return ideal_equal(self.gb, other.gb)

    def is_unit(self):
        return self.gb.is_unit_ideal()

    def is_zero(self):
        return all(self.ring.quotient_gb.contains(g) for g in self.gens)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("ideals over different rings")

    def generator_strings(self):
        return [str(g) for g in self.gens]

    def groebner_strings(self):
        return [str(g) for g in self.gb]

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def _trim_gens(ring: RingSpec, polys):
    """Drop generators that visibly lie in the ideal of the ones kept so far
    (division by the kept list and the quotient relations).  Sound but not a
    full redundancy test; it is what keeps power() from blowing up."""
    reduced = []
    qdivs = list(ring.quotient_gb.elements)
    for g in polys:
        h = normal_form(g, qdivs)
        if not h.is_zero():
            reduced.append(h.monic())
    reduced.sort(
        key=lambda g: (g.total_degree(), ring.poly_ring.order.key_tuple(g.lt_exps()))
    )
    kept = []
    for g in reduced:
        if kept and normal_form(g, kept + qdivs).is_zero():
            continue
        kept.append(g)
    return kept


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    a._check(b)
    return Ideal(a.ring, a.gens + b.gens)


def product(a: Ideal, b: Ideal) -> Ideal:
    a._check(b)
    prods = [f * g for f in a.gens for g in b.gens]
    return Ideal(a.ring, _trim_gens(a.ring, prods))


def power(a: Ideal, n: int) -> Ideal:
    if n < 0:
        raise IdealCoreError("negative ideal power")
    if n == 0:
        return a.ring.unit_ideal()
    if n == 1:
        return a
    if n not in a._powers:
        a._powers[n] = product(power(a, n - 1), a)
    return a._powers[n]


def _ext_ring(poly_ring: PolyRing) -> PolyRing:
    return PolyRing(
        poly_ring.field, (_AUX,) + poly_ring.names, TermOrder(BLOCK, 1)
    )


def _to_ext(f: Poly, ext: PolyRing) -> Poly:
    exps = np.zeros((f.nterms, ext.nvars), np.int64)
    exps[:, 1:] = f.exps
    return Poly(ext, exps, f.coeffs, canonical=False)


def _from_ext(f: Poly, poly_ring: PolyRing) -> Poly:
    return Poly(poly_ring, f.exps[:, 1:], f.coeffs, canonical=False)


def _intersect_lists(poly_ring: PolyRing, gens_a, gens_b):
    """Generators of (gens_a) ∩ (gens_b) as ideals of P, by eliminating an
    auxiliary variable t from t·gens_a ∪ (1-t)·gens_b."""
    ext = _ext_ring(poly_ring)
    t = ext.gen(0)
    one_minus_t = ext.one() - t
    egens = [t * _to_ext(g, ext) for g in gens_a]
    egens += [one_minus_t * _to_ext(g, ext) for g in gens_b]
    gb = buchberger(egens, ring=ext)
    kept = [g for g in gb if int(g.exps[:, 0].max(initial=0)) == 0]
    return [_from_ext(g, poly_ring) for g in kept]


def intersect(a: Ideal, b: Ideal) -> Ideal:
    a._check(b)
    ring = a.ring
    quo = list(ring.quotient_gens)
    gens = _intersect_lists(
        ring.poly_ring, list(a.gens) + quo, list(b.gens) + quo
    )
    return Ideal(ring, _trim_gens(ring, gens))


def colon(a: Ideal, b: Ideal) -> Ideal:
    """The colon ideal a : b = { f | f·b ⊆ a }.

    Computed per generator of b as (Ā ∩ (g)) / g on lifts in P, where
    Ā = a + Q; the division is exact in P because the intersection is with
    the principal P-ideal (g)."""
    a._check(b)
    ring = a.ring
    # Work from the reduced GBs: canonical, and usually far fewer and simpler
    # generators than the raw lists (b's quotient-member elements are zero in
    # R and contribute nothing to the colon).
    bgens = [g for g in b.gb if not ring.quotient_gb.contains(g)]
    if not bgens:
        raise IdealCoreError("colon by the zero ideal")
    # the reduced GB is usually the best elimination input (interreduced,
    # simple), but for high powers of many-generator ideals it can be an
    # order of magnitude larger than the raw generators — switch only then
    raw_a = list(a.gens) + list(ring.quotient_gens)
    lifted_a = raw_a if len(a.gb) > 3 * len(raw_a) else list(a.gb)
    result = None
    for g in bgens:
        inter = _intersect_lists(ring.poly_ring, lifted_a, [g])
        quots = [divide_exact(h, g) for h in inter]
        part = Ideal(ring, _trim_gens(ring, quots))
        result = part if result is None else intersect(result, part)
        # ∩_{i<=k} (a : g_i) ⊇ a : b always; once the partial result
        # multiplies every generator of b back into a it is contained in
        # a : b too, so the remaining generators cannot shrink it further
        if all(
            a.gb.contains(r * g2) for r in result.gens for g2 in bgens
        ):
            break
    # local-to-affine soundness witness: colons of m-primary ideals stay
    # m-primary (or become the unit ideal)
    if is_m_primary(a):
        if not (result.is_unit() or is_m_primary(result)):
            raise NonLocalInputError(
                "colon of an m-primary ideal produced a non-m-primary result"
            )
    return result


def _pure_powers(ring: RingSpec, n: int) -> Ideal:
    """(x_1^n, .., x_d^n); same radical m as m^n but only d generators."""
    pring = ring.poly_ring
    gens = []
    for i in range(ring.nvars):
        e = np.zeros(ring.nvars, dtype=np.int64)
        e[i] = n
        gens.append(pring.monomial(e))
    return Ideal(ring, tuple(gens))


def local_part(a: Ideal, n_cap: int = 512) -> Ideal:
    """Canonical representative of a·R_m: the m-primary component, computed
    as a + (x_1^N, .., x_d^N) for the least stabilizing power-of-two N
    (Nakayama: stabilizing from N to 2N forces every x_i^N into a locally,
    so the sum equals a·R_m ∩ R).  Requires a to be m-primary after
    localization, which holds for every ideal derived here from m-primary
    inputs; ideals that are already m-primary (or unit) are their own
    local part."""
    cached = getattr(a, "_local_part", None)
    if cached is not None:
        return cached
    if a.gb.is_unit_ideal() or is_m_primary(a):
        a._local_part = a
        return a
    n = 8
    cur = ideal_sum(a, _pure_powers(a.ring, n))
    while n <= n_cap:
        nxt = ideal_sum(a, _pure_powers(a.ring, 2 * n))
        if cur.equals(nxt):
            cur._local_part = cur
            a._local_part = cur
            return cur
        cur = nxt
        n *= 2
    raise NonLocalInputError(
        "non-local input: ideal has a positive-dimensional component through "
        "the origin; localization semantics not guaranteed"
    )


def local_equal(a: Ideal, b: Ideal) -> bool:
    """Equality of a·R_m and b·R_m; the affine comparison is a fast path."""
    a._check(b)
    if a.equals(b):
        return True
    return local_part(a).equals(local_part(b))


def local_contains(big: Ideal, small: Ideal) -> bool:
    """small·R_m ⊆ big·R_m; the affine test is a fast path."""
    big._check(small)
    if big.contains_ideal(small):
        return True
    return local_part(big).contains_ideal(local_part(small))


def krull_dim(a: Ideal) -> int:
    """Krull dimension of R/a, from the staircase of the leading-term ideal:
    the largest set of variables S such that no minimal generator of the
    leading-term ideal is supported inside S."""
    gb = a.gb
    if gb.is_unit_ideal():
        raise IdealCoreError("empty variety")
    d = a.ring.nvars
    supports = [frozenset(int(v) for v in np.nonzero(g.lt_exps())[0]) for g in gb]
    best = 0
    for mask in range(1 << d):
        s = {v for v in range(d) if mask >> v & 1}
        if any(sup <= s for sup in supports):
            continue
        best = max(best, len(s))
    return best


def _staircase_count(a: Ideal) -> int:
    """dim_k R/a (number of standard monomials); requires krull_dim(a) = 0."""
    gb = a.gb
    lts = np.array([g.lt_exps() for g in gb], dtype=np.int64)
    caps = []
    d = a.ring.nvars
    for i in range(d):
        pure = lts[(lts[:, np.arange(d) != i] == 0).all(axis=1), i]
        caps.append(int(pure.min()))
    count = 0
    stack = [(0, np.zeros(d, dtype=np.int64))]
    while stack:
        i, acc = stack.pop()
        if i == d:
            if not (lts <= acc).all(axis=1).any():
                count += 1
            continue
        for v in range(caps[i]):
            e = acc.copy()
            e[i] = v
            stack.append((i + 1, e))
    return count


def is_m_primary(a: Ideal) -> bool:
    """True iff rad(a ∪ Q) = m: finitely many standard monomials AND every
    variable is nilpotent modulo the ideal (zero-dimensionality alone admits
    zeros away from the origin when generators are inhomogeneous)."""
    cached = getattr(a, "_is_m_primary", None)
    if cached is not None:
        return cached
    result = _is_m_primary(a)
    a._is_m_primary = result
    return result


def _is_m_primary(a: Ideal) -> bool:
    if krull_dim(a) != 0:
        return False
    # homogeneous zero-dimensional ideals vanish only at the origin
    if all(
        g.is_zero() or np.unique(g.exps.sum(axis=1)).size == 1 for g in a.gb
    ):
        return True
    deg = _staircase_count(a)
    ring = a.ring.poly_ring
    for i in range(a.ring.nvars):
        e = np.zeros(a.ring.nvars, dtype=np.int64)
        e[i] = deg
        if not a.contains(ring.monomial(e)):
            return False
    return True


def height(a: Ideal) -> int:
    """ht a = dim R - dim R/a (equidimensional catenary convention)."""
    return a.ring.dim - krull_dim(a)


def require_m_primary(a: Ideal, what="ideal"):
    if not is_m_primary(a):
        raise NonLocalInputError(
            f"non-local input: {what} not m-primary; localization semantics "
            f"not guaranteed"
        )
