"""Groebner bases: multivariate division, Buchberger's algorithm, reduced
bases, membership and ideal equality.

A reduced basis is a canonical form: two ideals are equal iff their reduced
bases under the same order are term-for-term identical.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegreeOverflowError, RingMismatchError
from .poly import DEGREE_CAP, Poly, PolyRing


def _flatten(polys, nvars):
    offs = np.zeros(len(polys) + 1, np.int64)
    for i, g in enumerate(polys):
        offs[i + 1] = offs[i] + g.nterms
    if not polys:
        return (
            np.zeros((0, nvars), np.int64),
            np.zeros(0, np.int64),
            offs,
        )
    be = np.concatenate([g.exps for g in polys])
    bc = np.concatenate([g.coeffs for g in polys])
    return np.ascontiguousarray(be), np.ascontiguousarray(bc), offs


def normal_form(f, divisors):
    """Fully reduced remainder of f modulo the divisor list.

    Deterministic in the list order: the first divisor whose leading term
    divides the current lead is used.
    """
    divisors = [g for g in divisors if not g.is_zero()]
    if f.is_zero() or not divisors:
        return f
    ring = f.ring
    for g in divisors:
        if g.ring != ring:
            raise RingMismatchError("normal_form operands in different rings")
    be, bc, offs = _flatten(divisors, ring.nvars)
    fld = ring.field
    re_, rc = _kernels.normal_form(
        f.exps,
        f.coeffs,
        be,
        bc,
        offs,
        ring.order.code,
        ring.order.split,
        fld.p,
        fld.e,
        fld.log,
        fld.exp,
        fld.q - 1,
    )
    return Poly(ring, re_, rc)


def divide_exact(f, g):
    """Quotient of f by g when the division is exact; error otherwise."""
    if f.is_zero():
        return f
    ring = f.ring
    fld = ring.field
    qe, qc, re_, rc = _kernels.divide_single(
        f.exps,
        f.coeffs,
        g.exps,
        g.coeffs,
        ring.order.code,
        ring.order.split,
        fld.p,
        fld.e,
        fld.log,
        fld.exp,
        fld.q - 1,
    )
    if len(rc) != 0:
        raise ArithmeticError("non-exact division: internal inconsistency")
    return Poly(ring, qe, qc, canonical=False)


def s_polynomial(f, g):
    lcm = np.maximum(f.lt_exps(), g.lt_exps())
    fld = f.ring.field
    a = f.shift(lcm - f.lt_exps(), fld.inv(f.lc()))
    b = g.shift(lcm - g.lt_exps(), fld.inv(g.lc()))
    return a - b


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple
    reduced_flag: bool = True

    @property
    def order(self):
        return self.ring.order

    def contains(self, f):
        return normal_form(f, list(self.elements)).is_zero()

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0].total_degree() == 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def is_member(f, gb: GroebnerBasis):
    return gb.contains(f)


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis):
    if a.ring != b.ring:
        raise RingMismatchError("comparing bases over different rings/orders")
    return a.elements == b.elements


def interreduce(polys):
    """Reduce each element against the others until a fixpoint; the result is
    monic and auto-reduced (the tail of the reduced-basis computation)."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    while True:
        changed = False
        out = []
        for i, g in enumerate(polys):
            divisors = out + polys[i + 1 :]
            h = normal_form(g, divisors)
            if h.is_zero():
                changed = True
                continue
            h = h.monic()
            if h != g:
                changed = True
            out.append(h)
        polys = out
        if not changed:
            return polys


def buchberger(gens, ring=None):
    """Reduced Groebner basis of (gens) under the ring's term order.

    Normal pair-selection strategy (smallest lcm first) with the coprime and
    chain criteria; interreduction runs after the pair queue empties.
    """
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer ring from an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators in different rings")
    if not gens:
        return GroebnerBasis(ring, ())
    basis = []
    seen = set()
    for g in gens:
        g = g.monic()
        key = (g.exps.tobytes(), g.coeffs.tobytes())
        if key not in seen:
            seen.add(key)
            basis.append(g)
    order = ring.order
    heap = []
    pending = set()
    flat = None  # lazily rebuilt flattened basis for the reduction kernel
    # leading exponents of the current basis as one matrix, so the pair
    # criteria are single vectorized comparisons instead of per-element loops
    lt_mat = np.empty((max(64, len(basis)), ring.nvars), dtype=np.int64)
    for idx, g in enumerate(basis):
        lt_mat[idx] = g.lt_exps()

    def push_pairs(j):
        if not j:
            return
        lcms = np.maximum(lt_mat[:j], lt_mat[j])
        degs = lcms.sum(axis=1)
        for i in range(j):
            heapq.heappush(heap, (int(degs[i]), lcms[i].tobytes(), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        deg, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        if deg > DEGREE_CAP:
            raise DegreeOverflowError(
                f"degree overflow in S-pair of generators {i} and {j}"
            )
        lt_i = lt_mat[i]
        lt_j = lt_mat[j]
        # coprime leading terms: the S-polynomial reduces to zero
        if not np.minimum(lt_i, lt_j).any():
            continue
        # chain criterion
        lcm = np.maximum(lt_i, lt_j)
        m = len(basis)
        divides = (lt_mat[:m] <= lcm).all(axis=1)
        divides[i] = divides[j] = False
        skip = False
        for k in np.nonzero(divides)[0]:
            k = int(k)
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                skip = True
                break
        if skip:
            continue
        if flat is None:
            flat = _flatten(basis, ring.nvars)
        sp = s_polynomial(basis[i], basis[j])
        fld = ring.field
        re_, rc = _kernels.normal_form(
            sp.exps, sp.coeffs, flat[0], flat[1], flat[2],
            order.code, order.split, fld.p, fld.e, fld.log, fld.exp, fld.q - 1,
        )
        h = Poly(ring, re_, rc)
        if h.is_zero():
            continue
        flat = None
        basis.append(h.monic())
        if len(basis) > lt_mat.shape[0]:
            lt_mat = np.vstack([lt_mat, np.empty_like(lt_mat)])
        lt_mat[len(basis) - 1] = basis[-1].lt_exps()
        push_pairs(len(basis) - 1)

    reduced = interreduce(basis)
    reduced.sort(key=lambda g: order.key_tuple(g.lt_exps()))
    return GroebnerBasis(ring, tuple(reduced))
