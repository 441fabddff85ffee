"""Hot inner loops: GF(p^e) scalar arithmetic, monomial comparison and the
polynomial division/normal-form kernels.

Everything here is written as plain int64/ndarray loops so the same code runs
either jitted through numba (the default) or as pure Python, selected once at
import time by the environment flag ``IDEALCORE_PURE_PYTHON=1``.
"""
from __future__ import annotations

import os

import numpy as np

NUMBA_ENABLED = os.environ.get("IDEALCORE_PURE_PYTHON", "") != "1"

if NUMBA_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda func: func


# term order kind codes shared with poly.TermOrder
K_GREVLEX = 0
K_LEX = 1
K_BLOCK = 2


@njit(cache=True)
def gf_add(a, b, p, e):
    """Digitwise base-p addition of encoded GF(p^e) elements."""
    if p == 2:
        return a ^ b
    res = 0
    mult = 1
    for _ in range(e):
        res += ((a % p) + (b % p)) % p * mult
        a //= p
        b //= p
        mult *= p
    return res


@njit(cache=True)
def gf_neg(a, p, e):
    if p == 2:
        return a
    res = 0
    mult = 1
    for _ in range(e):
        res += (p - a % p) % p * mult
        a //= p
        mult *= p
    return res


@njit(cache=True)
def gf_mul(a, b, log, exp):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit(cache=True)
def gf_inv(a, log, exp, qm1):
    return exp[qm1 - log[a]]


@njit(cache=True)
def ext_mul(a, b, p, e, mod_digits):
    """Product of encoded elements, reducing by the (monic) field modulus.

    ``mod_digits`` holds the ascending coefficients m_0..m_{e-1}; t^e is
    rewritten as -(m_0 + m_1 t + ... + m_{e-1} t^{e-1}).
    """
    da = np.zeros(e, np.int64)
    db = np.zeros(e, np.int64)
    for i in range(e):
        da[i] = a % p
        a //= p
        db[i] = b % p
        b //= p
    prod = np.zeros(2 * e - 1, np.int64)
    for i in range(e):
        if da[i] == 0:
            continue
        for j in range(e):
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p
    for i in range(2 * e - 2, e - 1, -1):
        c = prod[i]
        if c == 0:
            continue
        prod[i] = 0
        for j in range(e):
            prod[i - e + j] = (prod[i - e + j] - c * mod_digits[j]) % p
    res = 0
    mult = 1
    for i in range(e):
        res += prod[i] * mult
        mult *= p
    return res


@njit(cache=True)
def ext_pow(a, n, p, e, mod_digits):
    res = 1
    base = a
    while n > 0:
        if n & 1:
            res = ext_mul(res, base, p, e, mod_digits)
        base = ext_mul(base, base, p, e, mod_digits)
        n >>= 1
    return res


@njit(cache=True)
def build_tables(p, e, q, mod_digits, gen):
    """Discrete log/antilog tables for GF(p^e) w.r.t. the generator ``gen``.

    exp has length 2*(q-1) so products of two logs index without a modulo.
    """
    exp = np.zeros(2 * (q - 1), np.int64)
    log = np.full(q, -1, np.int64)
    acc = 1
    for i in range(q - 1):
        exp[i] = acc
        exp[i + q - 1] = acc
        log[acc] = i
        acc = ext_mul(acc, gen, p, e, mod_digits)
    return exp, log


@njit(cache=True)
def mono_cmp(A, i, B, j, d, kind, split):
    """Compare monomials A[i] and B[j]: 1 if A[i] > B[j], -1 if <, 0 if =."""
    if kind == K_LEX:
        for v in range(d):
            if A[i, v] != B[j, v]:
                return 1 if A[i, v] > B[j, v] else -1
        return 0
    nblocks = 2 if kind == K_BLOCK else 1
    for blk in range(nblocks):
        if kind == K_BLOCK:
            lo = 0 if blk == 0 else split
            hi = split if blk == 0 else d
        else:
            lo = 0
            hi = d
        da = 0
        db = 0
        for v in range(lo, hi):
            da += A[i, v]
            db += B[j, v]
        if da != db:
            return 1 if da > db else -1
        for v in range(hi - 1, lo - 1, -1):
            if A[i, v] != B[j, v]:
                # graded reverse lex: smaller exponent in the last differing
                # position wins
                return 1 if A[i, v] < B[j, v] else -1
    return 0


@njit(cache=True)
def _divisible(be, s, we, i, d):
    for v in range(d):
        if be[s, v] > we[i, v]:
            return False
    return True


@njit(cache=True)
def normal_form(fe, fc, be, bc, offs, kind, split, p, e, log, exp, qm1):
    """Full normal form of f modulo the flattened polynomial list (be, bc, offs).

    Term arrays are sorted descending under the active order; the remainder is
    returned in the same form.  Divisor search follows list order, so the
    result is deterministic in the given generator order.
    """
    d = fe.shape[1]
    nb = offs.shape[0] - 1
    nw = fe.shape[0]
    cap = max(16, 2 * nw)
    we = np.empty((cap, d), np.int64)
    wc = np.empty(cap, np.int64)
    we[:nw] = fe
    wc[:nw] = fc
    rcap = 16
    re_ = np.empty((rcap, d), np.int64)
    rc = np.empty(rcap, np.int64)
    nr = 0
    qexp = np.empty(d, np.int64)
    while nw > 0:
        red = -1
        for g in range(nb):
            if _divisible(be, offs[g], we, 0, d):
                red = g
                break
        if red < 0:
            if nr == rcap:
                rcap *= 2
                re2 = np.empty((rcap, d), np.int64)
                rc2 = np.empty(rcap, np.int64)
                re2[:nr] = re_[:nr]
                rc2[:nr] = rc[:nr]
                re_ = re2
                rc = rc2
            re_[nr] = we[0]
            rc[nr] = wc[0]
            nr += 1
            we = we[1:]
            wc = wc[1:]
            nw -= 1
            continue
        s = offs[red]
        t = offs[red + 1]
        for v in range(d):
            qexp[v] = we[0, v] - be[s, v]
        c = gf_mul(wc[0], gf_inv(bc[s], log, exp, qm1), log, exp)
        # merge work[1:] with -c * x^qexp * tail(g); the leads cancel exactly
        glen = t - s - 1
        need = nw - 1 + glen
        ncap = cap
        while ncap < need:
            ncap *= 2
        me = np.empty((ncap, d), np.int64)
        mc = np.empty(ncap, np.int64)
        iw = 1
        ig = s + 1
        nm = 0
        while iw < nw or ig < t:
            if iw >= nw:
                take = 1  # take from g
            elif ig >= t:
                take = 0  # take from work
            else:
                cres = 0
                # compare we[iw] against be[ig] + qexp
                if kind == K_LEX:
                    for v in range(d):
                        x = we[iw, v]
                        y = be[ig, v] + qexp[v]
                        if x != y:
                            cres = 1 if x > y else -1
                            break
                else:
                    nblocks = 2 if kind == K_BLOCK else 1
                    for blk in range(nblocks):
                        if kind == K_BLOCK:
                            lo = 0 if blk == 0 else split
                            hi = split if blk == 0 else d
                        else:
                            lo = 0
                            hi = d
                        da = 0
                        db = 0
                        for v in range(lo, hi):
                            da += we[iw, v]
                            db += be[ig, v] + qexp[v]
                        if da != db:
                            cres = 1 if da > db else -1
                            break
                        for v in range(hi - 1, lo - 1, -1):
                            x = we[iw, v]
                            y = be[ig, v] + qexp[v]
                            if x != y:
                                cres = 1 if x < y else -1
                                break
                        if cres != 0:
                            break
                if cres > 0:
                    take = 0
                elif cres < 0:
                    take = 1
                else:
                    take = 2  # equal monomials: combine
            if take == 0:
                me[nm] = we[iw]
                mc[nm] = wc[iw]
                nm += 1
                iw += 1
            elif take == 1:
                coeff = gf_neg(gf_mul(c, bc[ig], log, exp), p, e)
                for v in range(d):
                    me[nm, v] = be[ig, v] + qexp[v]
                mc[nm] = coeff
                nm += 1
                ig += 1
            else:
                coeff = gf_add(
                    wc[iw], gf_neg(gf_mul(c, bc[ig], log, exp), p, e), p, e
                )
                if coeff != 0:
                    me[nm] = we[iw]
                    mc[nm] = coeff
                    nm += 1
                iw += 1
                ig += 1
        we = me
        wc = mc
        nw = nm
        cap = ncap
    return re_[:nr], rc[:nr]


@njit(cache=True)
def divide_single(fe, fc, ge, gc, kind, split, p, e, log, exp, qm1):
    """Divide f by a single polynomial g, returning (quotient, remainder)."""
    d = fe.shape[1]
    offs = np.empty(2, np.int64)
    offs[0] = 0
    offs[1] = ge.shape[0]
    nw = fe.shape[0]
    we = fe.copy()
    wc = fc.copy()
    qcap = 16
    qe = np.empty((qcap, d), np.int64)
    qc = np.empty(qcap, np.int64)
    nq = 0
    rcap = 16
    re_ = np.empty((rcap, d), np.int64)
    rc = np.empty(rcap, np.int64)
    nr = 0
    qexp = np.empty(d, np.int64)
    while nw > 0:
        if not _divisible(ge, 0, we, 0, d):
            if nr == rcap:
                rcap *= 2
                re2 = np.empty((rcap, d), np.int64)
                rc2 = np.empty(rcap, np.int64)
                re2[:nr] = re_[:nr]
                rc2[:nr] = rc[:nr]
                re_ = re2
                rc = rc2
            re_[nr] = we[0]
            rc[nr] = wc[0]
            nr += 1
            we = we[1:]
            wc = wc[1:]
            nw -= 1
            continue
        for v in range(d):
            qexp[v] = we[0, v] - ge[0, v]
        c = gf_mul(wc[0], gf_inv(gc[0], log, exp, qm1), log, exp)
        if nq == qcap:
            qcap *= 2
            qe2 = np.empty((qcap, d), np.int64)
            qc2 = np.empty(qcap, np.int64)
            qe2[:nq] = qe[:nq]
            qc2[:nq] = qc[:nq]
            qe = qe2
            qc = qc2
        qe[nq] = qexp
        qc[nq] = c
        nq += 1
        # subtract c * x^qexp * g from the work polynomial
        sube = np.empty((ge.shape[0], d), np.int64)
        subc = np.empty(ge.shape[0], np.int64)
        for i in range(ge.shape[0]):
            for v in range(d):
                sube[i, v] = ge[i, v] + qexp[v]
            subc[i] = gf_neg(gf_mul(c, gc[i], log, exp), p, e)
        # merge (skip the cancelled leads)
        nm = 0
        me = np.empty((nw - 1 + ge.shape[0] - 1, d), np.int64)
        mc = np.empty(nw - 1 + ge.shape[0] - 1, np.int64)
        iw = 1
        ig = 1
        while iw < nw or ig < ge.shape[0]:
            if iw >= nw:
                take = 1
            elif ig >= ge.shape[0]:
                take = 0
            else:
                cres = mono_cmp(we, iw, sube, ig, d, kind, split)
                take = 0 if cres > 0 else (1 if cres < 0 else 2)
            if take == 0:
                me[nm] = we[iw]
                mc[nm] = wc[iw]
                nm += 1
                iw += 1
            elif take == 1:
                me[nm] = sube[ig]
                mc[nm] = subc[ig]
                nm += 1
                ig += 1
            else:
                coeff = gf_add(wc[iw], subc[ig], p, e)
                if coeff != 0:
                    me[nm] = we[iw]
                    mc[nm] = coeff
                    nm += 1
                iw += 1
                ig += 1
        we = me[:nm]
        wc = mc[:nm]
        nw = nm
    return qe[:nq], qc[:nq], re_[:nr], rc[:nr]
