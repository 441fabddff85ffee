"""Exact arithmetic in GF(p^e).

Elements are encoded as integers in [0, p^e): the base-p digits are the
coordinates with respect to the power basis of the field modulus.  All
multiplicative structure goes through discrete log/antilog tables built once
per field, so the per-operation cost is a table lookup; addition is digitwise
mod p (XOR when p = 2).  Scalar and ndarray arguments are both accepted.
"""
from __future__ import annotations

import math
import warnings

import numpy as np

from . import _kernels
from .errors import IdealCoreError

#: largest field size for which log tables are built
MAX_TABLE_FIELD = 1 << 20
#: fields smaller than this are flagged as unreliable for genericity
SMALL_FIELD_FLOOR = 1 << 10

# verified irreducible moduli (ascending coefficients, monic) for defaults;
# anything not listed is found by the deterministic search below
_BUILTIN_MODULI = {
    (2, 16): (1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}

_DEFAULT_EXT_DEGREE = {2: 16, 3: 11, 5: 7, 7: 6}


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial arithmetic over GF(p), used only for modulus validation


def _ptrim(f):
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def _pmulmod(f, g, mod, p):
    res = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                res[i + j] = (res[i + j] + a * b) % p
    return _pdivmod(res, mod, p)[1]


def _pdivmod(f, g, p):
    f = list(f)
    dg = len(_ptrim(tuple(g))) - 1
    ginv = pow(g[dg], p - 2, p)
    quo = [0] * max(len(f) - dg, 1)
    while len(_ptrim(tuple(f))) - 1 >= dg and _ptrim(tuple(f)):
        df = len(_ptrim(tuple(f))) - 1
        c = f[df] * ginv % p
        quo[df - dg] = c
        for j in range(dg + 1):
            f[df - dg + j] = (f[df - dg + j] - c * g[j]) % p
    return tuple(quo), tuple(_ptrim(tuple(f)))


def _pgcd(f, g, p):
    f, g = _ptrim(tuple(f)), _ptrim(tuple(g))
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    return f


def _ppowmod_x(k, mod, p):
    """x^(p^k) mod ``mod`` by repeated p-th powers."""
    res = (0, 1)  # x
    for _ in range(k):
        acc = (1,)
        base = res
        n = p
        while n:
            if n & 1:
                acc = _pmulmod(acc, base, mod, p)
            base = _pmulmod(base, base, mod, p)
            n >>= 1
        res = acc
    return res


def is_irreducible(modulus, p):
    """Deterministic irreducibility test for a monic polynomial over GF(p).

    Degree <= 3 uses the root test (sufficient there); larger degrees use
    Rabin's criterion.
    """
    mod = tuple(c % p for c in modulus)
    e = len(mod) - 1
    if e < 1 or mod[e] != 1:
        return False
    if e == 1:
        return True
    if e <= 3:
        for c in range(p):
            if sum(a * pow(c, i, p) for i, a in enumerate(mod)) % p == 0:
                return False
        return True
    xq = _ppowmod_x(e, mod, p)
    # x^(p^e) == x mod f
    diff = list(xq) + [0] * max(0, 2 - len(xq))
    diff[1] = (diff[1] - 1) % p
    if _ptrim(tuple(diff)):
        return False
    for ell in _prime_factors(e):
        xk = _ppowmod_x(e // ell, mod, p)
        diff = list(xk) + [0] * max(0, 2 - len(xk))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(diff, mod, p)) != 1:
            return False
    return True


def find_irreducible(p, e):
    """Smallest-encoding monic irreducible polynomial of degree e over GF(p)."""
    if (p, e) in _BUILTIN_MODULI:
        return _BUILTIN_MODULI[(p, e)]
    if e == 1:
        return (0, 1)
    for code in range(1, p**e):
        digits = []
        c = code
        for _ in range(e):
            digits.append(c % p)
            c //= p
        cand = tuple(digits) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise IdealCoreError(f"no irreducible polynomial of degree {e} over GF({p})")


def default_ext_degree(p):
    """Extension degree making p^e >= 2^16 (reliable genericity)."""
    if p in _DEFAULT_EXT_DEGREE:
        return _DEFAULT_EXT_DEGREE[p]
    e = 1
    while p**e < (1 << 16):
        e += 1
    return e


class GF:
    """The field GF(p^e) with table-based exact arithmetic."""

    def __init__(self, p, e=1, modulus=None):
        if not is_prime(p):
            raise IdealCoreError(f"characteristic {p} is not prime")
        if e < 1:
            raise IdealCoreError(f"extension degree must be >= 1, got {e}")
        q = p**e
        if q > MAX_TABLE_FIELD:
            raise IdealCoreError(
                f"field size {p}^{e} exceeds the table-arithmetic cap 2^20"
            )
        if modulus is None:
            modulus = find_irreducible(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[e] != 1:
            raise IdealCoreError(
                f"modulus must be monic of degree {e}, got {modulus}"
            )
        if not is_irreducible(modulus, p):
            raise IdealCoreError(f"modulus {modulus} is reducible over GF({p})")
        self.p = int(p)
        self.e = int(e)
        self.q = int(q)
        self.modulus = modulus
        if q < SMALL_FIELD_FLOOR:
            warnings.warn(
                f"GF({p}^{e}) has only {q} elements, below the genericity "
                f"threshold 2^10; general-position sampling may be unreliable",
                stacklevel=2,
            )
        self._mod_digits = np.array(modulus[:e], dtype=np.int64)
        self.generator = self._find_generator()
        self.exp, self.log = _kernels.build_tables(
            self.p, self.e, self.q, self._mod_digits, self.generator
        )

    # -- construction helpers

    def _scalar_mul_raw(self, a, b):
        return _kernels.ext_mul(a, b, self.p, self.e, self._mod_digits)

    def _find_generator(self):
        if self.q == 2:
            return 1
        factors = _prime_factors(self.q - 1)
        start = 2 if self.e == 1 else self.p  # skip prime-subfield constants
        for g in range(start, self.q):
            if all(
                _kernels.ext_pow(
                    g, (self.q - 1) // ell, self.p, self.e, self._mod_digits
                )
                != 1
                for ell in factors
            ):
                return g
        raise IdealCoreError("no multiplicative generator found")  # pragma: no cover

    # -- element codec

    def coords(self, a):
        """Base-p digit vector (power-basis coordinates) of an element."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coords(self, coords):
        if len(coords) > self.e:
            raise IdealCoreError("too many coordinates")
        a = 0
        for c in reversed(coords):
            a = a * self.p + c % self.p
        return a

    def from_int(self, n):
        """Embed an integer via the prime subfield."""
        return n % self.p

    # -- arithmetic (scalars or int64 ndarrays)

    @staticmethod
    def _unwrap(res, *args):
        if all(np.isscalar(a) or isinstance(a, (int, np.integer)) for a in args):
            return int(res)
        return res

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        aa = np.asarray(a, dtype=np.int64)
        bb = np.asarray(b, dtype=np.int64)
        res = np.zeros(np.broadcast(aa, bb).shape, dtype=np.int64)
        mult = 1
        for _ in range(self.e):
            res += ((aa % self.p) + (bb % self.p)) % self.p * mult
            aa = aa // self.p
            bb = bb // self.p
            mult *= self.p
        return self._unwrap(res, a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        aa = np.asarray(a, dtype=np.int64)
        res = np.zeros(aa.shape, dtype=np.int64)
        mult = 1
        for _ in range(self.e):
            res += (self.p - aa % self.p) % self.p * mult
            aa = aa // self.p
            mult *= self.p
        return self._unwrap(res, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        aa = np.asarray(a, dtype=np.int64)
        bb = np.asarray(b, dtype=np.int64)
        shape = np.broadcast(aa, bb).shape
        aa = np.broadcast_to(aa, shape)
        bb = np.broadcast_to(bb, shape)
        res = np.zeros(shape, dtype=np.int64)
        nz = (aa != 0) & (bb != 0)
        res[nz] = self.exp[self.log[aa[nz]] + self.log[bb[nz]]]
        return self._unwrap(res, a, b)

    def inv(self, a):
        aa = np.asarray(a, dtype=np.int64)
        if np.any(aa == 0):
            raise ZeroDivisionError("zero divisor")
        res = self.exp[(self.q - 1) - self.log[aa]]
        return self._unwrap(res, a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(int(self.log[a]) * n) % (self.q - 1)])

    def random_elements(self, rng, size=None):
        return rng.integers(0, self.q, size=size, dtype=np.int64)

    # -- formatting

    def format_element(self, a):
        if self.e == 1:
            return str(int(a))
        if a == 0:
            return "0"
        parts = []
        for i in reversed(range(self.e)):
            digit = (a // self.p**i) % self.p
            if digit == 0:
                continue
            if i == 0:
                parts.append(str(digit))
            else:
                var = "a" if i == 1 else f"a^{i}"
                parts.append(var if digit == 1 else f"{digit}{var}")
        return "+".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"


_FIELD_CACHE: dict = {}


def gf(p, e=1, modulus=None):
    """Cached field constructor (table building is done once per field)."""
    key = (p, e, tuple(modulus) if modulus is not None else None)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = GF(p, e, modulus)
    return _FIELD_CACHE[key]


def field_arith(field, a, b, op):
    """Dispatch one exact field operation; op in {add, sub, mul, div}."""
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    raise IdealCoreError(f"unknown field operation {op!r}")


def binomial_mod_p(n, k, p):
    """C(n, k) mod p by Lucas' theorem (digitwise in base p)."""
    if k < 0 or k > n:
        raise IdealCoreError("invalid binomial")
    res = 1
    while n or k:
        ni, n = n % p, n // p
        ki, k = k % p, k // p
        if ki > ni:
            return 0
        res = res * math.comb(ni, ki) % p
    return res
