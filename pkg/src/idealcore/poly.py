"""Multivariate polynomials over GF(p^e): term orders, monomials, exact
arithmetic and expression parsing/printing.

Terms are stored as an (n, d) int64 exponent matrix plus an n-vector of
encoded field coefficients, strictly sorted descending under the ring's term
order.  That layout feeds the reduction kernels directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import DegreeOverflowError, IdealCoreError, RingMismatchError, SpecError
from .gf import GF, SMALL_FIELD_FLOOR
import warnings

#: hard cap on total degree; ideal powers grow degrees predictably and a
#: silent exponent overflow would corrupt every downstream basis
DEGREE_CAP = 10**6

GREVLEX = "grevlex"
LEX = "lex"
BLOCK = "block"

_KIND_CODES = {GREVLEX: _kernels.K_GREVLEX, LEX: _kernels.K_LEX, BLOCK: _kernels.K_BLOCK}


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: grevlex, lex, or block elimination.

    The block order puts variables [0, split) strictly above the rest, with
    grevlex inside each block; it is what elimination steps require.
    """

    kind: str = GREVLEX
    split: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise IdealCoreError(f"unknown term order {self.kind!r}")
        if self.kind == BLOCK and self.split < 1:
            raise IdealCoreError("block order needs a positive split index")

    @property
    def code(self):
        return _KIND_CODES[self.kind]

    def sort_keys(self, exps):
        """Key columns, primary first; lexicographically larger = larger."""
        d = exps.shape[1]
        if self.kind == LEX:
            return [exps[:, v] for v in range(d)]
        if self.kind == GREVLEX:
            keys = [exps.sum(axis=1)]
            keys.extend(-exps[:, v] for v in reversed(range(d)))
            return keys
        keys = [exps[:, : self.split].sum(axis=1)]
        keys.extend(-exps[:, v] for v in reversed(range(self.split)))
        keys.append(exps[:, self.split :].sum(axis=1))
        keys.extend(-exps[:, v] for v in reversed(range(self.split, d)))
        return keys

    def key_tuple(self, row):
        """Comparison key of one exponent row, for Python-side sorting."""
        exps = np.asarray(row, dtype=np.int64).reshape(1, -1)
        return tuple(int(k[0]) for k in self.sort_keys(exps))

    def cmp(self, a, b):
        ka, kb = self.key_tuple(a), self.key_tuple(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Monomial:
    """A single power product; exponentwise operations only."""

    exponents: tuple

    @cached_property
    def total_degree(self):
        return sum(self.exponents)

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


class PolyRing:
    """Polynomial ring context: field, ordered variable names, term order."""

    def __init__(self, field: GF, names, order: TermOrder = TermOrder()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise IdealCoreError(f"duplicate variable names in {names}")
        if field.e > 1 and "a" in names:
            raise IdealCoreError(
                "variable name 'a' collides with the extension-field generator"
            )
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.order = order

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]"

    def with_order(self, order):
        return PolyRing(self.field, self.names, order)

    # -- constructors

    def zero(self):
        return Poly(self, np.zeros((0, self.nvars), np.int64), np.zeros(0, np.int64))

    def const(self, c):
        c = int(c)
        if c == 0:
            return self.zero()
        return Poly(
            self, np.zeros((1, self.nvars), np.int64), np.array([c], np.int64)
        )

    def one(self):
        return self.const(1)

    def from_int(self, n):
        return self.const(self.field.from_int(n))

    def gen(self, i):
        exps = np.zeros((1, self.nvars), np.int64)
        exps[0, i] = 1
        return Poly(self, exps, np.array([1], np.int64))

    def monomial(self, exponents, coeff=1):
        exps = np.asarray(exponents, dtype=np.int64).reshape(1, self.nvars)
        return Poly(self, exps.copy(), np.array([int(coeff)], np.int64))

    def from_terms(self, terms):
        """Build from an iterable of (coeff, exponent-tuple) pairs."""
        terms = list(terms)
        if not terms:
            return self.zero()
        exps = np.array([t[1] for t in terms], dtype=np.int64)
        coeffs = np.array([t[0] for t in terms], dtype=np.int64)
        return Poly(self, exps, coeffs, canonical=False)


class Poly:
    """Immutable polynomial; terms sorted strictly descending, no zeros."""

    __slots__ = ("ring", "exps", "coeffs")

    def __init__(self, ring, exps, coeffs, canonical=True):
        self.ring = ring
        if not canonical:
            exps, coeffs = _canonicalize(ring, exps, coeffs)
        self.exps = np.ascontiguousarray(exps, dtype=np.int64)
        self.coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)

    # -- inspection

    @property
    def nterms(self):
        return self.exps.shape[0]

    def is_zero(self):
        return self.nterms == 0

    def total_degree(self):
        if self.is_zero():
            return -1
        return int(self.exps.sum(axis=1).max())

    def lt_exps(self):
        return self.exps[0]

    def lc(self):
        return int(self.coeffs[0])

    def lm(self):
        return Monomial(tuple(int(v) for v in self.exps[0]))

    def terms(self):
        return [
            (int(c), tuple(int(v) for v in row))
            for c, row in zip(self.coeffs, self.exps)
        ]

    # -- arithmetic

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"operands in different rings: {self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other):
        self._check(other)
        exps = np.concatenate([self.exps, other.exps])
        coeffs = np.concatenate([self.coeffs, other.coeffs])
        return Poly(self.ring, exps, coeffs, canonical=False)

    def __neg__(self):
        if self.is_zero():
            return self
        return Poly(self.ring, self.exps, np.asarray(self.ring.field.neg(self.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by a field scalar."""
        c = int(c)
        if c == 0 or self.is_zero():
            return self.ring.zero()
        coeffs = np.asarray(self.ring.field.mul(self.coeffs, c))
        return Poly(self.ring, self.exps, coeffs)

    def shift(self, exponents, coeff=1):
        """Multiply by coeff * x^exponents (a single term)."""
        if self.is_zero() or coeff == 0:
            return self.ring.zero()
        exps = self.exps + np.asarray(exponents, dtype=np.int64)
        out = Poly(self.ring, exps, self.coeffs)
        if int(coeff) != 1:
            out = out.scale(coeff)
        return out

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        f, g = (self, other) if self.nterms >= other.nterms else (other, self)
        m, n = f.nterms, g.nterms
        fld = self.ring.field
        chunk = max(1, (1 << 22) // max(n, 1))
        pieces_e = []
        pieces_c = []
        for lo in range(0, m, chunk):
            fe = f.exps[lo : lo + chunk]
            fc = f.coeffs[lo : lo + chunk]
            exps = (fe[:, None, :] + g.exps[None, :, :]).reshape(-1, self.ring.nvars)
            coeffs = np.asarray(fld.mul(np.repeat(fc, n), np.tile(g.coeffs, len(fc))))
            pieces_e.append(exps)
            pieces_c.append(coeffs)
        exps = np.concatenate(pieces_e)
        coeffs = np.concatenate(pieces_c)
        if exps.shape[0] and int(exps.sum(axis=1).max()) > DEGREE_CAP:
            raise DegreeOverflowError(
                f"product degree exceeds the cap {DEGREE_CAP}"
            )
        return Poly(self.ring, exps, coeffs, canonical=False)

    def __pow__(self, n):
        if n < 0:
            raise IdealCoreError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.lc() == 1:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and np.array_equal(self.exps, other.exps)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.ring, self.exps.tobytes(), self.coeffs.tobytes()))

    # -- formatting

    def __str__(self):
        if self.is_zero():
            return "0"
        names = self.ring.names
        fld = self.ring.field
        parts = []
        for c, row in zip(self.coeffs, self.exps):
            factors = []
            for name, k in zip(names, row):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{int(k)}")
            cstr = fld.format_element(int(c))
            if "+" in cstr:
                cstr = f"({cstr})"
            if not factors:
                parts.append(cstr)
            elif cstr == "1":
                parts.append("*".join(factors))
            else:
                parts.append(cstr + "*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def _canonicalize(ring, exps, coeffs):
    """Sort descending, merge duplicate monomials, drop zero coefficients."""
    exps = np.asarray(exps, dtype=np.int64).reshape(-1, ring.nvars)
    coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1)
    nz = coeffs != 0
    if not nz.all():
        exps, coeffs = exps[nz], coeffs[nz]
    if exps.shape[0] == 0:
        return exps, coeffs
    keys = ring.order.sort_keys(exps)
    idx = np.lexsort(keys[::-1])[::-1]
    exps, coeffs = exps[idx], coeffs[idx]
    dup = np.zeros(exps.shape[0], dtype=bool)
    dup[1:] = (exps[1:] == exps[:-1]).all(axis=1)
    if dup.any():
        group = np.cumsum(~dup) - 1
        ngroups = int(group[-1]) + 1
        fld = ring.field
        merged = np.zeros(ngroups, dtype=np.int64)
        mult = 1
        cc = coeffs.copy()
        for _ in range(fld.e):
            digit = np.zeros(ngroups, dtype=np.int64)
            np.add.at(digit, group, cc % fld.p)
            merged += (digit % fld.p) * mult
            cc //= fld.p
            mult *= fld.p
        first = ~dup
        exps = exps[first]
        coeffs = merged
        nz = coeffs != 0
        exps, coeffs = exps[nz], coeffs[nz]
    return exps, coeffs


def random_linear_combination(gens, rng):
    """A random k-linear combination of the given polynomials.

    Returns (poly, lambdas); the coefficient vector is recorded so runs are
    reproducible from the seed alone.
    """
    if not gens:
        raise IdealCoreError("empty generator list")
    ring = gens[0].ring
    if ring.field.q < SMALL_FIELD_FLOOR:
        warnings.warn(
            f"sampling over {ring.field!r} (size {ring.field.q}) is below the "
            f"genericity threshold; proceeding anyway",
            stacklevel=2,
        )
    lambdas = ring.field.random_elements(rng, len(gens))
    out = ring.zero()
    for lam, g in zip(lambdas, gens):
        out = out + g.scale(int(lam))
    return out, tuple(int(x) for x in lambdas)


# -- expression parsing -------------------------------------------------------


def parse_poly(ring, text, line=None):
    """Parse an infix polynomial expression over the given ring.

    `^` denotes powers, `*` is optional between factors, and `a` names the
    extension-field generator when e > 1.  Only declared variables may occur.
    """
    tokens = _tokenize(ring, text, line)
    parser = _Parser(ring, tokens, text, line)
    result = parser.parse_expr()
    parser.expect_end()
    return result


def _tokenize(ring, text, line):
    names = sorted(ring.names, key=len, reverse=True)
    gen_ok = ring.field.e > 1
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in "+-*^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        matched = None
        for name in names:
            if text.startswith(name, i):
                matched = name
                break
        if matched is None and gen_ok and text.startswith("a", i):
            matched = "a"
        if matched is None:
            raise SpecError(
                f"unexpected symbol {text[i:].split()[0]!r} (declared variables: "
                f"{', '.join(ring.names)})",
                line=line,
                column=i + 1,
            )
        tokens.append(("name", matched, i))
        i += len(matched)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ring, tokens, text, line):
        self.ring = ring
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg):
        tok = self.tokens[min(self.pos, len(self.tokens) - 1)]
        raise SpecError(msg, line=self.line, column=tok[2] + 1)

    def expect_end(self):
        if self.peek()[0] != "end":
            self.error(f"unexpected trailing input at {self.peek()[1]!r}")

    def parse_expr(self):
        negate = False
        if self.peek()[0] in ("+", "-"):
            negate = self.advance()[0] == "-"
        result = self.parse_term()
        if negate:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            term = self.parse_term()
            result = result - term if op == "-" else result + term
        return result

    def parse_term(self):
        result = self.parse_factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                result = result * self.parse_factor()
            elif kind in ("int", "name", "("):
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self):
        base = self.parse_atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.advance()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer")
            base = base ** tok[1]
        return base

    def parse_atom(self):
        tok = self.advance()
        if tok[0] == "int":
            return self.ring.from_int(tok[1])
        if tok[0] == "name":
            if tok[1] == "a" and "a" not in self.ring.names:
                # extension-field generator as a constant
                return self.ring.const(self.ring.field.p)
            return self.ring.gen(self.ring.names.index(tok[1]))
        if tok[0] == "(":
            inner = self.parse_expr()
            if self.advance()[0] != ")":
                self.error("missing closing parenthesis")
            return inner
        self.pos -= 1
        self.error(f"unexpected token {tok[1]!r}")
