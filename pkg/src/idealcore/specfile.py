"""Line-oriented problem description files.

Grammar (one statement per line, `#` starts a comment):

    char = 2
    ext_degree = 16            # optional; defaulted per characteristic
    modulus = t^16+t^5+t^3+t^2+1   # optional override, polynomial in t
    vars = x, y, z
    quotient = z^3             # optional, comma-separated; empty means none
    seed = 42                  # optional run options
    repeats = 2
    n = 2
    n_max = 20
    t_max = 25
    window = 3
    ideal I = x^2, y^2, x*z, y*z

Unknown keys are rejected; errors carry line/column positions.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import SpecError
from .gf import default_ext_degree, gf, is_prime
from .ideals import Ideal, RingSpec

_INT_KEYS = ("char", "ext_degree", "seed", "repeats", "n", "n_max", "t_max", "window")
_OPTION_KEYS = ("seed", "repeats", "n", "n_max", "t_max", "window")
_ALL_KEYS = set(_INT_KEYS) | {"modulus", "vars", "quotient"}

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_MOD_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(?:t(?:\^(\d+))?)?$")


def _parse_modulus(text, line):
    """Polynomial in t with integer coefficients -> ascending digit tuple."""
    digits = {}
    for raw in text.replace("-", "+-").split("+"):
        term = raw.strip().replace(" ", "")
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        m = _MOD_TERM_RE.match(term)
        if not m or (m.group(1) is None and "t" not in term):
            raise SpecError(f"cannot parse modulus term {raw.strip()!r}", line=line)
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if "t" in term:
            deg = int(m.group(2)) if m.group(2) is not None else 1
        else:
            deg = 0
        digits[deg] = digits.get(deg, 0) + (-coeff if neg else coeff)
    if not digits:
        raise SpecError("empty modulus", line=line)
    top = max(digits)
    return tuple(digits.get(k, 0) for k in range(top + 1))


def _format_modulus(digits):
    parts = []
    for deg in range(len(digits) - 1, -1, -1):
        c = digits[deg]
        if c == 0:
            continue
        if deg == 0:
            parts.append(str(c))
        else:
            var = "t" if deg == 1 else f"t^{deg}"
            parts.append(var if c == 1 else f"{c}*{var}")
    return "+".join(parts)


@dataclass
class SpecFile:
    """Parsed problem description: field, ring, named ideals and run options."""

    char: int
    ext_degree: int | None = None
    modulus: tuple | None = None
    vars: tuple = ()
    quotient: tuple = ()
    ideals: dict = field(default_factory=dict)  # name -> tuple of strings
    options: dict = field(default_factory=dict)

    def ring(self) -> RingSpec:
        e = self.ext_degree
        if e is None:
            e = default_ext_degree(self.char)
        fld = gf(self.char, e, self.modulus)
        return RingSpec(fld, self.vars, quotient=self.quotient)

    def ideal(self, ring: RingSpec, name: str) -> Ideal:
        if name not in self.ideals:
            raise SpecError(f"ideal {name!r} is not defined in the spec file")
        return ring.ideal(*self.ideals[name])


def parse_spec(text: str) -> SpecFile:
    """Parse spec-file text (or a path's contents) into a SpecFile."""
    seen = {}
    ideals = {}
    ideal_lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SpecError("expected 'key = value'", line=lineno, column=1)
        key, value = (part.strip() for part in line.split("=", 1))
        if key.startswith("ideal"):
            name = key[len("ideal"):].strip()
            if not _NAME_RE.match(name):
                raise SpecError(f"bad ideal name {name!r}", line=lineno, column=1)
            if name in ideals:
                raise SpecError(f"duplicate ideal {name!r}", line=lineno, column=1)
            gens = tuple(g.strip() for g in value.split(",") if g.strip())
            if not gens:
                raise SpecError(f"ideal {name!r} has no generators", line=lineno)
            ideals[name] = gens
            ideal_lines[name] = lineno
            continue
        if key not in _ALL_KEYS:
            raise SpecError(f"unknown key {key!r}", line=lineno, column=1)
        if key in seen:
            raise SpecError(f"duplicate key {key!r}", line=lineno, column=1)
        seen[key] = (value, lineno)

    if "char" not in seen:
        raise SpecError("missing required key 'char'")
    if "vars" not in seen:
        raise SpecError("missing required key 'vars'")

    def intval(key):
        value, lineno = seen[key]
        try:
            return int(value)
        except ValueError:
            raise SpecError(f"{key} must be an integer, got {value!r}", line=lineno)

    p = intval("char")
    if not is_prime(p):
        raise SpecError(f"char must be prime, got {p}", line=seen["char"][1])
    spec = SpecFile(char=p)
    if "ext_degree" in seen:
        spec.ext_degree = intval("ext_degree")
        if spec.ext_degree < 1:
            raise SpecError("ext_degree must be positive", line=seen["ext_degree"][1])
    if "modulus" in seen:
        spec.modulus = _parse_modulus(*seen["modulus"])
    names = tuple(v.strip() for v in seen["vars"][0].split(",") if v.strip())
    if not names:
        raise SpecError("vars must list at least one variable", line=seen["vars"][1])
    spec.vars = names
    if "quotient" in seen:
        spec.quotient = tuple(
            q.strip() for q in seen["quotient"][0].split(",") if q.strip()
        )
    for key in _OPTION_KEYS:
        if key in seen:
            spec.options[key] = intval(key)
    spec.ideals = ideals

    # Validate ring, quotient and ideal polynomials eagerly so errors carry
    # the offending line number.
    try:
        ring = spec.ring()
    except SpecError:
        raise
    except Exception as exc:
        lineno = seen.get("quotient", (None, seen["vars"][1]))[1]
        raise SpecError(str(exc), line=lineno)
    for name, gens in ideals.items():
        try:
            ring.ideal(*gens)
        except SpecError as exc:
            raise SpecError(
                f"in ideal {name!r}: {exc.args[0]}", line=ideal_lines[name]
            )
    return spec


def parse_spec_file(path: str) -> SpecFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


def print_spec(spec: SpecFile) -> str:
    """Canonical text form; parse_spec(print_spec(s)) == s."""
    lines = [f"char = {spec.char}"]
    if spec.ext_degree is not None:
        lines.append(f"ext_degree = {spec.ext_degree}")
    if spec.modulus is not None:
        lines.append(f"modulus = {_format_modulus(spec.modulus)}")
    lines.append("vars = " + ", ".join(spec.vars))
    if spec.quotient:
        lines.append("quotient = " + ", ".join(spec.quotient))
    for key in _OPTION_KEYS:
        if key in spec.options:
            lines.append(f"{key} = {spec.options[key]}")
    for name, gens in spec.ideals.items():
        lines.append(f"ideal {name} = " + ", ".join(gens))
    return "\n".join(lines) + "\n"
