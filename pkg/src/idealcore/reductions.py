"""Reduction theory: general elements, general minimal reductions, reduction
numbers, analytic spread for m-primary ideals, and the colon-stabilization
threshold s.

"General" over a finite field is operationalized by seeded sampling plus a
cross-seed agreement protocol: every generically-defined quantity is computed
``repeats`` times with independently derived sub-seeds and must agree exactly.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import GenericityError, IdealCoreError
from .gf import SMALL_FIELD_FLOOR
from .ideals import (
    Ideal,
    RingSpec,
    ideal_sum,
    is_m_primary,
    local_equal,
    local_part,
    power,
    product,
)
from .poly import random_linear_combination


@dataclass
class GeneralElementConfig:
    """Seeding and protocol knobs for all randomized 'general' computations."""

    seed: int
    repeats: int = 2
    field_floor: int = SMALL_FIELD_FLOOR
    n_max: int = 20
    t_max: int = 25
    log: list = dc_field(default_factory=list)

    def __post_init__(self):
        if self.repeats < 2:
            raise IdealCoreError("genericity protocol needs repeats >= 2")

    def rng(self, *tags):
        """Deterministic sub-stream derived from (seed, tags)."""
        entropy = [int(self.seed) & 0xFFFFFFFFFFFFFFFF]
        for t in tags:
            if isinstance(t, str):
                entropy.append(zlib.crc32(t.encode()))
            else:
                entropy.append(int(t) & 0xFFFFFFFFFFFFFFFF)
        return np.random.default_rng(np.random.SeedSequence(entropy))

    def record(self, event, **info):
        self.log.append({"event": event, **info})


@dataclass
class ReductionDatum:
    """A verified reduction J of I together with r_J(I) and the coefficient
    matrix of the sampled general elements."""

    J: Ideal
    I: Ideal
    r: int
    generators_used: tuple


def general_elements(I: Ideal, t: int, cfg: GeneralElementConfig, *tags):
    """t general elements of I: random k-linear combinations of the
    generators, with the lambda matrix recorded.  Deterministic in cfg.seed."""
    if not I.gens:
        raise IdealCoreError("general elements of the zero ideal")
    rng = cfg.rng("general_elements", *tags)
    elements = []
    lambdas = []
    for _ in range(t):
        b, lam = random_linear_combination(list(I.gens), rng)
        elements.append(b)
        lambdas.append(lam)
    return elements, tuple(lambdas)


def analytic_spread(I: Ideal) -> int:
    """ℓ(I); for m-primary ideals this equals dim R."""
    if not is_m_primary(I):
        raise IdealCoreError(
            "analytic spread implemented only for m-primary ideals"
        )
    return I.ring.dim


def reduction_number(J: Ideal, I: Ideal, n_max: int = 20) -> int:
    """Least n with I^(n+1) = J·I^n in the localization at m, checked by
    reduced-basis identity (affine identity as the fast path; equal
    m-primary components otherwise, which matters when I is not generated
    in a single degree)."""
    J._check(I)
    if not I.contains_ideal(J):
        raise IdealCoreError("J is not contained in I")
    for n in range(n_max + 1):
        if local_equal(power(I, n + 1), product(J, power(I, n))):
            return n
    raise IdealCoreError(
        f"not a reduction within n_max={n_max}: I^{n_max + 1} != J*I^{n_max}"
    )


def minimal_generator_count(J: Ideal) -> int:
    """μ(J) = number of generators surviving Nakayama: a generator is
    redundant iff it lies in (other generators) + m·J."""
    mJ = product(J.ring.maximal_ideal, J)
    count = 0
    gens = list(J.gens)
    for i, g in enumerate(gens):
        rest = Ideal(J.ring, tuple(gens[:i] + gens[i + 1 :]) + mJ.gens)
        if not rest.contains(g) and not local_part(rest).contains(g):
            count += 1
    return count


def general_minimal_reduction(
    I: Ideal, cfg: GeneralElementConfig, *tags
) -> ReductionDatum:
    """A reduction of I generated by ℓ(I) general elements, with r_J(I).

    Re-samples with the next sub-seed when a sample fails to be a reduction
    (each failure is logged as a genericity failure)."""
    ell = analytic_spread(I)
    for attempt in range(cfg.repeats):
        elems, lambdas = general_elements(I, ell, cfg, "gmr", attempt, *tags)
        J = Ideal(I.ring, elems)
        try:
            r = reduction_number(J, I, cfg.n_max)
        except IdealCoreError:
            cfg.record("reduction_sample_failed", attempt=attempt, tags=list(tags))
            continue
        if minimal_generator_count(J) != ell:
            cfg.record("mu_mismatch", attempt=attempt, tags=list(tags))
            continue
        return ReductionDatum(J=J, I=I, r=r, generators_used=lambdas)
    raise GenericityError(
        "sampled elements do not generate a reduction - enlarge field or "
        "raise n_max"
    )


def s_invariant(I: Ideal, J: Ideal, cfg: GeneralElementConfig) -> int:
    """The stabilization threshold s, computed as r_J((J, b)) for a general
    element b of I; m-primary I only.  All `repeats` re-samplings must agree."""
    if not is_m_primary(I):
        raise IdealCoreError("s-invariant implemented only for m-primary ideals")
    values = []
    for rep in range(cfg.repeats):
        (b,), lambdas = general_elements(I, 1, cfg, "s", rep)
        Jb = ideal_sum(J, Ideal(I.ring, (b,)))
        values.append(reduction_number(J, Jb, cfg.n_max))
        cfg.record("s_sample", repeat=rep, value=values[-1], lambdas=list(lambdas))
    if len(set(values)) != 1:
        raise GenericityError(
            f"genericity check failed for s; got {values}; enlarge field or "
            f"change seed"
        )
    return values[0]
