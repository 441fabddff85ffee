"""Exact computer algebra over GF(p^e) for reductions of ideals, the ideals
K_n and L_n, and the core of an m-primary ideal in k[x_1..x_d]/Q."""

from .errors import (
    DegreeOverflowError,
    GenericityError,
    IdealCoreError,
    NonLocalInputError,
    RingMismatchError,
    SpecError,
    TheoremViolationError,
)
from .gf import GF, binomial_mod_p, default_ext_degree, gf
from .poly import Monomial, Poly, PolyRing, TermOrder, parse_poly
from .groebner import GroebnerBasis, buchberger, ideal_equal, normal_form
from .ideals import (
    Ideal,
    RingSpec,
    colon,
    height,
    ideal_sum,
    intersect,
    is_m_primary,
    krull_dim,
    local_contains,
    local_equal,
    local_part,
    power,
    product,
)
from .reductions import (
    GeneralElementConfig,
    ReductionDatum,
    analytic_spread,
    general_minimal_reduction,
    minimal_generator_count,
    reduction_number,
    s_invariant,
)
from .core_engine import (
    CoreReport,
    adjoint_colon,
    check_conjecture,
    check_inclusion_chain,
    check_stabilization,
    core,
    kn_binomial,
    kn_bruteforce,
    kn_general,
    ln_ideal,
)
from .specfile import SpecFile, parse_spec, parse_spec_file, print_spec

__version__ = "1.0.0"

__all__ = [
    "GF",
    "gf",
    "binomial_mod_p",
    "default_ext_degree",
    "TermOrder",
    "Monomial",
    "Poly",
    "PolyRing",
    "parse_poly",
    "GroebnerBasis",
    "buchberger",
    "ideal_equal",
    "normal_form",
    "RingSpec",
    "Ideal",
    "ideal_sum",
    "product",
    "power",
    "intersect",
    "colon",
    "krull_dim",
    "is_m_primary",
    "local_part",
    "local_equal",
    "local_contains",
    "height",
    "GeneralElementConfig",
    "ReductionDatum",
    "analytic_spread",
    "reduction_number",
    "minimal_generator_count",
    "general_minimal_reduction",
    "s_invariant",
    "CoreReport",
    "kn_binomial",
    "kn_general",
    "kn_bruteforce",
    "ln_ideal",
    "adjoint_colon",
    "core",
    "check_inclusion_chain",
    "check_conjecture",
    "check_stabilization",
    "SpecFile",
    "parse_spec",
    "parse_spec_file",
    "print_spec",
    "IdealCoreError",
    "SpecError",
    "RingMismatchError",
    "DegreeOverflowError",
    "NonLocalInputError",
    "GenericityError",
    "TheoremViolationError",
]
