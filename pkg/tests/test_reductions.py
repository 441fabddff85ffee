"""Reductions, reduction numbers, analytic spread, and general elements."""
import pytest

from idealcore import (
    GeneralElementConfig,
    IdealCoreError,
    RingSpec,
    analytic_spread,
    general_minimal_reduction,
    gf,
    minimal_generator_count,
    reduction_number,
    s_invariant,
)


@pytest.fixture(scope="module")
def R():
    return RingSpec(gf(2, 16), ("x", "y", "z"), quotient=("z^3",))


@pytest.fixture(scope="module")
def I_41(R):
    return R.ideal("x^2", "y^2", "x*z", "y*z")


def cfg(seed=42, **kw):
    return GeneralElementConfig(seed=seed, **kw)


def test_reduction_number_of_self(R):
    a = R.ideal("x", "y")
    assert reduction_number(a, a) == 0


def test_reduction_number_known(R, I_41):
    J = R.ideal("x^2", "y^2")
    assert reduction_number(J, I_41) == 2


def test_non_reduction_raises(R, I_41):
    with pytest.raises(IdealCoreError):
        reduction_number(R.ideal("x^2"), I_41, n_max=6)


def test_analytic_spread_is_ring_dim_for_m_primary(R, I_41):
    assert analytic_spread(I_41) == 2
    R2 = RingSpec(gf(2, 16), ("x", "y"))
    assert analytic_spread(R2.ideal("x^3", "y^5")) == 2


def test_minimal_generator_count(R):
    assert minimal_generator_count(R.ideal("x^2", "y^2")) == 2
    # x*y lies in m·(x, y), so it is redundant by Nakayama
    assert minimal_generator_count(R.ideal("x", "y", "x*y")) == 2


def test_general_minimal_reduction_is_a_reduction(R, I_41):
    c = cfg()
    datum = general_minimal_reduction(I_41, c)
    assert len(datum.J.gens) == analytic_spread(I_41)
    assert I_41.contains_ideal(datum.J)
    assert reduction_number(datum.J, I_41) == datum.r
    assert datum.r == 2


def test_general_reduction_deterministic(R, I_41):
    d1 = general_minimal_reduction(I_41, cfg(), "tagged")
    d2 = general_minimal_reduction(I_41, cfg(), "tagged")
    assert [str(g) for g in d1.J.gens] == [str(g) for g in d2.J.gens]
    d3 = general_minimal_reduction(I_41, cfg(seed=43), "tagged")
    assert [str(g) for g in d3.J.gens] != [str(g) for g in d1.J.gens]


def test_s_invariant_known(R, I_41):
    c = cfg()
    J = general_minimal_reduction(I_41, c).J
    assert s_invariant(I_41, J, c) == 2


def test_principal_ideal_unique_reduction():
    R1 = RingSpec(gf(2, 16), ("x",))
    a = R1.ideal("x")
    datum = general_minimal_reduction(a, cfg())
    assert datum.J.equals(a)
    assert datum.r == 0


def test_repeats_floor():
    with pytest.raises(IdealCoreError):
        GeneralElementConfig(seed=1, repeats=1)
