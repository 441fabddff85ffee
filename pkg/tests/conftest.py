import os

import pytest

SPEC_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "specs")


def spec_path(name):
    return os.path.abspath(os.path.join(SPEC_DIR, name + ".spec"))


@pytest.fixture(scope="session")
def ring_gf2_16():
    from idealcore import RingSpec, gf

    return RingSpec(gf(2, 16), ("x", "y", "z"))


@pytest.fixture(scope="session")
def ring_gf101():
    from idealcore import RingSpec, gf

    return RingSpec(gf(101), ("x", "y"))
