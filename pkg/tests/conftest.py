import pytest

from skewpoly.ffield import GF
from skewpoly.skew import FiniteSkewRing, rat_skew_ring

import cases_f16t
import cases_f256


@pytest.fixture(scope="session")
def F4():
    return GF(2, 2)


@pytest.fixture(scope="session")
def R4(F4):
    """F_4[X; Frobenius], mu = 2, K = F_2."""
    return FiniteSkewRing(F4, 1)


@pytest.fixture(scope="session")
def F256():
    return GF(2, 8, modulus=cases_f256.MODULUS)


@pytest.fixture(scope="session")
def R256(F256):
    """F_256[X; Frobenius^2], mu = 4, K = F_4."""
    return FiniteSkewRing(F256, cases_f256.FROBENIUS_EXP)


@pytest.fixture(scope="session")
def R16():
    """F_16[X; Frobenius], mu = 4, K = F_2."""
    return FiniteSkewRing(GF(2, 4), 1)


@pytest.fixture(scope="session")
def R8():
    return FiniteSkewRing(GF(2, 3), 1)


@pytest.fixture(scope="session")
def R9():
    return FiniteSkewRing(GF(3, 2), 1)


@pytest.fixture(scope="session")
def RT16():
    """F_16(t)[X; sigma], sigma(t) = a^5 t, mu = 3."""
    F16 = GF(2, 4, modulus=cases_f16t.MODULUS)
    c = F16.pow_(F16.gen, cases_f16t.SIGMA_SCALE_POW)
    return rat_skew_ring(F16, c)
