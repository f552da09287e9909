import pytest

from eccs.curve import CurveParams, get_curve

# Non-registry curve with a != 0: y^2 = x^3 + x + 1 over F_1033, prime
# order 1061.  Exercises the general-coefficient formula path that the
# registry curves (both a == 0) never touch.
ALT_ID = 0x70
ALT_P = 1033
ALT_A = 1
ALT_B = 1
ALT_N = 1061
ALT_G1 = (0, 1032)
ALT_G2 = (338, 48)


@pytest.fixture(scope="session")
def toy():
    return get_curve("toy")


@pytest.fixture(scope="session")
def secp():
    return get_curve("secp256k1")


@pytest.fixture(scope="session")
def alt():
    return CurveParams(ALT_ID, "p1033-a1", ALT_P, ALT_A, ALT_B, ALT_N, ALT_G1, ALT_G2)
