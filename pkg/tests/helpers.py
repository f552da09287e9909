"""Small independent reference implementations used by the unit tests.

The affine chord-and-tangent routines here deliberately share no code
with the package: inversions use the extended Euclid algorithm and the
group law is the textbook case split, so agreement with the projective
formulas is meaningful.
"""

from __future__ import annotations


def egcd_inverse(v: int, p: int) -> int:
    old_r, r = v % p, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise ZeroDivisionError(f"{v} not invertible mod {p}")
    return old_s % p


def aff_add(p: int, a: int, P, Q):
    """Affine addition; points are (x, y) tuples, None is the identity."""
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + a) * egcd_inverse(2 * y1, p) % p
    else:
        lam = (y2 - y1) * egcd_inverse(x2 - x1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def aff_mul(p: int, a: int, P, k: int):
    """Double-and-add on affine tuples."""
    result = None
    addend = P
    while k:
        if k & 1:
            result = aff_add(p, a, result, addend)
        addend = aff_add(p, a, addend, addend)
        k >>= 1
    return result


def as_tuple(point):
    """CurvePoint -> (x, y) tuple or None."""
    if point.is_identity:
        return None
    return point.x.value, point.y.value


class SeqRng:
    """rng stand-in that replays a fixed list of integers.

    ``getrandbits`` returns the next queued value regardless of the
    requested width, letting tests pin exact secret scalars (values are
    chosen in range, so rejection sampling accepts them first try).
    """

    def __init__(self, values):
        self._values = list(values)

    def getrandbits(self, _nbits: int) -> int:
        if not self._values:
            raise AssertionError("SeqRng ran out of queued values")
        return self._values.pop(0)
