"""Prime-field arithmetic for curve coordinates and scalars.

A ``PrimeField`` fixes the modulus; its elements are immutable and always
hold a canonical representative in ``[0, modulus)``.  The same machinery
serves both the coordinate field of a curve and the scalar field modulo
the group order.
"""

from __future__ import annotations

import secrets

try:  # ~4x faster modular exponentiation on 256-bit operands
    from gmpy2 import powmod as _powmod
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _powmod = pow

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# 64 rounds keeps the error probability of accepting a composite below
# 4**-64 even for adversarially chosen moduli.
MILLER_RABIN_ROUNDS = 64


def is_probable_prime(n: int, rounds: int = MILLER_RABIN_ROUNDS) -> bool:
    """Miller-Rabin primality test with uniformly random bases."""
    if n < 2:
        return False
    for small in _SMALL_PRIMES:
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = 2 + secrets.randbelow(n - 3)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """Arithmetic context modulo a fixed odd prime ``p > 3``.

    Construction verifies primality (Miller-Rabin, 64 rounds) unless the
    caller opts out for modulus values that are already trusted.
    """

    __slots__ = ("modulus", "width", "_tonelli_ctx")

    def __init__(self, modulus: int, *, check_prime: bool = True) -> None:
        if not isinstance(modulus, int) or modulus <= 3 or modulus % 2 == 0:
            raise ValueError(f"modulus must be an odd prime > 3, got {modulus!r}")
        if check_prime and not is_probable_prime(modulus):
            raise ValueError(f"modulus {modulus:#x} failed the primality test")
        self.modulus = modulus
        # Fixed byte width used for all serialized elements of this field.
        self.width = (modulus.bit_length() + 7) // 8
        self._tonelli_ctx: tuple[int, int, int] | None = None

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.modulus, self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PrimeField):
            return self.modulus == other.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PrimeField", self.modulus))

    def __repr__(self) -> str:
        return f"PrimeField({self.modulus:#x})"

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def from_bytes(self, data: bytes) -> "FieldElement":
        """Decode a fixed-width big-endian element; rejects out-of-range values."""
        if len(data) != self.width:
            raise ValueError(f"expected {self.width} bytes, got {len(data)}")
        value = int.from_bytes(data, "big")
        if value >= self.modulus:
            raise ValueError("encoded value is not reduced modulo the field prime")
        return FieldElement(value, self)

    def _tonelli_params(self) -> tuple[int, int, int]:
        # p - 1 = q * 2**s with q odd, plus a fixed quadratic non-residue z.
        ctx = self._tonelli_ctx
        if ctx is None:
            p = self.modulus
            q = p - 1
            s = 0
            while q % 2 == 0:
                q //= 2
                s += 1
            z = 2
            while pow(z, (p - 1) // 2, p) != p - 1:
                z += 1
            ctx = (q, s, z)
            self._tonelli_ctx = ctx
        return ctx


class FieldElement:
    """Immutable element of a ``PrimeField`` with operator support."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField) -> None:
        if not 0 <= value < field.modulus:
            raise ValueError(f"value {value} outside [0, {field.modulus})")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other: object) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field.modulus != self.field.modulus:
                raise ValueError("mixed moduli in field operation")
            return other
        if isinstance(other, int):
            return self.field(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        return self.field(self.value + rhs.value)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        return self.field(self.value - rhs.value)

    def __rsub__(self, other: object) -> "FieldElement":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: object) -> "FieldElement":
        rhs = self._coerce(other)
        return self.field(self.value * rhs.value)

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return self.field(-self.value)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return self.field(pow(self.value, exponent, self.field.modulus))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return (
                self.value == other.value
                and self.field.modulus == other.field.modulus
            )
        if isinstance(other, int):
            return self.value == other % self.field.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.modulus))

    def __repr__(self) -> str:
        return f"FieldElement({self.value:#x} mod {self.field.modulus:#x})"

    def __bool__(self) -> bool:
        return self.value != 0

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via Fermat's little theorem.

        Exponentiation with the fixed exponent p - 2 avoids the
        value-dependent iteration count of the extended Euclidean
        algorithm; inversion cost depends only on the modulus.
        """
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero field element")
        p = self.field.modulus
        return self.field(int(_powmod(self.value, p - 2, p)))

    def __truediv__(self, other: object) -> "FieldElement":
        return self * self._coerce(other).inverse()

    def is_square(self) -> bool:
        """Euler criterion; zero counts as a square."""
        if self.value == 0:
            return True
        p = self.field.modulus
        return _powmod(self.value, (p - 1) // 2, p) == 1

    def sqrt(self) -> "FieldElement":
        """Canonical square root: of the two roots r and p - r, the even one.

        Raises ``ValueError`` for quadratic non-residues.  The canonical
        choice makes point decompression and the deterministic generator
        derivation reproducible everywhere.
        """
        p = self.field.modulus
        v = self.value
        if v == 0:
            return self.field.zero
        if p % 4 == 3:
            root = int(_powmod(v, (p + 1) // 4, p))
            if root * root % p != v:
                raise ValueError("element is not a quadratic residue")
        else:
            root = self._tonelli_shanks()
        if root % 2 == 1:
            root = p - root
        return self.field(root)

    def _tonelli_shanks(self) -> int:
        # General-case root for p % 4 == 1; assumes self.value != 0.
        p = self.field.modulus
        v = self.value
        if pow(v, (p - 1) // 2, p) != 1:
            raise ValueError("element is not a quadratic residue")
        q, s, z = self.field._tonelli_params()
        m = s
        c = pow(z, q, p)
        t = pow(v, q, p)
        r = pow(v, (q + 1) // 2, p)
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            r = r * b % p
        return r

    def to_bytes(self) -> bytes:
        """Fixed-width big-endian encoding; width is a property of the field."""
        return self.value.to_bytes(self.field.width, "big")
