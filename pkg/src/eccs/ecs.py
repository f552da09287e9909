"""Cramer-Shoup encryption over the curve groups of :mod:`eccs.curve`.

The scheme encrypts one curve point per chunk under an ElGamal-style
mask and attaches a validity point V bound, through a hash, to the whole
chunk and its position in the message.  Decryption recomputes V from the
private key and rejects on mismatch, which is what buys chosen-
ciphertext security: tampered or replayed chunks fail before any
plaintext is released.

Secret-dependent work is confined to ``scalar_mult`` (fixed-sequence
ladder) and a constant-time comparison; there are no secret-indexed
lookups and no early exits ahead of the validity check.
"""

from __future__ import annotations

import hashlib
import hmac
import random
from dataclasses import dataclass

from . import codec
from .curve import (
    CurveParams,
    CurvePoint,
    _tally,
    compress,
    curve_by_id,
    is_on_curve,
    point_add,
    point_negate,
    scalar_mult,
)
from .errors import InvalidCiphertext

# Domain-separation label for the validity hash.
_HASH_LABEL = b"ECCS-v1-alpha"

_SYSTEM_RNG = random.SystemRandom()


@dataclass(frozen=True)
class PrivateKey:
    """Five secret scalars in [1, n-1]."""

    curve_id: int
    x1: int
    x2: int
    y1: int
    y2: int
    z: int


@dataclass(frozen=True)
class PublicKey:
    """Commitments c = x1*g1 + x2*g2, d = y1*g1 + y2*g2, h = z*g1."""

    curve_id: int
    c: CurvePoint
    d: CurvePoint
    h: CurvePoint


@dataclass(frozen=True)
class CiphertextChunk:
    """One encrypted point: mask pair (u1, u2), payload e, validity v."""

    u1: CurvePoint
    u2: CurvePoint
    e: CurvePoint
    v: CurvePoint


@dataclass(frozen=True)
class Ciphertext:
    curve_id: int
    chunks: tuple[CiphertextChunk, ...]


def sample_scalar(n: int, rng) -> int:
    """Uniform scalar in [1, n-1] by rejection sampling.

    Draws n.bit_length() bits and retries until the value lands in
    range, so no modular folding bias; rng must expose getrandbits.
    """
    bits = n.bit_length()
    while True:
        k = rng.getrandbits(bits)
        if 1 <= k < n:
            return k


def keygen(params: CurveParams, rng=None) -> tuple[PrivateKey, PublicKey]:
    """Fresh key pair; rng defaults to the operating system's entropy."""
    if rng is None:
        rng = _SYSTEM_RNG
    n = params.n
    x1, x2, y1, y2, z = (sample_scalar(n, rng) for _ in range(5))
    c = point_add(params, scalar_mult(params, params.g1, x1), scalar_mult(params, params.g2, x2))
    d = point_add(params, scalar_mult(params, params.g1, y1), scalar_mult(params, params.g2, y2))
    h = scalar_mult(params, params.g1, z)
    private = PrivateKey(params.curve_id, x1, x2, y1, y2, z)
    public = PublicKey(params.curve_id, c, d, h)
    return private, public


def chunk_header(index: int, total: int) -> bytes:
    """Position tag hashed into each chunk: 32-bit index and chunk count.

    Binding the position prevents reordering or truncating multi-chunk
    messages without tripping the validity check.
    """
    if not 0 <= index < total <= 0xFFFFFFFF:
        raise ValueError("chunk index/total out of range")
    return index.to_bytes(4, "big") + total.to_bytes(4, "big")


def hash_to_scalar(
    params: CurveParams,
    header: bytes,
    u1: CurvePoint,
    u2: CurvePoint,
    e: CurvePoint,
) -> int:
    """SHA3-256 over label, curve id, header and the compressed points, mod n."""
    _tally("hashes")
    digest = hashlib.sha3_256(
        _HASH_LABEL
        + bytes([params.curve_id])
        + header
        + compress(params, u1)
        + compress(params, u2)
        + compress(params, e)
    ).digest()
    return int.from_bytes(digest, "big") % params.n


def encrypt_chunk(
    pub: PublicKey, m_point: CurvePoint, header: bytes, rng=None
) -> CiphertextChunk:
    """Encrypt one message point under a fresh ephemeral scalar."""
    if rng is None:
        rng = _SYSTEM_RNG
    params = curve_by_id(pub.curve_id)
    r = sample_scalar(params.n, rng)
    u1 = scalar_mult(params, params.g1, r)
    u2 = scalar_mult(params, params.g2, r)
    e = point_add(params, scalar_mult(params, pub.h, r), m_point)
    alpha = hash_to_scalar(params, header, u1, u2, e)
    r_alpha = r * alpha % params.n
    v = point_add(
        params, scalar_mult(params, pub.c, r), scalar_mult(params, pub.d, r_alpha)
    )
    return CiphertextChunk(u1, u2, e, v)


def decrypt_chunk(
    priv: PrivateKey, chunk: CiphertextChunk, header: bytes
) -> CurvePoint:
    """Recover the message point, or raise ``InvalidCiphertext``.

    The expected validity point and the candidate plaintext are both
    computed before the comparison, and the comparison itself runs over
    compressed encodings via ``hmac.compare_digest``; nothing about the
    failure mode distinguishes which part of the chunk was bad.
    """
    try:
        params = curve_by_id(priv.curve_id)
        u1, u2, e, v = chunk.u1, chunk.u2, chunk.e, chunk.v
        for point in (u1, u2, e, v):
            if not is_on_curve(params, point):
                raise InvalidCiphertext
        n = params.n
        alpha = hash_to_scalar(params, header, u1, u2, e)
        s1 = (priv.x1 + alpha * priv.y1) % n
        s2 = (priv.x2 + alpha * priv.y2) % n
        expected_v = point_add(
            params, scalar_mult(params, u1, s1), scalar_mult(params, u2, s2)
        )
        mask = scalar_mult(params, u1, priv.z)
        m_point = point_add(params, e, point_negate(params, mask))
        if not hmac.compare_digest(compress(params, expected_v), compress(params, v)):
            raise InvalidCiphertext
        return m_point
    except InvalidCiphertext:
        raise
    except (ValueError, TypeError, AttributeError):
        raise InvalidCiphertext from None


def encrypt(pub: PublicKey, message: bytes, rng=None) -> Ciphertext:
    """Encrypt an arbitrary byte string as a sequence of bound chunks."""
    params = curve_by_id(pub.curve_id)
    pieces = codec.split_message(params, message)
    total = len(pieces)
    chunks = []
    for index, piece in enumerate(pieces):
        m_point = codec.encode_chunk(params, piece)
        chunks.append(encrypt_chunk(pub, m_point, chunk_header(index, total), rng))
    return Ciphertext(params.curve_id, tuple(chunks))


def decrypt(priv: PrivateKey, ciphertext: Ciphertext) -> bytes:
    """Decrypt a full message; any failure raises ``InvalidCiphertext``."""
    try:
        if ciphertext.curve_id != priv.curve_id:
            raise InvalidCiphertext
        params = curve_by_id(priv.curve_id)
        total = len(ciphertext.chunks)
        if total == 0:
            raise InvalidCiphertext
        pieces = []
        for index, chunk in enumerate(ciphertext.chunks):
            m_point = decrypt_chunk(priv, chunk, chunk_header(index, total))
            pieces.append(codec.decode_chunk(params, m_point))
        return codec.join_message(pieces)
    except InvalidCiphertext:
        raise
    except (ValueError, TypeError, AttributeError):
        raise InvalidCiphertext from None
