"""Hybrid encryption on top of the broadcast KEM.

Two layers. The GT layer turns the KEM into encryption directly: the
ciphertext is c = M * K for a GT-valued message M, and any recipient
divides out the recovered K. The byte layer wraps arbitrary plaintexts in
a deterministic hash-based DEM: a SHA-256 counter keystream XORed over the
plaintext, authenticated encrypt-then-MAC style with a SHA-256 tag that is
verified before a single plaintext byte is produced. The DEM key is bound
to the session key through a domain-separated hash of its canonical
encoding.
"""

import hashlib
import hmac
from dataclasses import dataclass

from .errors import AuthenticationError, DecodeError, UsageError
from .groups import BilinearGroup, GTElement
from .kem import (
    Header,
    PrivateKeyShare,
    PublicKey,
    SessionKey,
    decaps,
    decode_header,
    encaps,
    encode_header,
)

DEM_DOMAIN_TAG = b"BGW-KEM-DEM-v1"
NONCE_SIZE = 16
TAG_SIZE = 32
_LENGTH_FIELD = 8


@dataclass(frozen=True)
class GTCiphertext:
    """Header plus the blinded GT message c = M * K."""

    header: Header
    c: GTElement


@dataclass(frozen=True)
class BroadcastCiphertext:
    """Header plus DEM-wrapped bytes; body is exactly plaintext-sized."""

    header: Header
    nonce: bytes
    body: bytes
    tag: bytes

    def to_bytes(self, group: BilinearGroup) -> bytes:
        """Wire layout: header || nonce || 8-byte length || body || tag."""
        return (
            encode_header(group, self.header)
            + self.nonce
            + len(self.body).to_bytes(_LENGTH_FIELD, "big")
            + self.body
            + self.tag
        )

    @classmethod
    def from_bytes(cls, group: BilinearGroup, data: bytes) -> "BroadcastCiphertext":
        hdr_size = 2 * group.g_encoded_size
        fixed = hdr_size + NONCE_SIZE + _LENGTH_FIELD
        if len(data) < fixed + TAG_SIZE:
            raise DecodeError(f"ciphertext truncated at {len(data)} bytes")
        header = decode_header(group, data[:hdr_size])
        nonce = data[hdr_size : hdr_size + NONCE_SIZE]
        length = int.from_bytes(data[hdr_size + NONCE_SIZE : fixed], "big")
        if len(data) != fixed + length + TAG_SIZE:
            raise DecodeError(
                f"ciphertext length {len(data)} does not match body length {length}"
            )
        return cls(
            header=header,
            nonce=nonce,
            body=data[fixed : fixed + length],
            tag=data[fixed + length :],
        )


def encrypt_gt(recipients, pk: PublicKey, message: GTElement, rng) -> GTCiphertext:
    """Encrypt a caller-supplied GT element to the recipient set."""
    if not isinstance(message, GTElement):
        raise UsageError(f"message must be a GT element, got {type(message).__name__}")
    header, key = encaps(recipients, pk, rng)
    return GTCiphertext(header=header, c=message * key.k)


def decrypt_gt(recipients, i: int, share: PrivateKeyShare, ct: GTCiphertext,
               pk: PublicKey) -> GTElement:
    """Recover the GT message as recipient i."""
    key = decaps(recipients, i, share, ct.header, pk)
    return ct.c / key.k


def derive_dem_key(key: SessionKey) -> bytes:
    """32-byte DEM key: SHA-256 over the tagged canonical key encoding."""
    encoded = key.k.group.encode(key.k)
    return hashlib.sha256(DEM_DOMAIN_TAG + encoded).digest()


def _keystream(dem_key: bytes, nonce: bytes, length: int) -> bytes:
    out = bytearray()
    counter = 0
    while len(out) < length:
        block = hashlib.sha256(
            dem_key + nonce + counter.to_bytes(8, "big")
        ).digest()
        out.extend(block)
        counter += 1
    return bytes(out[:length])


def _tag(dem_key: bytes, nonce: bytes, body: bytes) -> bytes:
    return hashlib.sha256(dem_key + nonce + body).digest()


def seal_bytes(recipients, pk: PublicKey, plaintext: bytes, rng) -> BroadcastCiphertext:
    """Encrypt and authenticate arbitrary bytes to the recipient set."""
    header, key = encaps(recipients, pk, rng)
    dem_key = derive_dem_key(key)
    nonce = rng.randbytes(NONCE_SIZE)
    stream = _keystream(dem_key, nonce, len(plaintext))
    body = bytes(a ^ b for a, b in zip(plaintext, stream))
    return BroadcastCiphertext(
        header=header, nonce=nonce, body=body, tag=_tag(dem_key, nonce, body)
    )


def open_bytes(recipients, i: int, share: PrivateKeyShare,
               ct: BroadcastCiphertext, pk: PublicKey) -> bytes:
    """Verify and decrypt; raises AuthenticationError on any tampering."""
    key = decaps(recipients, i, share, ct.header, pk)
    dem_key = derive_dem_key(key)
    expected = _tag(dem_key, ct.nonce, ct.body)
    if not hmac.compare_digest(expected, ct.tag):
        raise AuthenticationError("ciphertext tag verification failed")
    stream = _keystream(dem_key, ct.nonce, len(ct.body))
    return bytes(a ^ b for a, b in zip(ct.body, stream))
