"""Domain-separated hashing and byte-level encoding helpers.

All hashing in the package goes through one SHA-256 family, prefixed with
a protocol version tag plus a per-use subtag, and every variable-length
input is length-prefixed so concatenations cannot be reinterpreted.
"""

from __future__ import annotations

import hashlib

DOMAIN = b"SLS-v1"


def int_to_bytes(value: int) -> bytes:
    """Minimal big-endian encoding of a non-negative integer (0 -> b'\\x00')."""
    if value < 0:
        raise ValueError("cannot encode negative integers")
    length = max(1, (value.bit_length() + 7) // 8)
    return value.to_bytes(length, "big")


def bytes_to_int(data: bytes) -> int:
    return int.from_bytes(data, "big")


def encode_parts(*parts: bytes) -> bytes:
    """Concatenate byte strings, each prefixed with its 4-byte big-endian length."""
    out = bytearray()
    for part in parts:
        if len(part) > 0xFFFFFFFF:
            raise ValueError("part too large for 4-byte length prefix")
        out += len(part).to_bytes(4, "big")
        out += part
    return bytes(out)


def decode_parts(blob: bytes, count: int) -> list[bytes]:
    """Inverse of encode_parts; the blob must contain exactly `count` parts."""
    parts: list[bytes] = []
    offset = 0
    for _ in range(count):
        if offset + 4 > len(blob):
            raise ValueError("truncated length prefix")
        length = int.from_bytes(blob[offset : offset + 4], "big")
        offset += 4
        if offset + length > len(blob):
            raise ValueError("truncated part")
        parts.append(blob[offset : offset + length])
        offset += length
    if offset != len(blob):
        raise ValueError("trailing bytes after final part")
    return parts


def tagged_hash(tag: str, *parts: bytes) -> bytes:
    """SHA-256 over DOMAIN/tag followed by the length-prefixed parts."""
    h = hashlib.sha256()
    h.update(DOMAIN + b"/" + tag.encode("ascii"))
    h.update(encode_parts(*parts))
    return h.digest()


def hash_to_int(tag: str, *parts: bytes) -> int:
    return bytes_to_int(tagged_hash(tag, *parts))


def message_digest(message: bytes, beacon_value: bytes) -> bytes:
    """Digest signed by the short-lived scheme: H(message, beacon value)."""
    return tagged_hash("msg", message, beacon_value)
