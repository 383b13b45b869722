"""DECS-AU block and stream encryption.

Each 32-byte plain block is masked with its key block through the DNA
codec and then has its bytes swapped pairwise by the key's shuffle map.
The key chain is seeded once from the master key and never looks at data.
"""
from __future__ import annotations

from dataclasses import dataclass

from decsau.dna import dna_decode, dna_encode, dna_xor
from decsau.errors import DomainError, MalformedStream
from decsau.keychain import (
    BLOCK_SIZE,
    ChaoticStream,
    KeyBlock,
    MasterKey,
    key_chain,
    rule_vector,
    stream_for,
)
from decsau.shuffle import apply_shuffle, build_shuffle_map


@dataclass(frozen=True)
class ByteStream:
    """Block-aligned payload plus the length of the data before padding."""

    data: bytes
    original_length: int

    def __post_init__(self):
        if len(self.data) % BLOCK_SIZE:
            raise MalformedStream(f"payload length {len(self.data)} is not a multiple of {BLOCK_SIZE}")
        if not 0 <= self.original_length <= len(self.data):
            raise MalformedStream(
                f"original length {self.original_length} exceeds payload length {len(self.data)}")

    @property
    def n_blocks(self) -> int:
        return len(self.data) // BLOCK_SIZE

    def blocks(self) -> list[bytes]:
        return split_blocks(self.data)


def split_blocks(data: bytes) -> list[bytes]:
    return [data[i:i + BLOCK_SIZE] for i in range(0, len(data), BLOCK_SIZE)]


def pad(data: bytes) -> ByteStream:
    """Zero-pad ``data`` up to a whole number of blocks."""
    data = bytes(data)
    return ByteStream(data + bytes(-len(data) % BLOCK_SIZE), len(data))


def _check_block(b) -> bytes:
    b = bytes(b)
    if len(b) != BLOCK_SIZE:
        raise DomainError(f"block must be {BLOCK_SIZE} bytes, got {len(b)}")
    return b


def substitute_block(b: bytes, k: KeyBlock, rules) -> bytes:
    b = _check_block(b)
    out = bytearray(BLOCK_SIZE)
    for j, (d, kd, r) in enumerate(zip(b, k.bytes, rules)):
        out[j] = dna_decode(dna_xor(dna_encode(d, r), dna_encode(kd, r), r), r)
    return bytes(out)


def encrypt_block(b: bytes, k: KeyBlock, xs: ChaoticStream) -> bytes:
    s = substitute_block(b, k, rule_vector(k, xs))
    return apply_shuffle(s, build_shuffle_map(k))


def decrypt_block(c: bytes, k: KeyBlock, xs: ChaoticStream) -> bytes:
    # the shuffle is an involution, so applying it again undoes it
    s = apply_shuffle(_check_block(c), build_shuffle_map(k))
    return substitute_block(s, k, rule_vector(k, xs))


def encrypt_stream(mk: MasterKey, plain: bytes | ByteStream) -> ByteStream:
    """Zero-pad and encrypt; block i uses key block K_i of the chain."""
    stream = plain if isinstance(plain, ByteStream) else pad(plain)
    xs = stream_for(mk)
    keys = key_chain(mk, stream.n_blocks, xs)
    data = b"".join(encrypt_block(b, k, xs) for b, k in zip(stream.blocks(), keys))
    return ByteStream(data, stream.original_length)


def decrypt_stream(mk: MasterKey, cipher: ByteStream) -> bytes:
    if not isinstance(cipher, ByteStream):
        raise MalformedStream("decrypt_stream expects a ByteStream carrying its original length")
    xs = stream_for(mk)
    keys = key_chain(mk, cipher.n_blocks, xs)
    data = b"".join(decrypt_block(c, k, xs) for c, k in zip(cipher.blocks(), keys))
    return data[:cipher.original_length]


def encrypt_raw(mk: MasterKey, data: bytes) -> bytes:
    """Encrypt a block-aligned payload without length bookkeeping."""
    if len(data) % BLOCK_SIZE:
        raise MalformedStream(f"raw payload length {len(data)} is not a multiple of {BLOCK_SIZE}")
    return encrypt_stream(mk, ByteStream(bytes(data), len(data))).data


def decrypt_raw(mk: MasterKey, data: bytes) -> bytes:
    if len(data) % BLOCK_SIZE:
        raise MalformedStream(f"raw payload length {len(data)} is not a multiple of {BLOCK_SIZE}")
    return decrypt_stream(mk, ByteStream(bytes(data), len(data)))
