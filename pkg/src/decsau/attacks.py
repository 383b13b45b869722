"""Black-box attacks on DECS-AU.

Attack functions only ever talk to an oracle.  The oracle classes can be
built around an in-process key (for simulation and tests) or around an
external command that pipes raw bytes through stdin/stdout.
"""
from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass
from typing import Callable, Sequence

from decsau.cipher import ByteStream, decrypt_raw, encrypt_raw, split_blocks
from decsau.errors import DomainError, InconsistentDelta, LengthMismatch
from decsau.keychain import BLOCK_SIZE, ChaoticStream, KeyBlock, MasterKey, next_key_block
from decsau.shuffle import ShuffleMap, apply_shuffle, build_shuffle_map

CPA_QUERIES = 2
CCA_QUERIES = 1
CYCLE_QUERIES = 3


class _Oracle:
    def __init__(self, fn: Callable[[bytes], bytes], name: str = "oracle"):
        self._fn = fn
        self.name = name
        self.query_count = 0

    def __call__(self, data: bytes) -> bytes:
        self.query_count += 1
        out = bytes(self._fn(bytes(data)))
        if len(out) != len(data):
            raise LengthMismatch(f"{self.name} returned {len(out)} bytes for a {len(data)}-byte query")
        return out

    @classmethod
    def from_command(cls, command: str):
        """Wrap an external command: query bytes on stdin, answer bytes on stdout."""
        argv = shlex.split(command)

        def run(data: bytes) -> bytes:
            proc = subprocess.run(argv, input=data, capture_output=True, check=False)
            if proc.returncode != 0:
                err = proc.stderr.decode(errors="replace").strip()
                raise DomainError(f"oracle command failed ({proc.returncode}): {err}")
            return proc.stdout

        return cls(run, name=f"command {argv[0]!r}")


class EncryptionOracle(_Oracle):
    @classmethod
    def from_key(cls, mk: MasterKey) -> EncryptionOracle:
        return cls(lambda data: encrypt_raw(mk, data), name="encryption oracle")


class DecryptionOracle(_Oracle):
    @classmethod
    def from_key(cls, mk: MasterKey) -> DecryptionOracle:
        return cls(lambda data: decrypt_raw(mk, data), name="decryption oracle")


@dataclass(frozen=True)
class EquivalentKey:
    """Per-block (key bytes, shuffle map) pairs; enough to decrypt without the master key."""

    entries: tuple[tuple[bytes, ShuffleMap], ...]

    @property
    def block_count(self) -> int:
        return len(self.entries)

    @classmethod
    def from_key_blocks(cls, keys: Sequence[bytes]) -> EquivalentKey:
        # the shuffle construction is public, so key bytes alone suffice
        return cls(tuple((bytes(k), build_shuffle_map(bytes(k))) for k in keys))


def xor_bytes(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b, strict=True))


def effective_encrypt_block(b: bytes, key: bytes, m: ShuffleMap) -> bytes:
    """Encryption with the DNA layer collapsed to plain XOR."""
    return apply_shuffle(xor_bytes(b, key), m)


def _as_stream(ct) -> ByteStream:
    if isinstance(ct, ByteStream):
        return ct
    ct = bytes(ct)
    if len(ct) % BLOCK_SIZE:
        raise LengthMismatch(f"target length {len(ct)} is not a multiple of {BLOCK_SIZE}")
    return ByteStream(ct, len(ct))


def craft_cpa_plaintexts(n_blocks: int) -> tuple[bytes, bytes]:
    if n_blocks < 1:
        raise DomainError("n_blocks must be positive")
    return bytes(BLOCK_SIZE * n_blocks), bytes(range(1, BLOCK_SIZE + 1)) * n_blocks


def recover_shuffle_map(delta_c: bytes) -> ShuffleMap:
    """Read the shuffle off C1 xor C2 for the (0..0, 1..32) plaintext pair.

    delta_c[j] names the source position of output position j.
    """
    delta_c = bytes(delta_c)
    if sorted(delta_c) != list(range(1, BLOCK_SIZE + 1)):
        raise InconsistentDelta("ciphertext difference is not a permutation of 1..32")
    f = {j: delta_c[j - 1] for j in range(1, BLOCK_SIZE + 1)}
    for p, q in f.items():
        if f[q] != p:
            raise InconsistentDelta(f"position {p} -> {q} is not undone by a second shuffle")
        if (p + q) % 2 == 0:
            raise InconsistentDelta(f"position {p} is paired with {q} of the same parity")
    rc = tuple(range(1, BLOCK_SIZE + 1, 2))
    return ShuffleMap(rc, tuple(f[p] for p in rc))


def recover_key_block(c1_block: bytes, m: ShuffleMap) -> bytes:
    """K(j) = C1(f(j)): undo the shuffle on the encryption of a zero block."""
    return apply_shuffle(bytes(c1_block), m)


def differential_cpa(oracle: EncryptionOracle, target_ct) -> tuple[EquivalentKey, bytes]:
    """Two chosen plaintexts spanning the target give every block's equivalent key.

    Returns the equivalent key and the decrypted target (truncated to its
    recorded original length).
    """
    target = _as_stream(target_ct)
    n = target.n_blocks
    if n == 0:
        return EquivalentKey(()), b""
    p1, p2 = craft_cpa_plaintexts(n)
    c1 = oracle(p1)
    c2 = oracle(p2)
    entries = []
    for b1, b2 in zip(split_blocks(c1), split_blocks(c2)):
        m = recover_shuffle_map(xor_bytes(b1, b2))
        entries.append((recover_key_block(b1, m), m))
    eqkey = EquivalentKey(tuple(entries))
    return eqkey, decrypt_with_equivalent_key(eqkey, target)


def decrypt_with_equivalent_key(eqkey: EquivalentKey, ct) -> bytes:
    target = _as_stream(ct)
    if eqkey.block_count < target.n_blocks:
        raise LengthMismatch(
            f"equivalent key covers {eqkey.block_count} blocks, ciphertext has {target.n_blocks}")
    out = b"".join(xor_bytes(apply_shuffle(c, m), k)
                   for c, (k, m) in zip(target.blocks(), eqkey.entries))
    return out[:target.original_length]


def extend_key_chain(k1: bytes, xs: ChaoticStream, n: int) -> list[bytes]:
    """K_1..K_n from K_1 alone.  Needs the chaotic stream, i.e. white-box knowledge."""
    if n < 1:
        raise DomainError("n must be positive")
    k = KeyBlock(1, bytes(k1))
    chain = [k.bytes]
    for _ in range(n - 1):
        k = next_key_block(k, xs)
        chain.append(k.bytes)
    return chain


def chosen_ciphertext_attack(oracle: DecryptionOracle, n_blocks: int) -> list[bytes]:
    """Decrypting an all-zero ciphertext hands back K_1..K_n."""
    if n_blocks < 1:
        raise LengthMismatch("n_blocks must be positive")
    return split_blocks(oracle(bytes(BLOCK_SIZE * n_blocks)))


def cycle_attack(oracle: EncryptionOracle, target_ct) -> bytes:
    """Three re-encryptions close the period-4 cycle; no key material involved."""
    target = _as_stream(target_ct)
    data = target.data
    for _ in range(CYCLE_QUERIES):
        data = oracle(data)
    return data[:target.original_length]


def format_equivalent_key(eqkey: EquivalentKey) -> str:
    lines = []
    for i, (key, m) in enumerate(eqkey.entries, start=1):
        rc = ",".join(map(str, m.rc))
        lc = ",".join(map(str, m.lc))
        lines.append(f"{i}, {key.hex()}, {rc}, {lc}\n")
    return "".join(lines)


def parse_equivalent_key(text: str) -> EquivalentKey:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(", ")
        if len(fields) != 4:
            raise DomainError(f"line {lineno}: expected 'index, key_hex, rc_csv, lc_csv'")
        idx, key_hex, rc, lc = (f.strip() for f in fields)
        if int(idx) != len(entries) + 1:
            raise DomainError(f"line {lineno}: block index {idx} out of order")
        key = bytes.fromhex(key_hex)
        if len(key) != BLOCK_SIZE:
            raise DomainError(f"line {lineno}: key must be {BLOCK_SIZE} bytes")
        m = ShuffleMap(tuple(int(p) for p in rc.split(",")), tuple(int(p) for p in lc.split(",")))
        entries.append((key, m))
    return EquivalentKey(tuple(entries))
