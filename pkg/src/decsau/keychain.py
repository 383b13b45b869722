"""Master key handling, the logistic chaotic stream and key-block chaining."""
from __future__ import annotations

import math
from dataclasses import dataclass

from decsau.errors import DegenerateKey, DomainError

BLOCK_SIZE = 32
LAMBDA = 3.99
X0_DENOMINATOR = 2**21


def _check_32(data, what: str) -> bytes:
    data = bytes(data)
    if len(data) != BLOCK_SIZE:
        raise DomainError(f"{what} must be exactly {BLOCK_SIZE} bytes, got {len(data)}")
    return data


@dataclass(frozen=True)
class MasterKey:
    """A 32-byte user secret.  All-zero keys are rejected at construction."""

    bytes: bytes

    def __post_init__(self):
        object.__setattr__(self, "bytes", _check_32(self.bytes, "master key"))
        derive_x0(self)

    @classmethod
    def from_hex(cls, text: str) -> MasterKey:
        try:
            raw = bytes.fromhex(text.strip())
        except ValueError as exc:
            raise DomainError(f"master key is not valid hex: {exc}") from None
        return cls(raw)

    def hex(self) -> str:
        return self.bytes.hex()

    def as_key_block(self) -> KeyBlock:
        """The chain seed, K_0."""
        return KeyBlock(0, self.bytes)


@dataclass(frozen=True)
class KeyBlock:
    index: int
    bytes: bytes

    def __post_init__(self):
        object.__setattr__(self, "bytes", _check_32(self.bytes, "key block"))


@dataclass(frozen=True)
class ChaoticStream:
    """x0 and the 32 logistic iterates x_1..x_32, indexed 1-based via ``x(j)``."""

    x0: float
    xs: tuple[float, ...]
    lam: float = LAMBDA

    def x(self, j: int) -> float:
        return self.xs[j - 1]


def _key_bytes(mk) -> bytes:
    if isinstance(mk, MasterKey):
        return mk.bytes
    return _check_32(mk, "master key")


def derive_x0(mk) -> float:
    # exact integer sum, a single division; the sum is < 2**53 so the quotient is exact
    raw = _key_bytes(mk)
    total = sum(byte * (j + 1) for j, byte in enumerate(raw, start=1))
    if total == 0:
        raise DegenerateKey("all-zero master key: the logistic orbit is stuck at 0")
    return total / X0_DENOMINATOR


def logistic_stream(x0: float) -> ChaoticStream:
    if not 0.0 < x0 < 1.0:
        raise DomainError(f"x0 must lie in (0, 1), got {x0!r}")
    xs = []
    x = x0
    for _ in range(BLOCK_SIZE):
        x = (LAMBDA * x) * (1.0 - x)
        xs.append(x)
    return ChaoticStream(x0, tuple(xs))


def stream_for(mk: MasterKey) -> ChaoticStream:
    return logistic_stream(derive_x0(mk))


def _mix(kb: bytes, xs: ChaoticStream, j: int) -> int:
    """floor(x_j * (K(j)^2 + K(j-1))) with the K(0) := K(1) convention."""
    kj = kb[j - 1]
    kprev = kb[j - 2] if j > 1 else kb[0]
    return math.floor(xs.x(j) * float(kj * kj + kprev))


def next_key_block(prev: KeyBlock, xs: ChaoticStream) -> KeyBlock:
    out = bytearray(BLOCK_SIZE)
    pb = prev.bytes
    for j in range(1, BLOCK_SIZE + 1):
        raw = _mix(pb, xs, j) % 256
        if raw == pb[j - 1]:
            raw = math.floor(xs.x(j) * 256)
        out[j - 1] = raw
    return KeyBlock(prev.index + 1, bytes(out))


def key_chain(mk: MasterKey, n_blocks: int, xs: ChaoticStream | None = None) -> list[KeyBlock]:
    """K_1..K_n for ``mk``.  Depends only on the master key and block index."""
    if xs is None:
        xs = stream_for(mk)
    blocks = []
    k = mk.as_key_block()
    for _ in range(n_blocks):
        k = next_key_block(k, xs)
        blocks.append(k)
    return blocks


def rule_vector(k: KeyBlock, xs: ChaoticStream) -> list[int]:
    """DNA rule ids (1..8) for the 32 byte positions of a key block."""
    return [_mix(k.bytes, xs, j) % 8 + 1 for j in range(1, BLOCK_SIZE + 1)]
