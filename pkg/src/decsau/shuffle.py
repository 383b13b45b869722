"""Channel shuffling: the odd/even pairing built from a key block.

Positions are 1-based everywhere in this module's interface.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from decsau.errors import DomainError
from decsau.keychain import BLOCK_SIZE, KeyBlock

HALF = BLOCK_SIZE // 2


@dataclass(frozen=True, eq=False)
class ShuffleMap:
    """Right channel ``rc`` (odd positions) paired index-wise with left channel ``lc``.

    Two maps compare equal when they induce the same permutation; the order
    in which pairs were listed is not observable in the cipher output.
    """

    rc: tuple[int, ...]
    lc: tuple[int, ...]

    def __post_init__(self):
        rc, lc = tuple(self.rc), tuple(self.lc)
        object.__setattr__(self, "rc", rc)
        object.__setattr__(self, "lc", lc)
        if len(rc) != HALF or len(lc) != HALF:
            raise DomainError("each channel must hold 16 positions")
        if any(p % 2 != 1 for p in rc) or any(p % 2 != 0 for p in lc):
            raise DomainError("rc must hold odd positions and lc even positions")
        if set(rc) | set(lc) != set(range(1, BLOCK_SIZE + 1)):
            raise DomainError("channels must partition positions 1..32")

    def positions(self) -> tuple[int, ...]:
        """P = Rc followed by Lc."""
        return self.rc + self.lc

    def mapping(self) -> dict[int, int]:
        """f as a dict, f(P[i]) = P[(i + 16) mod 32]."""
        p = self.positions()
        return {p[i]: p[(i + HALF) % BLOCK_SIZE] for i in range(BLOCK_SIZE)}

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(zip(self.rc, self.lc))

    def __eq__(self, other):
        if not isinstance(other, ShuffleMap):
            return NotImplemented
        return self.pairs() == other.pairs()

    def __hash__(self):
        return hash(self.pairs())

    @cached_property
    def source_indices(self) -> tuple[int, ...]:
        """0-based ``src`` with out[j] = block[src[j]]."""
        f = self.mapping()
        return tuple(f[j] - 1 for j in range(1, BLOCK_SIZE + 1))


def build_shuffle_map(k: KeyBlock | bytes) -> ShuffleMap:
    kb = k.bytes if isinstance(k, KeyBlock) else bytes(k)
    used = [False] * BLOCK_SIZE
    rc: list[int] = []
    lc: list[int] = []
    for element in kb:
        while True:
            t = element % BLOCK_SIZE
            element += 1
            if not used[t]:
                break
        if t % 2 == 0:
            rc.append(t + 1)
        else:
            lc.append(t + 1)
        used[t] = True
    return ShuffleMap(tuple(rc), tuple(lc))


def apply_shuffle(block: bytes, m: ShuffleMap) -> bytes:
    if len(block) != BLOCK_SIZE:
        raise DomainError(f"block must be {BLOCK_SIZE} bytes, got {len(block)}")
    return bytes(block[s] for s in m.source_indices)
