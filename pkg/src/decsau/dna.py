"""DNA encoding rules and the rule-indexed DNA XOR.

A byte is split most-significant pair first, (b7 b6)(b5 b4)(b3 b2)(b1 b0),
and each 2-bit value becomes one nucleotide, giving the quad N4 N3 N2 N1.
"""
from __future__ import annotations

from decsau.errors import DomainError

NUCLEOTIDES = "ATGC"

# rule id -> 2-bit value of A, T, G, C
RULES: dict[int, tuple[int, int, int, int]] = {
    1: (0b00, 0b11, 0b10, 0b01),
    2: (0b00, 0b11, 0b01, 0b10),
    3: (0b11, 0b00, 0b10, 0b01),
    4: (0b11, 0b00, 0b01, 0b10),
    5: (0b10, 0b01, 0b00, 0b11),
    6: (0b10, 0b01, 0b11, 0b00),
    7: (0b01, 0b10, 0b00, 0b11),
    8: (0b01, 0b10, 0b11, 0b00),
}

_TO_BITS = {r: dict(zip(NUCLEOTIDES, vals)) for r, vals in RULES.items()}
_TO_BASE = {r: {v: n for n, v in table.items()} for r, table in _TO_BITS.items()}
_ENCODE = {r: tuple("".join(_TO_BASE[r][(d >> s) & 3] for s in (6, 4, 2, 0)) for d in range(256))
           for r in RULES}
_XOR = {r: {(a, b): _TO_BASE[r][_TO_BITS[r][a] ^ _TO_BITS[r][b]]
            for a in NUCLEOTIDES for b in NUCLEOTIDES}
        for r in RULES}


def _check_rule(rule: int) -> None:
    if rule not in RULES:
        raise DomainError(f"DNA rule must be in 1..8, got {rule!r}")


def dna_encode(d: int, rule: int) -> str:
    _check_rule(rule)
    return _ENCODE[rule][d]


def dna_decode(quad: str, rule: int) -> int:
    _check_rule(rule)
    if len(quad) != 4:
        raise DomainError(f"nucleotide quad must have 4 symbols, got {quad!r}")
    bits = _TO_BITS[rule]
    try:
        return (bits[quad[0]] << 6) | (bits[quad[1]] << 4) | (bits[quad[2]] << 2) | bits[quad[3]]
    except KeyError as exc:
        raise DomainError(f"not a nucleotide: {exc.args[0]!r}") from None


def dna_xor(q1: str, q2: str, rule: int) -> str:
    """Nucleotide-wise XOR: decode both symbols under ``rule``, XOR, re-encode."""
    _check_rule(rule)
    table = _XOR[rule]
    return "".join(table[a, b] for a, b in zip(q1, q2))


def xor_table(rule: int) -> list[list[str]]:
    """The 4x4 DNA XOR table for ``rule``, rows/columns in A, T, G, C order."""
    _check_rule(rule)
    return [[_XOR[rule][a, b] for b in NUCLEOTIDES] for a in NUCLEOTIDES]
