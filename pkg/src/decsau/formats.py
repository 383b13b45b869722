"""Key files and golden-vector files."""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from decsau.errors import DegenerateKey, DomainError
from decsau.keychain import MasterKey


def random_master_key() -> MasterKey:
    while True:
        try:
            return MasterKey(os.urandom(32))
        except DegenerateKey:
            continue


def format_key(mk: MasterKey) -> str:
    return mk.hex() + "\n"


def read_key_file(path) -> MasterKey:
    text = Path(path).read_text()
    if len(text.strip()) != 64:
        raise DomainError(f"{path}: key file must hold 64 hex characters")
    return MasterKey.from_hex(text)


def write_key_file(path, mk: MasterKey) -> None:
    Path(path).write_text(format_key(mk))


def parse_key_arg(value: str) -> MasterKey:
    """``HEX`` inline or ``@FILE``."""
    if value.startswith("@"):
        return read_key_file(value[1:])
    return MasterKey.from_hex(value)


@dataclass(frozen=True)
class GoldenVector:
    master_key: bytes
    block_index: int
    plain: bytes
    cipher: bytes


def parse_golden_vectors(text: str) -> list[GoldenVector]:
    vectors = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 4:
            raise DomainError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        mk, idx, plain, cipher = fields
        vectors.append(GoldenVector(bytes.fromhex(mk), int(idx), bytes.fromhex(plain), bytes.fromhex(cipher)))
    return vectors


def format_golden_vector(v: GoldenVector) -> str:
    return f"{v.master_key.hex()}, {v.block_index}, {v.plain.hex()}, {v.cipher.hex()}\n"
