"""DECS-AU audio block cipher, plus the chosen-plaintext, chosen-ciphertext
and cycle attacks that break it."""
from decsau.cipher import (
    ByteStream,
    decrypt_block,
    decrypt_stream,
    encrypt_block,
    encrypt_stream,
    substitute_block,
)
from decsau.keychain import (
    ChaoticStream,
    KeyBlock,
    MasterKey,
    derive_x0,
    key_chain,
    logistic_stream,
    next_key_block,
    rule_vector,
)
from decsau.shuffle import ShuffleMap, apply_shuffle, build_shuffle_map

__all__ = [
    "ByteStream",
    "ChaoticStream",
    "KeyBlock",
    "MasterKey",
    "ShuffleMap",
    "apply_shuffle",
    "build_shuffle_map",
    "decrypt_block",
    "decrypt_stream",
    "derive_x0",
    "encrypt_block",
    "encrypt_stream",
    "key_chain",
    "logistic_stream",
    "next_key_block",
    "rule_vector",
    "substitute_block",
]
