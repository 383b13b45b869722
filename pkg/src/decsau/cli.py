"""Command line front end: ``decsau <subcommand> ...``.

Exit codes: 0 success, 1 data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from decsau import attacks
from decsau.audio import (
    AudioClip,
    CipherContainer,
    parse_wav,
    read_container,
    write_container,
    write_wav,
)
from decsau.cipher import ByteStream, decrypt_raw, decrypt_stream, encrypt_raw, encrypt_stream
from decsau.errors import DecsauError
from decsau.formats import format_key, parse_key_arg, random_master_key
from decsau.metrics import write_analysis


def _add_oracle_args(p: argparse.ArgumentParser, what: str) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--sim-key", metavar="HEX|@FILE",
                   help=f"simulate the {what} oracle in-process with this key")
    g.add_argument("--oracle-cmd", metavar="CMD",
                   help=f"external {what} command: raw bytes on stdin, raw bytes on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decsau", description="DECS-AU audio cipher and its attacks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a random 32-byte master key")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("encrypt", help="encrypt an 8-bit mono WAV into a .decsau container")
    p.add_argument("--key", required=True, metavar="HEX|@FILE")
    p.add_argument("--in", dest="inp", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--wav-out", type=Path, help="also write the cipher bytes as a playable WAV")

    p = sub.add_parser("decrypt", help="decrypt a .decsau container into a WAV")
    p.add_argument("--key", required=True, metavar="HEX|@FILE")
    p.add_argument("--in", dest="inp", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)

    p = sub.add_parser("attack-cpa", help="differential chosen-plaintext attack (2 queries)")
    _add_oracle_args(p, "encryption")
    p.add_argument("--target", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--dump-eqkey", type=Path)

    p = sub.add_parser("attack-cca", help="all-zero chosen-ciphertext attack (1 query)")
    _add_oracle_args(p, "decryption")
    p.add_argument("--blocks", required=True, type=int)
    p.add_argument("--out", required=True, type=Path)

    p = sub.add_parser("attack-cycle", help="cycle attack: re-encrypt three times (3 queries)")
    _add_oracle_args(p, "encryption")
    p.add_argument("--target", required=True, type=Path)
    p.add_argument("--out", required=True, type=Path)

    p = sub.add_parser("analyze", help="write time.csv, spectrum.csv and stats.csv for a WAV")
    p.add_argument("--in", dest="inp", required=True, type=Path)
    p.add_argument("--out-dir", required=True, type=Path)

    p = sub.add_parser("oracle", help="raw block-aligned encryption/decryption on stdin/stdout")
    p.add_argument("--key", required=True, metavar="HEX|@FILE")
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--encrypt", dest="decrypt", action="store_false")
    direction.add_argument("--decrypt", dest="decrypt", action="store_true")
    p.set_defaults(decrypt=False)
    return parser


def _oracle(args, kind):
    if args.sim_key is not None:
        return kind.from_key(parse_key_arg(args.sim_key))
    return kind.from_command(args.oracle_cmd)


def _report(oracle) -> None:
    print(f"oracle queries: {oracle.query_count}")


def cmd_keygen(args) -> None:
    text = format_key(random_master_key())
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def cmd_encrypt(args) -> None:
    mk = parse_key_arg(args.key)
    clip = parse_wav(args.inp.read_bytes())
    ct = encrypt_stream(mk, clip.samples)
    args.out.write_bytes(write_container(CipherContainer(ct.original_length, clip.sample_rate, ct.data)))
    if args.wav_out:
        args.wav_out.write_bytes(write_wav(AudioClip(clip.sample_rate, ct.data)))


def _read_target(path: Path) -> tuple[CipherContainer, ByteStream]:
    c = read_container(path.read_bytes())
    return c, ByteStream(c.payload, c.original_length)


def cmd_decrypt(args) -> None:
    mk = parse_key_arg(args.key)
    c, ct = _read_target(args.inp)
    args.out.write_bytes(write_wav(AudioClip(c.sample_rate, decrypt_stream(mk, ct))))


def cmd_attack_cpa(args) -> None:
    oracle = _oracle(args, attacks.EncryptionOracle)
    c, ct = _read_target(args.target)
    eqkey, plain = attacks.differential_cpa(oracle, ct)
    args.out.write_bytes(write_wav(AudioClip(c.sample_rate, plain)))
    if args.dump_eqkey:
        args.dump_eqkey.write_text(attacks.format_equivalent_key(eqkey))
    _report(oracle)
    print(f"recovered {len(plain)} samples over {eqkey.block_count} blocks")


def cmd_attack_cca(args) -> None:
    oracle = _oracle(args, attacks.DecryptionOracle)
    keys = attacks.chosen_ciphertext_attack(oracle, args.blocks)
    args.out.write_text(attacks.format_equivalent_key(attacks.EquivalentKey.from_key_blocks(keys)))
    _report(oracle)
    print(f"recovered {len(keys)} key blocks")


def cmd_attack_cycle(args) -> None:
    oracle = _oracle(args, attacks.EncryptionOracle)
    c, ct = _read_target(args.target)
    plain = attacks.cycle_attack(oracle, ct)
    args.out.write_bytes(write_wav(AudioClip(c.sample_rate, plain)))
    _report(oracle)
    print(f"recovered {len(plain)} samples")


def cmd_analyze(args) -> None:
    clip = parse_wav(args.inp.read_bytes())
    for path in write_analysis(clip.samples, clip.sample_rate, args.out_dir):
        print(path)


def cmd_oracle(args) -> None:
    mk = parse_key_arg(args.key)
    data = sys.stdin.buffer.read()
    out = decrypt_raw(mk, data) if args.decrypt else encrypt_raw(mk, data)
    sys.stdout.buffer.write(out)
    sys.stdout.buffer.flush()


COMMANDS = {
    "keygen": cmd_keygen,
    "encrypt": cmd_encrypt,
    "decrypt": cmd_decrypt,
    "attack-cpa": cmd_attack_cpa,
    "attack-cca": cmd_attack_cca,
    "attack-cycle": cmd_attack_cycle,
    "analyze": cmd_analyze,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "attack-cca" and args.blocks < 1:
        parser.print_usage(sys.stderr)
        print("decsau: error: --blocks must be positive", file=sys.stderr)
        return 2
    try:
        COMMANDS[args.command](args)
    except (DecsauError, OSError, ValueError) as exc:
        print(f"decsau: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0
