"""Cycle attack: encrypt a clip four times under one key and watch it come back.

Writes time/spectrum/stats CSVs for the plaintext and every encryption
round, and the fourth round as a WAV.

    python3 scripts/demo_cycle.py --out-dir runs/cycle [--wav some_8bit_mono.wav]
"""
import argparse
from dataclasses import dataclass
from pathlib import Path

from decsau.attacks import EncryptionOracle, cycle_attack
from decsau.audio import AudioClip, parse_wav, synthesize_test_clip, write_wav
from decsau.cipher import encrypt_raw, encrypt_stream
from decsau.keychain import MasterKey
from decsau.metrics import write_analysis


@dataclass
class Config:
    key_hex: str = "ad90a1aee7fe1f4c363a025c375451ad95761fd1c61e7b66acde33d425fb5280"
    fs: int = 8000
    seconds: float = 3.0
    seed: int = 6


def run(cfg: Config, out_dir: Path, clip: AudioClip | None = None) -> bool:
    mk = MasterKey.from_hex(cfg.key_hex)
    if clip is None:
        clip = synthesize_test_clip(cfg.fs, cfg.seconds, cfg.seed)
    n = len(clip.samples)

    data = encrypt_stream(mk, clip.samples).data
    write_analysis(clip.samples, clip.sample_rate, out_dir / "round0")
    for r in range(1, 5):
        write_analysis(data[:n], clip.sample_rate, out_dir / f"round{r}")
        print(f"round {r}: equals plaintext = {data[:n] == clip.samples}")
        if r < 4:
            data = encrypt_raw(mk, data)
    (out_dir / "round4.wav").write_bytes(write_wav(AudioClip(clip.sample_rate, data[:n])))

    oracle = EncryptionOracle.from_key(mk)
    recovered = cycle_attack(oracle, encrypt_stream(mk, clip.samples))
    print(f"cycle attack: {oracle.query_count} queries, recovered = {recovered == clip.samples}")
    return recovered == clip.samples


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("runs/cycle"))
    ap.add_argument("--wav", type=Path, help="8-bit mono WAV to use instead of the synthetic clip")
    args = ap.parse_args()
    clip = parse_wav(args.wav.read_bytes()) if args.wav else None
    raise SystemExit(0 if run(Config(), args.out_dir, clip) else 1)


if __name__ == "__main__":
    main()
