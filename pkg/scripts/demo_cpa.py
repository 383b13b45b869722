"""Differential chosen-plaintext attack on a 700 Hz tone.

Writes time/spectrum CSVs for the two chosen plaintexts, their ciphertexts,
the target, its ciphertext and the recovered plaintext, plus the recovered
equivalent key.

    python3 scripts/demo_cpa.py --out-dir runs/cpa
"""
import argparse
from dataclasses import dataclass
from pathlib import Path

from decsau.attacks import EncryptionOracle, craft_cpa_plaintexts, differential_cpa, format_equivalent_key
from decsau.audio import synthesize_sine
from decsau.cipher import encrypt_stream
from decsau.keychain import MasterKey, key_chain
from decsau.metrics import write_analysis


@dataclass
class Config:
    key_hex: str = "d6d0752a8580d93bd4ce20fa785d5ea0cd1d170d51b237e74052aa6ef17160ce"
    freq_hz: float = 700.0
    fs: int = 8000
    seconds: float = 1.0
    amplitude: float = 100.0


def run(cfg: Config, out_dir: Path) -> bool:
    mk = MasterKey.from_hex(cfg.key_hex)
    clip = synthesize_sine(cfg.freq_hz, cfg.fs, int(cfg.fs * cfg.seconds), cfg.amplitude)
    target = encrypt_stream(mk, clip.samples)

    oracle = EncryptionOracle.from_key(mk)
    eqkey, recovered = differential_cpa(oracle, target)

    p1, p2 = craft_cpa_plaintexts(target.n_blocks)
    views = {
        "chosen1": p1, "chosen2": p2,
        "chosen1_cipher": encrypt_stream(mk, p1).data, "chosen2_cipher": encrypt_stream(mk, p2).data,
        "target": clip.samples, "target_cipher": target.data, "recovered": recovered,
    }
    for name, samples in views.items():
        write_analysis(samples, cfg.fs, out_dir / name)
    (out_dir / "eqkey.txt").write_text(format_equivalent_key(eqkey))

    chain_ok = [k for k, _ in eqkey.entries] == [k.bytes for k in key_chain(mk, target.n_blocks)]
    ok = recovered == clip.samples
    print(f"oracle queries:      {oracle.query_count}")
    print(f"blocks recovered:    {eqkey.block_count}")
    print(f"plaintext recovered: {ok}")
    print(f"key chain matches:   {chain_ok}")
    return ok and chain_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=Path, default=Path("runs/cpa"))
    ap.add_argument("--seconds", type=float, default=Config.seconds)
    args = ap.parse_args()
    raise SystemExit(0 if run(Config(seconds=args.seconds), args.out_dir) else 1)


if __name__ == "__main__":
    main()
