import io
import sys

import pytest

from conftest import CPA_KEY_HEX, CYCLE_KEY_HEX
from decsau.attacks import parse_equivalent_key
from decsau.audio import AudioClip, parse_wav, read_container, write_wav
from decsau.cipher import encrypt_raw
from decsau.cli import main
from decsau.keychain import MasterKey, key_chain
from decsau.shuffle import build_shuffle_map


@pytest.fixture
def sine_wav(tmp_path, sine_clip):
    path = tmp_path / "sine.wav"
    path.write_bytes(write_wav(sine_clip))
    return path


@pytest.fixture
def speech_wav(tmp_path, speech_clip):
    path = tmp_path / "speech.wav"
    path.write_bytes(write_wav(speech_clip))
    return path


def _encrypt(key, wav, out):
    assert main(["encrypt", "--key", key, "--in", str(wav), "--out", str(out)]) == 0
    return out


def test_keygen_round_trip(tmp_path, speech_wav, speech_clip, capsys):
    key_file = tmp_path / "k.txt"
    assert main(["keygen", "--out", str(key_file)]) == 0
    text = key_file.read_text()
    assert len(text) == 65 and text.endswith("\n") and text == text.lower()
    ct = _encrypt("@" + str(key_file), speech_wav, tmp_path / "c.decsau")
    out = tmp_path / "back.wav"
    assert main(["decrypt", "--key", "@" + str(key_file), "--in", str(ct), "--out", str(out)]) == 0
    assert parse_wav(out.read_bytes()) == speech_clip

    assert main(["keygen"]) == 0
    assert len(capsys.readouterr().out.strip()) == 64


def test_encrypt_wav_out(tmp_path, sine_wav, sine_clip):
    cwav = tmp_path / "c.wav"
    assert main(["encrypt", "--key", CPA_KEY_HEX, "--in", str(sine_wav),
                 "--out", str(tmp_path / "c.decsau"), "--wav-out", str(cwav)]) == 0
    clip = parse_wav(cwav.read_bytes())
    container = read_container((tmp_path / "c.decsau").read_bytes())
    assert clip.sample_rate == 8000 and clip.samples == container.payload
    assert container.original_length == len(sine_clip)


def test_attack_cpa_sim(tmp_path, sine_wav, sine_clip, capsys):
    ct = _encrypt(CPA_KEY_HEX, sine_wav, tmp_path / "c.decsau")
    out, dump = tmp_path / "rec.wav", tmp_path / "eq.txt"
    assert main(["attack-cpa", "--sim-key", CPA_KEY_HEX, "--target", str(ct),
                 "--out", str(out), "--dump-eqkey", str(dump)]) == 0
    assert "oracle queries: 2" in capsys.readouterr().out
    assert parse_wav(out.read_bytes()).samples == sine_clip.samples
    eqkey = parse_equivalent_key(dump.read_text())
    chain = key_chain(MasterKey.from_hex(CPA_KEY_HEX), eqkey.block_count)
    assert [k for k, _ in eqkey.entries] == [k.bytes for k in chain]


def test_attack_cca_sim(tmp_path, capsys):
    out = tmp_path / "keys.txt"
    assert main(["attack-cca", "--sim-key", CYCLE_KEY_HEX, "--blocks", "4", "--out", str(out)]) == 0
    assert "oracle queries: 1" in capsys.readouterr().out
    eqkey = parse_equivalent_key(out.read_text())
    chain = key_chain(MasterKey.from_hex(CYCLE_KEY_HEX), 4)
    assert eqkey.entries == tuple((k.bytes, build_shuffle_map(k)) for k in chain)


def test_attack_cycle_sim(tmp_path, speech_wav, speech_clip, capsys):
    ct = _encrypt(CYCLE_KEY_HEX, speech_wav, tmp_path / "c.decsau")
    out = tmp_path / "rec.wav"
    assert main(["attack-cycle", "--sim-key", CYCLE_KEY_HEX, "--target", str(ct), "--out", str(out)]) == 0
    assert "oracle queries: 3" in capsys.readouterr().out
    assert parse_wav(out.read_bytes()).samples == speech_clip.samples


def test_oracle_cmd_matches_sim(tmp_path, sine_clip, capsys):
    wav = tmp_path / "short.wav"
    wav.write_bytes(write_wav(AudioClip(8000, sine_clip.samples[:500])))
    key_file = tmp_path / "k.txt"
    key_file.write_text(CPA_KEY_HEX + "\n")
    ct = _encrypt("@" + str(key_file), wav, tmp_path / "c.decsau")
    enc_cmd = f"{sys.executable} -m decsau oracle --encrypt --key @{key_file}"
    dec_cmd = f"{sys.executable} -m decsau oracle --decrypt --key @{key_file}"

    outputs = {}
    for mode, flag in (("sim", ["--sim-key", CPA_KEY_HEX]), ("cmd", ["--oracle-cmd", enc_cmd])):
        rec, dump = tmp_path / f"{mode}.wav", tmp_path / f"{mode}.txt"
        assert main(["attack-cpa", *flag, "--target", str(ct), "--out", str(rec),
                     "--dump-eqkey", str(dump)]) == 0
        rec2 = tmp_path / f"{mode}-cycle.wav"
        assert main(["attack-cycle", *flag, "--target", str(ct), "--out", str(rec2)]) == 0
        outputs[mode] = (rec.read_bytes(), dump.read_text(), rec2.read_bytes())
    assert outputs["sim"] == outputs["cmd"]
    assert parse_wav(outputs["cmd"][0]).samples == sine_clip.samples[:500]

    out = tmp_path / "cca.txt"
    capsys.readouterr()
    assert main(["attack-cca", "--oracle-cmd", dec_cmd, "--blocks", "2", "--out", str(out)]) == 0
    assert "oracle queries: 1" in capsys.readouterr().out
    chain = key_chain(MasterKey.from_hex(CPA_KEY_HEX), 2)
    assert [k for k, _ in parse_equivalent_key(out.read_text()).entries] == [k.bytes for k in chain]


def test_oracle_defaults_to_encryption(tmp_path, monkeypatch, capsysbinary):
    data = bytes(range(64))
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(data)))
    assert main(["oracle", "--key", CPA_KEY_HEX]) == 0
    assert capsysbinary.readouterr().out == encrypt_raw(MasterKey.from_hex(CPA_KEY_HEX), data)


def test_analyze(tmp_path, sine_wav):
    out_dir = tmp_path / "analysis"
    assert main(["analyze", "--in", str(sine_wav), "--out-dir", str(out_dir)]) == 0
    spectrum = (out_dir / "spectrum.csv").read_text().splitlines()
    assert spectrum[0] == "hz,magnitude" and len(spectrum) == 4002
    peak = max(spectrum[1:], key=lambda line: float(line.split(",")[1]))
    assert peak.split(",")[0] == "700"
    assert (out_dir / "time.csv").read_text().startswith("index,sample\n0,128\n")
    assert (out_dir / "stats.csv").read_text().startswith("name,value\n")


def test_usage_errors():
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["attack-cpa", "--target", "x", "--out", "y"]) == 2
    assert main(["attack-cca", "--sim-key", CPA_KEY_HEX, "--blocks", "0", "--out", "y"]) == 2


def test_data_errors(tmp_path, capsys):
    bad = tmp_path / "bad.wav"
    bad.write_bytes(b"not a wav")
    assert main(["encrypt", "--key", CPA_KEY_HEX, "--in", str(bad), "--out", str(tmp_path / "c")]) == 1
    assert main(["encrypt", "--key", "00" * 32, "--in", str(bad), "--out", str(tmp_path / "c")]) == 1
    assert main(["decrypt", "--key", CPA_KEY_HEX, "--in", str(bad), "--out", str(tmp_path / "o")]) == 1
    assert main(["decrypt", "--key", CPA_KEY_HEX, "--in", str(tmp_path / "missing"),
                 "--out", str(tmp_path / "o")]) == 1
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 4
    assert "MalformedRiff" in err[0] and "DegenerateKey" in err[1] and "BadMagic" in err[2]
