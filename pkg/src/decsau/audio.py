"""8-bit mono PCM WAV files, the ``.decsau`` cipher container, and test tones."""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from decsau.errors import (
    BadMagic,
    DomainError,
    LengthInconsistency,
    MalformedRiff,
    UnsupportedFormat,
)
from decsau.keychain import BLOCK_SIZE

WAVE_FORMAT_PCM = 0x0001
CONTAINER_MAGIC = b"DECSAU01"
_CONTAINER_HEADER = struct.Struct("<8sQI")


@dataclass(frozen=True)
class AudioClip:
    """Unsigned 8-bit mono PCM; silence is 128."""

    sample_rate: int
    samples: bytes
    bits_per_sample: int = 8
    channels: int = 1

    def __post_init__(self):
        if self.bits_per_sample != 8 or self.channels != 1:
            raise UnsupportedFormat(
                f"only 8-bit mono PCM is supported, got {self.bits_per_sample}-bit x{self.channels}")
        if self.sample_rate <= 0:
            raise DomainError(f"sample rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", bytes(self.samples))

    def __len__(self):
        return len(self.samples)


def parse_wav(data: bytes) -> AudioClip:
    data = bytes(data)
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise MalformedRiff("missing RIFF/WAVE signature")
    riff_size = struct.unpack_from("<I", data, 4)[0]
    if riff_size + 8 > len(data):
        raise MalformedRiff(f"RIFF size {riff_size} runs past the end of the file")
    end = riff_size + 8
    fmt = None
    pos = 12
    while pos + 8 <= end:
        chunk_id, size = struct.unpack_from("<4sI", data, pos)
        body = pos + 8
        if body + size > end:
            raise MalformedRiff(f"chunk {chunk_id!r} of {size} bytes overruns the file")
        if chunk_id == b"fmt ":
            if size < 16:
                raise MalformedRiff(f"fmt chunk too short ({size} bytes)")
            tag, channels, rate, _byte_rate, _align, bits = struct.unpack_from("<HHIIHH", data, body)
            if tag != WAVE_FORMAT_PCM:
                raise UnsupportedFormat(f"format tag 0x{tag:04x} is not integer PCM")
            if channels != 1 or bits != 8:
                raise UnsupportedFormat(f"only 8-bit mono PCM is supported, got {bits}-bit x{channels}")
            fmt = rate
        elif chunk_id == b"data":
            if fmt is None:
                raise MalformedRiff("data chunk precedes fmt chunk")
            return AudioClip(fmt, data[body:body + size])
        pos = body + size + (size & 1)
    raise MalformedRiff("no data chunk")


def write_wav(clip: AudioClip) -> bytes:
    n = len(clip.samples)
    pad = b"\x00" if n & 1 else b""
    header = struct.pack(
        "<4sI4s4sIHHIIHH4sI",
        b"RIFF", 36 + n + len(pad), b"WAVE",
        b"fmt ", 16, WAVE_FORMAT_PCM, 1, clip.sample_rate, clip.sample_rate, 1, 8,
        b"data", n,
    )
    return header + clip.samples + pad


@dataclass(frozen=True)
class CipherContainer:
    original_length: int
    sample_rate: int
    payload: bytes

    def __post_init__(self):
        object.__setattr__(self, "payload", bytes(self.payload))
        if len(self.payload) % BLOCK_SIZE:
            raise LengthInconsistency(f"payload length {len(self.payload)} is not a multiple of {BLOCK_SIZE}")
        if self.original_length > len(self.payload):
            raise LengthInconsistency(
                f"original length {self.original_length} exceeds payload length {len(self.payload)}")


def write_container(c: CipherContainer) -> bytes:
    return _CONTAINER_HEADER.pack(CONTAINER_MAGIC, c.original_length, c.sample_rate) + c.payload


def read_container(data: bytes) -> CipherContainer:
    data = bytes(data)
    if not data.startswith(CONTAINER_MAGIC):
        raise BadMagic("not a DECSAU01 container")
    if len(data) < _CONTAINER_HEADER.size:
        raise LengthInconsistency("container header is truncated")
    _, original_length, sample_rate = _CONTAINER_HEADER.unpack_from(data)
    return CipherContainer(original_length, sample_rate, data[_CONTAINER_HEADER.size:])


def synthesize_sine(freq_hz: float, fs: int, n_samples: int, amplitude: float = 100) -> AudioClip:
    if not 0 < freq_hz < fs / 2:
        raise DomainError(f"tone of {freq_hz} Hz is outside (0, {fs / 2}) for fs = {fs}")
    if not 0 <= amplitude <= 127:
        raise DomainError(f"amplitude must lie in 0..127, got {amplitude}")
    n = np.arange(n_samples)
    wave = np.rint(128 + amplitude * np.sin(2 * np.pi * freq_hz * n / fs))
    return AudioClip(fs, np.clip(wave, 0, 255).astype(np.uint8).tobytes())


def synthesize_test_clip(fs: int = 8000, seconds: float = 2.0, seed: int = 0) -> AudioClip:
    """Deterministic speech-like clip: a few harmonics under a syllable envelope plus noise."""
    rng = np.random.default_rng(seed)
    t = np.arange(int(fs * seconds)) / fs
    f0 = 140 + 30 * np.sin(2 * np.pi * 0.7 * t)
    phase = 2 * np.pi * np.cumsum(f0) / fs
    voice = sum(np.sin(h * phase) / h for h in range(1, 6))
    envelope = 0.5 * (1 - np.cos(2 * np.pi * 3.0 * t)) ** 2
    wave = 128 + 45 * envelope * voice + rng.normal(0, 3, t.size)
    return AudioClip(fs, np.clip(np.rint(wave), 0, 255).astype(np.uint8).tobytes())
