"""Time/frequency views and byte statistics for presenting attack results."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from decsau.errors import DomainError


@dataclass(frozen=True)
class Spectrum:
    bin_hz: float
    magnitudes: np.ndarray

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(len(self.magnitudes)) * self.bin_hz

    def peak_hz(self) -> float:
        return float(np.argmax(self.magnitudes) * self.bin_hz)


def _centered(samples) -> np.ndarray:
    return np.frombuffer(bytes(samples), dtype=np.uint8).astype(np.float64) - 128.0


def magnitude_spectrum(samples, fs: float) -> Spectrum:
    """|DFT| of the 128-centred signal, bins 0..N//2."""
    x = _centered(samples)
    if x.size < 2:
        raise DomainError("spectrum needs at least 2 samples")
    return Spectrum(fs / x.size, np.abs(np.fft.rfft(x)))


def byte_histogram(data) -> np.ndarray:
    data = bytes(data)
    if not data:
        raise DomainError("histogram of empty input")
    return np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256)


def shannon_entropy(data) -> float:
    """Bits per byte, in [0, 8]."""
    counts = byte_histogram(data)
    p = counts[counts > 0] / counts.sum()
    return float(-(p * np.log2(p)).sum()) + 0.0


def adjacent_correlation(data) -> tuple[float, bool]:
    """Pearson correlation of (x[n], x[n+1]) and a flag set when it is undefined.

    Zero-variance input reports (0.0, True) instead of raising.
    """
    data = bytes(data)
    if len(data) < 2:
        raise DomainError("correlation needs at least 2 bytes")
    x = np.frombuffer(data, dtype=np.uint8).astype(np.float64)
    a, b = x[:-1] - x[:-1].mean(), x[1:] - x[1:].mean()
    denom = np.sqrt((a * a).sum() * (b * b).sum())
    if denom == 0:
        return 0.0, True
    return float(np.clip((a * b).sum() / denom, -1.0, 1.0)), False


def _fmt(v) -> str:
    return f"{v:.9g}"


def time_csv(samples) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["index", "sample"])
    w.writerows((i, s) for i, s in enumerate(bytes(samples)))
    return out.getvalue()


def spectrum_csv(spec: Spectrum) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["hz", "magnitude"])
    w.writerows((_fmt(f), _fmt(m)) for f, m in zip(spec.frequencies, spec.magnitudes))
    return out.getvalue()


def stats_csv(samples) -> str:
    corr, degenerate = adjacent_correlation(samples)
    rows = [
        ("length", len(bytes(samples))),
        ("entropy_bits", _fmt(shannon_entropy(samples))),
        ("adjacent_correlation", _fmt(corr)),
        ("correlation_degenerate", int(degenerate)),
    ]
    return "name,value\n" + "".join(f"{name},{value}\n" for name, value in rows)


def write_analysis(samples, fs: float, out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = {
        "time.csv": time_csv(samples),
        "spectrum.csv": spectrum_csv(magnitude_spectrum(samples, fs)),
        "stats.csv": stats_csv(samples),
    }
    paths = []
    for name, text in files.items():
        path = out_dir / name
        path.write_text(text)
        paths.append(path)
    return paths
