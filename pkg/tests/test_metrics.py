import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from decsau.audio import synthesize_sine
from decsau.errors import DomainError
from decsau.metrics import (
    adjacent_correlation,
    byte_histogram,
    magnitude_spectrum,
    shannon_entropy,
    spectrum_csv,
    stats_csv,
    time_csv,
)


def direct_dft_magnitudes(samples):
    x = [s - 128 for s in samples]
    n = len(x)
    return [abs(sum(x[t] * cmath.exp(-2j * math.pi * k * t / n) for t in range(n)))
            for k in range(n // 2 + 1)]


def test_constant_signal_has_no_energy():
    spec = magnitude_spectrum(bytes([128] * 64), 8000)
    assert np.all(spec.magnitudes == 0)
    assert len(spec.magnitudes) == 33


def test_700hz_peak(sine_clip):
    spec = magnitude_spectrum(sine_clip.samples, 8000)
    assert spec.bin_hz == 1.0
    assert spec.peak_hz() == 700.0


@pytest.mark.parametrize("n", [2, 3, 17, 64])
def test_matches_direct_dft(n):
    samples = bytes((37 * i * i + 11) % 256 for i in range(n))
    spec = magnitude_spectrum(samples, 8000)
    assert len(spec.magnitudes) == n // 2 + 1
    assert np.allclose(spec.magnitudes, direct_dft_magnitudes(samples), rtol=1e-9, atol=1e-9)


@given(st.binary(min_size=2, max_size=300))
def test_parseval(samples):
    x = np.frombuffer(samples, np.uint8) - 128.0
    n = len(x)
    mags = magnitude_spectrum(samples, 8000).magnitudes
    weights = np.full(len(mags), 2.0)
    weights[0] = 1.0
    if n % 2 == 0:
        weights[-1] = 1.0
    time_energy = float((x * x).sum())
    freq_energy = float((weights * mags ** 2).sum() / n)
    assert freq_energy == pytest.approx(time_energy, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("freq, fs, n", [(700, 8000, 8000), (440, 8000, 1000), (1234.5, 16000, 4096), (50, 1000, 333)])
def test_tone_peaks_at_nearest_bin(freq, fs, n):
    spec = magnitude_spectrum(synthesize_sine(freq, fs, n, amplitude=100).samples, fs)
    nearest = round(freq / spec.bin_hz)
    assert int(np.argmax(spec.magnitudes)) == nearest


def test_spectrum_needs_two_samples():
    with pytest.raises(DomainError):
        magnitude_spectrum(b"\x80", 8000)


def test_uniform_entropy():
    assert shannon_entropy(bytes(range(256)) * 3) == 8.0


def test_constant_bytes():
    assert shannon_entropy(b"\x07" * 50) == 0.0
    assert adjacent_correlation(b"\x07" * 50) == (0.0, True)


def test_ramp_correlation():
    value, degenerate = adjacent_correlation(bytes(range(200)))
    assert not degenerate
    assert value == pytest.approx(1.0, abs=1e-9)


@given(st.binary(min_size=2, max_size=500))
def test_statistic_ranges(data):
    counts = byte_histogram(data)
    assert counts.sum() == len(data) and len(counts) == 256
    assert 0.0 <= shannon_entropy(data) <= 8.0
    value, _ = adjacent_correlation(data)
    assert -1.0 <= value <= 1.0


def test_empty_inputs():
    with pytest.raises(DomainError):
        byte_histogram(b"")
    with pytest.raises(DomainError):
        adjacent_correlation(b"\x01")


def test_csv_schemas():
    samples = bytes([128, 130, 126, 128])
    assert time_csv(samples).splitlines()[:2] == ["index,sample", "0,128"]
    lines = spectrum_csv(magnitude_spectrum(samples, 8000)).splitlines()
    assert lines[0] == "hz,magnitude"
    # x = (0, 2, -2, 0): X_1 = 2 - 2i
    assert lines[2] == "2000,2.82842712"
    stats = dict(line.split(",") for line in stats_csv(samples).splitlines()[1:])
    assert stats["length"] == "4"
    assert stats["entropy_bits"] == "1.5"
