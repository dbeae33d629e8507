"""Selected mapping: score M phase-rotated candidates, keep the lowest PAPR.

Candidate 0 always carries the all-ones identity sequence, so the selected
frame can never be worse than the unmodified one.  The remaining sequences
draw i.i.d. rotations from the 4-ary alphabet {+1, -1, +j, -j}.
"""

from __future__ import annotations

import numpy as np

from .frame import PaprSample, TimeFrame, papr_linear, time_samples
from .modulation import FrequencyFrame

PHASE_ALPHABET = np.array([1.0 + 0.0j, -1.0 + 0.0j, 1.0j, -1.0j])


class PhaseSequence:
    """Per-subcarrier unit-magnitude rotations plus the candidate index."""

    __slots__ = ("rotations", "index")

    def __init__(self, rotations, index: int) -> None:
        arr = np.array(rotations, dtype=np.complex128)
        if arr.ndim != 1:
            raise ValueError("rotations must be one-dimensional")
        if index < 0:
            raise ValueError("index must be non-negative")
        mag = np.abs(arr)
        if not np.allclose(mag, 1.0, rtol=0.0, atol=1e-12):
            raise ValueError("rotations must have unit magnitude")
        if index == 0 and not np.all(arr == 1.0):
            raise ValueError("sequence 0 must be the all-ones identity")
        arr.flags.writeable = False
        object.__setattr__(self, "rotations", arr)
        object.__setattr__(self, "index", int(index))

    def __setattr__(self, name, value):
        raise AttributeError("PhaseSequence is immutable")


class SlmResult:
    """Winning candidate frame, its index (the side information), and all PAPRs."""

    __slots__ = ("frame", "selected_index", "papr", "all_paprs")

    def __init__(self, frame: TimeFrame, selected_index: int,
                 papr: PaprSample, all_paprs: list[PaprSample]) -> None:
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "selected_index", selected_index)
        object.__setattr__(self, "papr", papr)
        object.__setattr__(self, "all_paprs", all_paprs)

    def __setattr__(self, name, value):
        raise AttributeError("SlmResult is immutable")


def generate_phase_sequences(m_count: int, n: int,
                             rng: np.random.Generator) -> list[PhaseSequence]:
    """Identity sequence first, then m_count-1 random 4-ary sequences."""
    if m_count < 1:
        raise ValueError("m_count must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    seqs = [PhaseSequence(np.ones(n, dtype=np.complex128), 0)]
    for m in range(1, m_count):
        rot = PHASE_ALPHABET[rng.integers(0, PHASE_ALPHABET.size, n)]
        seqs.append(PhaseSequence(rot, m))
    return seqs


def slm_reduce(freq: FrequencyFrame, sequences: list[PhaseSequence],
               oversample: int) -> SlmResult:
    """Synthesize every rotated candidate and return the minimum-PAPR one.

    Ties break toward the lowest candidate index.  Pure function of its
    inputs; the candidates are scored as one batch.
    """
    if not sequences:
        raise ValueError("at least one phase sequence is required")
    for s in sequences:
        if s.rotations.size != freq.n_subcarriers:
            raise ValueError(
                f"sequence length {s.rotations.size} != frame length {freq.n_subcarriers}")
    rotations = np.stack([s.rotations for s in sequences])
    candidates = time_samples(freq.symbols[None, :] * rotations, oversample)
    scores = papr_linear(candidates)
    best = int(np.argmin(scores))
    return SlmResult(
        frame=TimeFrame(candidates[best], oversample),
        selected_index=best,
        papr=PaprSample.from_linear(scores[best]),
        all_paprs=[PaprSample.from_linear(v) for v in scores],
    )
