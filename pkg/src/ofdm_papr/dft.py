"""Self-contained radix-2 discrete Fourier transform pair.

The transform is unitary: both directions carry a 1/sqrt(P) factor, so
Parseval holds exactly and a forward/inverse round trip is the identity.
The inverse uses the e^{+j*2*pi*n*k/P} kernel; the forward uses the
conjugate kernel.

Both functions accept arrays of shape (..., P) and transform the last
axis, so batches of frames go through one call.  All functions here are
pure and keep no shared mutable state.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def is_power_of_two(n: int) -> bool:
    """True when n is 1, 2, 4, 8, ..."""
    return n >= 1 and (n & (n - 1)) == 0


@lru_cache(maxsize=None)
def _bit_reversal(p: int) -> np.ndarray:
    """Index permutation that bit-reverses 0..p-1 over log2(p) bits."""
    bits = p.bit_length() - 1
    idx = np.arange(p)
    rev = np.zeros(p, dtype=np.intp)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    rev.flags.writeable = False
    return rev


@lru_cache(maxsize=None)
def _stage_twiddles(p: int, sign: int) -> tuple[np.ndarray, ...]:
    """Per-stage twiddle factors e^{sign*j*pi*k/span} for span = 1, 2, ..., p/2."""
    stages = []
    span = 1
    while span < p:
        tw = np.exp(sign * 1j * np.pi * np.arange(span) / span)
        tw.flags.writeable = False
        stages.append(tw)
        span *= 2
    return tuple(stages)


def _checked(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim < 1:
        raise ValueError(f"{name} must have at least one axis")
    p = arr.shape[-1]
    if not is_power_of_two(p):
        raise ValueError(f"{name} length {p} is not a power of two")
    if not np.isfinite(arr.view(np.float64)).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def _transform(arr: np.ndarray, sign: int) -> np.ndarray:
    """Iterative decimation-in-time butterflies over the last axis."""
    p = arr.shape[-1]
    out = arr[..., _bit_reversal(p)]
    for tw in _stage_twiddles(p, sign):
        span = tw.shape[-1]
        g = out.reshape(out.shape[:-1] + (p // (2 * span), 2, span))
        even = g[..., 0, :]
        odd = g[..., 1, :] * tw
        g[..., 1, :], g[..., 0, :] = even - odd, even + odd
    out *= 1.0 / np.sqrt(p)
    return out


def inverse_dft(freq) -> np.ndarray:
    """Frequency-domain symbols to time samples, x_n = (1/sqrt(P)) sum_k X_k e^{+j2pi nk/P}.

    Args:
        freq: array-like of shape (..., P) with P a power of two.

    Returns:
        complex128 array of the same shape.
    """
    return _transform(_checked(freq, "freq"), +1)


def forward_dft(time) -> np.ndarray:
    """Unitary inverse of :func:`inverse_dft`: forward_dft(inverse_dft(X)) == X."""
    return _transform(_checked(time, "time"), -1)
