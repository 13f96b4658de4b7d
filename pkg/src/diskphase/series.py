"""Truncated power-series arithmetic used by the factorisation pipeline.

Series are plain 1-d complex arrays of Taylor coefficients, lowest order
first. All operations truncate to the requested length.
"""

from __future__ import annotations

import numpy as np


def series_mul(a: np.ndarray, b: np.ndarray, length: int) -> np.ndarray:
    """Cauchy product truncated to `length` coefficients."""
    full = np.convolve(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
    out = np.zeros(length, dtype=complex)
    k = min(length, full.size)
    out[:k] = full[:k]
    return out


def series_div(a: np.ndarray, b: np.ndarray, length: int) -> np.ndarray:
    """Deconvolution c with b * c = a (requires b[0] != 0)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if b[0] == 0:
        raise ZeroDivisionError("leading series coefficient is zero")
    c = np.zeros(length, dtype=complex)
    c[0] = (a[0] if a.size else 0.0) / b[0]
    for n in range(1, length):
        an = a[n] if n < a.size else 0.0
        m = min(n, b.size - 1)
        acc = np.dot(b[1 : m + 1], c[n - 1 :: -1][:m]) if m else 0.0
        c[n] = (an - acc) / b[0]
    return c


def series_exp(phi: np.ndarray, length: int) -> np.ndarray:
    """exp of a power series by the standard derivative recurrence.

    b_0 = e^{phi_0},  n b_n = sum_{k=1..n} k phi_k b_{n-k}.
    """
    phi = np.asarray(phi, dtype=complex)
    b = np.zeros(length, dtype=complex)
    b[0] = np.exp(phi[0])
    kphi = np.arange(phi.size) * phi
    for n in range(1, length):
        m = min(n, phi.size - 1)
        b[n] = np.dot(kphi[1 : m + 1], b[n - 1 :: -1][:m]) / n if m else 0.0
    return b


def series_eval(coeffs: np.ndarray, z):
    """Horner evaluation of sum_n coeffs[n] z^n (scalar or array z)."""
    return np.polyval(np.asarray(coeffs, dtype=complex)[::-1], z)
