"""Joint number-phase quasi-probability function and its closed forms.

S(f; n, theta) is assembled from the finite double sum over coefficient
pairs whose indices straddle level n (integer and half-integer diagonals of
the coefficient outer product). It is real by construction symmetry, may go
negative, and its marginals are the number and phase distributions. The
equivalent circle-integral form is deliberately left to the test suite as
an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import i0

from .disk import default_grid_size, midpoint_grid, next_pow2
from .errors import DiskPhaseError, DomainError, SpecError
from .states import FockState, pi_superposition_norm
from .weyl import WeylElement, apply

_IMAG_RESIDUE_TOL = 1e-12


def _pair_coefficients(coeffs: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Fourier coefficients of S(n, .): even harmonics 2p, odd harmonics 2p+1."""
    f = coeffs
    size = f.size
    ps = np.arange(-n, n + 1)
    even = np.zeros(2 * n + 1, dtype=complex)
    ok = (n - ps >= 0) & (n - ps < size) & (n + ps >= 0) & (n + ps < size)
    even[ok] = f[n - ps[ok]] * np.conj(f[n + ps[ok]])
    ps_odd = np.arange(-n, n)
    odd = np.zeros(max(2 * n, 0), dtype=complex)
    ok = (
        (n - ps_odd - 1 >= 0)
        & (n - ps_odd - 1 < size)
        & (n + ps_odd >= 0)
        & (n + ps_odd < size)
    )
    odd[ok] = f[n - ps_odd[ok] - 1] * np.conj(f[n + ps_odd[ok]])
    return even, odd


def wigner(state: FockState, n: int, theta):
    """Value of the joint function at level n and angle(s) theta."""
    if n < 0:
        raise DomainError("level n must be non-negative")
    theta = np.asarray(theta, dtype=float)
    scalar = theta.ndim == 0
    angles = np.atleast_1d(theta)
    even, odd = _pair_coefficients(state.coeffs, n)
    ps = np.arange(-n, n + 1)
    total = np.tensordot(even, np.exp(2j * np.outer(ps, angles)), axes=(0, 0))
    if n > 0:
        ps_odd = np.arange(-n, n)
        total = total + np.tensordot(
            odd, np.exp(1j * np.outer(2 * ps_odd + 1, angles)), axes=(0, 0)
        )
    out = total.real / (2.0 * np.pi)
    return float(out[0]) if scalar else out


@dataclass(frozen=True, eq=False)
class WignerGrid:
    """S values on a (level, midpoint-angle) lattice with marginal accessors."""

    n_max: int
    theta: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        for name in ("theta", "values"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def number_marginal(self) -> np.ndarray:
        """Integral over the angle (periodic trapezoid) per level."""
        return (2.0 * np.pi / self.theta.size) * self.values.sum(axis=1)

    def phase_marginal(self) -> np.ndarray:
        """Sum over levels per angle."""
        return self.values.sum(axis=0)


def wigner_grid(
    state: FockState, n_max: int | None = None, grid_size: int | None = None
) -> WignerGrid:
    """Fill the lattice by the finite-sum form, then assert it is real.

    With n_max >= N - 1 both marginals are exact (the function vanishes for
    n >= N). For an exact angle marginal the grid must exceed the top
    harmonic 2 n_max + 1.
    """
    if n_max is None:
        n_max = state.truncation - 1
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    m = (
        next_pow2(max(default_grid_size(state.truncation), 4 * (n_max + 1)))
        if grid_size is None
        else int(grid_size)
    )
    if m <= 2 * n_max + 1:
        raise SpecError(f"grid {m} cannot resolve harmonics up to {2 * n_max + 1}")
    theta = midpoint_grid(m)
    harmonics = np.arange(-(2 * n_max + 1), 2 * n_max + 2)
    phases = np.exp(1j * np.outer(harmonics, theta))
    coeff_matrix = np.zeros((n_max + 1, harmonics.size), dtype=complex)
    offset = 2 * n_max + 1
    for n in range(n_max + 1):
        even, odd = _pair_coefficients(state.coeffs, n)
        coeff_matrix[n, offset - 2 * n : offset + 2 * n + 1 : 2] = even
        if n > 0:
            coeff_matrix[n, offset - 2 * n + 1 : offset + 2 * n : 2] = odd
    values = coeff_matrix @ phases / (2.0 * np.pi)
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if residue >= _IMAG_RESIDUE_TOL:
        raise DiskPhaseError(
            f"imaginary residue {residue:.3e} exceeds {_IMAG_RESIDUE_TOL:.0e}; "
            "coefficient conjugation is suspect"
        )
    return WignerGrid(n_max, theta, values.real)


def chebyshev_u(k: int, x):
    """Second-kind Chebyshev polynomial via the three-term recurrence.

    Negative orders are defined as identically zero (the convention the
    closed forms below rely on at small n).
    """
    x = np.asarray(x, dtype=float)
    if k < 0:
        return np.zeros_like(x)
    prev = np.ones_like(x)
    if k == 0:
        return prev
    cur = 2.0 * x
    for _ in range(k - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def closed_form(kind: str, params: dict, n: int, theta):
    """Printed closed forms for the catalog states.

    The second (odd-harmonic) term is omitted at n = 0 throughout, matching
    the `chebyshev_u(k<0) = 0` convention.
    """
    theta = np.asarray(theta, dtype=float)
    if n < 0:
        raise DomainError("level n must be non-negative")

    if kind == "number":
        m = int(params["m"])
        out = np.full_like(theta, 1.0 / (2 * np.pi) if n == m else 0.0)
    elif kind == "number_out":
        m = int(params["m"])
        if m < 1:
            raise DomainError("the vacuum superposition needs m >= 1")
        k = m // 2 if m % 2 == 0 else (m + 1) // 2
        out = (
            float(n == 0)
            + float(n == m)
            + 2.0 * float(n == k) * np.cos(m * theta)
        ) / (4.0 * np.pi)
    elif kind == "su11_cs":
        z = complex(params["z"])
        r, phase = abs(z), math.atan2(z.imag, z.real)
        x = np.cos(theta - phase)
        val = r ** (2 * n) * chebyshev_u(2 * n, x)
        if n > 0:
            val = val + r ** (2 * n - 1) * chebyshev_u(2 * n - 1, x)
        out = (1.0 - r * r) / (2.0 * np.pi) * val
    elif kind == "bg":
        u = complex(params["u"])
        a, phase = abs(u), math.atan2(u.imag, u.real)
        c = 2.0 * a * np.cos(theta - phase)
        val = c ** (2 * n) / math.factorial(2 * n)
        if n > 0:
            val = val + c ** (2 * n - 1) / math.factorial(2 * n - 1)
        out = val / (2.0 * np.pi * i0(2.0 * a))
    elif kind == "blaschke":
        z = complex(params["z"])
        r, phase = abs(z), math.atan2(z.imag, z.real)
        x = np.cos(theta - phase)
        t1 = r ** (2 * n - 3) * chebyshev_u(2 * n - 3, x) if 2 * n - 3 >= 0 else 0.0
        t2 = (
            (1.0 - 2.0 * r * x) * r ** (2 * n - 2) * chebyshev_u(2 * n - 2, x)
            if 2 * n - 2 >= 0
            else 0.0
        )
        t3 = (
            (r * r - 2.0 * r * x) * r ** (2 * n - 1) * chebyshev_u(2 * n - 1, x)
            if 2 * n - 1 >= 0
            else 0.0
        )
        t4 = r ** (2 * n + 2) * chebyshev_u(2 * n, x)
        out = (t1 + t2 + t3 + t4) / (2.0 * np.pi)
    elif kind == "pi_superposition":
        z = complex(params["z"])
        tau = float(params["tau"])
        r, phase = abs(z), math.atan2(z.imag, z.real)
        amp2 = 4.0 * (1.0 - r * r) / pi_superposition_norm(z, tau)
        x = np.cos(2.0 * (theta - phase))
        val = math.cos(tau / 2.0) ** 2 * r ** (2 * n) * chebyshev_u(n, x)
        if n >= 1:
            val = val + (
                r * r * math.sin(tau / 2.0) ** 2
                - r * math.sin(tau) * np.sin(theta - phase)
            ) * r ** (2 * (n - 1)) * chebyshev_u(n - 1, x)
        out = amp2 / (2.0 * np.pi) * val
    else:
        raise SpecError(f"unknown closed-form tag {kind!r}")
    return float(out) if out.ndim == 0 else out


def shift_covariance_check(
    state: FockState,
    w: WeylElement,
    n_max: int | None = None,
    grid_size: int | None = None,
) -> float:
    """Max deviation from S(g; n, theta) = S(f; n-m, theta-beta).

    Levels below the shift must vanish; above it the function is the
    original one displaced on the lattice.
    """
    shifted = apply(w, state)
    if n_max is None:
        n_max = shifted.truncation - 1
    m = default_grid_size(shifted.truncation) if grid_size is None else int(grid_size)
    theta = midpoint_grid(m)
    worst = 0.0
    for n in range(n_max + 1):
        lhs = wigner(shifted, n, theta)
        if n < w.m:
            worst = max(worst, float(np.max(np.abs(lhs))))
        else:
            rhs = wigner(state, n - w.m, theta - w.beta)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst
