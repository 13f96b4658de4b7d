"""Shared strategies and helpers for the test suite."""

import hypothesis.strategies as st
import numpy as np
from hypothesis import assume
from hypothesis.strategies import composite

from diskphase import FockState


@composite
def normalized_states(draw, min_size=2, max_size=32):
    """A random unit-norm coefficient vector wrapped as a state."""
    n = draw(st.integers(min_size, max_size))
    parts = draw(
        st.lists(
            st.tuples(
                st.floats(-1, 1, allow_nan=False),
                st.floats(-1, 1, allow_nan=False),
            ),
            min_size=n,
            max_size=n,
        )
    )
    c = np.array([complex(re, im) for re, im in parts])
    norm = np.linalg.norm(c)
    assume(norm > 1e-3)
    return FockState(c / norm, 0.0)


@composite
def disk_points(draw, max_radius=0.9):
    r = draw(st.floats(0, max_radius, allow_nan=False))
    phi = draw(st.floats(-np.pi, np.pi, allow_nan=False))
    return r * np.exp(1j * phi)


def boundary_direct(state, thetas):
    """Reference boundary evaluation by plain summation (no FFT)."""
    n = np.arange(state.truncation)
    return np.exp(1j * np.outer(np.asarray(thetas), n)) @ np.conj(state.coeffs)
