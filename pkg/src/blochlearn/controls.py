"""Bang-bang control protocols on a fixed 100-step grid.

A protocol is piecewise constant over 100 equal time steps, takes only
the values +1 and -1, and changes sign exactly five times.  It is stored
compactly as an initial sign plus the five switch boundaries; a switch
at position k flips the sign between step k-1 and step k (0-indexed
steps, so valid switch positions are 1..99).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import SplitMix64

N_STEPS = 100
N_SWITCHES = 5


@dataclass(frozen=True)
class BangControl:
    """Sign pattern of a bang-bang protocol with exactly five switches."""

    initial_sign: int
    switch_positions: tuple[int, ...]

    def __post_init__(self):
        if self.initial_sign not in (-1, 1):
            raise ValueError(f"initial_sign must be -1 or +1, got {self.initial_sign}")
        pos = self.switch_positions
        if len(pos) != N_SWITCHES:
            raise ValueError(f"expected {N_SWITCHES} switch positions, got {len(pos)}")
        if any(p != int(p) or not 1 <= p <= N_STEPS - 1 for p in pos):
            raise ValueError(f"switch positions must be integers in [1, {N_STEPS - 1}]")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValueError("switch positions must be strictly increasing")

    def steps(self) -> np.ndarray:
        """Expanded +/-1 step values, shape (100,)."""
        return expand_control(self)


def sample_control(rng: SplitMix64) -> BangControl:
    """Draw a uniform control: sign from {-1,+1}, switches a uniform 5-subset of 1..99."""
    sign = rng.sign()
    positions = sorted(rng.distinct(N_SWITCHES, 1, N_STEPS - 1))
    return BangControl(sign, tuple(positions))


def expand_control(control: BangControl) -> np.ndarray:
    """Expand a control to its 100 step values (int8, entries in {-1,+1})."""
    flips = np.zeros(N_STEPS, dtype=np.int64)
    flips[list(control.switch_positions)] = 1
    parity = np.cumsum(flips) & 1
    return (control.initial_sign * (1 - 2 * parity)).astype(np.int8)


def expand_controls(initial_signs: np.ndarray, switch_positions: np.ndarray) -> np.ndarray:
    """Vectorized expansion of many controls.

    initial_signs: shape (n,), values in {-1,+1}; switch_positions: shape
    (n, 5), each row strictly increasing in [1, 99].  Returns int8 matrix
    of shape (n, 100).
    """
    n = initial_signs.shape[0]
    flips = np.zeros((n, N_STEPS), dtype=np.int64)
    rows = np.repeat(np.arange(n), switch_positions.shape[1])
    flips[rows, switch_positions.ravel()] = 1
    parity = np.cumsum(flips, axis=1) & 1
    return (initial_signs[:, None] * (1 - 2 * parity)).astype(np.int8)


def control_from_steps(steps) -> BangControl:
    """Reconstruct the compact control from its expanded step values.

    Inverse of `expand_control`; raises if the step vector is not a valid
    five-switch pattern.
    """
    u = np.asarray(steps, dtype=np.int64)
    if u.shape != (N_STEPS,):
        raise ValueError(f"expected {N_STEPS} step values, got shape {u.shape}")
    if not np.all(np.abs(u) == 1):
        raise ValueError("step values must be -1 or +1")
    positions = np.nonzero(u[1:] != u[:-1])[0] + 1
    return BangControl(int(u[0]), tuple(int(p) for p in positions))
