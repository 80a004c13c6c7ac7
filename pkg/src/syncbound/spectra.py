"""Laplacian and adjacency spectra for small graphs.

The eigensolver is a cyclic Jacobi iteration (compiled kernel when
available, pure Python otherwise).  Closed forms for cycles and paths act
as independent cross-checks on it, and the complement identity

    lambda_i(complement(g)) + lambda_{n-i+2}(g) = n      (i >= 2)

turns one computed spectrum into the other without a second solve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph import DisconnectedGraphError, Graph
from .kernel import jacobi_sweeps

#: default tolerance for treating two spectral values as equal
EQUALITY_TOL = 1e-8

#: sweep budget for the Jacobi iteration
MAX_SWEEPS = 100


class NonConvergenceError(RuntimeError):
    """Jacobi sweeps exhausted without reaching the target off-norm."""


class NumericalHealthError(RuntimeError):
    """A computed spectrum contradicts an exact structural fact."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order plus the multiplicity of zero."""

    values: tuple[float, ...]
    zero_multiplicity: int

    @classmethod
    def from_values(cls, values, zero_tol: float = EQUALITY_TOL) -> "Spectrum":
        # values within zero_tol of 0 are snapped exact: the structural
        # matrices here always carry 0 as a true eigenvalue
        vals = tuple(
            sorted(0.0 if abs(float(v)) <= zero_tol else float(v) for v in values)
        )
        zeros = sum(1 for v in vals if v == 0.0)
        return cls(vals, zeros)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def lambda2(self) -> float:
        """Second-smallest eigenvalue (algebraic connectivity for Laplacians)."""
        if self.n < 2:
            raise ValueError("lambda2 needs at least 2 eigenvalues")
        return self.values[1]

    @property
    def lambda_max(self) -> float:
        return self.values[-1]


@dataclass(frozen=True)
class SyncIndex:
    """The eigenratio r = lambda2 / lambda_max of a connected graph."""

    lambda2: float
    lambda_max: float

    @cached_property
    def r(self) -> float:
        return self.lambda2 / self.lambda_max


# -- matrices ----------------------------------------------------------------


def laplacian(g: Graph) -> np.ndarray:
    """Laplacian L = D - A as a dense symmetric float array."""
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        m[u, u] += 1.0
        m[v, v] += 1.0
        m[u, v] -= 1.0
        m[v, u] -= 1.0
    return m


def adjacency(g: Graph) -> np.ndarray:
    """Adjacency matrix as a dense symmetric float array."""
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        m[u, v] = 1.0
        m[v, u] = 1.0
    return m


# -- eigensolver --------------------------------------------------------------


def sym_eigenvalues(
    m: np.ndarray,
    tol: float | None = None,
    max_sweeps: int = MAX_SWEEPS,
    zero_tol: float = EQUALITY_TOL,
) -> Spectrum:
    """All eigenvalues of a symmetric matrix, ascending.

    Parameters
    ----------
    m : square symmetric ndarray with finite entries.
    tol : target off-diagonal Frobenius norm; defaults to 1e-10 * n.
    max_sweeps : full Jacobi sweeps allowed before giving up.

    Raises NonConvergenceError if the sweep budget runs out, and
    NumericalHealthError if the eigenvalue sum drifts from the trace.
    """
    a = np.array(m, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise ValueError("expected a nonempty matrix")
    if not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if tol is None:
        tol = 1e-10 * n
    trace = float(np.trace(a))
    _, off = jacobi_sweeps(a, float(tol), int(max_sweeps))
    if off > tol:
        raise NonConvergenceError(
            f"off-diagonal norm {off:.3e} above tolerance {tol:.3e} "
            f"after {max_sweeps} sweeps"
        )
    values = np.sort(np.diagonal(a).copy())
    drift = abs(float(values.sum()) - trace)
    if drift > EQUALITY_TOL * max(1.0, abs(trace)):
        raise NumericalHealthError(
            f"eigenvalue sum drifted from trace by {drift:.3e}"
        )
    return Spectrum.from_values(values, zero_tol=zero_tol)


def laplacian_spectrum(g: Graph, tol: float | None = None) -> Spectrum:
    """Laplacian eigenvalues of g, with a connectivity cross-check.

    The multiplicity of the zero eigenvalue must match what traversal says
    about connectedness; disagreement means the numerics cannot be trusted.
    """
    spec = sym_eigenvalues(laplacian(g), tol=tol)
    if g.n >= 1:
        connected = g.is_connected()
        if connected and spec.zero_multiplicity != 1:
            raise NumericalHealthError(
                f"graph is connected but zero multiplicity is "
                f"{spec.zero_multiplicity}"
            )
        if not connected and spec.zero_multiplicity < 2:
            raise NumericalHealthError(
                "graph is disconnected but the zero eigenvalue is simple"
            )
    return spec


# -- closed forms --------------------------------------------------------------


def cycle_spectrum_closed_form(k: int) -> Spectrum:
    """Laplacian spectrum of C_k: {2 - 2cos(2*pi*j/k)}, j = 0..k-1.

    Equivalently 3 - sin(3*j*pi/k)/sin(j*pi/k) for j >= 1; the even cycle
    tops out at 4, the odd one at 2 + 2cos(pi/k).
    """
    if k < 3:
        raise ValueError(f"cycle spectrum needs k >= 3, got {k}")
    vals = [2.0 - 2.0 * math.cos(2.0 * math.pi * j / k) for j in range(k)]
    return Spectrum.from_values(vals)


def path_spectrum_closed_form(k: int) -> Spectrum:
    """Laplacian spectrum of P_k: {2 - 2cos(pi*j/k)}, j = 0..k-1."""
    if k < 1:
        raise ValueError(f"path spectrum needs k >= 1, got {k}")
    vals = [2.0 - 2.0 * math.cos(math.pi * j / k) for j in range(k)]
    return Spectrum.from_values(vals)


def odd_cycle_defect(n: int) -> float:
    """delta(n) = sin(3(n-1)pi/2n) / sin((n-1)pi/2n) for odd n >= 3.

    This is the amount by which an odd cycle's top Laplacian eigenvalue
    falls short of 4: lambda_max(C_n) = 3 - delta(n).  The closed form
    1 - 2cos(pi/n) is used as a self-check; delta(3) = 0, and delta is
    negative from n = 5 on.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"odd cycle defect needs odd n >= 3, got {n}")
    half = (n - 1) * math.pi / (2.0 * n)
    value = math.sin(3.0 * half) / math.sin(half)
    alt = 1.0 - 2.0 * math.cos(math.pi / n)
    if abs(value - alt) > 1e-12:
        raise NumericalHealthError(
            f"odd cycle defect self-check failed at n={n}: {value} vs {alt}"
        )
    return value


# -- derived quantities ---------------------------------------------------------


def eigenratio(g: Graph, tol: float | None = None) -> SyncIndex:
    """Eigenratio r = lambda2 / lambda_max of a connected graph on >= 2 nodes."""
    if g.n < 2:
        raise ValueError(f"eigenratio needs at least 2 nodes, got {g.n}")
    if not g.is_connected():
        raise DisconnectedGraphError("eigenratio is defined for connected graphs")
    spec = laplacian_spectrum(g, tol=tol)
    return SyncIndex(spec.lambda2, spec.lambda_max)


def complement_spectrum(g: Graph, spec: Spectrum) -> Spectrum:
    """Laplacian spectrum of complement(g) from g's spectrum.

    Uses lambda_i(g^c) = n - lambda_{n-i+2}(g) for i >= 2, plus the
    obligatory zero.  Valid for any g on >= 1 nodes, connected or not.
    """
    if spec.n != g.n:
        raise ValueError(f"spectrum has {spec.n} values but graph has {g.n} nodes")
    n = g.n
    vals = [0.0] + [n - v for v in spec.values[1:]]
    return Spectrum.from_values(vals)


def adjacency_min_eigenvalue(g: Graph, tol: float | None = None) -> float:
    """Smallest adjacency eigenvalue; at most d_max - lambda_max(L)."""
    if g.n < 1:
        raise ValueError("adjacency spectrum needs at least 1 node")
    return sym_eigenvalues(adjacency(g), tol=tol).values[0]
