"""Both Jacobi kernels must agree with each other and with numpy."""

import numpy as np
import pytest

import syncbound as sb
from syncbound import _pykernel
from syncbound.spectra import laplacian, sym_eigenvalues

try:
    from syncbound import _speckernel
except ImportError:  # pure-python build
    _speckernel = None

KERNELS = [_pykernel] if _speckernel is None else [_pykernel, _speckernel]


def _random_symmetric(rng, n):
    m = rng.standard_normal((n, n))
    return (m + m.T) / 2.0


def _eigs(kernel, m, tol):
    a = np.array(m, dtype=np.float64, order="C")
    kernel.jacobi_sweeps(a, tol, 100)
    return np.sort(np.diag(a))


@pytest.mark.parametrize("kernel", KERNELS)
def test_kernel_on_diagonal_matrix_is_a_noop(kernel):
    m = np.diag([3.0, -1.0, 2.0])
    sweeps, off = kernel.jacobi_sweeps(m.copy(), 1e-12, 100)
    assert sweeps == 0
    assert off <= 1e-12


@pytest.mark.parametrize("kernel", KERNELS)
def test_kernel_two_by_two(kernel):
    # eigenvalues of [[2, 1], [1, 2]] are 1 and 3
    got = _eigs(kernel, [[2.0, 1.0], [1.0, 2.0]], 1e-12)
    assert np.allclose(got, [1.0, 3.0], atol=1e-12)


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("n", [3, 6, 12, 24])
def test_kernel_matches_numpy(kernel, n):
    rng = np.random.default_rng(701 + n)
    m = _random_symmetric(rng, n)
    got = _eigs(kernel, m, 1e-12 * n)
    want = np.linalg.eigvalsh(m)
    assert np.allclose(got, want, atol=1e-9)


@pytest.mark.skipif(_speckernel is None, reason="compiled kernel unavailable")
@pytest.mark.parametrize("n", [4, 9, 17, 32])
def test_kernels_agree_cross_implementation(n):
    rng = np.random.default_rng(1300 + n)
    m = _random_symmetric(rng, n)
    a = _eigs(_pykernel, m, 1e-12 * n)
    b = _eigs(_speckernel, m, 1e-12 * n)
    # same algorithm, but FMA contraction in the compiled code may differ
    assert np.allclose(a, b, atol=1e-10)


@pytest.mark.skipif(_speckernel is None, reason="compiled kernel unavailable")
def test_kernels_agree_on_laplacians():
    for g in [sb.cycle(9), sb.prism(), sb.complete_bipartite(3, 4)]:
        m = laplacian(g)
        a = _eigs(_pykernel, m, 1e-12 * g.n)
        b = _eigs(_speckernel, m, 1e-12 * g.n)
        assert np.allclose(a, b, atol=1e-10)


def test_kernel_name_reports_active_implementation():
    assert sb.kernel_name() in ("compiled", "python")
    assert _pykernel.kernel_name() == "python"
    if _speckernel is not None:
        assert _speckernel.kernel_name() == "compiled"


def test_exhausted_sweep_budget_raises():
    m = laplacian(sb.cycle(8))
    with pytest.raises(sb.NonConvergenceError):
        sym_eigenvalues(m, max_sweeps=0)
