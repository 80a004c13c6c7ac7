import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

import syncbound as sb
from syncbound.spectra import adjacency, laplacian

from conftest import connected_erdos_renyi, erdos_renyi, graphs


def _close(a, b, tol=1e-9):
    return all(abs(x - y) <= tol for x, y in zip(a, b)) and len(a) == len(b)


# -- closed forms as eigensolver oracles --------------------------------------


@pytest.mark.parametrize("k", range(3, 21))
def test_cycle_spectrum_matches_closed_form(k):
    got = sb.laplacian_spectrum(sb.cycle(k))
    want = sb.cycle_spectrum_closed_form(k)
    assert _close(got.values, want.values)


@pytest.mark.parametrize("k", range(1, 21))
def test_path_spectrum_matches_closed_form(k):
    got = sb.laplacian_spectrum(sb.path(k))
    want = sb.path_spectrum_closed_form(k)
    assert _close(got.values, want.values)


def test_even_cycle_top_eigenvalue_is_four():
    for k in (4, 6, 8, 12):
        assert abs(sb.cycle_spectrum_closed_form(k).lambda_max - 4.0) < 1e-12


def test_complete_graph_spectrum():
    got = sb.laplacian_spectrum(sb.complete(5))
    assert _close(got.values, (0.0, 5.0, 5.0, 5.0, 5.0))


def test_star_spectrum():
    got = sb.laplacian_spectrum(sb.complete_bipartite(1, 3))
    assert _close(got.values, (0.0, 1.0, 1.0, 4.0))


def test_prism_spectrum():
    got = sb.laplacian_spectrum(sb.prism())
    assert _close(got.values, (0.0, 2.0, 3.0, 3.0, 5.0, 5.0))


# -- the odd-cycle defect ----------------------------------------------------


def test_odd_cycle_defect_values():
    assert abs(sb.odd_cycle_defect(3)) < 1e-12
    assert abs(sb.odd_cycle_defect(5) - (1 - 2 * math.cos(math.pi / 5))) < 1e-12
    assert sb.odd_cycle_defect(5) < 0


def test_odd_cycle_defect_matches_cycle_spectrum():
    for n in range(3, 100, 2):
        lam_max = sb.cycle_spectrum_closed_form(n).lambda_max
        assert abs((3.0 - sb.odd_cycle_defect(n)) - lam_max) < 1e-11


def test_odd_cycle_defect_decreases_toward_minus_one():
    vals = [sb.odd_cycle_defect(n) for n in range(3, 60, 2)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] > -1.0


def test_odd_cycle_defect_rejects_even_n():
    with pytest.raises(ValueError):
        sb.odd_cycle_defect(4)
    with pytest.raises(ValueError):
        sb.odd_cycle_defect(1)


# -- complement identity -------------------------------------------------------


def test_complement_spectrum_of_c6_is_prism_spectrum():
    spec = sb.laplacian_spectrum(sb.cycle(6))
    got = sb.complement_spectrum(sb.cycle(6), spec)
    assert _close(got.values, (0.0, 2.0, 3.0, 3.0, 5.0, 5.0), tol=1e-8)


def test_complement_spectrum_of_complete_graph_is_zero():
    g = sb.complete(5)
    got = sb.complement_spectrum(g, sb.laplacian_spectrum(g))
    assert got.values == (0.0,) * 5
    assert got.zero_multiplicity == 5


def test_complement_spectrum_size_mismatch():
    with pytest.raises(ValueError):
        sb.complement_spectrum(sb.cycle(4), sb.laplacian_spectrum(sb.cycle(5)))


def test_complement_identity_on_random_graphs():
    rng = random.Random(46)
    for _ in range(30):
        g = erdos_renyi(rng, rng.randint(2, 12), rng.choice([0.3, 0.5, 0.7]))
        via_identity = sb.complement_spectrum(g, sb.laplacian_spectrum(g))
        direct = sb.laplacian_spectrum(g.complement())
        assert _close(via_identity.values, direct.values, tol=1e-8)


# -- eigenratio -----------------------------------------------------------------


def test_eigenratio_of_c5():
    sync = sb.eigenratio(sb.cycle(5))
    assert abs(sync.r - 0.3819660112501051) < 1e-9


def test_eigenratio_of_complete_graphs_is_one():
    for n in (2, 3, 6):
        assert abs(sb.eigenratio(sb.complete(n)).r - 1.0) < 1e-10


def test_eigenratio_of_prism():
    assert abs(sb.eigenratio(sb.prism()).r - 0.4) < 1e-10


def test_eigenratio_rejects_disconnected():
    with pytest.raises(sb.DisconnectedGraphError):
        sb.eigenratio(sb.from_edge_list(4, [(0, 1), (2, 3)]))


def test_eigenratio_rejects_single_node():
    with pytest.raises(ValueError):
        sb.eigenratio(sb.from_edge_list(1, []))


# -- adjacency spectra ----------------------------------------------------------


def test_adjacency_min_eigenvalues():
    assert abs(sb.adjacency_min_eigenvalue(sb.cycle(4)) - (-2.0)) < 1e-10
    assert abs(
        sb.adjacency_min_eigenvalue(sb.cycle(5)) - (-2 * math.cos(math.pi / 5))
    ) < 1e-10
    assert abs(sb.adjacency_min_eigenvalue(sb.complete(2)) - (-1.0)) < 1e-10
    assert abs(sb.adjacency_min_eigenvalue(sb.path(3)) - (-math.sqrt(2))) < 1e-10


def test_adjacency_bound_against_laplacian():
    # L = D - A gives lambda_min(A) <= d_max - lambda_max(L)
    rng = random.Random(47)
    for _ in range(25):
        g = connected_erdos_renyi(rng, rng.randint(2, 10), 0.5)
        lhs = sb.adjacency_min_eigenvalue(g)
        rhs = g.degrees().d_max - sb.laplacian_spectrum(g).lambda_max
        assert lhs <= rhs + 1e-8


# -- solver interface ------------------------------------------------------------


def test_sym_eigenvalues_rejects_bad_input():
    with pytest.raises(ValueError):
        sb.sym_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        sb.sym_eigenvalues(np.zeros((0, 0)))
    with pytest.raises(ValueError):
        sb.sym_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        sb.sym_eigenvalues(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_sym_eigenvalues_matches_numpy_on_random_symmetric():
    rng = np.random.default_rng(48)
    for n in (2, 5, 11, 20):
        m = rng.standard_normal((n, n))
        m = (m + m.T) / 2
        got = sb.sym_eigenvalues(m).values
        want = np.linalg.eigvalsh(m)
        assert np.allclose(got, want, atol=1e-9)


def test_spectrum_snaps_near_zero_values():
    spec = sb.Spectrum.from_values([3.0, 2e-12, -1e-13])
    assert spec.values[0] == 0.0
    assert spec.values[1] == 0.0
    assert spec.zero_multiplicity == 2


def test_zero_multiplicity_counts_components():
    g = sb.from_edge_list(6, [(0, 1), (2, 3), (4, 5)])
    assert sb.laplacian_spectrum(g).zero_multiplicity == 3


def test_lambda2_needs_two_values():
    with pytest.raises(ValueError):
        sb.Spectrum.from_values([0.0]).lambda2


# -- monotonicity properties ---------------------------------------


@given(graphs(max_nodes=8, connected=True))
@settings(max_examples=40, deadline=None)
def test_adding_an_edge_never_decreases_eigenvalues(g):
    missing = sorted(g.complement().edges)
    if not missing:
        return
    u, v = missing[0]
    bigger = sb.from_edge_list(g.n, sorted(g.edges) + [(u, v)])
    before = sb.laplacian_spectrum(g).values
    after = sb.laplacian_spectrum(bigger).values
    assert all(b >= a - 1e-9 for a, b in zip(before, after))


@given(graphs(max_nodes=8, connected=True))
@settings(max_examples=40, deadline=None)
def test_lambda_max_exceeds_degree_floor(g):
    spec = sb.laplacian_spectrum(g)
    d_max = g.degrees().d_max
    assert spec.lambda_max >= d_max + 1 - 1e-8
    # equality happens exactly at a dominating vertex
    attained = abs(spec.lambda_max - (d_max + 1)) < 1e-8
    assert attained == (d_max == g.n - 1)


@given(graphs(max_nodes=8))
@settings(max_examples=40, deadline=None)
def test_complement_identity_property(g):
    via_identity = sb.complement_spectrum(g, sb.laplacian_spectrum(g))
    direct = sb.laplacian_spectrum(g.complement())
    assert _close(via_identity.values, direct.values, tol=1e-8)


@given(graphs(max_nodes=8, connected=True))
@settings(max_examples=40, deadline=None)
def test_spectrum_bounds_sanity(g):
    spec = sb.laplacian_spectrum(g)
    assert spec.values[0] == 0.0
    assert spec.zero_multiplicity == 1
    assert all(a <= b for a, b in zip(spec.values, spec.values[1:]))
    assert spec.lambda_max <= g.n + 1e-9
    assert abs(sum(spec.values) - sum(g.degrees().degrees)) < 1e-7
