"""Laplacian spectra and structural synchronizability bounds.

The eigenratio r = lambda2 / lambda_max of a connected graph's Laplacian
measures how easily identical oscillators coupled along its edges
synchronize.  This package computes exact spectra with a dense Jacobi
solver and derives bounds on lambda2, lambda_max, and r from structure
alone: degree extremes, induced cycles in maximum-degree classes, chains,
joins, product embeddings, and disconnected induced subgraphs.
"""

from .bounds import (
    ATTAINMENT_TOL,
    AnalysisReport,
    BoundResult,
    OddCycleTerm,
    Premise,
    SideCycles,
    collect_side_cycles,
    evaluate_all,
    rule_corollary1,
    rule_corollary2,
    rule_corollary3,
    rule_degree_ratio,
    rule_lemma2,
    rule_theorem1,
    rule_theorem2,
    rule_theorem3,
    rule_theorem4,
    rule_theorem5_product,
    rule_theorem6_disconnected,
    theorem4_value,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    from_edge_list,
    join,
    path,
    prism,
)
from .kernel import kernel_name
from .spectra import (
    EQUALITY_TOL,
    NonConvergenceError,
    NumericalHealthError,
    Spectrum,
    SyncIndex,
    adjacency,
    adjacency_min_eigenvalue,
    complement_spectrum,
    cycle_spectrum_closed_form,
    eigenratio,
    laplacian,
    laplacian_spectrum,
    odd_cycle_defect,
    path_spectrum_closed_form,
    sym_eigenvalues,
)
from .subgraphs import (
    CERTIFICATE_KINDS,
    CertificateError,
    DegreeClass,
    SearchUndecided,
    SubgraphCertificate,
    degree_class_of,
    degree_classes,
    find_induced_even_cycle,
    find_join_in_class,
    longest_chain,
    longest_induced_odd_cycle,
    longest_induced_path,
    max_degree_class,
    max_disconnected_subgraph,
    relabel_certificate,
    verify_certificate,
    verify_product_certificate,
    vertex_connectivity,
)

__version__ = "0.1.0"

__all__ = [
    "ATTAINMENT_TOL",
    "AnalysisReport",
    "BoundResult",
    "CERTIFICATE_KINDS",
    "CertificateError",
    "DegreeClass",
    "DisconnectedGraphError",
    "EQUALITY_TOL",
    "Graph",
    "GraphError",
    "NonConvergenceError",
    "NumericalHealthError",
    "OddCycleTerm",
    "Premise",
    "SearchUndecided",
    "SideCycles",
    "Spectrum",
    "SubgraphCertificate",
    "SyncIndex",
    "adjacency",
    "adjacency_min_eigenvalue",
    "cartesian_product",
    "collect_side_cycles",
    "complement_spectrum",
    "complete",
    "complete_bipartite",
    "cycle",
    "cycle_spectrum_closed_form",
    "degree_class_of",
    "degree_classes",
    "edgeless",
    "eigenratio",
    "evaluate_all",
    "find_induced_even_cycle",
    "find_join_in_class",
    "from_edge_list",
    "join",
    "kernel_name",
    "laplacian",
    "laplacian_spectrum",
    "longest_chain",
    "longest_induced_odd_cycle",
    "longest_induced_path",
    "max_degree_class",
    "max_disconnected_subgraph",
    "odd_cycle_defect",
    "path",
    "path_spectrum_closed_form",
    "prism",
    "relabel_certificate",
    "rule_corollary1",
    "rule_corollary2",
    "rule_corollary3",
    "rule_degree_ratio",
    "rule_lemma2",
    "rule_theorem1",
    "rule_theorem2",
    "rule_theorem3",
    "rule_theorem4",
    "rule_theorem5_product",
    "rule_theorem6_disconnected",
    "sym_eigenvalues",
    "theorem4_value",
    "verify_certificate",
    "verify_product_certificate",
    "vertex_connectivity",
    "__version__",
]
