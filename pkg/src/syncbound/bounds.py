"""Bound rules on the Laplacian spectrum and the eigenratio.

Each rule turns a structural premise (degree extremes, induced cycles,
chains, joins, product embeddings, disconnected node sets) into a bound,
labeled with a stable rule_id and the premises that back it.  The rule
functions compute their stated formula for whatever premise the caller
supplies; evaluate_all is the curated path that searches for premises,
verifies them, and refuses emissions whose soundness the premise cannot
actually carry (see the per-rule notes).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .graph import DisconnectedGraphError, Graph
from .spectra import (
    EQUALITY_TOL,
    NumericalHealthError,
    Spectrum,
    SyncIndex,
    complement_spectrum,
    laplacian,
    laplacian_spectrum,
    odd_cycle_defect,
    sym_eigenvalues,
)
from .subgraphs import (
    DEFAULT_SEARCH_CUTOFF,
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
    verify_cycle_certificate,
)

#: bounds within this distance of the exact value count as attained
ATTAINMENT_TOL = 1e-6

BOUND_KINDS = (
    "upper_r",
    "lower_lambda_max",
    "upper_lambda2",
    "exact_lambda2",
    "classification",
)


@dataclass(frozen=True)
class OddCycleTerm:
    """delta(n) = sin(3(n-1)pi/2n)/sin((n-1)pi/2n) for an odd cycle C_n.

    lambda_max(C_n) = 3 - delta(n); delta(3) = 0 and delta(n) < 0 from
    n = 5 on, so longer odd cycles push the bound closer to 4.
    """

    n: int
    delta: float

    @classmethod
    def of(cls, n: int) -> "OddCycleTerm":
        return cls(n, odd_cycle_defect(n))


@dataclass(frozen=True)
class Premise:
    """One verified input of a bound: a degree class or a witness."""

    kind: str  # "degree_class" | "certificate" | "node_set"
    host: str = "graph"  # "graph" | "complement"
    degree: int | None = None
    nodes: tuple[int, ...] = ()
    certificate: SubgraphCertificate | None = None

    @classmethod
    def of_class(cls, dc: DegreeClass, host: str = "graph") -> "Premise":
        return cls("degree_class", host, dc.degree, dc.nodes)

    @classmethod
    def of_cert(
        cls, cert: SubgraphCertificate, host: str = "graph"
    ) -> "Premise":
        return cls("certificate", host, None, cert.nodes, cert)


@dataclass(frozen=True)
class BoundResult:
    """One emitted bound row.

    kind fixes the inequality direction; gap is signed so that a sound
    bound has gap >= 0 (upper kinds: value - exact, lower kinds:
    exact - value), and attained means |gap| < 1e-6.  Classification rows
    carry lambda2 - d_min as their value and make no inequality claim.
    """

    rule_id: str
    kind: str
    value: float
    strict: bool
    premises: tuple[Premise, ...]
    citation: str
    gap: float | None = None
    attained: bool | None = None


@dataclass(frozen=True)
class AnalysisReport:
    """Exact spectrum, eigenratio, and every bound a rule could back."""

    graph: Graph
    complement_connected: bool
    spectrum: Spectrum
    sync: SyncIndex
    bounds: tuple[BoundResult, ...]
    notices: tuple[str, ...]

    def validate(self, tol: float = EQUALITY_TOL) -> None:
        """Check every bound row against the exact spectrum."""
        lam2 = self.spectrum.lambda2
        lam_max = self.spectrum.lambda_max
        r = self.sync.r
        for b in self.bounds:
            if b.kind == "upper_r" and r > b.value + tol:
                raise NumericalHealthError(
                    f"{b.rule_id}: upper_r {b.value} below exact {r}"
                )
            if b.kind == "upper_lambda2" and lam2 > b.value + tol:
                raise NumericalHealthError(
                    f"{b.rule_id}: upper_lambda2 {b.value} below exact {lam2}"
                )
            if b.kind == "lower_lambda_max" and b.value > lam_max + tol:
                raise NumericalHealthError(
                    f"{b.rule_id}: lower_lambda_max {b.value} above exact {lam_max}"
                )
            if b.kind == "exact_lambda2" and abs(b.value - lam2) > tol:
                raise NumericalHealthError(
                    f"{b.rule_id}: exact_lambda2 {b.value} != {lam2}"
                )


# -- simple rules ---------------------------------------------------------------


def rule_degree_ratio(g: Graph) -> BoundResult:
    """r <= d_min / d_max, the coarse degree bound."""
    profile = g.degrees()
    return BoundResult(
        "coarse",
        "upper_r",
        profile.d_min / profile.d_max,
        strict=False,
        premises=(),
        citation="degree bound: r <= d_min / d_max",
    )


def rule_lemma2(g: Graph) -> BoundResult:
    """lambda_max >= d_max + 1 for connected hosts; strict unless d_max = n - 1."""
    profile = g.degrees()
    strict = profile.d_max < g.n - 1
    return BoundResult(
        "lem2",
        "lower_lambda_max",
        float(profile.d_max + 1),
        strict=strict,
        premises=(),
        citation=(
            "Lemma 2: lambda_max >= d_max + 1; equality exactly when "
            "d_max = n - 1"
        ),
    )


def rule_corollary1(
    g: Graph, spectrum: Spectrum, tol: float = EQUALITY_TOL
) -> BoundResult:
    """Classify lambda2 against d_min and check the implied structure.

    lambda2 > d_min forces a complete host; lambda2 = d_min forces the host
    or its complement to be disconnected.  lambda2 < d_min implies nothing
    by itself (it is the conclusion, not a test, of double connectivity).
    The row's value is lambda2 - d_min.
    """
    profile = g.degrees()
    lam2 = spectrum.lambda2
    dev = lam2 - profile.d_min
    if dev > tol:
        if not g.is_complete():
            raise NumericalHealthError(
                f"lambda2 = {lam2} exceeds d_min = {profile.d_min} on an "
                "incomplete graph"
            )
        outcome = "lambda2 > d_min: host is complete"
    elif dev >= -tol:
        if g.is_connected() and g.complement().is_connected():
            raise NumericalHealthError(
                f"lambda2 = d_min = {profile.d_min} with host and complement "
                "both connected"
            )
        outcome = "lambda2 = d_min: host or its complement is disconnected"
    else:
        outcome = (
            "lambda2 < d_min: necessary whenever host and complement are "
            "both connected"
        )
    return BoundResult(
        "cor1",
        "classification",
        dev,
        strict=False,
        premises=(),
        citation=f"Corollary 1: {outcome}",
    )


def rule_corollary2(
    g: Graph,
    sub: SubgraphCertificate | Sequence[int] | None = None,
) -> list[BoundResult]:
    """Upper eigenratio bounds from an induced subgraph and from connectivity.

    sub names the induced subgraph H: either a node set, or a certificate of
    an induced kind (cycles, disconnected sets).  The branch
    r <= d_min / lambda_max(H) needs lambda2 <= d_min, which fails exactly
    on complete hosts, so it is skipped there; it is strict only when the
    complement is connected too.  The both-connected branch
    r < d_min / (d_max + 1) is always strict.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("corollary 2 needs a connected host")
    profile = g.degrees()
    both = g.complement().is_connected()
    out: list[BoundResult] = []
    if sub is not None and not g.is_complete():
        if isinstance(sub, SubgraphCertificate):
            if sub.kind not in ("even_cycle", "odd_cycle", "disconnected_set"):
                raise CertificateError(
                    "corollary 2 needs an induced-subgraph witness, "
                    f"got {sub.kind}"
                )
            verify_certificate(g, sub)
            nodes = sub.nodes
            premise = Premise.of_cert(sub)
        else:
            nodes = tuple(sorted(set(sub)))
            if not nodes or not all(0 <= v < g.n for v in nodes):
                raise CertificateError(
                    f"subgraph nodes must be a nonempty subset of 0..{g.n - 1}"
                )
            premise = Premise("node_set", nodes=nodes)
        h = g.induced_subgraph(nodes)
        lam_max_h = sym_eigenvalues(laplacian(h)).lambda_max
        if lam_max_h > 0:
            op = "<" if both else "<="
            out.append(
                BoundResult(
                    "cor2.subgraph",
                    "upper_r",
                    profile.d_min / lam_max_h,
                    strict=both,
                    premises=(premise,),
                    citation=(
                        f"Corollary 2: r {op} d_min / lambda_max(H) for an "
                        "induced subgraph H"
                    ),
                )
            )
    if both:
        out.append(
            BoundResult(
                "cor2.connected",
                "upper_r",
                profile.d_min / (profile.d_max + 1),
                strict=True,
                premises=(),
                citation=(
                    "Corollary 2: r < d_min / (d_max + 1) when host and "
                    "complement are both connected"
                ),
            )
        )
    return out


def rule_corollary3(
    g: Graph, spectrum: Spectrum, tol: float = EQUALITY_TOL
) -> list[BoundResult]:
    """lambda2 = d_min + 1 - alpha exactly, alpha = lambda_max(g^c) - d_max(g^c).

    Edgeless complements (complete hosts) hit the formula's alpha = 0 limit
    and are still emitted.  The ratio form divides by d_max + 1.
    """
    profile = g.degrees()
    comp_spec = complement_spectrum(g, spectrum)
    comp_d_max = g.n - 1 - profile.d_min
    alpha = comp_spec.lambda_max - comp_d_max
    exact = profile.d_min + 1 - alpha
    if abs(exact - spectrum.lambda2) > max(tol, 1e-8):
        raise NumericalHealthError(
            f"corollary 3 identity drifted: {exact} vs lambda2 = "
            f"{spectrum.lambda2}"
        )
    strict_ratio = profile.d_max < g.n - 1
    citation_tail = (
        f"alpha = lambda_max(complement) - d_max(complement) = {alpha:.9g}"
    )
    return [
        BoundResult(
            "cor3",
            "exact_lambda2",
            exact,
            strict=False,
            premises=(),
            citation=f"Corollary 3: lambda2 = d_min + 1 - alpha; {citation_tail}",
        ),
        BoundResult(
            "cor3",
            "upper_r",
            exact / (profile.d_max + 1),
            strict=strict_ratio,
            premises=(),
            citation=(
                f"Corollary 3: r <= (d_min + 1 - alpha) / (d_max + 1); "
                f"{citation_tail}"
            ),
        ),
    ]


# -- Theorem 1 ---------------------------------------------------------------------


@dataclass(frozen=True)
class SideCycles:
    """Induced-cycle findings for one side's maximum-degree class."""

    dc: DegreeClass
    even: SubgraphCertificate | None
    odd: SubgraphCertificate | None
    undecided: bool


def collect_side_cycles(
    host: Graph, max_nodes: int | None = DEFAULT_SEARCH_CUTOFF
) -> SideCycles:
    """Search the host's maximum-degree class for induced cycles.

    Certificates come back in host labels and re-verified.  When the class
    exceeds the cutoff both searches are skipped and undecided is set.
    """
    dc = max_degree_class(host)
    try:
        even = find_induced_even_cycle(dc.subgraph, max_nodes)
        odd = longest_induced_odd_cycle(dc.subgraph, max_nodes)
    except SearchUndecided:
        return SideCycles(dc, None, None, True)
    if even is not None:
        even = relabel_certificate(even, dc.nodes)
        verify_cycle_certificate(host, even)
    if odd is not None:
        odd = relabel_certificate(odd, dc.nodes)
        verify_cycle_certificate(host, odd)
    return SideCycles(dc, even, odd, False)


def _thm1_lmax_term(
    profile_d_max: int, cert: SubgraphCertificate
) -> tuple[float, str]:
    if cert.kind == "even_cycle":
        return float(profile_d_max + 2), "even cycle: d_max + 2"
    term = OddCycleTerm.of(len(cert.nodes))
    return (
        profile_d_max + 1 - term.delta,
        f"odd cycle C_{term.n}: d_max + 1 - delta({term.n})",
    )


def _thm1_l2_term(
    profile_d_min: int, cert: SubgraphCertificate
) -> tuple[float, str]:
    if cert.kind == "even_cycle":
        return float(profile_d_min - 1), "even cycle: d_min - 1"
    term = OddCycleTerm.of(len(cert.nodes))
    return (
        profile_d_min + term.delta,
        f"odd cycle C_{term.n}: d_min + delta({term.n})",
    )


def rule_theorem1(
    g: Graph,
    g_side: SideCycles | None = None,
    c_side: SideCycles | None = None,
    max_nodes: int | None = DEFAULT_SEARCH_CUTOFF,
) -> list[BoundResult]:
    """Cycle-based bounds from both maximum-degree classes.

    Full cases pair a cycle in the host's class with one in the complement's
    class: (i) even+even, (ii) odd+odd, (iii) even+odd, (iv) odd+even, each
    emitting lower_lambda_max, upper_lambda2, and their quotient upper_r.
    When only one side has cycles, the available side is emitted alone
    (rule_ids thm1.lmax-* / thm1.l2-*).  Odd-cycle searches are exhaustive
    within the cutoff, so odd certificates are the longest, as the mixed
    formulas require.
    """
    if g_side is None:
        g_side = collect_side_cycles(g, max_nodes)
    if c_side is None:
        c_side = collect_side_cycles(g.complement(), max_nodes)
    profile = g.degrees()
    out: list[BoundResult] = []
    cases = (
        ("thm1.i", g_side.even, c_side.even),
        ("thm1.ii", g_side.odd, c_side.odd),
        ("thm1.iii", g_side.even, c_side.odd),
        ("thm1.iv", g_side.odd, c_side.even),
    )
    case_names = {
        "thm1.i": "even cycles in both maximum-degree classes",
        "thm1.ii": "odd cycles in both maximum-degree classes",
        "thm1.iii": "even cycle in the host class, odd in the complement class",
        "thm1.iv": "odd cycle in the host class, even in the complement class",
    }
    for rule_id, gc, cc in cases:
        if gc is None or cc is None:
            continue
        lmax_val, lmax_note = _thm1_lmax_term(profile.d_max, gc)
        l2_val, l2_note = _thm1_l2_term(profile.d_min, cc)
        premises = (
            Premise.of_class(g_side.dc, "graph"),
            Premise.of_cert(gc, "graph"),
            Premise.of_class(c_side.dc, "complement"),
            Premise.of_cert(cc, "complement"),
        )
        base = f"Theorem 1 ({case_names[rule_id]})"
        out.append(
            BoundResult(
                rule_id, "lower_lambda_max", lmax_val, False, premises,
                f"{base}; {lmax_note}",
            )
        )
        out.append(
            BoundResult(
                rule_id, "upper_lambda2", l2_val, False, premises,
                f"{base}; {l2_note}",
            )
        )
        out.append(
            BoundResult(
                rule_id, "upper_r", l2_val / lmax_val, False, premises,
                f"{base}; quotient of the lambda2 and lambda_max bounds",
            )
        )
    have_g = g_side.even is not None or g_side.odd is not None
    have_c = c_side.even is not None or c_side.odd is not None
    if have_g and not have_c:
        for cert, suffix in ((g_side.even, "even"), (g_side.odd, "odd")):
            if cert is None:
                continue
            val, note = _thm1_lmax_term(profile.d_max, cert)
            out.append(
                BoundResult(
                    f"thm1.lmax-{suffix}",
                    "lower_lambda_max",
                    val,
                    False,
                    (Premise.of_class(g_side.dc), Premise.of_cert(cert)),
                    f"Theorem 1 (lambda_max side only); {note}",
                )
            )
    if have_c and not have_g:
        for cert, suffix in ((c_side.even, "even"), (c_side.odd, "odd")):
            if cert is None:
                continue
            val, note = _thm1_l2_term(profile.d_min, cert)
            out.append(
                BoundResult(
                    f"thm1.l2-{suffix}",
                    "upper_lambda2",
                    val,
                    False,
                    (
                        Premise.of_class(c_side.dc, "complement"),
                        Premise.of_cert(cert, "complement"),
                    ),
                    f"Theorem 1 (lambda2 side only); {note}",
                )
            )
    return out


# -- Theorems 2 through 6 ------------------------------------------------------------


def rule_theorem2(
    g: Graph, dc: DegreeClass, h1_nodes: Sequence[int] | None = None
) -> BoundResult:
    """lambda_max >= d + lambda_max(H1) - d_max(H1) for induced H1 in a class.

    h1_nodes are host labels and must all lie in the class; default is the
    whole class subgraph.  lambda_max(H1) comes from the eigensolver.
    """
    if h1_nodes is None:
        h1_nodes = dc.nodes
    nodes = tuple(sorted(set(h1_nodes)))
    if not nodes:
        raise CertificateError("theorem 2 needs a nonempty node set")
    if not set(nodes) <= set(dc.nodes):
        raise CertificateError(
            f"nodes {sorted(set(nodes) - set(dc.nodes))} are not in the "
            f"degree-{dc.degree} class"
        )
    h1 = g.induced_subgraph(nodes)
    lam_max_h1 = sym_eigenvalues(laplacian(h1)).lambda_max if h1.n > 0 else 0.0
    d_max_h1 = h1.degrees().d_max
    return BoundResult(
        f"thm2.deg{dc.degree}",
        "lower_lambda_max",
        dc.degree + lam_max_h1 - d_max_h1,
        False,
        (Premise.of_class(dc), Premise("node_set", nodes=nodes)),
        (
            "Theorem 2: lambda_max >= d + lambda_max(H1) - d_max(H1) for "
            f"H1 induced inside the degree-{dc.degree} class"
        ),
    )


def rule_theorem3(g: Graph, chain: SubgraphCertificate) -> BoundResult:
    """lambda_max >= d_max + 2cos(pi/k) for a k-node chain (chords allowed).

    The caller owns the premise that the chain actually supports the bound:
    evaluate_all only emits chains capped at one more node than a longest
    induced path, which is what the underlying interlacing argument covers.
    """
    if chain.kind != "chain":
        raise CertificateError(f"theorem 3 needs a chain, got {chain.kind}")
    verify_certificate(g, chain)
    k = len(chain.nodes)
    if k < 2:
        raise CertificateError("theorem 3 needs a chain of at least 2 nodes")
    profile = g.degrees()
    return BoundResult(
        "thm3",
        "lower_lambda_max",
        profile.d_max + 2.0 * math.cos(math.pi / k),
        False,
        (Premise.of_cert(chain),),
        (
            f"Theorem 3: lambda_max >= d_max + 2cos(pi/k) with k = {k} "
            "chain nodes (pi/k convention)"
        ),
    )


def theorem4_value(d: int, n1: int, n2: int, d_max_join: int) -> float:
    """The Theorem 4 arithmetic: d + n1 + n2 - d_max(H1 * H2)."""
    return float(d + n1 + n2 - d_max_join)


def rule_theorem4(
    g: Graph,
    join_cert: SubgraphCertificate,
    dc: DegreeClass,
    rule_id: str | None = None,
) -> BoundResult:
    """lambda_max >= d + n1 + n2 - d_max(join) for a join inside a class.

    A join of n1 + n2 nodes has lambda_max exactly n1 + n2, which is what
    makes the Theorem 2 instance collapse to this arithmetic.
    """
    if join_cert.kind != "join":
        raise CertificateError(f"theorem 4 needs a join, got {join_cert.kind}")
    verify_certificate(g, join_cert)
    if not set(join_cert.nodes) <= set(dc.nodes):
        raise CertificateError(
            f"join nodes are not all in the degree-{dc.degree} class"
        )
    v1, v2 = join_cert.parts
    d_max_join = g.induced_subgraph(join_cert.nodes).degrees().d_max
    return BoundResult(
        rule_id or f"thm4.deg{dc.degree}",
        "lower_lambda_max",
        theorem4_value(dc.degree, len(v1), len(v2), d_max_join),
        False,
        (Premise.of_class(dc), Premise.of_cert(join_cert)),
        (
            "Theorem 4: lambda_max >= d + n1 + n2 - d_max(H1 * H2); "
            f"n1 = {len(v1)}, n2 = {len(v2)}, d_max(join) = {d_max_join}"
        ),
    )


def rule_theorem5_product(
    g: Graph,
    prod_cert: SubgraphCertificate,
    dc: DegreeClass,
    rule_id: str = "thm5.product",
) -> BoundResult:
    """lambda_max >= d + lambda_max(H1) + lambda_max(H2) - d_max(H1 x H2).

    Product spectra add, so the embedded product's top eigenvalue is the sum
    of the factors'.  evaluate_all additionally requires the embedding to be
    induced before emitting (the interlacing step needs it); this function
    computes the stated formula for any verified embedding.
    """
    cert = verify_certificate(g, prod_cert)
    if cert.kind != "product":
        raise CertificateError(f"theorem 5 needs a product, got {cert.kind}")
    if not set(cert.nodes) <= set(dc.nodes):
        raise CertificateError(
            f"product nodes are not all in the degree-{dc.degree} class"
        )
    fa, fb = cert.factors
    lam_a = sym_eigenvalues(laplacian(fa)).lambda_max if fa.n > 1 else 0.0
    lam_b = sym_eigenvalues(laplacian(fb)).lambda_max if fb.n > 1 else 0.0
    d_max_prod = cert.parameters["d_max_product"]
    return BoundResult(
        rule_id,
        "lower_lambda_max",
        dc.degree + lam_a + lam_b - d_max_prod,
        False,
        (Premise.of_class(dc), Premise.of_cert(cert)),
        (
            "Theorem 5: lambda_max >= d + lambda_max(H1) + lambda_max(H2) "
            f"- d_max(H1 x H2); factor tops {lam_a:.9g} + {lam_b:.9g}, "
            f"d_max(product) = {d_max_prod}"
        ),
    )


def rule_theorem6_disconnected(
    g: Graph, disc_cert: SubgraphCertificate
) -> list[BoundResult]:
    """lambda2 <= n - n1 when n1 nodes induce a disconnected subgraph.

    With the maximal such set, n - n1 is the vertex connectivity.  The ratio
    form divides by the Lemma 2 floor d_max + 1.
    """
    if disc_cert.kind != "disconnected_set":
        raise CertificateError(
            f"theorem 6 needs a disconnected set, got {disc_cert.kind}"
        )
    verify_certificate(g, disc_cert)
    profile = g.degrees()
    n1 = len(disc_cert.nodes)
    value = float(g.n - n1)
    premises = (Premise.of_cert(disc_cert),)
    return [
        BoundResult(
            "thm6.disconnected",
            "upper_lambda2",
            value,
            False,
            premises,
            (
                f"Theorem 6: lambda2 <= n - n1 with n1 = {n1} nodes inducing "
                "a disconnected subgraph"
            ),
        ),
        BoundResult(
            "thm6.disconnected",
            "upper_r",
            value / (profile.d_max + 1),
            False,
            premises,
            "Theorem 6: r <= (n - n1) / (d_max + 1)",
        ),
    ]


# -- the evaluator ----------------------------------------------------------------


def _cycle_lambda_max(cert: SubgraphCertificate) -> float:
    if cert.kind == "even_cycle":
        return 4.0
    return 3.0 - odd_cycle_defect(len(cert.nodes))


def _finalize(
    rows: Iterable[BoundResult],
    spectrum: Spectrum,
    sync: SyncIndex,
) -> tuple[BoundResult, ...]:
    done = []
    for b in rows:
        if b.kind == "upper_r":
            gap = b.value - sync.r
        elif b.kind in ("upper_lambda2", "exact_lambda2"):
            gap = b.value - spectrum.lambda2
        elif b.kind == "lower_lambda_max":
            gap = spectrum.lambda_max - b.value
        else:  # classification rows are not bounds; nothing to attain
            done.append(b)
            continue
        done.append(
            replace(b, gap=gap, attained=abs(gap) < ATTAINMENT_TOL)
        )
    return tuple(sorted(done, key=lambda b: (b.rule_id, b.kind, b.value)))


def evaluate_all(
    g: Graph,
    certs: Sequence[SubgraphCertificate] = (),
    max_search_nodes: int | None = DEFAULT_SEARCH_CUTOFF,
    tol: float = EQUALITY_TOL,
) -> AnalysisReport:
    """Run every applicable rule on a connected host.

    User certificates are verified first; failures become notices, never
    emissions.  Structure searches respect max_search_nodes, and skipped
    searches are reported as notices (absence of a row then means
    "undecided", not "absent").  Bound rows come back sorted by rule_id
    with gap and attainment filled in, and the whole report is validated
    against the exact spectrum before it is returned.
    """
    if g.n < 2:
        raise ValueError("bound analysis needs at least 2 nodes")
    if not g.is_connected():
        raise DisconnectedGraphError("bound analysis needs a connected host")
    spectrum = laplacian_spectrum(g)
    sync = SyncIndex(spectrum.lambda2, spectrum.lambda_max)
    comp = g.complement()
    comp_connected = comp.is_connected()
    notices: list[str] = []
    rows: list[BoundResult] = []

    user_certs: list[SubgraphCertificate] = []
    for c in certs:
        try:
            user_certs.append(verify_certificate(g, c))
        except CertificateError as exc:
            notices.append(f"{c.kind} certificate rejected: {exc}")

    rows.append(rule_degree_ratio(g))
    rows.append(rule_lemma2(g))
    rows.append(rule_corollary1(g, spectrum, tol=tol))
    rows.extend(rule_corollary3(g, spectrum, tol=tol))

    # Theorem 1: cycles in both maximum-degree classes.
    g_side = collect_side_cycles(g, max_search_nodes)
    if g_side.undecided:
        notices.append(
            f"host maximum-degree class has {g_side.dc.subgraph.n} nodes, "
            f"over the search cutoff; cycle searches skipped"
        )
        user_even = [
            c
            for c in user_certs
            if c.kind == "even_cycle"
            and set(c.nodes) <= set(g_side.dc.nodes)
        ]
        user_odd = [
            c
            for c in user_certs
            if c.kind == "odd_cycle" and set(c.nodes) <= set(g_side.dc.nodes)
        ]
        if user_even or user_odd:
            longest_odd = max(
                user_odd, key=lambda c: len(c.nodes), default=None
            )
            g_side = SideCycles(
                g_side.dc,
                user_even[0] if user_even else None,
                longest_odd,
                True,
            )
            notices.append(
                "using supplied cycle certificates for the host class; "
                "longer odd cycles may exist"
            )
    c_side = collect_side_cycles(comp, max_search_nodes)
    if c_side.undecided:
        notices.append(
            f"complement maximum-degree class has {c_side.dc.subgraph.n} "
            f"nodes, over the search cutoff; cycle searches skipped"
        )
    rows.extend(rule_theorem1(g, g_side, c_side))

    # Corollary 2: strongest induced-cycle witness available.
    candidates = [c for c in (g_side.even, g_side.odd) if c is not None]
    candidates.extend(
        c for c in user_certs if c.kind in ("even_cycle", "odd_cycle")
    )
    best_sub = None
    if candidates and not g.is_complete():
        best_sub = max(candidates, key=_cycle_lambda_max)
    rows.extend(rule_corollary2(g, best_sub))

    # Theorem 2 with H1 = the whole class, for every degree class.
    classes = degree_classes(g)
    for dc in classes:
        rows.append(rule_theorem2(g, dc))

    # Theorem 3 on the host's maximum-degree class, soundness-capped.
    dc1 = g_side.dc
    chain = longest_chain(dc1.subgraph, max_search_nodes)
    chain = relabel_certificate(chain, dc1.nodes)
    if not chain.parameters["exhaustive"]:
        notices.append(
            "chain search over the cutoff ran greedily; chain length is "
            "only a lower bound"
        )
    k_candidates = [(len(chain.nodes), 0, chain)]
    for i, c in enumerate(user_certs):
        if c.kind == "chain" and set(c.nodes) <= set(dc1.nodes):
            k_candidates.append((len(c.nodes), i + 1, c))
    k_len, _, k_cert = max(k_candidates, key=lambda t: (t[0], -t[1]))
    induced_seq = longest_induced_path(dc1.subgraph, max_search_nodes)
    cap = len(induced_seq) + 1
    k_eff = min(k_len, cap)
    if k_eff >= 2:
        emitted = replace(
            k_cert,
            nodes=k_cert.nodes[:k_eff],
            parameters={
                **dict(k_cert.parameters),
                "length": k_eff,
                "longest_found": k_len,
                "induced_path_cap": cap,
            },
        )
        if k_eff < k_len:
            notices.append(
                f"chain of {k_len} nodes capped to {k_eff} for the "
                "Theorem 3 emission (longest induced path has "
                f"{cap - 1} nodes)"
            )
        rows.append(rule_theorem3(g, emitted))

    # Theorem 4: joins inside each degree class, plus user-supplied joins.
    for dc in classes:
        try:
            jc = find_join_in_class(dc, max_search_nodes)
        except SearchUndecided:
            notices.append(
                f"degree-{dc.degree} class over the search cutoff; join "
                "search skipped"
            )
            continue
        if jc is not None:
            rows.append(rule_theorem4(g, jc, dc))
    user_joins = [c for c in user_certs if c.kind == "join"]
    for i, c in enumerate(user_joins):
        dc = degree_class_of(g, c.nodes)
        if dc is None:
            notices.append(
                "join certificate spans multiple degree classes; skipped"
            )
            continue
        suffix = "" if len(user_joins) == 1 else str(i + 1)
        rows.append(rule_theorem4(g, c, dc, rule_id=f"thm4.cert{suffix}"))

    # Theorem 5: user product certificates with induced embeddings.
    user_products = [c for c in user_certs if c.kind == "product"]
    for i, c in enumerate(user_products):
        dc = degree_class_of(g, c.nodes)
        if dc is None:
            notices.append(
                "product certificate spans multiple degree classes; skipped"
            )
            continue
        if not c.parameters.get("induced", False):
            notices.append(
                "product certificate verified, but its embedding is not "
                "induced in the host; bound emission needs an induced "
                "embedding and was skipped"
            )
            continue
        rid = "thm5.product" if i == 0 else f"thm5.product{i + 1}"
        rows.append(rule_theorem5_product(g, c, dc, rule_id=rid))

    # Theorem 6: maximal disconnected induced subgraph.
    if g.is_complete():
        notices.append(
            "complete host: every induced subgraph is connected; "
            "disconnected-set rule not applicable"
        )
    else:
        disc = None
        try:
            disc = max_disconnected_subgraph(g, max_search_nodes)
        except SearchUndecided:
            user_disc = [
                c for c in user_certs if c.kind == "disconnected_set"
            ]
            if user_disc:
                disc = max(user_disc, key=lambda c: len(c.nodes))
                notices.append(
                    "host over the search cutoff; using the supplied "
                    "disconnected set (larger ones may exist)"
                )
            else:
                notices.append(
                    "host over the search cutoff; disconnected-subgraph "
                    "search skipped"
                )
        if disc is not None:
            rows.extend(rule_theorem6_disconnected(g, disc))

    report = AnalysisReport(
        graph=g,
        complement_connected=comp_connected,
        spectrum=spectrum,
        sync=sync,
        bounds=_finalize(rows, spectrum, sync),
        notices=tuple(notices),
    )
    report.validate(tol=max(tol, 1e-8))
    return report
