"""Command-line front end: edge-list parsing, JSON reports, generators.

Subcommands:
  spectrum <file>           exact Laplacian spectrum and eigenratio
  bounds <file> [...]       full bound report (JSON or text table)
  gen <family> <params...>  write a canonical graph as an edge list
  verify-cert <file> --cert <F>  check a certificate against a graph

Exit codes: 0 success, 1 usage or parse error, 2 analysis error
(disconnected input where connectivity is required, eigensolver failure),
3 certificate verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import graph as graphs
from .bounds import AnalysisReport, BoundResult, Premise, evaluate_all
from .graph import DisconnectedGraphError, Graph, GraphError
from .spectra import (
    EQUALITY_TOL,
    NonConvergenceError,
    NumericalHealthError,
    Spectrum,
    laplacian_spectrum,
)
from .subgraphs import (
    CERTIFICATE_KINDS,
    CertificateError,
    SubgraphCertificate,
    verify_certificate,
)

FORMAT_VERSION = "1"


class CLIError(ValueError):
    """Usage or file-format problem; maps to exit code 1."""


# -- edge-list files -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the "nodes N" + "u v" line format; errors carry line numbers."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "nodes":
                raise CLIError(f"line {lineno}: expected 'nodes <N>' header")
            try:
                n = int(parts[1])
            except ValueError:
                raise CLIError(
                    f"line {lineno}: invalid node count {parts[1]!r}"
                ) from None
            if n < 0:
                raise CLIError(f"line {lineno}: invalid node count {n}")
            continue
        if len(parts) != 2:
            raise CLIError(
                f"line {lineno}: expected two node ids, got {len(parts)} fields"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise CLIError(f"line {lineno}: invalid node id") from None
        if u == v:
            raise CLIError(f"line {lineno}: self-loop at node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise CLIError(
                f"line {lineno}: node id outside range 0..{n - 1}"
            )
        key = (min(u, v), max(u, v))
        if key in seen:
            raise CLIError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise CLIError("line 1: expected 'nodes <N>' header")
    try:
        return graphs.from_edge_list(n, edges)
    except GraphError as exc:  # pragma: no cover - per-line checks above
        raise CLIError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"nodes {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None


# -- certificate files --------------------------------------------------------------


def _int_list(value: object, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise CLIError(f"certificate {what} must be a list of integers")
    return tuple(value)


def _graph_block(value: object, what: str) -> Graph:
    if not isinstance(value, dict) or "n" not in value or "edges" not in value:
        raise CLIError(
            f"certificate {what} must be an object with 'n' and 'edges'"
        )
    n = value["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise CLIError(f"certificate {what}: 'n' must be a nonneg integer")
    raw_edges = value["edges"]
    if not isinstance(raw_edges, list):
        raise CLIError(f"certificate {what}: 'edges' must be a list of pairs")
    edges = []
    for e in raw_edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise CLIError(
                f"certificate {what}: 'edges' must be a list of [u, v] pairs"
            )
        edges.append((e[0], e[1]))
    try:
        return graphs.from_edge_list(n, edges)
    except GraphError as exc:
        raise CLIError(f"certificate {what}: {exc}") from None


def parse_certificate(text: str) -> SubgraphCertificate:
    """Build a certificate from its JSON form; schema errors are CLIError."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CLIError("certificate must be a JSON object")
    kind = doc.get("kind")
    if kind not in CERTIFICATE_KINDS:
        raise CLIError(
            f"certificate kind must be one of {', '.join(CERTIFICATE_KINDS)}"
        )
    if kind == "product":
        for key in ("factor_a", "factor_b", "embedding"):
            if key not in doc:
                raise CLIError(f"product certificate needs {key!r}")
        fa = _graph_block(doc["factor_a"], "factor_a")
        fb = _graph_block(doc["factor_b"], "factor_b")
        embedding = _int_list(doc["embedding"], "embedding")
        return SubgraphCertificate(
            "product",
            tuple(sorted(set(embedding))),
            factors=(fa, fb),
            embedding=embedding,
        )
    if "nodes" not in doc:
        raise CLIError(f"{kind} certificate needs 'nodes'")
    nodes = _int_list(doc["nodes"], "nodes")
    parts = None
    if kind == "join":
        if "parts" not in doc:
            raise CLIError("join certificate needs 'parts'")
        raw = doc["parts"]
        if not isinstance(raw, list) or len(raw) != 2:
            raise CLIError("certificate parts must be a pair of node lists")
        parts = (_int_list(raw[0], "parts[0]"), _int_list(raw[1], "parts[1]"))
        merged = tuple(sorted(parts[0] + parts[1]))
        if tuple(sorted(nodes)) != merged:
            raise CLIError("join parts must partition the certificate nodes")
    return SubgraphCertificate(kind, nodes, parts=parts)


# -- report documents -----------------------------------------------------------------


def _fmt(x: float | None) -> float | None:
    """Round to 9 significant digits so serialization is byte-stable."""
    if x is None:
        return None
    return float(format(float(x), ".9g"))


def _graph_doc(g: Graph, complement_connected: bool | None = None) -> dict:
    profile = g.degrees()
    if complement_connected is None:
        complement_connected = g.complement().is_connected()
    return {
        "n": g.n,
        "edges": g.edge_count,
        "d_min": profile.d_min,
        "d_max": profile.d_max,
        "connected": g.is_connected(),
        "complement_connected": complement_connected,
    }


def _certificate_doc(cert: SubgraphCertificate) -> dict:
    doc: dict = {"kind": cert.kind, "nodes": list(cert.nodes)}
    if cert.parts is not None:
        doc["parts"] = [list(cert.parts[0]), list(cert.parts[1])]
    if cert.factors is not None:
        doc["factors"] = [
            {"n": f.n, "edges": [list(e) for e in f.sorted_edges()]}
            for f in cert.factors
        ]
    if cert.embedding is not None:
        doc["embedding"] = list(cert.embedding)
    if cert.parameters:
        doc["parameters"] = {
            k: _fmt(v) if isinstance(v, float) else v
            for k, v in sorted(cert.parameters.items())
        }
    return doc


def _premise_doc(p: Premise) -> dict:
    doc: dict = {"kind": p.kind, "host": p.host}
    if p.degree is not None:
        doc["degree"] = p.degree
    if p.nodes:
        doc["nodes"] = list(p.nodes)
    if p.certificate is not None:
        doc["certificate"] = _certificate_doc(p.certificate)
    return doc


def _bound_doc(b: BoundResult) -> dict:
    return {
        "rule_id": b.rule_id,
        "kind": b.kind,
        "value": _fmt(b.value),
        "strict": b.strict,
        "attained": b.attained,
        "gap": _fmt(b.gap),
        "citation": b.citation,
        "premises": [_premise_doc(p) for p in b.premises],
    }


def spectrum_document(g: Graph, spectrum: Spectrum) -> dict:
    notices: list[str] = []
    connected = g.is_connected()
    lam2 = spectrum.lambda2 if g.n >= 2 else None
    ratio = None
    if g.n < 2:
        notices.append("eigenratio needs at least 2 nodes")
    elif not connected:
        notices.append("graph is disconnected; eigenratio undefined")
    elif spectrum.lambda_max > 0:
        ratio = lam2 / spectrum.lambda_max
    return {
        "format_version": FORMAT_VERSION,
        "graph": _graph_doc(g),
        "spectrum": [_fmt(v) for v in spectrum.values],
        "lambda2": _fmt(lam2),
        "lambda_max": _fmt(spectrum.lambda_max),
        "eigenratio": _fmt(ratio),
        "notices": notices,
    }


def report_document(report: AnalysisReport) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "graph": _graph_doc(report.graph, report.complement_connected),
        "spectrum": [_fmt(v) for v in report.spectrum.values],
        "lambda2": _fmt(report.spectrum.lambda2),
        "lambda_max": _fmt(report.spectrum.lambda_max),
        "eigenratio": _fmt(report.sync.r),
        "bounds": [_bound_doc(b) for b in report.bounds],
        "notices": list(report.notices),
    }


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _disp(v: float | None) -> str:
    return "n/a" if v is None else repr(v)


def _render_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt_row(cells: list[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt_row(header), fmt_row(["-" * w for w in widths])]
    lines.extend(fmt_row(r) for r in rows)
    return "\n".join(lines)


_EXACT_FOR_KIND = {
    "upper_r": "r",
    "upper_lambda2": "lambda2",
    "exact_lambda2": "lambda2",
    "lower_lambda_max": "lambda_max",
    "classification": "lambda2 - d_min",
}


def _bounds_text(report: AnalysisReport) -> str:
    doc = report_document(report)
    g = doc["graph"]
    out = [
        f"nodes: {g['n']}  edges: {g['edges']}  "
        f"d_min: {g['d_min']}  d_max: {g['d_max']}",
        f"connected: {str(g['connected']).lower()}  "
        f"complement_connected: {str(g['complement_connected']).lower()}",
        "spectrum: " + " ".join(repr(v) for v in doc["spectrum"]),
        f"lambda2: {_disp(doc['lambda2'])}  lambda_max: {_disp(doc['lambda_max'])}  "
        f"eigenratio: {_disp(doc['eigenratio'])}",
        "",
    ]
    exact = {
        "r": report.sync.r,
        "lambda2": report.spectrum.lambda2,
        "lambda_max": report.spectrum.lambda_max,
        "lambda2 - d_min": float(
            report.spectrum.lambda2 - report.graph.degrees().d_min
        ),
    }
    rows = []
    for b in report.bounds:
        which = _EXACT_FOR_KIND[b.kind]
        if b.attained is None:
            attained = "n/a"
        else:
            attained = "yes" if b.attained else "no"
        rows.append(
            [
                b.rule_id,
                b.kind,
                repr(_fmt(b.value)),
                repr(_fmt(exact[which])),
                "n/a" if b.gap is None else repr(_fmt(b.gap)),
                attained,
            ]
        )
    out.append(
        _render_table(rows, ["rule", "kind", "bound", "exact", "gap", "attained"])
    )
    if report.notices:
        out.append("")
        out.extend(f"notice: {n}" for n in report.notices)
    return "\n".join(out)


# -- subcommands ---------------------------------------------------------------


def _equality_tol() -> float:
    raw = os.environ.get("SYNCBOUND_TOL")
    if raw is None:
        return EQUALITY_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise CLIError(f"SYNCBOUND_TOL is not a number: {raw!r}") from None
    if not math.isfinite(tol) or tol <= 0:
        raise CLIError(f"SYNCBOUND_TOL must be positive, got {raw!r}")
    return tol


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_file(args.file))
    if g.n == 0:
        raise CLIError("graph has no nodes")
    spectrum = laplacian_spectrum(g)
    doc = spectrum_document(g, spectrum)
    if args.json:
        _print_json(doc)
    else:
        print(f"nodes: {g.n}  edges: {g.edge_count}")
        print("spectrum: " + " ".join(repr(v) for v in doc["spectrum"]))
        print(f"lambda2: {_disp(doc['lambda2'])}")
        print(f"lambda_max: {_disp(doc['lambda_max'])}")
        print(f"eigenratio: {_disp(doc['eigenratio'])}")
        for notice in doc["notices"]:
            print(f"notice: {notice}")
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_file(args.file))
    certs = [parse_certificate(_read_file(p)) for p in args.cert]
    report = evaluate_all(
        g,
        certs=certs,
        max_search_nodes=args.max_search_nodes,
        tol=_equality_tol(),
    )
    if args.text:
        print(_bounds_text(report))
    else:
        _print_json(report_document(report))
    return 0


_GEN_ARITY = {
    "cycle": 1,
    "path": 1,
    "complete": 1,
    "empty": 1,
    "bipartite": 2,
    "prism": 0,
    "product": None,
    "join": None,
}


def _parse_gen_spec(tokens: list[str]) -> Graph:
    if not tokens:
        raise CLIError("expected a graph family")
    family = tokens.pop(0)
    if family not in _GEN_ARITY:
        raise CLIError(
            f"unknown family {family!r}; choose from "
            f"{', '.join(sorted(_GEN_ARITY))}"
        )
    if family in ("product", "join"):
        a = _parse_gen_spec(tokens)
        b = _parse_gen_spec(tokens)
        return (
            graphs.cartesian_product(a, b)
            if family == "product"
            else graphs.join(a, b)
        )
    arity = _GEN_ARITY[family]
    params = []
    for _ in range(arity):
        if not tokens:
            raise CLIError(f"family {family!r} needs {arity} parameter(s)")
        tok = tokens.pop(0)
        try:
            params.append(int(tok))
        except ValueError:
            raise CLIError(
                f"family {family!r} parameter must be an integer, got {tok!r}"
            ) from None
    try:
        if family == "cycle":
            return graphs.cycle(params[0])
        if family == "path":
            return graphs.path(params[0])
        if family == "complete":
            return graphs.complete(params[0])
        if family == "empty":
            return graphs.edgeless(params[0])
        if family == "bipartite":
            return graphs.complete_bipartite(params[0], params[1])
        return graphs.prism()
    except (GraphError, ValueError) as exc:
        raise CLIError(f"family {family!r}: {exc}") from None


def cmd_gen(args: argparse.Namespace) -> int:
    tokens = [args.family, *args.params]
    g = _parse_gen_spec(tokens)
    if tokens:
        raise CLIError(f"unexpected trailing parameters: {' '.join(tokens)}")
    sys.stdout.write(format_edge_list(g))
    return 0


def cmd_verify_cert(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read_file(args.file))
    cert = parse_certificate(_read_file(args.cert))
    try:
        verified = verify_certificate(g, cert)
    except CertificateError as exc:
        print(f"fail: {exc}")
        return 3
    detail = f"{len(verified.nodes)} nodes"
    if verified.kind == "product":
        induced = verified.parameters.get("induced")
        detail += ", induced embedding" if induced else ", non-induced embedding"
    print(f"pass: {verified.kind} certificate verified ({detail})")
    return 0


# -- entry point -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="syncbound",
        description=(
            "Laplacian spectra, eigenratio, and structural spectral bounds "
            "for undirected graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser(
        "spectrum", help="exact Laplacian spectrum and eigenratio"
    )
    p_spec.add_argument("file", help="edge-list file")
    p_spec.add_argument(
        "--json", action="store_true", help="emit a JSON document"
    )
    p_spec.set_defaults(func=cmd_spectrum)

    p_bounds = sub.add_parser("bounds", help="full bound report")
    p_bounds.add_argument("file", help="edge-list file")
    p_bounds.add_argument(
        "--max-search-nodes",
        type=int,
        default=16,
        metavar="N",
        help="exhaustive-search cutoff (default 16)",
    )
    p_bounds.add_argument(
        "--cert",
        action="append",
        default=[],
        metavar="F",
        help="certificate JSON file (repeatable)",
    )
    fmt = p_bounds.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", action="store_true", help="JSON report (default)"
    )
    fmt.add_argument("--text", action="store_true", help="text table")
    p_bounds.set_defaults(func=cmd_bounds)

    p_gen = sub.add_parser("gen", help="write a canonical graph")
    p_gen.add_argument(
        "family",
        help="cycle|path|complete|empty|bipartite|prism|product|join",
    )
    p_gen.add_argument("params", nargs="*", help="family parameters")
    p_gen.set_defaults(func=cmd_gen)

    p_ver = sub.add_parser(
        "verify-cert", help="check a certificate against a graph"
    )
    p_ver.add_argument("file", help="edge-list file")
    p_ver.add_argument(
        "--cert", required=True, metavar="F", help="certificate JSON file"
    )
    p_ver.set_defaults(func=cmd_verify_cert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CertificateError as exc:
        print(f"fail: {exc}", file=sys.stderr)
        return 3
    except (
        DisconnectedGraphError,
        NonConvergenceError,
        NumericalHealthError,
    ) as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
