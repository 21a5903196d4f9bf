"""JSON documents, DOT output and the ``niche-graphs`` command line.

Vertex names map to indices in sorted name order. Rationals travel as
strings such as ``"3/2"`` or ``"5"``; JSON floats are rejected.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Sequence

from . import __version__
from .derived_graphs import cce, competition, niche
from .graph_core import CanonicalForm, Digraph, UndirectedGraph
from .order_models import (
    IntervalRep,
    RepresentationAnalysis,
    SemiorderRep,
    analyze_interval_rep,
    analyze_semiorder_rep,
    realize_interval,
    realize_semiorder,
)
from .recognizers import (
    ClassificationVerdict,
    CompetitionClassDescriptor,
    NicheClassDescriptor,
    classify_niche,
    parse_shape,
)
from .verify_harness import VerificationReport, verify_theorem
from .witness_synth import niche_witness_interval, niche_witness_semiorder

EXIT_OK, EXIT_INPUT, EXIT_VERIFY_FAILED = 0, 1, 3


class DocumentError(ValueError):
    """Malformed or invalid document; ``code`` names the failure, ``where`` locates it."""

    def __init__(self, code: str, message: str, where: str = "") -> None:
        self.code = code
        self.where = where
        super().__init__(f"[{code}] {where}: {message}" if where else f"[{code}] {message}")


@dataclass(frozen=True)
class NamedGraphDocument:
    kind: str  # "graph" or "digraph"
    vertices: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]

    def canonical(self) -> NamedGraphDocument:
        pairs = self.pairs
        if self.kind == "graph":
            pairs = tuple(tuple(sorted(p)) for p in pairs)
        return NamedGraphDocument(self.kind, tuple(sorted(self.vertices)), tuple(sorted(pairs)))

    @property
    def index(self) -> dict[str, int]:
        return {name: k for k, name in enumerate(sorted(self.vertices))}

    def to_graph(self) -> UndirectedGraph:
        if self.kind != "graph":
            raise DocumentError("wrong-kind", f"expected an undirected graph, got {self.kind!r}", "kind")
        idx = self.index
        return UndirectedGraph.from_edges(len(idx), ((idx[a], idx[b]) for a, b in self.pairs))

    def to_digraph(self) -> Digraph:
        if self.kind != "digraph":
            raise DocumentError("wrong-kind", f"expected a digraph, got {self.kind!r}", "kind")
        idx = self.index
        return Digraph.from_arcs(len(idx), ((idx[a], idx[b]) for a, b in self.pairs))


def graph_document(g: UndirectedGraph | Digraph, names: Sequence[str]) -> NamedGraphDocument:
    """Document for ``g`` where vertex ``k`` is called ``names[k]`` (names must sort in index order)."""
    if list(names) != sorted(names) or len(set(names)) != len(names) or len(names) != g.n:
        raise ValueError("names must be unique, sorted and one per vertex")
    if isinstance(g, Digraph):
        return NamedGraphDocument("digraph", tuple(names), tuple((names[x], names[y]) for x, y in g.arcs))
    return NamedGraphDocument("graph", tuple(names), tuple((names[i], names[j]) for i, j in g.edges))


def default_names(n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [f"v{k:0{width}d}" for k in range(n)]


@dataclass(frozen=True)
class _FloatToken:
    """A JSON float, kept so the error can name the field it sits in."""

    token: str


def _unique_keys(pairs: list[tuple[str, Any]]) -> dict:
    out: dict = {}
    for key, value in pairs:
        if key in out:
            raise DocumentError("duplicate-name", f"key {key!r} appears twice in one object", key)
        out[key] = value
    return out


def _load_json(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_FloatToken, object_pairs_hook=_unique_keys)
    except json.JSONDecodeError as exc:
        raise DocumentError("syntax", exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def _expect(obj: Any, typ: type, where: str) -> Any:
    if not isinstance(obj, typ) or isinstance(obj, bool):
        raise DocumentError("schema", f"expected {typ.__name__}", where)
    return obj


def _field(doc: dict, key: str) -> Any:
    if key not in doc:
        raise DocumentError("schema", "missing field", key)
    return doc[key]


def _check_names(names: Any, where: str) -> tuple[str, ...]:
    _expect(names, list, where)
    seen: set[str] = set()
    for k, name in enumerate(names):
        at = f"{where}[{k}]"
        _expect(name, str, at)
        if not name:
            raise DocumentError("empty-name", "vertex names must be nonempty", at)
        if name in seen:
            raise DocumentError("duplicate-name", f"vertex {name!r} declared twice", at)
        seen.add(name)
    return tuple(names)


def parse_graph(text: str) -> NamedGraphDocument:
    doc = _expect(_load_json(text), dict, "$")
    kind = _field(doc, "kind")
    if kind not in ("graph", "digraph"):
        raise DocumentError("unknown-kind", f"kind must be 'graph' or 'digraph', got {kind!r}", "kind")
    key = "edges" if kind == "graph" else "arcs"
    vertices = _check_names(_field(doc, "vertices"), "vertices")
    declared = set(vertices)
    raw = _expect(_field(doc, key), list, key)
    pairs = []
    seen: set = set()
    for k, pair in enumerate(raw):
        at = f"{key}[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError("schema", "expected a pair of vertex names", at)
        for side, name in enumerate(pair):
            _expect(name, str, f"{at}[{side}]")
            if name not in declared:
                raise DocumentError("dangling-reference", f"undeclared vertex {name!r}", f"{at}[{side}]")
        a, b = pair
        if a == b:
            raise DocumentError("loop", f"loop at {a!r}", at)
        ident = frozenset(pair) if kind == "graph" else (a, b)
        if ident in seen:
            raise DocumentError("duplicate-pair", f"{a!r}, {b!r} listed twice", at)
        seen.add(ident)
        pairs.append((a, b))
    return NamedGraphDocument(kind, vertices, tuple(pairs))


def serialize_graph(doc: NamedGraphDocument) -> str:
    doc = doc.canonical()
    key = "edges" if doc.kind == "graph" else "arcs"
    payload = {"kind": doc.kind, "vertices": list(doc.vertices), key: [list(p) for p in doc.pairs]}
    return _dump(payload)


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(doc: NamedGraphDocument) -> str:
    doc = doc.canonical()
    directed = doc.kind == "digraph"
    link = "->" if directed else "--"
    lines = ["digraph D {" if directed else "graph G {"]
    lines += [f"  {_dot_id(v)};" for v in doc.vertices]
    lines += [f"  {_dot_id(a)} {link} {_dot_id(b)};" for a, b in doc.pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RepresentationDocument:
    kind: str  # "semiorder" or "interval"
    vertices: tuple[str, ...]
    rep: SemiorderRep | IntervalRep


def parse_rational(value: Any, where: str) -> Fraction:
    if isinstance(value, _FloatToken):
        raise DocumentError("bad-rational", f"float {value.token} is not exact; write it as a string", where)
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise DocumentError("bad-rational", "expected a rational string such as '3/2'", where)
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise DocumentError("bad-rational", f"cannot read {value!r} as a rational", where) from None


def format_rational(value: Rational) -> str:
    return str(Fraction(value))


def _named_map(doc: dict, key: str) -> tuple[tuple[str, ...], dict]:
    mapping = _expect(_field(doc, key), dict, key)
    if not mapping:
        raise DocumentError("schema", "at least one vertex is required", key)
    for name in mapping:
        if not name:
            raise DocumentError("empty-name", "vertex names must be nonempty", key)
    return tuple(sorted(mapping)), mapping


def parse_representation(text: str) -> RepresentationDocument:
    doc = _expect(_load_json(text), dict, "$")
    kind = _field(doc, "kind")
    if kind == "semiorder":
        names, f = _named_map(doc, "f")
        values = tuple(parse_rational(f[v], f"f.{v}") for v in names)
        delta = parse_rational(_field(doc, "delta"), "delta")
        if delta <= 0:
            raise DocumentError("invalid-representation", "delta must be positive", "delta")
        return RepresentationDocument(kind, names, SemiorderRep(values, delta))
    if kind == "interval":
        names, J = _named_map(doc, "J")
        intervals = []
        for v in names:
            iv = J[v]
            if not isinstance(iv, list) or len(iv) != 2:
                raise DocumentError("schema", "expected [lo, hi]", f"J.{v}")
            lo, hi = parse_rational(iv[0], f"J.{v}[0]"), parse_rational(iv[1], f"J.{v}[1]")
            if lo > hi:
                raise DocumentError("invalid-representation", f"empty interval [{lo}, {hi}]", f"J.{v}")
            intervals.append((lo, hi))
        return RepresentationDocument(kind, names, IntervalRep(tuple(intervals)))
    raise DocumentError("unknown-kind", f"kind must be 'semiorder' or 'interval', got {kind!r}", "kind")


def serialize_representation(doc: RepresentationDocument) -> str:
    if isinstance(doc.rep, SemiorderRep):
        payload = {
            "kind": "semiorder",
            "f": {v: format_rational(x) for v, x in zip(doc.vertices, doc.rep.f)},
            "delta": format_rational(doc.rep.delta),
        }
    else:
        payload = {
            "kind": "interval",
            "J": {v: [format_rational(lo), format_rational(hi)] for v, (lo, hi) in zip(doc.vertices, doc.rep.J)},
        }
    return _dump(payload)


def realize_document(doc: RepresentationDocument) -> Digraph:
    if isinstance(doc.rep, SemiorderRep):
        return realize_semiorder(doc.rep)
    return realize_interval(doc.rep)


def descriptor_json(d: NicheClassDescriptor) -> dict:
    return {"shape": d.shape, "graph": str(d)}


def analysis_json(doc: RepresentationDocument, a: RepresentationAnalysis) -> dict:
    return {
        "kind": "analysis",
        "model": doc.kind,
        "r1": format_rational(a.r1),
        "r2": format_rational(a.r2),
        "case": a.case.value,
        "parts": [[doc.vertices[v] for v in sorted(part)] for part in a.parts],
        "predicted": descriptor_json(a.predicted),
    }


def verdict_json(v: ClassificationVerdict) -> dict:
    def competition_json(d: CompetitionClassDescriptor) -> dict:
        return {"r": d.r, "q": d.q, "graph": str(d)}

    return {
        "kind": "classification",
        "competition": {"semiorder": v.competition_semiorder, "interval": v.competition_interval},
        "cce": {"semiorder": v.cce_semiorder, "interval": v.cce_interval},
        "niche": {"semiorder": v.niche_semiorder, "interval": v.niche_interval},
        "niche_descriptors": [descriptor_json(d) for d in v.niche_descriptors],
        "competition_descriptors": [competition_json(d) for d in v.competition_descriptors],
    }


def _form_json(form: CanonicalForm) -> dict:
    return {"n": form.n, "edges": [list(e) for e in form.graph().edges]}


def report_json(report: VerificationReport) -> dict:
    return {
        "kind": "verification",
        "theorem": report.theorem,
        "n_max": report.n_max,
        "verdict": "pass" if report.passed else "fail",
        "rows": [
            {
                "n": row.n,
                "family": row.family,
                "enumerated": row.enumerated,
                "produced": len(row.produced),
                "predicted": len(row.predicted),
                "missing": [_form_json(f) for f in row.missing],
                "unexpected": [_form_json(f) for f in row.unexpected],
                "produced_shapes": list(row.produced_shapes),
            }
            for row in report.rows
        ],
    }


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="niche-graphs", description="Niche, competition and CCE graphs of semiorders and interval orders.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("derive", help="derived graph of a digraph document")
    p.add_argument("--kind", required=True, choices=["competition", "cce", "niche"])
    p.add_argument("--in", dest="path", required=True, help="digraph document, '-' for stdin")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")

    p = sub.add_parser("realize", help="digraph of a representation document")
    p.add_argument("--in", dest="path", required=True)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("analyze", help="case analysis of a representation document")
    p.add_argument("--in", dest="path", required=True)

    p = sub.add_parser("classify", help="class membership of a graph document")
    p.add_argument("--in", dest="path", required=True)

    p = sub.add_parser("witness", help="representation whose niche graph has the given shape")
    p.add_argument("--model", required=True, choices=["semiorder", "interval"])
    p.add_argument("--shape", required=True, help="e.g. gamma:1,1,1,1 or two-cliques:2,3")

    p = sub.add_parser("verify", help="exhaustive check of a theorem for small n")
    p.add_argument("--theorem", required=True, type=int, choices=[1, 2, 3, 4])
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--shards", type=int, default=1, help="worker processes (output is identical for any value)")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError("io", exc.strerror or str(exc), path) from None


_OPERATORS = {"competition": competition, "cce": cce, "niche": niche}


def _run(args: argparse.Namespace) -> tuple[str, int]:
    if args.command == "derive":
        doc = parse_graph(_read(args.path))
        g = _OPERATORS[args.kind](doc.to_digraph())
        out = graph_document(g, sorted(doc.vertices))
        return (emit_dot(out) if args.dot else serialize_graph(out)), EXIT_OK
    if args.command == "realize":
        doc = parse_representation(_read(args.path))
        out = graph_document(realize_document(doc), doc.vertices)
        return (emit_dot(out) if args.dot else serialize_graph(out)), EXIT_OK
    if args.command == "analyze":
        doc = parse_representation(_read(args.path))
        if isinstance(doc.rep, SemiorderRep):
            analysis = analyze_semiorder_rep(doc.rep)
        else:
            analysis = analyze_interval_rep(doc.rep)
        return _dump(analysis_json(doc, analysis)), EXIT_OK
    if args.command == "classify":
        g = parse_graph(_read(args.path)).to_graph()
        return _dump(verdict_json(classify_niche(g))), EXIT_OK
    if args.command == "witness":
        d = parse_shape(args.shape)
        rep = niche_witness_semiorder(d) if args.model == "semiorder" else niche_witness_interval(d)
        names = tuple(default_names(d.vertex_count))
        return serialize_representation(RepresentationDocument(args.model, names, rep)), EXIT_OK
    if args.command == "verify":
        if args.shards < 1:
            raise UsageError("--shards must be at least 1")
        report = verify_theorem(args.theorem, args.n_max, workers=args.shards)
        return _dump(report_json(report)), EXIT_OK if report.passed else EXIT_VERIFY_FAILED
    raise UsageError(f"unknown command {args.command!r}")


def cli_main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, code = _run(args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(cli_main())
