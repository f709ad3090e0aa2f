"""Command line interface: ``coxcat <command> --type B3 --c linear ...``.

Exit codes: 0 success, 1 failed verification, 2 invalid input, 3 infinite
Coxeter group, 4 noncrossing lattice larger than ``--nc-bound``, 5 a root
poset was requested for a non-crystallographic type.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import export
from .cluster import ClusterContext
from .core import DEFAULT_BOUND, CoxeterSystem, build_system
from .errors import (
    BoundExceeded,
    CoxcatError,
    NonFiniteType,
    NotCrystallographic,
)
from .noncrossing import DEFAULT_NC_BOUND, SQ, NCContext
from .nonnesting import RootPoset
from .triangles import (
    bold_polynomials,
    f_triangle,
    h_triangle,
    i_polynomial,
    m_triangle,
)
from .verify import select_coxeter_elements, verify, word_label

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INFINITE, EXIT_NC_BOUND, EXIT_NOT_WEYL = range(6)


class UsageError(Exception):
    pass


def _load_system(args) -> CoxeterSystem:
    if args.matrix:
        try:
            with open(args.matrix) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read matrix file: {exc}") from None
        if isinstance(raw, dict):
            raw = raw.get("matrix")
        if not isinstance(raw, list):
            raise UsageError("matrix file must hold a list of rows")
        return build_system(raw, bound=args.bound)
    if not args.type:
        raise UsageError("one of --type or --matrix is required")
    return build_system(args.type, bound=args.bound)


def _contexts(args, system: CoxeterSystem) -> list[NCContext]:
    return [NCContext(system, c, bound=args.nc_bound) for c in select_coxeter_elements(system, args.c)]


def _dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_build(args) -> str:
    W = _load_system(args)
    info = {
        "type": W.label,
        "rank": W.rank,
        "components": [c.label for c in W.components],
        "order": W.order,
        "coxeter_number": W.coxeter_number,
        "exponents": list(W.exponents),
        "degrees": list(W.degrees),
        "reflections": W.num_roots,
        "crystallographic": W.crystallographic,
        "realization": W.realization,
        "matrix": [list(r) for r in W.matrix],
    }
    if args.format == "json":
        return _dump(info)
    return "".join(f"{k}: {v}\n" for k, v in info.items())


def cmd_roots(args) -> str:
    W = _load_system(args)
    rows = [
        {
            "id": p,
            "root": W.root_label(p),
            "support": [i + 1 for i in sorted(W.root_support(p))],
            "simple": p in W.simple_roots,
        }
        for p in W.roots
    ]
    if args.format == "json":
        return _dump({"type": W.label, "roots": rows})
    return "".join(f"{r['id']}\t{r['root']}\n" for r in rows)


def cmd_group(args) -> str:
    W = _load_system(args)
    info = {
        "type": W.label,
        "order": W.order,
        "coxeter_number": W.coxeter_number,
        "exponents": list(W.exponents),
        "reflections": W.num_roots,
    }
    if not args.summary:
        by_length: dict[int, int] = {}
        by_abs: dict[int, int] = {}
        for w in W.elements(args.bound):
            by_length[w.length] = by_length.get(w.length, 0) + 1
            by_abs[w.absolute_length] = by_abs.get(w.absolute_length, 0) + 1
        info["by_length"] = [by_length[k] for k in sorted(by_length)]
        info["by_absolute_length"] = [by_abs[k] for k in sorted(by_abs)]
    if args.format == "json":
        return _dump(info)
    lines = [
        f"type: {W.label}",
        f"|W| = {W.order}",
        f"h = {W.coxeter_number}",
        "exponents: " + ",".join(map(str, W.exponents)),
        f"reflections: {W.num_roots}",
    ]
    if not args.summary:
        lines.append("by length: " + " ".join(map(str, info["by_length"])))
        lines.append("by absolute length: " + " ".join(map(str, info["by_absolute_length"])))
    return "\n".join(lines) + "\n"


def _sq_graph(nc: NCContext):
    import networkx as nx

    g = nx.DiGraph()
    g.add_nodes_from(range(len(nc)))
    g.add_edges_from((a, b) for a, b, k in nc.covers if k == SQ)
    return g


def _sq_isomorphic(a: NCContext, b: NCContext) -> bool:
    import networkx as nx

    ga, gb = _sq_graph(a), _sq_graph(b)
    if nx.weisfeiler_lehman_graph_hash(ga) != nx.weisfeiler_lehman_graph_hash(gb):
        return False
    return nx.is_isomorphic(ga, gb)


def cmd_nc(args) -> str:
    W = _load_system(args)
    ncs = _contexts(args, W)
    linear = NCContext(W, W.linear_coxeter_element(), bound=args.nc_bound)
    if args.format == "dot":
        return "".join(export.nc_dot(nc) for nc in ncs)
    if args.format == "csv":
        return "".join(export.nc_csv(nc) for nc in ncs)
    docs = []
    for nc in ncs:
        doc = export.nc_json(nc)
        doc["cover_counts"] = export.cover_counts(nc)
        doc["sq_poset_isomorphic_to_linear"] = _sq_isomorphic(nc, linear)
        docs.append(doc)
    if args.format == "json":
        return _dump(docs[0] if len(docs) == 1 else docs)
    lines = []
    for nc, doc in zip(ncs, docs):
        lines.append(f"NC({W.label}, c={doc['c']}): {len(nc)} elements, rank counts {nc.rank_counts()}")
        lines.append(f"covers: {doc['cover_counts']['square']} square, {doc['cover_counts']['long']} long")
        lines.append(f"square order isomorphic to the linear one: {doc['sq_poset_isomorphic_to_linear']}")
        for e in doc["elements"]:
            lines.append(
                f"{e['id']}\t{e['name']}\trank={e['rank']}\tkrew={e['krew']}\t"
                f"overline={e['overline']}\tunderline={e['underline']}"
            )
    return "\n".join(lines) + "\n"


def cmd_cluster(args) -> str:
    W = _load_system(args)
    docs = [export.complex_json(ClusterContext(nc), args.positive) for nc in _contexts(args, W)]
    if args.format == "json":
        return _dump(docs[0] if len(docs) == 1 else docs)
    lines = []
    for d in docs:
        names = [v["root"] for v in d["vertices"]]
        lines.append(f"cluster complex of {d['type']}, c={d['c']}")
        lines.append(f"f-vector: {d['f_vector']}")
        lines.append(f"h-vector: {d['h_vector']}")
        for f in d["faces"]:
            if len(f) == W.rank:
                lines.append("{" + ", ".join(names[i] for i in f) + "}")
    return "\n".join(lines) + "\n"


def cmd_nn(args) -> str:
    W = _load_system(args)
    doc = export.root_poset_json(RootPoset(W))
    if args.format == "json":
        return _dump(doc)
    lines = [f"root poset of {W.label}: {len(doc['roots'])} roots, {len(doc['antichains'])} antichains"]
    for r in doc["roots"]:
        lines.append(f"{r['id']}\t{r['root']}\theight={r['height']}")
    for a in doc["antichains"]:
        lines.append("{" + ", ".join(W.root_label(p) for p in a["roots"]) + "}\tsupport=" + ",".join(map(str, a["support"])))
    return "\n".join(lines) + "\n"


def cmd_triangles(args) -> str:
    W = _load_system(args)
    out = []
    for nc in _contexts(args, W):
        cc = ClusterContext(nc)
        polys = {"F": f_triangle(cc), "M": m_triangle(nc), "I": i_polynomial(nc)}
        rp = RootPoset(W) if W.crystallographic else None
        if rp is not None:
            polys["H"] = h_triangle(rp)
        if args.format == "csv":
            out.append(export.triangle_csv(polys))
            continue
        doc = {
            "type": W.label,
            "c": word_label(nc.word),
            "triangles": {k: export.triangle_rows(p) for k, p in polys.items()},
            "polynomials": {k: repr(p) for k, p in polys.items()},
        }
        if args.bold:
            bold = bold_polynomials(cc, rp)
            doc["multivariate"] = {k: repr(v) for k, v in (("F", bold.F), ("M", bold.M), ("H", bold.H), ("I", bold.I)) if v is not None}
        if args.format == "json":
            out.append(_dump(doc))
            continue
        lines = [f"triangles of {W.label}, c={doc['c']}"]
        if rp is None:
            lines.append("H omitted: no crystallographic root poset")
        for k, p in doc["polynomials"].items():
            lines.append(f"{k}(x,y) = {p}")
        for k, p in doc.get("multivariate", {}).items():
            lines.append(f"{k}(x,y,z) = {p}")
        out.append("\n".join(lines) + "\n")
    return "".join(out)


def _bijection_rows(cc: ClusterContext, kind: str) -> tuple[list[str], list[list]]:
    nc, name = cc.nc, export.element_name
    system = cc.system
    if kind == "psi":
        header = ["w", "cluster"]
        rows = [
            [name(nc.elements[i]), " ".join(system.root_label(p) for p in sorted(cc.psi(nc.elements[i])))]
            for i in nc.full_support_ids()
        ]
    elif kind == "extended":
        header = ["w", "cluster"]
        rows = [
            [name(w), " ".join(export.vertex_name(cc, a) for a in sorted(cc.extended_psi(w)))]
            for w in nc.elements
        ]
    elif kind == "interval":
        header = ["v", "w", "face", "sqr"]
        rows = []
        for a, b in nc.ll_intervals():
            v, w = nc.elements[a], nc.elements[b]
            face = cc.interval_to_face(v, w)
            rows.append([name(v), name(w), " ".join(system.root_label(p) for p in sorted(face)), cc.sqr(face)])
    elif kind == "square":
        header = ["x", "y", "face", "height"]
        rows = []
        for a, b in nc.sq_intervals():
            x, y = nc.elements[a], nc.elements[b]
            face = cc.sq_interval_to_face(x, y)
            rows.append([name(x), name(y), " ".join(export.vertex_name(cc, f) for f in sorted(face)), nc.ranks[b] - nc.ranks[a]])
    else:
        raise UsageError(f"unknown bijection kind {kind!r}")
    return header, rows


def cmd_bijection(args) -> str:
    W = _load_system(args)
    out = []
    for nc in _contexts(args, W):
        header, rows = _bijection_rows(ClusterContext(nc), args.kind)
        if args.format == "json":
            out.append(_dump({"type": W.label, "c": word_label(nc.word), "kind": args.kind, "columns": header, "rows": rows}))
        elif args.format == "csv":
            import csv
            import io

            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            out.append(buf.getvalue())
        else:
            out.append("\t".join(header) + "\n" + "".join("\t".join(map(str, r)) + "\n" for r in rows))
    return "".join(out)


def cmd_verify(args) -> tuple[str, int]:
    if args.matrix:
        raise UsageError("verify takes type labels only")
    if not args.type:
        raise UsageError("--type is required")
    labels = [t.strip() for t in args.type.split(",") if t.strip()]
    for label in labels:
        build_system(label, bound=args.bound)
    start = time.perf_counter()
    report = verify(labels, args.c, args.jobs)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        doc = report.to_json()
        if args.timing:
            doc["seconds"] = round(elapsed, 3)
        text = _dump(doc)
    else:
        text = report.to_text()
        if args.timing:
            text += f"time: {elapsed:.2f}s\n"
    return text, EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "build": cmd_build,
    "roots": cmd_roots,
    "group": cmd_group,
    "nc": cmd_nc,
    "cluster": cmd_cluster,
    "nn": cmd_nn,
    "triangles": cmd_triangles,
    "bijection": cmd_bijection,
    "verify": cmd_verify,
}

FORMATS = {
    "build": ("text", "json"),
    "roots": ("text", "json"),
    "group": ("text", "json"),
    "nc": ("text", "json", "dot", "csv"),
    "cluster": ("text", "json"),
    "nn": ("text", "json"),
    "triangles": ("text", "json", "csv"),
    "bijection": ("text", "json", "csv"),
    "verify": ("text", "json"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, formats in FORMATS.items():
        p = sub.add_parser(name)
        p.add_argument("--type", help="type label such as B3, I2(7), A1xA2 (comma list for verify)")
        p.add_argument("--matrix", help="JSON file holding a Coxeter matrix")
        p.add_argument("--c", default="all" if name == "verify" else "linear",
                       help="linear, bipartite, all, or a 1-based word like 1,3,2")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", help="write here instead of stdout")
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="largest |W| to enumerate")
        p.add_argument("--nc-bound", type=int, default=DEFAULT_NC_BOUND, help="largest |NC(W,c)| to build")
        p.add_argument("--jobs", type=int, default=1)
        if name == "group":
            p.add_argument("--summary", action="store_true")
        if name == "cluster":
            p.add_argument("--positive", action="store_true", help="positive part only")
        if name == "triangles":
            p.add_argument("--bold", action="store_true", help="also print the multivariate polynomials")
        if name == "bijection":
            p.add_argument("--kind", choices=("psi", "extended", "interval", "square"), default="psi")
        if name == "verify":
            p.add_argument("--timing", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        result = COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, code = result
    except UsageError as exc:
        print(f"coxcat: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NonFiniteType as exc:
        print(f"coxcat: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except BoundExceeded as exc:
        print(f"coxcat: {exc}", file=sys.stderr)
        return EXIT_NC_BOUND
    except NotCrystallographic as exc:
        print(f"coxcat: {exc}", file=sys.stderr)
        return EXIT_NOT_WEYL
    except CoxcatError as exc:
        print(f"coxcat: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
