"""JSON, DOT and CSV renderings of posets, complexes and polynomials.

Every function returns plain data or a string; nothing here writes files.
Words are printed 1-based (``"1,2"`` for ``s1 s2``).
"""

from __future__ import annotations

import csv
import io

from .cluster import ClusterContext
from .core import Element
from .noncrossing import LL, SQ, NCContext
from .nonnesting import RootPoset
from .polynomial import Poly
from .symmetric import str_cycles


def word_text(w: Element) -> str:
    return ",".join(str(i + 1) for i in w.reduced_word())


def element_name(w: Element) -> str:
    """Cycle notation in type A, otherwise a word (``e`` for the identity)."""
    system = w.system
    if len(system.components) == 1 and system.components[0].family == "A":
        return str_cycles(w)
    return "s" + "s".join(str(i + 1) for i in w.reduced_word()) if w.length else "e"


def nc_json(nc: NCContext) -> dict:
    els = nc.elements
    return {
        "type": nc.system.label,
        "c": word_text(nc.c),
        "elements": [
            {
                "id": i,
                "name": element_name(w),
                "word": word_text(w),
                "rank": nc.ranks[i],
                "length": w.length,
                "krew": nc.krew[i],
                "overline": nc.id(nc.overline(w)),
                "underline": nc.id(nc.underline(w)),
                "full_support": w.support() == frozenset(range(nc.n)),
            }
            for i, w in enumerate(els)
        ],
        "covers": [{"src": a, "dst": b, "kind": k} for a, b, k in nc.covers],
    }


def nc_dot(nc: NCContext) -> str:
    """Hasse diagram of the absolute order: square covers solid, long covers dashed."""
    lines = ["digraph NC {", "  rankdir=BT;"]
    for i, w in enumerate(nc.elements):
        lines.append(f'  n{i} [label="{element_name(w)}"];')
    for a, b, k in nc.covers:
        style = "solid" if k == SQ else "dashed"
        lines.append(f"  n{a} -> n{b} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def nc_csv(nc: NCContext) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "name", "word", "rank", "length", "krew", "overline", "underline"])
    for row in nc_json(nc)["elements"]:
        writer.writerow([row[k] for k in ("id", "name", "word", "rank", "length", "krew", "overline", "underline")])
    return buf.getvalue()


def vertex_name(cc: ClusterContext, a) -> str:
    label = cc.system.root_label(a.index if a.positive else cc.system.simple_roots[a.index])
    return label if a.positive else "-" + label


def complex_json(cc: ClusterContext, positive_only: bool = False) -> dict:
    verts = [a for a in cc.vertices if a.positive or not positive_only]
    index = {a: i for i, a in enumerate(verts)}
    faces = cc.faces if not positive_only else [f for f in cc.faces if all(a.positive for a in f)]
    ordered = sorted((sorted(index[a] for a in f) for f in faces), key=lambda f: (len(f), f))
    return {
        "type": cc.system.label,
        "c": word_text(cc.c),
        "vertices": [{"root": vertex_name(cc, a), "sign": "+" if a.positive else "-"} for a in verts],
        "faces": ordered,
        "f_vector": cc.f_vector(positive_only),
        "h_vector": cc.h_vector(positive_only),
    }


def root_poset_json(rp: RootPoset) -> dict:
    system = rp.system
    return {
        "type": system.label,
        "roots": [
            {"id": p, "root": system.root_label(p), "height": rp.heights[p]} for p in system.roots
        ],
        "covers": [[p, q] for p, q in rp.covers],
        "antichains": [
            {"roots": sorted(A), "support": sorted(i + 1 for i in rp.support(A))} for A in rp.antichains()
        ],
    }


def triangle_rows(poly: Poly) -> list[list[int]]:
    """Coefficient table of a polynomial in ``x, y``: rows by y-degree,
    columns by x-degree."""
    n = max(poly.degree(), 0)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for (a, b), c in poly.terms.items():
        table[b][a] = c
    return table


def triangle_csv(polys: dict[str, Poly]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for name, poly in polys.items():
        rows = triangle_rows(poly)
        writer.writerow([name, "y\\x"] + list(range(len(rows))))
        for k, row in enumerate(rows):
            writer.writerow(["", k] + row)
    return buf.getvalue()


def cover_counts(nc: NCContext) -> dict[str, int]:
    return {
        "square": sum(1 for *_, k in nc.covers if k == SQ),
        "long": sum(1 for *_, k in nc.covers if k == LL),
    }
