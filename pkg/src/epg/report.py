"""JSON report assembly. Reports are versioned ({"schema": 1}) and built with
a fixed key order so identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import json
import sys
import time

from . import graphclass as gc
from . import structure as st
from .graphs import SimpleGraph
from .groups import FiniteGroup

SCHEMA_VERSION = 1


def analysis_payload(G: FiniteGroup, graph: SimpleGraph,
                     verdicts: dict[str, gc.ClassVerdict], *,
                     with_labels: bool = False,
                     timings: dict[str, float] | None = None) -> dict:
    labels = graph.labels if with_labels else None
    mcs = st.maximal_cyclic_subgroups(G)
    sizes: dict[int, int] = {}
    for s in mcs:
        sizes[len(s)] = sizes.get(len(s), 0) + 1
    cyc = st.cyclicizer(G)
    pg = st.prime_graph(G)
    payload: dict = {
        "schema": SCHEMA_VERSION,
        "kind": "analysis",
        "group": {
            "name": G.name,
            "order": G.order,
            "element_orders": sorted(int(o) for o in set(G.elem_order.tolist())),
            "nilpotent": st.is_nilpotent(G),
            "family": st.recognize_family(G),
            "cp_group": st.is_cp_group(G),
        },
        "maximal_cyclic_subgroups": {
            "count": len(mcs),
            "size_multiset": {str(k): v for k, v in sorted(sizes.items())},
        },
        "cyclicizer_size": len(cyc),
        "prime_graph": pg.to_json(),
        "graph": {"vertices": graph.n, "edges": graph.edge_count()},
        "classes": {name: v.to_json(labels) for name, v in sorted(verdicts.items())},
    }
    if timings is not None:
        payload["timings"] = {k: round(v, 3) for k, v in timings.items()}
    return payload


def suite_payload(suite: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "kind": "suite", **suite}


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def write_report(payload: dict, path: str | None) -> None:
    text = dumps(payload)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


class Stopwatch:
    """Accumulates named wall-time segments for optional report timings."""

    def __init__(self):
        self.marks: dict[str, float] = {}
        self._t0 = time.perf_counter()

    def lap(self, name: str) -> None:
        t1 = time.perf_counter()
        self.marks[name] = self.marks.get(name, 0.0) + (t1 - self._t0)
        self._t0 = t1
