"""CSV / JSON serialization of networks, reports and spectra."""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .network import WeightedDigraph, iter_arc_rows
from .spectral import SpectrumMultiset
from .walk import MfptReport

LINEAGE_SEP = "/"


def _csv(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    # csv writes floats via repr(): shortest round-trip decimal
    writer.writerows(rows)
    return buf.getvalue()


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def arcs_csv(net: WeightedDigraph) -> str:
    return _csv(("src", "dst", "weight"), iter_arc_rows(net))


def nodes_csv(net: WeightedDigraph) -> str:
    return _csv(
        ("label", "birth_generation", "role"),
        ((r.label, r.birth_generation, r.role) for r in net.nodes),
    )


def network_json(net: WeightedDigraph) -> dict:
    return {
        "g": net.g,
        "theta": net.theta,
        "nodes": [
            {"label": r.label, "birth_generation": r.birth_generation, "role": r.role}
            for r in net.nodes
        ],
        "arcs": [list(a) for a in iter_arc_rows(net)],
        "undirected_edges": [list(e) for e in net.undirected_edges],
    }


def read_arcs_csv(text: str) -> list[tuple[int, int, float]]:
    reader = csv.DictReader(io.StringIO(text))
    return [(int(r["src"]), int(r["dst"]), float(r["weight"])) for r in reader]


def mfpt_csv(report: MfptReport) -> str:
    return _csv(("label", "T"), sorted(report.per_node.items()))


def mfpt_json(report: MfptReport) -> dict:
    return report.to_json_dict()


def spectrum_csv(spec: SpectrumMultiset) -> str:
    return _csv(
        ("value", "multiplicity", "lineage"),
        ((e.value, e.multiplicity, LINEAGE_SEP.join(e.lineage)) for e in spec.entries),
    )


def spectrum_json(spec: SpectrumMultiset) -> dict:
    return {
        "g": spec.g,
        "theta": spec.theta,
        "entries": [
            {"value": e.value, "multiplicity": e.multiplicity, "lineage": list(e.lineage)}
            for e in spec.entries
        ],
    }


def scaling_csv(fit) -> str:
    return _csv(
        ("g", "N_minus_1", "mfpt", "log_slope"),
        ((p.g, p.n_minus_1, p.mfpt, "" if p.log_slope is None else p.log_slope) for p in fit.points),
    )
