"""Verification campaigns: compute gamma, b and chi per graph and check every bound.

A bound on a disconnected graph is checked component by component: b(G) is
the minimum of b over the components with edges, so b(G) is at most the
bound of any single component, and the row reports the smallest of those.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import bounds
from .bondage import BondageBudgetExceeded, bondage_number, hr_bound
from .domination import domination_number
from .embedding import (
    RotationBudgetExceeded,
    RotationSystem,
    edge_curvature,
    max_euler_characteristic,
    small_face_edges,
    trace_faces,
)
from .graph_core import (
    Graph,
    components,
    girth,
    is_connected,
    is_finite_girth,
    max_degree,
    min_degree,
    to_graph6,
)

ALL_CHECKS = ("hr", "gz", "h1", "h2", "sachs", "girth", "conj")

NA = "na"
PASS = "pass"
FAIL = "fail"
UNKNOWN = "unknown"  # bound known but b was not computed within budget

# theorem checks: (value column, status column, check family)
BOUND_COLUMNS = (
    ("hr", "hr_status", "hr"),
    ("gz", "gz_status", "gz"),
    ("gz_improved", "gz_improved_status", "gz"),
    ("kang_yuan", "kang_yuan_status", "gz"),
    ("h1", "h1_status", "h1"),
    ("h2", "h2_status", "h2"),
    ("sachs", "sachs_status", "sachs"),
    ("girth_bound", "girth_bound_status", "girth"),
    ("forest", "forest_status", "girth"),
)
# conjectures: a failing status is a finding, never a violation
CONJECTURE_COLUMNS = (
    ("teschner", "teschner_status"),
    ("planar_conj", "planar_conj_status"),
)

CSV_COLUMNS = (
    "graph_id", "graph6", "n", "m", "max_degree", "min_degree", "girth",
    "components", "gamma", "b", "b_status", "witness", "chi", "chi_source",
    *(c for pair in BOUND_COLUMNS for c in pair[:2]),
    *(c for pair in CONJECTURE_COLUMNS for c in pair),
    "violations", "findings",
)

CSV_HELP = """\
CSV columns (JSON rows use the same names):
  graph_id, graph6            position in the input (0-based) and the graph6 string
  n, m, max_degree, min_degree, girth ('inf' for forests), components
  gamma                       domination number
  b, b_status                 bondage number; status exact | budget-exceeded | edgeless
  witness                     edges of a minimum bondage set, 'u-v;u-v;...'
  chi, chi_source             Euler characteristic (minimum over components with edges)
                              and where it came from: computed | supplied | unavailable | none
  <bound>, <bound>_status     value and pass | fail | na | unknown for
                              hr, gz, gz_improved, kang_yuan, h1, h2, sachs, girth_bound, forest
  teschner, planar_conj       conjecture thresholds; status fail marks a finding
  violations, findings        number of failed theorem checks / conjecture findings
"""


@dataclass(frozen=True)
class CampaignConfig:
    inputs: tuple[str, ...]
    chi: Optional[int] = None
    checks: tuple[str, ...] = ALL_CHECKS
    budget: Optional[int] = None
    rot_budget: int = 200_000
    nonorientable: bool = False
    workers: int = 1
    output_format: str = "csv"
    seed: int = 0
    sample: Optional[int] = None

    def __post_init__(self) -> None:
        if self.budget is not None and self.budget < 1:
            raise ValueError("bondage budget must be positive")
        if self.rot_budget < 1:
            raise ValueError("rotation budget must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.chi is not None and self.chi > 2:
            raise ValueError("Euler characteristic is at most 2")


@dataclass
class BoundReport:
    graph_id: int
    graph6: str
    n: int
    m: int
    max_degree: object = NA
    min_degree: object = NA
    girth: object = NA
    components: int = 0
    gamma: int = 0
    b: object = NA
    b_status: str = "edgeless"
    witness: str = ""
    chi: object = NA
    chi_source: str = "none"
    values: dict = field(default_factory=dict)
    statuses: dict = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return sum(1 for col, status_col, _ in BOUND_COLUMNS if self.statuses.get(status_col) == FAIL)

    @property
    def findings(self) -> int:
        return sum(1 for _, status_col in CONJECTURE_COLUMNS if self.statuses.get(status_col) == FAIL)

    def as_row(self) -> dict:
        row = {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "girth": self.girth,
            "components": self.components,
            "gamma": self.gamma,
            "b": self.b,
            "b_status": self.b_status,
            "witness": self.witness,
            "chi": self.chi,
            "chi_source": self.chi_source,
        }
        for col, status_col, _ in BOUND_COLUMNS:
            row[col] = self.values.get(col, NA)
            row[status_col] = self.statuses.get(status_col, NA)
        for col, status_col in CONJECTURE_COLUMNS:
            row[col] = self.values.get(col, NA)
            row[status_col] = self.statuses.get(status_col, NA)
        row["violations"] = self.violations
        row["findings"] = self.findings
        return row


@dataclass(frozen=True)
class _Part:
    graph: Graph
    max_degree: int
    girth: float
    chi: Optional[int]
    h: Optional[int]
    k: Optional[int]


def _component_chi(g: Graph, config: CampaignConfig) -> tuple[Optional[int], Optional[int], Optional[int]]:
    """(chi, h, k) for one connected component; None where unknown."""
    if config.chi is not None:
        return config.chi, None, None
    try:
        chi_o = max_euler_characteristic(g, config.rot_budget)
        h = (2 - chi_o) // 2
        if not config.nonorientable:
            return chi_o, h, None
        chi_all = max_euler_characteristic(g, config.rot_budget, allow_signatures=True)
    except RotationBudgetExceeded:
        return None, None, None
    # the best embedding is non-orientable only when it beats every orientable one
    k = 2 - chi_all if chi_all > chi_o else None
    return chi_all, h, k


def _fmt_girth(value: float):
    return int(value) if is_finite_girth(value) else "inf"


def _status(b: Optional[int], bound) -> str:
    if bound is None:
        return NA
    if b is None:
        return UNKNOWN
    return PASS if b <= bound else FAIL


def _min_or_none(values: Iterable[Optional[float]]):
    vals = [v for v in values if v is not None]
    return min(vals) if vals else None


def verify_graph(graph_id: int, g: Graph, config: CampaignConfig) -> BoundReport:
    rep = BoundReport(graph_id, to_graph6(g), g.n, g.m)
    comps = components(g)
    rep.components = len(comps)
    if g.n:
        rep.max_degree = max_degree(g)
        rep.min_degree = min_degree(g)
    rep.girth = _fmt_girth(girth(g))
    rep.gamma = domination_number(g)[0]
    if g.m == 0:
        return rep

    b: Optional[int] = None
    try:
        res = bondage_number(g, config.budget)
        b = res.b
        rep.b = b
        rep.b_status = "exact"
        rep.witness = ";".join(f"{u}-{v}" for u, v in res.witness)
    except BondageBudgetExceeded:
        rep.b = NA
        rep.b_status = "budget-exceeded"

    parts = []
    for c in comps:
        if c.graph.m == 0:
            continue
        chi, h, k = _component_chi(c.graph, config)
        parts.append(_Part(c.graph, max_degree(c.graph), girth(c.graph), chi, h, k))
    if all(p.chi is not None for p in parts):
        rep.chi = min(p.chi for p in parts)
        rep.chi_source = "supplied" if config.chi is not None else "computed"
    else:
        rep.chi = NA
        rep.chi_source = "unavailable"
    known = [p for p in parts if p.chi is not None]

    checks = set(config.checks)
    values: dict = {}
    if "hr" in checks:
        values["hr"] = hr_bound(g)
    if "gz" in checks:
        values["gz"] = _min_or_none(_gz(p) for p in known)
        values["gz_improved"] = _min_or_none(_gz(p, improved=True) for p in known)
        values["kang_yuan"] = _min_or_none(
            bounds.kang_yuan_bound(p.max_degree) for p in known if p.chi == 2
        )
    nonpos = [p for p in known if p.chi <= 0]
    if "h1" in checks:
        values["h1"] = _min_or_none(bounds.h1_bound(p.max_degree, p.chi) for p in nonpos)
    if "h2" in checks:
        values["h2"] = _min_or_none(bounds.h2_bound(p.max_degree, p.chi) for p in nonpos)
    if "sachs" in checks:
        values["sachs"] = _min_or_none(bounds.sachs_bound(p.max_degree, p.chi) for p in nonpos)
    if "girth" in checks:
        values["girth_bound"] = _min_or_none(
            bounds.girth_bound(p.max_degree, p.chi, p.girth)
            for p in nonpos
            if is_finite_girth(p.girth)
        )
        # a tree component has b <= 2, whatever the surface
        values["forest"] = 2 if any(not is_finite_girth(p.girth) for p in parts) else None
    for col, status_col, _ in BOUND_COLUMNS:
        if col in values:
            rep.statuses[status_col] = _status(b, values[col])
            rep.values[col] = NA if values[col] is None else values[col]

    if "conj" in checks:
        tes = bounds.teschner_threshold(rep.max_degree)
        rep.values["teschner"] = str(Fraction(3 * rep.max_degree, 2))
        rep.statuses["teschner_status"] = _status(b, tes)
        if rep.chi == 2:
            rep.values["planar_conj"] = bounds.planar_conjecture_threshold(rep.max_degree)
            rep.statuses["planar_conj_status"] = _status(b, rep.values["planar_conj"])
    return rep


def _gz(p: _Part, improved: bool = False) -> Optional[int]:
    fn = bounds.gz_improved_bound if improved else bounds.gz_bound
    if p.h is not None or p.k is not None:
        return fn(p.max_degree, p.h, p.k)
    return bounds.gz_bound_for_chi(p.max_degree, p.chi)


def _verify_task(args):
    graph_id, g, config = args
    return verify_graph(graph_id, g, config)


def select_graphs(graphs: Sequence[Graph], config: CampaignConfig) -> list[tuple[int, Graph]]:
    indexed = list(enumerate(graphs))
    if config.sample is not None and config.sample < len(indexed):
        rng = random.Random(config.seed)
        keep = sorted(rng.sample(range(len(indexed)), config.sample))
        indexed = [indexed[i] for i in keep]
    return indexed


def run_campaign(graphs: Sequence[Graph], config: CampaignConfig) -> tuple[list[BoundReport], dict]:
    tasks = [(i, g, config) for i, g in select_graphs(graphs, config)]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=8))
    else:
        reports = [_verify_task(t) for t in tasks]
    return reports, summarize(reports)


def summarize(reports: Sequence[BoundReport]) -> dict:
    return {
        "graphs": len(reports),
        "violations": sum(r.violations for r in reports),
        "violation_rows": sum(1 for r in reports if r.violations),
        "budget_exceeded": sum(1 for r in reports if r.b_status == "budget-exceeded"),
        "chi_unavailable": sum(1 for r in reports if r.chi_source == "unavailable"),
        "findings": sum(r.findings for r in reports),
    }


def render_csv(reports: Sequence[BoundReport]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.as_row())
    return buf.getvalue()


def render_json(reports: Sequence[BoundReport], summary: dict, config: CampaignConfig) -> str:
    cfg = asdict(config)
    cfg["inputs"] = list(config.inputs)
    cfg["checks"] = list(config.checks)
    doc = {"config": cfg, "rows": [r.as_row() for r in reports], "summary": summary}
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


# --- table, curvature, bound -------------------------------------------------------

def table_rows(chi_min: int) -> list[tuple[int, float, int, int]]:
    if chi_min > 0:
        raise ValueError("chi_min must be <= 0")
    return [bounds.table_row(chi) for chi in range(0, chi_min - 1, -1)]


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class CurvatureReport:
    chi: int
    face_degrees: tuple[int, ...]
    faces: tuple
    edge_values: dict
    total: Fraction
    degenerate_edges: list


def curvature_report(g: Graph, rot: RotationSystem) -> CurvatureReport:
    if not is_connected(g):
        raise ValueError("curvature needs a connected graph")
    if g.m == 0:
        raise ValueError("curvature needs at least one edge")
    faces = trace_faces(g, rot)
    chi = g.n - g.m + len(faces)
    degenerate = small_face_edges(faces)
    values = {e: edge_curvature(g, rot, faces, e, strict=False) for e in g.edges()}
    total = sum(values.values(), Fraction(0))
    return CurvatureReport(chi, faces.degrees, faces.faces, values, total, degenerate)


def bound_lines(
    max_deg: int,
    chi: Optional[int] = None,
    girth_value: Optional[int] = None,
    h: Optional[int] = None,
    k: Optional[int] = None,
) -> list[tuple[str, int]]:
    """Every bound that applies to the given parameters, as (name, value)."""
    if max_deg < 0:
        raise ValueError("maximum degree must be non-negative")
    if h is not None and h < 0 or k is not None and k < 1:
        raise ValueError("need h >= 0 and k >= 1")
    if chi is None:
        if h is None and k is None:
            raise ValueError("need chi, h or k")
        chi = max(2 - 2 * h if h is not None else -10**9, 2 - k if k is not None else -10**9)
    if chi > 2:
        raise ValueError("Euler characteristic is at most 2")
    if h is not None and 2 - 2 * h > chi or k is not None and 2 - k > chi:
        raise ValueError(f"genus inconsistent with chi={chi}: chi is the largest Euler characteristic")
    out = []
    if h is not None or k is not None:
        out.append(("gz", bounds.gz_bound(max_deg, h, k)))
        out.append(("gz_improved", bounds.gz_improved_bound(max_deg, h, k)))
    else:
        out.append(("gz", bounds.gz_bound_for_chi(max_deg, chi)))
    if chi == 2:
        out.append(("kang_yuan", bounds.kang_yuan_bound(max_deg)))
    out.append(("h1", bounds.h1_bound(max_deg, chi)))
    if chi <= 0:
        out.append(("h2", bounds.h2_bound(max_deg, chi)))
        out.append(("sachs", bounds.sachs_bound(max_deg, chi)))
        if girth_value is not None:
            out.append(("girth", bounds.girth_bound(max_deg, chi, girth_value)))
    return out
