"""Batch experiment runner producing CSV records.

Each instance is transformed in both directions; sequences are verified,
audited where the direct greedy algorithm was used, and cross-checked
against the exhaustive search when the state space fits under the cap.
Per-instance failures are recorded as rows, not raised.
"""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .bestchoice import best_choice_recoloring
from .chordalize import pipeline_theorem
from .decomposition import degeneracy_order, mcs_order
from .errors import RecolorError
from .graphs import (
    Graph,
    gen_2tree,
    gen_chordal_omega3,
    gen_partial_2tree,
    greedy_coloring,
    random_proper_coloring,
)
from .oracle import DEFAULT_STATE_CAP, bfs_distance
from .sequences import audit_best_choice, restrict, verify_sequence

CSV_SCHEMA_VERSION = 1

CSV_COLUMNS = [
    "schema_version",
    "family",
    "instance_id",
    "n",
    "k",
    "seed",
    "direction",
    "status",
    "seq_len",
    "max_per_vertex",
    "saved_total",
    "bfs_distance",
    "runtime_sec",
    "detail",
]

FAMILIES = ("chordal-omega3", "2tree", "partial-2tree")


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    sizes: tuple[int, ...]
    seeds: tuple[int, ...]
    k: int = 5
    keep_prob: float = 0.6
    state_cap: int = DEFAULT_STATE_CAP
    cross_check: bool = True
    jobs: int = 1
    # optional explicit instances (id, graph), used with family="explicit"
    instances: tuple[tuple[str, Graph], ...] = field(default=())


@dataclass
class ExperimentRecord:
    family: str
    instance_id: str
    n: int
    k: int
    seed: int
    direction: str
    status: str
    seq_len: Optional[int] = None
    max_per_vertex: Optional[int] = None
    saved_total: Optional[int] = None
    bfs_distance: Optional[int] = None
    runtime_sec: float = 0.0
    detail: str = ""

    def row(self) -> list:
        return [
            CSV_SCHEMA_VERSION,
            self.family,
            self.instance_id,
            self.n,
            self.k,
            self.seed,
            self.direction,
            self.status,
            "" if self.seq_len is None else self.seq_len,
            "" if self.max_per_vertex is None else self.max_per_vertex,
            "" if self.saved_total is None else self.saved_total,
            "" if self.bfs_distance is None else self.bfs_distance,
            f"{self.runtime_sec:.6f}",
            self.detail,
        ]


def _build_graph(config: ExperimentConfig, n: int, seed: int) -> Graph:
    if config.family == "chordal-omega3":
        return gen_chordal_omega3(n, seed)
    if config.family == "2tree":
        return gen_2tree(n, seed)
    if config.family == "partial-2tree":
        return gen_partial_2tree(n, config.keep_prob, seed)
    raise ValueError(f"unknown family {config.family!r}")


def _measure(record: ExperimentRecord, g: Graph, seq) -> None:
    record.seq_len = len(seq.steps)
    record.max_per_vertex = max(
        (len(restrict(seq, {v})) for v in range(g.n)), default=0
    )


def _run_instance(
    config: ExperimentConfig, instance_id: str, g: Graph, seed: int
) -> list[ExperimentRecord]:
    records = []
    k = config.k
    chordal_direct = config.family == "chordal-omega3"
    if chordal_direct:
        peo = mcs_order(g)
        alpha = random_proper_coloring(g, peo, k, seed * 2 + 1)
        beta = greedy_coloring(g, peo)
    else:
        order = degeneracy_order(g)
        alpha = random_proper_coloring(g, order, k, seed * 2 + 1)
        beta = random_proper_coloring(g, order, k, seed * 2 + 2)

    for direction, src, dst in (("forward", alpha, beta), ("backward", beta, alpha)):
        rec = ExperimentRecord(
            family=config.family,
            instance_id=instance_id,
            n=g.n,
            k=k,
            seed=seed,
            direction=direction,
            status="ok",
        )
        t0 = time.perf_counter()
        try:
            if chordal_direct:
                seq = best_choice_recoloring(g, peo, src, dst, k)
                report = audit_best_choice(seq, peo, g, strict=False)
                rec.saved_total = sum(report.saved)
                if not report.clean:
                    rec.status = "audit-violation"
                    rec.detail = report.violations[0].detail
            else:
                seq = pipeline_theorem(g, src, dst)
            final = verify_sequence(g, seq)
            if final.colors != dst.colors:
                rec.status = "wrong-endpoint"
            _measure(rec, g, seq)
            if config.cross_check and k**g.n <= config.state_cap:
                d = bfs_distance(g, k, src, dst, config.state_cap)
                rec.bfs_distance = d
                if d is None or d > len(seq.steps):
                    rec.status = "oracle-mismatch"
                    rec.detail = f"bfs distance {d} vs sequence length {len(seq.steps)}"
        except RecolorError as exc:
            rec.status = type(exc).__name__
            rec.detail = str(exc)
        rec.runtime_sec = time.perf_counter() - t0
        records.append(rec)
    return records


def _job(args) -> list[ExperimentRecord]:
    config, instance_id, g, seed = args
    return _run_instance(config, instance_id, g, seed)


def run_experiments(config: ExperimentConfig) -> list[ExperimentRecord]:
    jobs = []
    records: list[ExperimentRecord] = []
    if config.family == "explicit":
        for idx, (instance_id, g) in enumerate(config.instances):
            jobs.append((config, instance_id, g, idx))
    else:
        for n in config.sizes:
            for seed in config.seeds:
                try:
                    g = _build_graph(config, n, seed)
                except RecolorError as exc:
                    records.append(
                        ExperimentRecord(
                            family=config.family,
                            instance_id=f"{config.family}-n{n}-s{seed}",
                            n=n,
                            k=config.k,
                            seed=seed,
                            direction="forward",
                            status=type(exc).__name__,
                            detail=str(exc),
                        )
                    )
                    continue
                jobs.append((config, f"{config.family}-n{n}-s{seed}", g, seed))

    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for chunk in pool.map(_job, jobs):
                records.extend(chunk)
    else:
        for args in jobs:
            records.extend(_job(args))
    return records


def has_violations(records: list[ExperimentRecord]) -> bool:
    """True when any record reflects a broken guarantee (not a rejected input)."""
    benign = {"ok", "NotWidth2", "TooLarge"}
    return any(rec.status not in benign for rec in records)


def write_csv(path: str, records: list[ExperimentRecord]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.row())
