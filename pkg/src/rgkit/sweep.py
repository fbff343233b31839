"""Exhaustive verification sweeps over all graphic sequences at desk scale.

Each named check replays one of the library's structure claims against an
independent brute-force oracle and reports machine-readable pass/fail
records with counterexample payloads on failure.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from . import _backend
from .cliques import (
    cliques_of_size_at_least,
    filter_overlap_solutions,
    in_clique,
    measure_overlaps,
    solve_overlap_system,
)
from .core import DegreeSequence
from .dial import verify_dial
from .errors import LimitExceededError
from .realization import enumerate_realizations, is_graphic
from .realization_graph import (
    complement_isomorphism,
    is_connected,
    realization_graph_of,
    verify_product_theorem,
)
from .tyshkevich import decompose, is_threshold

KNOWN_CHECKS: tuple[str, ...] = (
    "connectivity",
    "theorem-iff",
    "triangle",
    "clique-dial",
    "complement",
    "cartesian",
    "threshold",
)


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep: sequence sizes, enumeration cap, clique sizes, checks."""

    max_vertices: int
    max_realizations: int = 500
    clique_sizes: tuple[int, ...] = (4, 5, 6)
    checks: frozenset[str] = frozenset(KNOWN_CHECKS)

    def __post_init__(self):
        object.__setattr__(self, "clique_sizes", tuple(self.clique_sizes))
        object.__setattr__(self, "checks", frozenset(self.checks))
        if self.max_vertices < 4:
            raise ValueError("max_vertices must be at least 4")
        if self.max_realizations < 1:
            raise ValueError("max_realizations must be positive")
        if not set(self.clique_sizes) <= set(range(2, 9)):
            raise ValueError(f"clique sizes must lie in 2..8: {self.clique_sizes}")
        unknown = self.checks - set(KNOWN_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass
class SweepReport:
    """All records of one sweep plus per-check pass/fail/skip tallies."""

    records: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        tally: dict[str, dict[str, int]] = {}
        for rec in self.records:
            per = tally.setdefault(rec["check"], {"pass": 0, "fail": 0, "skip": 0})
            per[rec["status"]] += 1
        return tally

    @property
    def ok(self) -> bool:
        return all(rec["status"] != "fail" for rec in self.records)

    def failures(self) -> list[dict]:
        return [rec for rec in self.records if rec["status"] == "fail"]


def graphic_sequences(max_vertices: int, min_vertices: int = 1) -> Iterator[DegreeSequence]:
    """All graphic sequences on min_vertices..max_vertices vertices,
    generated by exhaustive nonincreasing enumeration with a graphicality
    filter."""
    for n in range(min_vertices, max_vertices + 1):
        for terms in combinations_with_replacement(range(n - 1, -1, -1), n):
            d = DegreeSequence(terms)
            if is_graphic(d):
                yield d


@lru_cache(maxsize=1)
def _surviving_overlap_solution():
    survivors = filter_overlap_solutions(solve_overlap_system())
    assert len(survivors) == 1
    return survivors[0]


def _record(d: DegreeSequence, check: str, status: str, **detail) -> dict:
    return {
        "sequence": list(d.terms),
        "check": check,
        "status": status,
        "detail": detail,
    }


def analyze_sequence(d: DegreeSequence, cfg: SweepConfig) -> list[dict]:
    """Run every configured check on one graphic sequence."""
    records: list[dict] = []
    checks = cfg.checks
    try:
        rs = enumerate_realizations(d, cfg.max_realizations)
    except LimitExceededError:
        rs = None

    if "threshold" in checks:
        # countability survives the cap: more than the cap is surely not 1
        actual_unique = rs is not None and len(rs) == 1
        structural = is_threshold(d)
        status = "pass" if structural == actual_unique else "fail"
        records.append(
            _record(d, "threshold", status, structural=structural, unique=actual_unique)
        )

    if rs is None:
        for check in sorted(checks - {"threshold"}):
            records.append(
                _record(d, check, "skip", reason=f"more than {cfg.max_realizations} realizations")
            )
        return records

    rg = realization_graph_of(rs)

    if "connectivity" in checks:
        status = "pass" if is_connected(rg) else "fail"
        records.append(_record(d, "connectivity", status, nodes=rg.node_count))

    need_oracle = checks & {"theorem-iff", "triangle", "clique-dial"}
    oracle = rg.clique_numbers if need_oracle else ()

    if "theorem-iff" in checks:
        mismatches = []
        for idx, g in enumerate(rg.nodes):
            for size in cfg.clique_sizes:
                predicted = bool(in_clique(g, size))
                actual = oracle[idx] >= size
                if predicted != actual:
                    mismatches.append(
                        {"node": idx, "n": size, "predicted": predicted, "oracle": actual}
                    )
        status = "pass" if not mismatches else "fail"
        records.append(
            _record(d, "theorem-iff", status, nodes=rg.node_count, mismatches=mismatches)
        )

    if "triangle" in checks:
        mismatches = []
        for idx, g in enumerate(rg.nodes):
            predicted = bool(in_clique(g, 3))
            actual = oracle[idx] >= 3
            if predicted != actual:
                mismatches.append({"node": idx, "predicted": predicted, "oracle": actual})
        status = "pass" if not mismatches else "fail"
        records.append(_record(d, "triangle", status, mismatches=mismatches))

    if "clique-dial" in checks:
        survivor = _surviving_overlap_solution()
        bad_dials = []
        bad_overlaps = []
        for clique in cliques_of_size_at_least(rg, 4):
            graphs = [rg.nodes[i] for i in clique]
            if verify_dial(graphs) is None:
                bad_dials.append(list(clique))
            if len(clique) == 4 and not measure_overlaps(graphs).matches(survivor):
                bad_overlaps.append(list(clique))
        status = "pass" if not bad_dials and not bad_overlaps else "fail"
        records.append(
            _record(
                d,
                "clique-dial",
                status,
                cliques=len(cliques_of_size_at_least(rg, 4)),
                dial_failures=bad_dials,
                overlap_failures=bad_overlaps,
            )
        )

    if "complement" in checks:
        try:
            complement_isomorphism(d, cfg.max_realizations)
            records.append(_record(d, "complement", "pass"))
        except RuntimeError as exc:
            records.append(_record(d, "complement", "fail", error=str(exc)))

    if "cartesian" in checks:
        decomposable = not decompose(d).is_trivial
        ok = verify_product_theorem(d, cfg.max_realizations)
        status = "pass" if ok else "fail"
        records.append(_record(d, "cartesian", status, decomposable=decomposable))

    return records


def _worker(args: tuple[tuple[int, ...], SweepConfig]) -> list[dict]:
    terms, cfg = args
    return analyze_sequence(DegreeSequence(terms), cfg)


def run_sweep(
    cfg: SweepConfig,
    workers: int = 1,
    sink: Callable[[dict], None] | None = None,
) -> SweepReport:
    """Run the configured checks over every graphic sequence in range.

    Per-sequence work is independent; with workers > 1 it is distributed
    over a process pool (records still arrive in sequence order).  `sink`
    receives each record as it is produced, for streaming output.
    """
    report = SweepReport()
    sequences = list(graphic_sequences(cfg.max_vertices))
    if workers > 1:
        _backend.active.warmup()  # compile before forking
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(
                _worker, ((d.terms, cfg) for d in sequences), chunksize=16
            )
            for chunk in chunks:
                for rec in chunk:
                    report.records.append(rec)
                    if sink:
                        sink(rec)
    else:
        for d in sequences:
            for rec in analyze_sequence(d, cfg):
                report.records.append(rec)
                if sink:
                    sink(rec)
    return report
