"""Seeded sampling experiments: classify each sample, aggregate, report.

Sample ``i`` of a run is generated from its own derived stream
(``stream_for_sample(seed, i)``), so the aggregate is independent of worker
count and chunking; counts merge commutatively and the optional per-sample
dump is ordered by index.  Reports recompute every ratio from the counts.
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .classical import TAUTOLOGY, UNKNOWN, CERT_ANTILOGY, \
    TautologyStatus, is_simple_non_tautology, tautology_status
from .counting import stam_table
from .intuition import IntuitVerdict, cheap_verdict, clean, is_simple
from .sampling import random_canonical, stream_for_sample
from .terms import Term, render

DEFAULT_SEED = 12358
DEFAULT_MAX_VARS = 32

CSV_COLUMNS = (
    "n,count,seed,nSimple,nMP,nEasy,nCheap,nTautology,nCheapAndTaut,"
    "nGKZSimpleNonTaut,nAntilogy,nUnknown,ratioCheapOverTaut,gkzRatio,"
    "simpleRate,elapsedSeconds"
)

RNTABLE_COLUMNS = "n,count,seed,lognOverN,simpleRate,rateOverLognOverN"


@dataclass(frozen=True)
class Classification:
    """One sample's verdicts from both classifiers."""

    verdict: IntuitVerdict
    taut: TautologyStatus
    simple_non_taut: bool

    def as_record(self) -> dict:
        record = self.verdict.as_dict()
        record.update(self.taut.as_dict())
        record["gkzSimpleNonTaut"] = self.simple_non_taut
        return record


def classify(term: Term, max_vars: int = DEFAULT_MAX_VARS) -> Classification:
    cleaned = clean(term)
    return Classification(
        verdict=cheap_verdict(term, cleaned=cleaned),
        taut=tautology_status(term, max_vars, cleaned=cleaned),
        simple_non_taut=is_simple_non_tautology(term),
    )


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    count: int
    seed: int = DEFAULT_SEED
    max_vars: int = DEFAULT_MAX_VARS
    workers: int = 1
    out_csv: Optional[str] = None
    dump_jsonl: Optional[str] = None
    timing: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.max_vars < 1:
            raise ValueError("max_vars must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


_COUNT_FIELDS = ("n_simple", "n_mp", "n_easy", "n_cheap", "n_tautology",
                 "n_cheap_and_taut", "n_cheap_unknown", "n_simple_non_taut",
                 "n_antilogy", "n_unknown")


@dataclass
class ExperimentReport:
    n: int
    count: int
    seed: int
    max_vars: int
    n_simple: int = 0
    n_mp: int = 0
    n_easy: int = 0
    n_cheap: int = 0
    n_tautology: int = 0
    n_cheap_and_taut: int = 0
    # Cheap expressions are never refuted; the only way one misses the
    # tautology count is an unknown status (too many variables). Tracked so
    # the identity n_cheap_and_taut == n_cheap - n_cheap_unknown is checkable.
    n_cheap_unknown: int = 0
    n_simple_non_taut: int = 0
    n_antilogy: int = 0
    n_unknown: int = 0
    elapsed_seconds: float = 0.0
    records: list = field(default_factory=list, repr=False)

    @property
    def ratio_cheap_over_taut(self) -> float:
        return self.n_cheap_and_taut / self.n_tautology if self.n_tautology else 0.0

    @property
    def gkz_ratio(self) -> float:
        rest = self.count - self.n_simple_non_taut
        return self.n_simple / rest if rest else 0.0

    @property
    def simple_rate(self) -> float:
        return self.n_simple / self.count

    def csv_row(self, timing: bool = False) -> str:
        elapsed = repr(round(self.elapsed_seconds, 3)) if timing else "0"
        cells = [self.n, self.count, self.seed, self.n_simple, self.n_mp,
                 self.n_easy, self.n_cheap, self.n_tautology,
                 self.n_cheap_and_taut, self.n_simple_non_taut,
                 self.n_antilogy, self.n_unknown,
                 repr(self.ratio_cheap_over_taut), repr(self.gkz_ratio),
                 repr(self.simple_rate), elapsed]
        return ",".join(str(c) for c in cells)


def _classify_chunk(args) -> tuple[dict, list]:
    n, seed, lo, hi, max_vars, dump = args
    table = stam_table(n)
    counts = dict.fromkeys(_COUNT_FIELDS, 0)
    records = []
    for index in range(lo, hi):
        term = random_canonical(stream_for_sample(seed, index), n, table)
        cls = classify(term, max_vars)
        v, t = cls.verdict, cls.taut
        counts["n_simple"] += v.simple
        counts["n_mp"] += v.mp
        counts["n_easy"] += v.easy
        counts["n_cheap"] += v.cheap
        counts["n_tautology"] += t.status == TAUTOLOGY
        counts["n_cheap_and_taut"] += v.cheap and t.status == TAUTOLOGY
        counts["n_cheap_unknown"] += v.cheap and t.status == UNKNOWN
        counts["n_simple_non_taut"] += cls.simple_non_taut
        counts["n_antilogy"] += t.certificate == CERT_ANTILOGY
        counts["n_unknown"] += t.status == UNKNOWN
        if dump:
            record = {"index": index, "expr": render(term)}
            record.update(cls.as_record())
            records.append(record)
    return counts, records


def _chunk_bounds(count: int, pieces: int) -> list[tuple[int, int]]:
    size = max(1, math.ceil(count / pieces))
    return [(lo, min(lo + size, count)) for lo in range(0, count, size)]


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    """Deterministic for a fixed config, whatever the worker count."""
    started = time.perf_counter()
    dump = cfg.dump_jsonl is not None
    chunks = [(cfg.n, cfg.seed, lo, hi, cfg.max_vars, dump)
              for lo, hi in _chunk_bounds(cfg.count, max(cfg.workers * 4, 1))]
    report = ExperimentReport(n=cfg.n, count=cfg.count, seed=cfg.seed,
                              max_vars=cfg.max_vars)
    results = []
    if cfg.workers == 1:
        results = [_classify_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(_classify_chunk, chunks))
    all_records = []
    for counts, records in results:
        for name, value in counts.items():
            setattr(report, name, getattr(report, name) + value)
        all_records.extend(records)
    all_records.sort(key=lambda r: r["index"])
    report.records = all_records
    report.elapsed_seconds = time.perf_counter() - started
    return report


def emit_report(report: ExperimentReport, out_csv: Optional[str] = None,
                dump_jsonl: Optional[str] = None, timing: bool = False) -> str:
    """Write the one-row CSV (and per-sample JSONL when asked); returns the CSV text."""
    text = CSV_COLUMNS + "\n" + report.csv_row(timing=timing) + "\n"
    if out_csv:
        with open(out_csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    if dump_jsonl:
        with open(dump_jsonl, "w", encoding="utf-8") as fh:
            for record in report.records:
                fh.write(json.dumps(record, separators=(",", ":")) + "\n")
    return text


def _simple_rate_chunk(args) -> int:
    n, seed, lo, hi = args
    table = stam_table(n)
    hits = 0
    for index in range(lo, hi):
        term = random_canonical(stream_for_sample(seed, index), n, table)
        hits += is_simple(term)
    return hits


def simple_rate(n: int, count: int, seed: int = DEFAULT_SEED,
                workers: int = 1) -> float:
    """Fraction of samples that are simple; same streams as run_experiment."""
    chunks = [(n, seed, lo, hi)
              for lo, hi in _chunk_bounds(count, max(workers * 4, 1))]
    if workers == 1:
        hits = sum(_simple_rate_chunk(c) for c in chunks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_simple_rate_chunk, chunks))
    return hits / count


def rn_table(sizes: list[int], count: int, seed: int = DEFAULT_SEED,
             workers: int = 1) -> str:
    """CSV comparing the simple rate with log(n)/n across sizes."""
    lines = [RNTABLE_COLUMNS]
    for n in sizes:
        rate = simple_rate(n, count, seed, workers)
        reference = math.log(n) / n
        lines.append(",".join([
            str(n), str(count), str(seed), repr(reference), repr(rate),
            repr(rate / reference),
        ]))
    return "\n".join(lines) + "\n"
