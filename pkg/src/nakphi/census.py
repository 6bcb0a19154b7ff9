"""Exhaustive enumeration of Kupisch series and batch verification."""

from __future__ import annotations

import csv
import io
import os
import tempfile
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .algebra import Algebra, from_kupisch, is_self_injective, relations
from .delta import delta_system
from .modcat import INFINITE, findim, gldim
from .phi import omega_periodic, phi_dim
from .theorems import gustafson_d, verify_all

CSV_COLUMNS = ["kupisch", "N", "r", "self_injective", "gldim", "findim", "phi_dim",
               "gustafson_d", "delta_in_omega_per", "checks_passed"]


@dataclass(frozen=True)
class CensusParams:
    n_vertices: int | tuple[int, int]  # a single N or an inclusive range
    max_proj_len: int
    workers: int = 1
    out: str | os.PathLike | None = None

    def __post_init__(self):
        lo, hi = self.n_range
        if lo < 3:
            raise ValueError(f"n_vertices must be >= 3, got {lo}")
        if self.max_proj_len < 2:
            raise ValueError(f"max_proj_len must be >= 2, got {self.max_proj_len}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def n_range(self) -> tuple[int, int]:
        if isinstance(self.n_vertices, int):
            return self.n_vertices, self.n_vertices
        lo, hi = self.n_vertices
        return lo, hi


@dataclass(frozen=True)
class CensusRecord:
    kupisch: tuple[int, ...]
    n: int
    r: int
    self_injective: bool
    gldim: float
    findim: int
    phi_dim: int
    gustafson_d: int
    delta_in_omega_per: bool
    checks_passed: bool
    failures: tuple[str, ...] = field(default=(), compare=False)

    @property
    def infinite_gldim(self) -> bool:
        return self.gldim == INFINITE

    def row(self) -> list[str]:
        def b(x: bool) -> str:
            return "true" if x else "false"

        g = "inf" if self.infinite_gldim else str(int(self.gldim))
        return [",".join(map(str, self.kupisch)), str(self.n), str(self.r),
                b(self.self_injective), g, str(self.findim), str(self.phi_dim),
                str(self.gustafson_d), b(self.delta_in_omega_per), b(self.checks_passed)]


@dataclass
class CensusSummary:
    total: int = 0
    finite_gldim: int = 0
    infinite_gldim: int = 0
    phi_histogram: dict[int, int] = field(default_factory=dict)  # infinite gldim only
    max_phi_ratio: float = 0.0  # max phi_dim / 2r over infinite gldim
    sharp_count: int = 0  # infinite gldim records with phi_dim = 2r
    all_checks_passed: bool = True
    failures: dict[str, int] = field(default_factory=dict)


def _series(n: int, max_len: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def extend() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            if prefix[0] >= prefix[-1] - 1:
                yield tuple(prefix)
            return
        low = 2 if not prefix else max(2, prefix[-1] - 1)
        for c in range(low, max_len + 1):
            prefix.append(c)
            yield from extend()
            prefix.pop()

    yield from extend()


def enumerate_algebras(params: CensusParams) -> Iterator[Algebra]:
    """Every valid series with entries in [2, max_proj_len], lexicographically.

    Rotations of one series are all listed; no dedup.
    """
    lo, hi = params.n_range
    for n in range(lo, hi + 1):
        for series in _series(n, params.max_proj_len):
            yield from_kupisch(n, series)


def census_record(a: Algebra) -> CensusRecord:
    checks = verify_all(a)
    failures = tuple(f"{c.name}: {c.evidence}" for c in checks if not c.ok)
    return CensusRecord(
        kupisch=a.kupisch,
        n=a.n,
        r=len(relations(a)),
        self_injective=is_self_injective(a),
        gldim=gldim(a),
        findim=findim(a),
        phi_dim=phi_dim(a),
        gustafson_d=gustafson_d(a).d,
        delta_in_omega_per=set(delta_system(a).deltas) <= omega_periodic(a).modules,
        checks_passed=not failures,
        failures=failures,
    )


def _record_batch(batch: list[tuple[int, tuple[int, ...]]]) -> list[CensusRecord]:
    return [census_record(Algebra(n, series)) for n, series in batch]


def _batches(algebras: Iterable[Algebra], size: int) -> Iterator[list[tuple[int, tuple[int, ...]]]]:
    batch = []
    for a in algebras:
        batch.append((a.n, a.kupisch))
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def summarize(records: Iterable[CensusRecord]) -> CensusSummary:
    s = CensusSummary()
    hist: Counter = Counter()
    failures: Counter = Counter()
    for rec in records:
        s.total += 1
        if rec.infinite_gldim:
            s.infinite_gldim += 1
            hist[rec.phi_dim] += 1
            s.max_phi_ratio = max(s.max_phi_ratio, rec.phi_dim / (2 * rec.r))
            s.sharp_count += rec.phi_dim == 2 * rec.r
        else:
            s.finite_gldim += 1
        if not rec.checks_passed:
            s.all_checks_passed = False
            failures.update(f.split(":", 1)[0] for f in rec.failures)
    s.phi_histogram = dict(sorted(hist.items()))
    s.failures = dict(sorted(failures.items()))
    return s


def run_census(params: CensusParams, batch_size: int = 64) -> tuple[list[CensusRecord], CensusSummary]:
    """Verify every enumerated algebra; output order does not depend on ``workers``."""
    batches = _batches(enumerate_algebras(params), batch_size)
    if params.workers == 1:
        records = [rec for batch in batches for rec in _record_batch(batch)]
    else:
        with ProcessPoolExecutor(max_workers=params.workers) as pool:
            records = [rec for chunk in pool.map(_record_batch, batches) for rec in chunk]
    records.sort(key=lambda rec: (rec.n, rec.kupisch))
    if params.out is not None:
        write_csv(records, params.out)
    return records, summarize(records)


def csv_text(records: Iterable[CensusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()


def write_csv(records: Iterable[CensusRecord], path: str | os.PathLike) -> None:
    """Write atomically: a failed run never leaves a partial file behind."""
    path = Path(path)
    text = csv_text(records)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_csv(path: str | os.PathLike) -> list[dict[str, str]]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def sharpness_family(n: int) -> Algebra:
    """Series (2n+1, ..., 2n+1, 2n): r = n-1 and phi_dim = findim = 2n-2."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    a = from_kupisch(n, [2 * n + 1] * (n - 1) + [2 * n])
    assert len(relations(a)) == n - 1
    assert phi_dim(a) == findim(a) == 2 * n - 2
    return a
