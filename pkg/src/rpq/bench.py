"""Engine x instance-family grids with counter collection and slope fits.

Scaling claims are checked on counters only; wall time is recorded for
reference and never asserted on.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import engines as _engines
from .generators import gen_path, gen_random, gen_two_cycles
from .graph import LabeledGraph

__all__ = ["FAMILIES", "BenchRow", "BenchReport", "run_grid", "fit_exponent", "make_instance"]

CSV_HEADER = ("family", "size", "engine", "out", "counter_name", "value", "wall_ns")

FAMILIES: dict[str, Callable[[int], LabeledGraph]] = {
    "path": lambda n: gen_path(n, "b"),
    "two-cycles": gen_two_cycles,
    "random": lambda n: gen_random(n, min(2 * n, n * n * 3), "abc", seed=n),
}


def make_instance(family: str, size: int) -> LabeledGraph:
    try:
        gen = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return gen(size)


@dataclass(frozen=True)
class BenchRow:
    family: str
    size: int
    engine: str
    out: int | None
    counter_name: str
    value: object
    wall_ns: int | None


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def errors(self) -> list[BenchRow]:
        return [r for r in self.rows if r.counter_name == "error"]

    def series(self, family: str, engine: str, counter: str) -> list[tuple[int, int]]:
        pts = [(r.size, r.value) for r in self.rows
               if r.family == family and r.engine == engine and r.counter_name == counter]
        return sorted(pts)

    def fit(self, family: str, engine: str, counter: str) -> float:
        return fit_exponent(self.series(family, engine, counter))

    def to_csv(self, out=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.family, r.size, r.engine, "" if r.out is None else r.out,
                        r.counter_name, r.value, "" if r.wall_ns is None else r.wall_ns])
        text = buf.getvalue()
        if out is not None:
            out.write(text)
        return text


def run_grid(families: Sequence[str], sizes: Iterable[int], engines: Sequence[str],
             query, repeats: int = 1) -> BenchReport:
    """Evaluate ``query`` with every engine on every ``(family, size)`` instance.

    A failing cell becomes a single ``error`` row and the grid moves on.
    Rows come out in ``(family, size, engine)`` order.
    """
    sizes = list(sizes)
    report = BenchReport()
    for engine in engines:
        if engine not in _engines.ENGINES:
            raise ValueError(f"unknown engine {engine!r}; choose from {sorted(_engines.ENGINES)}")
    for family in families:
        for size in sizes:
            try:
                g = make_instance(family, size)
            except Exception as exc:  # noqa: BLE001 - errors are data here
                for engine in engines:
                    report.rows.append(BenchRow(family, size, engine, None, "error",
                                                f"{type(exc).__name__}: {exc}", None))
                continue
            for engine in engines:
                report.rows.extend(_run_cell(family, size, engine, g, query, repeats))
    return report


def _run_cell(family, size, engine, g, query, repeats) -> list[BenchRow]:
    runner = _engines.ENGINES[engine]
    walls = []
    try:
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter_ns()
            pairs, counters = runner(g, query)
            walls.append(time.perf_counter_ns() - t0)
    except Exception as exc:  # noqa: BLE001
        return [BenchRow(family, size, engine, None, "error", f"{type(exc).__name__}: {exc}", None)]
    wall = int(statistics.median(walls))
    out = len(pairs)
    return [BenchRow(family, size, engine, out, name, value, wall)
            for name, value in counters.items()]


def fit_exponent(points: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of ``log(work)`` against ``log(size)``."""
    if len(points) < 3:
        raise ValueError("need at least 3 points to fit an exponent")
    sizes = np.array([p[0] for p in points], dtype=float)
    work = np.array([p[1] for p in points], dtype=float)
    if np.any(np.diff(sizes) <= 0):
        raise ValueError("sizes must be strictly increasing")
    if np.any(work <= 0) or np.any(sizes <= 0):
        raise ValueError("sizes and work must be positive")
    slope, _ = np.polyfit(np.log(sizes), np.log(work), 1)
    return float(slope)
