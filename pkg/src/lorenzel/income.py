"""Income-table ingestion and empirical Lorenz curves.

Loads a CSV of incomes (optionally tagged with a grouping column such as
state), drops unusable rows with a counted warning, and turns a sample
into generalized and relative Lorenz curve points on a grid of abscissae.
"""
from __future__ import annotations

import csv
import math
import sys
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import Sample, point_estimate
from .errors import FileError, SchemaError

__all__ = [
    "IncomeTable",
    "CurvePoints",
    "load_csv",
    "curve",
    "write_curve_csv",
]


@dataclass(frozen=True)
class IncomeTable:
    """Parsed income values, optional group labels, and the dropped-row count."""

    values: np.ndarray
    groups: Optional[tuple]  # one label per value, or None
    dropped: int

    @property
    def n(self) -> int:
        return self.values.size

    def group_labels(self) -> tuple:
        """Distinct group labels in first-appearance order."""
        if self.groups is None:
            return ()
        seen = dict.fromkeys(self.groups)
        return tuple(seen)

    def filter(self, group) -> "IncomeTable":
        """Rows whose group label equals ``group`` (case-sensitive)."""
        if self.groups is None:
            raise SchemaError("table was loaded without a group column")
        mask = np.array([g == group for g in self.groups])
        return IncomeTable(values=self.values[mask],
                           groups=tuple(g for g in self.groups if g == group),
                           dropped=self.dropped)

    def sample(self) -> Sample:
        return Sample(self.values)


def load_csv(path, value_column: str, group_column: Optional[str] = None) -> IncomeTable:
    """Read incomes out of a CSV file.

    Rows whose value cell is missing, non-numeric, or non-finite are
    dropped; the count is recorded on the table and reported once via
    ``warnings.warn``.  Raises FileError when the file cannot be read and
    SchemaError when a requested column is absent.
    """
    try:
        fh = open(path, "r", newline="", encoding="utf-8-sig")
    except OSError as exc:
        raise FileError(f"cannot read {path}: {exc}")
    values: list[float] = []
    groups: list = []
    dropped = 0
    with fh:
        reader = csv.DictReader(fh)
        names = reader.fieldnames or []
        if value_column not in names:
            raise SchemaError(f"column {value_column!r} not found in {path} "
                              f"(have: {', '.join(names)})")
        if group_column is not None and group_column not in names:
            raise SchemaError(f"column {group_column!r} not found in {path} "
                              f"(have: {', '.join(names)})")
        for row in reader:
            raw = row.get(value_column)
            try:
                val = float(raw)
            except (TypeError, ValueError):
                dropped += 1
                continue
            if not math.isfinite(val):
                dropped += 1
                continue
            values.append(val)
            if group_column is not None:
                groups.append(row.get(group_column))
    if dropped:
        warnings.warn(f"dropped {dropped} unusable row(s) from {path}")
    return IncomeTable(values=np.asarray(values, dtype=float),
                       groups=tuple(groups) if group_column is not None else None,
                       dropped=dropped)


@dataclass(frozen=True)
class CurvePoints:
    """Generalized and relative Lorenz ordinates on a grid.

    ``lorenz`` is ``generalized / mu_hat``; at any t whose quantile index
    reaches n, both curves close exactly (lorenz hits 1.0 bit-for-bit,
    because the same summation produces numerator and denominator).
    """

    grid: np.ndarray
    generalized: np.ndarray
    lorenz: np.ndarray
    mu_hat: float


def curve(s: Sample, grid: Sequence[float]) -> CurvePoints:
    """Evaluate the empirical curves at each abscissa in ``grid``."""
    grid = np.asarray([float(t) for t in grid])
    gen = np.array([point_estimate(s, t) for t in grid])
    mu_hat = float(s.values.sum() / s.n)
    return CurvePoints(grid=grid, generalized=gen, lorenz=gen / mu_hat, mu_hat=mu_hat)


def write_curve_csv(points: CurvePoints, dest, precision: Optional[int] = None) -> None:
    """Write columns t,lorenz,generalized,diagonal (diagonal = t, the line
    of perfect equality, for plotting convenience)."""
    own = False
    if dest == "-":
        fh = sys.stdout
    elif hasattr(dest, "write"):
        fh = dest
    else:
        fh = open(dest, "w", newline="")
        own = True

    def fmt(x: float) -> str:
        return repr(float(x)) if precision is None else f"{x:.{precision}f}"

    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t", "lorenz", "generalized", "diagonal"])
        for t, lz, gl in zip(points.grid, points.lorenz, points.generalized):
            writer.writerow([f"{t:.10g}", fmt(lz), fmt(gl), f"{t:.10g}"])
    finally:
        if own:
            fh.close()
