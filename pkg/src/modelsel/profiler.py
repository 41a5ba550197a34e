"""CSV ingestion and dataset profiling.

Turns raw CSV bytes into a ``DataTable``, infers per-column types, and
summarizes the dataset facts the recommendation engines consume: size,
column-type mix, target type, and quality flags (missing data, outliers,
imbalance).  All computations are pure and order-free over rows.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

Cell = Union[str, int, float, None]

NULL_MARKERS = frozenset({"", "na", "nan", "null"})

# flag a categorical target as unbalanced below this minority fraction
IMBALANCE_THRESHOLD = 0.40

# a column with more distinct non-numeric values than
# max(CATEGORICAL_MIN_CUTOFF, CATEGORICAL_FRACTION * n_rows) is free text
CATEGORICAL_MIN_CUTOFF = 20
CATEGORICAL_FRACTION = 0.05

# Tukey fence multiplier for the outlier rule
IQR_FENCE = 1.5


class ProfilerError(ValueError):
    """Base class for profiling failures."""


class TableFormatError(ProfilerError):
    """The CSV bytes cannot be turned into a rectangular table."""


class AllNullColumnError(ProfilerError):
    """A column has no non-null cells to infer a type from."""


class UnknownTargetError(ProfilerError):
    """The requested target column does not exist in the table."""


class UnsupportedTargetError(ProfilerError):
    """The target column's type cannot be predicted (free text)."""


class ColumnType(Enum):
    NUMERICAL = "Numerical"
    BINARY_CATEGORICAL = "BinaryCategorical"
    CATEGORICAL = "Categorical"
    TEXT = "Text"
    # placeholders: never inferred, reserved for future ingestion paths
    TIME_SERIES = "TimeSeries"
    IMAGE = "Image"


class ProblemType(Enum):
    BINARY_CLASSIFICATION = "BinaryClassification"
    MULTICLASS_CLASSIFICATION = "MulticlassClassification"
    REGRESSION = "Regression"
    CLUSTERING = "Clustering"
    # never inferred from a profile, only requested explicitly
    DIMENSIONALITY_REDUCTION = "DimensionalityReduction"


# ---------------------------------------------------------------------------
# table loading
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DataTable:
    """Columnar table: ``cells[i]`` holds column ``columns[i]``."""

    columns: tuple[str, ...]
    cells: tuple[tuple[Cell, ...], ...]

    def __post_init__(self) -> None:
        if len(self.columns) != len(self.cells):
            raise TableFormatError(
                f"{len(self.columns)} column names but "
                f"{len(self.cells)} cell columns")
        lengths = {len(col) for col in self.cells}
        if len(lengths) > 1:
            raise TableFormatError(
                f"columns have differing lengths: {sorted(lengths)}")

    @property
    def n_rows(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def column(self, name: str) -> tuple[Cell, ...]:
        try:
            return self.cells[self.columns.index(name)]
        except ValueError:
            raise UnknownTargetError(
                f"no column named {name!r} in table") from None


def _parse_cell(text: str) -> Cell:
    if text.strip().lower() in NULL_MARKERS:
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def load_table(data: Union[bytes, str], delimiter: str = ",",
               header: bool = True) -> DataTable:
    """Parse CSV bytes into a ``DataTable``.

    The first row supplies column names when ``header`` is true;
    otherwise names are synthesized as ``col_0..col_{k-1}``.  Empty
    fields and the literals NA/NaN/null (any case) load as null; other
    fields load as int, then float, then text.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise TableFormatError(f"input is not valid UTF-8: {exc}") from exc
    else:
        text = data
    rows = list(csv.reader(io.StringIO(text), delimiter=delimiter))
    if not rows:
        raise TableFormatError("empty input: no rows at all")
    if header:
        names = tuple(rows[0])
        body = rows[1:]
    else:
        names = tuple(f"col_{i}" for i in range(len(rows[0])))
        body = rows
    if not names:
        raise TableFormatError("empty input: header row has no fields")
    for i, row in enumerate(body):
        if len(row) != len(names):
            raise TableFormatError(
                f"ragged row {i + 1}: expected {len(names)} fields, "
                f"got {len(row)}")
    columns = tuple(
        tuple(_parse_cell(row[j]) for row in body)
        for j in range(len(names)))
    return DataTable(columns=names, cells=columns)


# ---------------------------------------------------------------------------
# column typing
# ---------------------------------------------------------------------------

def _is_number(value: Cell) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def infer_column_type(values: tuple[Cell, ...]) -> ColumnType:
    """Infer a ``ColumnType`` from one column's cells.

    Any column with exactly two distinct non-null values is binary
    categorical regardless of encoding (0/1, yes/no).  All-numeric
    columns are numerical.  Otherwise the distinct-count cutoff
    max(20, 5% of rows) separates categorical from free text.
    """
    non_null = [v for v in values if v is not None]
    if not non_null:
        raise AllNullColumnError("cannot type a column with no values")
    distinct = set(non_null)
    if len(distinct) == 2:
        return ColumnType.BINARY_CATEGORICAL
    if all(_is_number(v) for v in non_null):
        return ColumnType.NUMERICAL
    cutoff = max(CATEGORICAL_MIN_CUTOFF, CATEGORICAL_FRACTION * len(values))
    if len(distinct) <= cutoff:
        return ColumnType.CATEGORICAL
    return ColumnType.TEXT


def _has_outliers(values: list[float]) -> bool:
    if len(values) < 2:
        return False
    q1, q3 = np.percentile(values, [25, 75])
    fence = IQR_FENCE * (q3 - q1)
    low, high = q1 - fence, q3 + fence
    return any(v < low or v > high for v in values)


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QualityFlags:
    missing_data: bool
    worst_fraction: float
    outliers: bool
    affected_columns: tuple[str, ...]
    noise: bool
    unbalanced: bool
    minority_ratio: Optional[float]

    def __post_init__(self) -> None:
        if self.missing_data != (self.worst_fraction > 0):
            raise ProfilerError(
                "missing_data flag must match worst_fraction > 0")


@dataclass(frozen=True)
class DatasetProfile:
    n_rows: int
    n_columns: int
    column_types: dict[str, ColumnType]
    target: Optional[str]
    target_type: Optional[ColumnType]
    quality: QualityFlags
    name: Optional[str] = None
    source: Optional[str] = None

    def __post_init__(self) -> None:
        if self.n_columns != len(self.column_types):
            raise ProfilerError(
                f"n_columns={self.n_columns} but "
                f"{len(self.column_types)} column_types entries")
        if self.target is not None and self.target not in self.column_types:
            raise UnknownTargetError(
                f"target {self.target!r} is not a declared column")


def profile_dataset(table: DataTable, target: Optional[str] = None,
                    name: Optional[str] = None,
                    source: Optional[str] = None) -> DatasetProfile:
    """Profile a loaded table, optionally around a target column.

    ``name`` is a display label for the dataset (e.g. the file name) and
    flows into generated prompts; ``source`` is a free-text provenance
    note.  Both are carried verbatim.
    """
    if target is not None and target not in table.columns:
        raise UnknownTargetError(f"no column named {target!r} in table")
    column_types = {
        col: infer_column_type(cells)
        for col, cells in zip(table.columns, table.cells)}

    n_rows = table.n_rows
    worst_fraction = 0.0
    if n_rows:
        worst_fraction = max(
            sum(1 for v in cells if v is None) / n_rows
            for cells in table.cells)

    affected = tuple(
        col for col, cells in zip(table.columns, table.cells)
        if column_types[col] is ColumnType.NUMERICAL
        and _has_outliers([float(v) for v in cells if v is not None]))

    unbalanced = False
    minority_ratio: Optional[float] = None
    target_type = column_types[target] if target is not None else None
    if target_type in (ColumnType.BINARY_CATEGORICAL, ColumnType.CATEGORICAL):
        counts = Counter(v for v in table.column(target) if v is not None)
        total = sum(counts.values())
        minority_ratio = min(counts.values()) / total
        unbalanced = minority_ratio < IMBALANCE_THRESHOLD

    return DatasetProfile(
        n_rows=n_rows,
        n_columns=len(table.columns),
        column_types=column_types,
        target=target,
        target_type=target_type,
        quality=QualityFlags(
            missing_data=worst_fraction > 0,
            worst_fraction=worst_fraction,
            outliers=bool(affected),
            affected_columns=affected,
            noise=False,
            unbalanced=unbalanced,
            minority_ratio=minority_ratio,
        ),
        name=name,
        source=source,
    )


def classify_problem(profile: DatasetProfile) -> ProblemType:
    """Map a profile to the problem type the engines should solve.

    Dimensionality reduction is never inferred; callers request it
    explicitly when that is the goal.
    """
    if profile.target is None:
        return ProblemType.CLUSTERING
    if profile.target_type is ColumnType.BINARY_CATEGORICAL:
        return ProblemType.BINARY_CLASSIFICATION
    if profile.target_type is ColumnType.CATEGORICAL:
        return ProblemType.MULTICLASS_CLASSIFICATION
    if profile.target_type is ColumnType.NUMERICAL:
        return ProblemType.REGRESSION
    raise UnsupportedTargetError(
        f"target {profile.target!r} has type "
        f"{profile.target_type.value if profile.target_type else None}, "
        f"which cannot be predicted")


# ---------------------------------------------------------------------------
# JSON serialization (stable key order)
# ---------------------------------------------------------------------------

def profile_to_dict(profile: DatasetProfile) -> dict:
    return {
        "name": profile.name,
        "source": profile.source,
        "n_rows": profile.n_rows,
        "n_columns": profile.n_columns,
        "column_types": {
            col: ctype.value for col, ctype in profile.column_types.items()},
        "target": profile.target,
        "target_type":
            profile.target_type.value if profile.target_type else None,
        "quality": {
            "missing_data": profile.quality.missing_data,
            "worst_fraction": profile.quality.worst_fraction,
            "outliers": profile.quality.outliers,
            "affected_columns": list(profile.quality.affected_columns),
            "noise": profile.quality.noise,
            "unbalanced": profile.quality.unbalanced,
            "minority_ratio": profile.quality.minority_ratio,
        },
    }


def profile_from_dict(data: dict) -> DatasetProfile:
    try:
        return _profile_from_dict(data)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ProfilerError(f"malformed profile mapping: {exc}") from exc


def _profile_from_dict(data: dict) -> DatasetProfile:
    quality = data["quality"]
    return DatasetProfile(
        n_rows=data["n_rows"],
        n_columns=data["n_columns"],
        column_types={
            col: ColumnType(value)
            for col, value in data["column_types"].items()},
        target=data.get("target"),
        target_type=(ColumnType(data["target_type"])
                     if data.get("target_type") else None),
        quality=QualityFlags(
            missing_data=quality["missing_data"],
            worst_fraction=quality["worst_fraction"],
            outliers=quality["outliers"],
            affected_columns=tuple(quality["affected_columns"]),
            noise=quality["noise"],
            unbalanced=quality["unbalanced"],
            minority_ratio=quality.get("minority_ratio"),
        ),
        name=data.get("name"),
        source=data.get("source"),
    )


def profile_to_json(profile: DatasetProfile) -> str:
    return json.dumps(profile_to_dict(profile), indent=2) + "\n"


def profile_from_json(text: str) -> DatasetProfile:
    return profile_from_dict(json.loads(text))
