"""Benchmark specs and reference tables.

A spec names a dataset, a target column, a split, a seed, and the
models to run with their parameter grids. A reference table carries
per-model expected metric values with tolerances; the checker compares
emitted reports against it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Tuple

from . import BenchError
from .models import SUPPORTED_MODELS


@dataclass(frozen=True)
class SplitSpec:
    test_fraction: float = 0.2
    stratified: bool = False

    def __post_init__(self) -> None:
        if not 0.0 < self.test_fraction < 1.0:
            raise BenchError(
                f"test_fraction must be in (0, 1), got {self.test_fraction}")


@dataclass(frozen=True)
class ModelSpec:
    """One model to benchmark.

    ``grid`` maps parameter names to candidate-value tuples; an empty
    grid means a single run with the estimator's defaults.
    """

    name: str
    grid: Mapping[str, Tuple] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.name not in SUPPORTED_MODELS:
            known = ", ".join(sorted(SUPPORTED_MODELS))
            raise BenchError(
                f"unknown model {self.name!r}; supported: {known}")
        for param, values in self.grid.items():
            if not values:
                raise BenchError(
                    f"{self.name}: grid for {param!r} is empty")


@dataclass(frozen=True)
class BenchmarkSpec:
    dataset: Path
    target: str
    split: SplitSpec
    models: Tuple[ModelSpec, ...]
    seed: int = 42

    def __post_init__(self) -> None:
        if not self.models:
            raise BenchError("spec lists no models")
        if not self.target:
            raise BenchError("spec names no target column")


def spec_from_dict(data: Mapping, base_dir: Path | None = None) \
        -> BenchmarkSpec:
    """Build a spec from a parsed mapping.

    Relative dataset paths resolve against ``base_dir`` (the spec
    file's directory) so bundled specs work from any cwd.
    """
    try:
        dataset = Path(data["dataset"])
        if base_dir is not None and not dataset.is_absolute():
            dataset = (base_dir / dataset).resolve()
        split_data = data.get("split", {})
        split = SplitSpec(
            test_fraction=float(split_data.get("test_fraction", 0.2)),
            stratified=bool(split_data.get("stratified", False)))
        models = tuple(
            ModelSpec(name=entry["name"],
                      grid={param: tuple(values) for param, values
                            in entry.get("grid", {}).items()})
            for entry in data["models"])
        return BenchmarkSpec(
            dataset=dataset,
            target=data["target"],
            split=split,
            models=models,
            seed=int(data.get("seed", 42)))
    except (KeyError, TypeError, AttributeError) as exc:
        raise BenchError(f"malformed benchmark spec: {exc}") from exc


def load_spec(path: str | Path) -> BenchmarkSpec:
    path = Path(path)
    data = json.loads(path.read_text())
    if not isinstance(data, dict):
        raise BenchError("benchmark spec must be a JSON object")
    return spec_from_dict(data, base_dir=path.parent)


# ---------------------------------------------------------------------------
# reference tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expectation:
    """One expected metric value.

    ``relative`` switches the tolerance from an absolute bound to a
    fraction of the expected value (e.g. 0.10 = within 10%).
    """

    value: float
    tolerance: float
    relative: bool = False

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise BenchError("expected value must be finite")
        if self.tolerance < 0:
            raise BenchError("tolerance must be non-negative")

    @property
    def bound(self) -> float:
        return abs(self.value) * self.tolerance if self.relative \
            else self.tolerance

    def accepts(self, observed: float) -> bool:
        # Inclusive band, with a hair of slack so a decimal boundary
        # like 0.8167 + 0.05 does not fail on binary float noise.
        return abs(observed - self.value) <= self.bound + 1e-9


@dataclass(frozen=True)
class ReferenceRow:
    model: str
    expect: Mapping[str, Expectation]

    def __post_init__(self) -> None:
        if not self.expect:
            raise BenchError(f"reference row for {self.model} is empty")


@dataclass(frozen=True)
class ReferenceTable:
    rows: Tuple[ReferenceRow, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise BenchError("reference table has no rows")


def reference_from_dict(data: Mapping) -> ReferenceTable:
    try:
        rows = tuple(
            ReferenceRow(
                model=row["model"],
                expect={metric: Expectation(
                    value=float(entry["value"]),
                    tolerance=float(entry["tolerance"]),
                    relative=bool(entry.get("relative", False)))
                    for metric, entry in row["expect"].items()})
            for row in data["rows"])
        return ReferenceTable(rows=rows)
    except (KeyError, TypeError, AttributeError) as exc:
        raise BenchError(f"malformed reference table: {exc}") from exc


def load_reference(path: str | Path) -> ReferenceTable:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise BenchError("reference table must be a JSON object")
    return reference_from_dict(data)
