"""Pydantic models: settings, instance files and machine-readable reports."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any, Literal

from pydantic import (
    BaseModel,
    BaseSettings,
    ConstrainedInt,
    Field,
    StrictInt,
    root_validator,
    validator,
)

from .errors import InputError
from .geometry import BiCost, format_rational, parse_rational
from .matroids import DEFAULT_ENUMERATION_CAP

FORMAT_VERSION = 1

BENCHMARK_COLUMNS = [
    "family",
    "size",
    "seed",
    "solver",
    "m",
    "rank",
    "esn_count",
    "iterations",
    "independence_tests",
    "wall_time_s",
]


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    enumeration_cap: int = Field(default=DEFAULT_ENUMERATION_CAP, gt=0)
    data_dir: Path = Field(default=Path("./data"))
    output_dir: Path = Field(default=Path("./artifacts"))
    bench_workers: int = Field(default=4, ge=1, le=64)
    log_level: str = Field(default="WARNING")

    class Config:
        env_prefix = "MWB_"
        env_file = ".env"
        env_file_encoding = "utf-8"

    def resolve_paths(self) -> None:
        """Ensure the configured directories exist."""
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.output_dir.mkdir(parents=True, exist_ok=True)


class Count(ConstrainedInt):
    """Non-negative JSON integer; floats and numeric strings are rejected."""

    strict = True
    ge = 0


class PositiveCount(Count):
    ge = 1


class MatroidSpec(BaseModel):
    """Matroid description inside an instance file."""

    kind: Literal["graphic", "uniform", "partition"]
    vertex_count: PositiveCount | None = None
    edges: list[tuple[StrictInt, StrictInt]] | None = None
    ground_size: Count | None = None
    rank: Count | None = None
    blocks: list[StrictInt] | None = None
    capacities: list[StrictInt] | None = None

    @root_validator(skip_on_failure=True)
    def validate_payload(cls, values: dict[str, Any]) -> dict[str, Any]:
        kind = values["kind"]
        required = {
            "graphic": ("vertex_count", "edges"),
            "uniform": ("ground_size", "rank"),
            "partition": ("blocks", "capacities"),
        }[kind]
        missing = [name for name in required if values.get(name) is None]
        if missing:
            raise ValueError(f"A {kind} matroid needs {', '.join(missing)}.")
        return values

    def element_count(self) -> int:
        if self.kind == "graphic":
            return len(self.edges or [])
        if self.kind == "uniform":
            return self.ground_size or 0
        return len(self.blocks or [])

    def describe(self) -> str:
        if self.kind == "graphic":
            return f"{self.element_count()} edges"
        return f"{self.element_count()} elements"


class InstanceFile(BaseModel):
    """On-disk bi-objective matroid instance; costs are exact rational strings."""

    version: int = FORMAT_VERSION
    name: str = ""
    matroid: MatroidSpec
    costs: list[tuple[str, str]]

    @validator("version")
    def validate_version(cls, value: int) -> int:
        if value != FORMAT_VERSION:
            raise ValueError(f"Unsupported instance format version {value}.")
        return value

    @validator("costs", pre=True)
    def normalise_costs(cls, value: Any) -> list[tuple[str, str]]:
        if not isinstance(value, list):
            raise ValueError("Costs must be a list of [c1, c2] rows.")
        rows: list[tuple[str, str]] = []
        for index, row in enumerate(value):
            if not isinstance(row, (list, tuple)) or len(row) != 2:
                raise ValueError(f"Cost row {index} must be a pair [c1, c2].")
            try:
                rows.append(
                    (
                        format_rational(parse_rational(row[0])),
                        format_rational(parse_rational(row[1])),
                    )
                )
            except InputError as error:
                raise ValueError(f"Cost row {index}: {error}") from error
        return rows

    @root_validator(skip_on_failure=True)
    def validate_counts(cls, values: dict[str, Any]) -> dict[str, Any]:
        matroid: MatroidSpec = values["matroid"]
        if matroid.element_count() != len(values["costs"]):
            raise ValueError(
                f"Matroid has {matroid.describe()} "
                f"but {len(values['costs'])} cost rows."
            )
        return values

    def to_costs(self) -> BiCost:
        return BiCost.from_pairs(self.costs)

    def canonical_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, separators=(",", ":"))

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, indent=2) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()


class DecompositionEntry(BaseModel):
    lo: str
    hi: str
    point: tuple[str, str]


class RunStats(BaseModel):
    iterations: int
    independence_tests: int
    wall_time_s: float | None = None


class RunReport(BaseModel):
    """Output of one solver run; points sorted by ascending ``y1``."""

    solver: str
    instance_digest: str
    esn_points: list[tuple[str, str]]
    representatives: list[list[int]]
    weight_decomposition: list[DecompositionEntry]
    stats: RunStats
    verified: bool = False
    violations: list[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, indent=2) + "\n"


class ImageSummary(BaseModel):
    point: tuple[str, str]
    label: str
    basis_count: int


class ComponentEntry(BaseModel):
    basis: list[int]
    lo: str
    hi: str


class OracleReport(BaseModel):
    """Brute-force classification of every image of an instance."""

    instance_digest: str
    basis_count: int
    images: list[ImageSummary]
    y_n: list[tuple[str, str]]
    y_sn: list[tuple[str, str]]
    y_esn: list[tuple[str, str]]
    weight_components: list[ComponentEntry]
    d_se_connected: bool
    d_ese_connected: bool
    weight_connectivity: dict[str, bool]

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, indent=2) + "\n"


class BenchmarkRow(BaseModel):
    """Single row of the benchmark table."""

    family: str
    size: int
    seed: int
    solver: str
    m: int
    rank: int
    esn_count: int
    iterations: int
    independence_tests: int
    wall_time_s: float


class GeneratorParams(BaseModel):
    """Parameters of the seeded random instance generator."""

    family: Literal["graphic", "uniform", "partition"]
    seed: int
    vertex_count: int = Field(default=6, ge=2, description="Graphic: vertices.")
    edge_probability: float = Field(
        default=0.6, gt=0, le=1, description="Graphic: edge probability."
    )
    ground_size: int = Field(default=8, ge=1, description="Uniform/partition: m.")
    rank: int = Field(default=3, ge=0, description="Uniform/partition: rank.")
    block_count: int = Field(default=3, ge=1, description="Partition: blocks.")
    cost_low: int = -5
    cost_high: int = 9

    @validator("rank")
    def validate_rank(cls, value: int, values: dict[str, Any]) -> int:
        ground_size = values.get("ground_size")
        if ground_size is not None and value > ground_size:
            raise ValueError(f"Rank {value} exceeds the ground set size {ground_size}.")
        return value

    @validator("cost_high")
    def validate_cost_range(cls, value: int, values: dict[str, Any]) -> int:
        low = values.get("cost_low")
        if low is not None and value < low:
            raise ValueError("cost_high must not be below cost_low.")
        return value

    def size(self) -> int:
        return self.vertex_count if self.family == "graphic" else self.ground_size
