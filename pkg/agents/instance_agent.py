"""Agent responsible for loading, generating and saving instance files."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import IO, Any

import networkx as nx
import numpy as np
from pydantic import ValidationError

from core.errors import InputError, InstanceParseError, InstanceValidationError
from core.geometry import BiCost
from core.matroids import MatroidInstance
from core.models import GeneratorParams, InstanceFile, MatroidSpec, Settings

from .validation_agent import ValidationAgent

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "core" / "fixtures"

_MAX_GRAPH_DRAWS = 1000


class InstanceAgent:
    """Read instance files from disk or draw seeded random ones."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings
        self.settings.resolve_paths()

    def resolve(self, relative_path: Path) -> Path:
        """Absolute paths pass through; bare fixture names fall back to the bundle."""

        if relative_path.is_absolute() or relative_path.exists():
            return relative_path
        candidate = self.settings.data_dir / relative_path
        if candidate.exists():
            return candidate
        bundled = FIXTURE_DIR / relative_path.name
        if bundled.exists():
            return bundled
        raise FileNotFoundError(f"Instance file not found: {relative_path}")

    def load(self, source: Path | IO[str]) -> InstanceFile:
        """Parse an instance file; syntax errors carry their line number."""

        if isinstance(source, Path):
            path = self.resolve(source)
            try:
                text = path.read_text(encoding="utf-8")
            except UnicodeDecodeError as error:
                raise InstanceParseError(f"{path} is not UTF-8 text.") from error
            except OSError as error:
                message = f"Cannot read {path}: {error.strerror}"
                raise InstanceParseError(message) from error
            logger.info("Loading instance from %s", path)
        else:
            text = source.read()
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as error:
            raise InstanceParseError(error.msg, line=error.lineno) from error
        return self.from_payload(payload)

    @staticmethod
    def from_payload(payload: Any) -> InstanceFile:
        if not isinstance(payload, dict):
            raise InstanceParseError("An instance file must be a JSON object.", line=1)
        try:
            return InstanceFile.parse_obj(payload)
        except ValidationError as error:
            if any(_is_parse_failure(entry) for entry in error.errors()):
                raise InstanceParseError(_summarise(error)) from error
            raise InstanceValidationError(_summarise(error)) from error

    def generate(self, params: GeneratorParams) -> InstanceFile:
        """Draw a deterministic random instance from ``params.seed``."""

        return draw_instance(params)

    def save(self, instance: InstanceFile, path: Path | None = None) -> Path:
        """Write the instance JSON, by default into ``data_dir``."""

        target = path or self.settings.data_dir / f"{instance.name}.json"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(instance.to_json(), encoding="utf-8")
        logger.info("Wrote instance %s", target)
        return target


def draw_instance(params: GeneratorParams) -> InstanceFile:
    """Every random draw comes from one ``default_rng(seed)`` stream."""

    rng = np.random.default_rng(seed=params.seed)
    if params.family == "graphic":
        spec = _graphic(rng, params)
    elif params.family == "uniform":
        spec = MatroidSpec(
            kind="uniform", ground_size=params.ground_size, rank=params.rank
        )
    else:
        spec = _partition(rng, params)
    draws = rng.integers(
        params.cost_low, params.cost_high + 1, size=(spec.element_count(), 2)
    )
    instance = InstanceFile(
        name=f"{params.family}-{params.size()}-seed{params.seed}",
        matroid=spec,
        costs=[(str(int(c1)), str(int(c2))) for c1, c2 in draws],
    )
    logger.debug("Generated %s (%s)", instance.name, spec.describe())
    return instance


def _graphic(rng: np.random.Generator, params: GeneratorParams) -> MatroidSpec:
    n = params.vertex_count
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(_MAX_GRAPH_DRAWS):
        keep = rng.random(len(pairs)) < params.edge_probability
        edges = [pair for pair, chosen in zip(pairs, keep) if chosen]
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(edges)
        if nx.is_connected(graph):
            return MatroidSpec(kind="graphic", vertex_count=n, edges=edges)
    raise InputError(
        f"No connected graph on {n} vertices after {_MAX_GRAPH_DRAWS} draws; "
        "raise edge_probability."
    )


def _partition(rng: np.random.Generator, params: GeneratorParams) -> MatroidSpec:
    k = params.block_count
    blocks = [int(block) for block in rng.integers(0, k, size=params.ground_size)]
    sizes = [blocks.count(block) for block in range(k)]
    capacities = [0] * k
    # capacities always sum to the requested rank
    for _ in range(params.rank):
        open_blocks = [b for b in range(k) if capacities[b] < sizes[b]]
        capacities[int(rng.choice(open_blocks))] += 1
    return MatroidSpec(kind="partition", blocks=blocks, capacities=capacities)


def _is_parse_failure(entry: dict[str, Any]) -> bool:
    # malformed cost strings and JSON values of the wrong type
    return entry["loc"][:1] == ("costs",) or entry["type"].startswith("type_error")


def _summarise(error: ValidationError) -> str:
    parts = []
    for entry in error.errors():
        location = ".".join(str(item) for item in entry["loc"] if item != "__root__")
        parts.append(f"{location}: {entry['msg']}" if location else entry["msg"])
    return "; ".join(parts)


def parse_instance(
    source: Path | IO[str], settings: Settings | None = None
) -> tuple[MatroidInstance, BiCost]:
    """Load and validate an instance file in one step."""

    settings = settings or Settings()
    instance_file = InstanceAgent(settings).load(source)
    return ValidationAgent(settings).validate(instance_file)


def generator_params(seed: int, family: str, **size: Any) -> GeneratorParams:
    try:
        return GeneratorParams(seed=seed, family=family, **size)
    except ValidationError as error:
        raise InputError(_summarise(error)) from error


def generate_instance(seed: int, family: str, **size: Any) -> InstanceFile:
    """Seeded instance generation; infeasible parameters raise ``InputError``."""

    return draw_instance(generator_params(seed, family, **size))
