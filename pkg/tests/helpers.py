"""Builders shared by the test modules."""

from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from pathlib import Path

from agents.instance_agent import generate_instance
from agents.validation_agent import ValidationAgent
from core.geometry import BiCost, Point2
from core.matroids import GraphicMatroid, MatroidInstance
from core.models import InstanceFile, Settings

FIXTURES = Path(__file__).resolve().parent.parent / "core" / "fixtures"

# v1..v5 -> 0..4; edge ids follow the fixture files
TWO_TRIANGLES = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]


def point(y1: int | str, y2: int | str) -> Point2:
    return Point2(Fraction(y1), Fraction(y2))


def fig1() -> tuple[GraphicMatroid, BiCost]:
    costs = BiCost.from_pairs([(-1, 4), (0, 0), (0, 0), (0, 4), (4, 0), (2, 2)])
    return GraphicMatroid(5, TWO_TRIANGLES), costs


def ex28() -> tuple[GraphicMatroid, BiCost]:
    costs = BiCost.from_pairs([(4, 0), (2, 2), (0, 4), (0, 4), (4, 0), (2, 2)])
    return GraphicMatroid(5, TWO_TRIANGLES), costs


def make_settings(tmp_path: Path, **overrides: object) -> Settings:
    return Settings(
        data_dir=tmp_path / "data", output_dir=tmp_path / "artifacts", **overrides
    )


def graphic_corpus(count: int, first_seed: int = 0) -> Iterator[
    tuple[MatroidInstance, BiCost]
]:
    """Random connected graphs on 4..7 vertices with costs in [-5, 9]."""

    for seed in range(first_seed, first_seed + count):
        yield _build(generate_instance(seed, "graphic", vertex_count=4 + seed % 4))


def set_system_corpus(count: int, first_seed: int = 0) -> Iterator[
    tuple[MatroidInstance, BiCost]
]:
    """Alternating uniform and partition matroids on 4..8 elements."""

    for seed in range(first_seed, first_seed + count):
        m = 4 + seed % 5
        rank = 1 + seed % (m - 1)
        if seed % 2 == 0:
            instance_file = generate_instance(seed, "uniform", ground_size=m, rank=rank)
        else:
            instance_file = generate_instance(
                seed, "partition", ground_size=m, rank=rank, block_count=1 + seed % 3
            )
        yield _build(instance_file)


def _build(instance_file: InstanceFile) -> tuple[MatroidInstance, BiCost]:
    matroid = ValidationAgent.build_matroid(instance_file.matroid)
    return matroid, instance_file.to_costs()
