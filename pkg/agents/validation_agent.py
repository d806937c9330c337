"""Agent responsible for semantic checks on parsed instance files."""

from __future__ import annotations

import logging

from core.errors import InputError, InstanceValidationError
from core.geometry import BiCost
from core.matroids import (
    GraphicMatroid,
    MatroidInstance,
    PartitionMatroid,
    UniformMatroid,
)
from core.models import InstanceFile, MatroidSpec, Settings

logger = logging.getLogger(__name__)


class ValidationAgent:
    """Build the matroid behind an instance file, on top of the pydantic checks."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    def validate(self, instance_file: InstanceFile) -> tuple[MatroidInstance, BiCost]:
        """Return the validated matroid and its exact costs."""

        matroid = self.build_matroid(instance_file.matroid)
        costs = instance_file.to_costs()
        if len(costs) != matroid.ground_size:
            raise InstanceValidationError(
                f"Matroid has {matroid.ground_size} elements "
                f"but {len(costs)} cost rows."
            )
        logger.info(
            "Validated %s instance: m=%d, rank=%d",
            matroid.kind.value,
            matroid.ground_size,
            matroid.rank,
        )
        return matroid, costs

    @staticmethod
    def build_matroid(spec: MatroidSpec) -> MatroidInstance:
        if spec.kind == "graphic":
            assert spec.vertex_count is not None and spec.edges is not None
            return GraphicMatroid(spec.vertex_count, spec.edges)
        if spec.kind == "uniform":
            assert spec.ground_size is not None and spec.rank is not None
            if spec.rank > spec.ground_size:
                raise InstanceValidationError(
                    f"Uniform rank {spec.rank} exceeds the ground set size "
                    f"{spec.ground_size}."
                )
            return UniformMatroid(spec.ground_size, spec.rank)
        assert spec.blocks is not None and spec.capacities is not None
        try:
            matroid = PartitionMatroid(spec.blocks, spec.capacities)
        except InputError as error:
            raise InstanceValidationError(str(error)) from error
        for block, (size, capacity) in enumerate(
            zip(matroid.block_sizes(), matroid.capacities)
        ):
            if capacity > size:
                raise InstanceValidationError(
                    f"Block {block} has capacity {capacity} but only {size} elements."
                )
        return matroid
