"""Agent cross-checking solver output against the brute-force oracle."""

from __future__ import annotations

import logging
from collections import Counter

from core.geometry import BiCost, format_rational
from core.matroids import MatroidInstance
from core.models import ComponentEntry, ImageSummary, OracleReport, Settings
from core.oracle import (
    FrontierTruth,
    adjacency_graph,
    brute_force_frontiers,
    check_connectivity,
    check_weight_connectivity,
    verify_sweep,
)

from .solver_agent import SolverOutcome

logger = logging.getLogger(__name__)


class VerificationAgent:
    """Enumerate every basis (within the cap) and compare or summarise."""

    def __init__(self, settings: Settings) -> None:
        self.settings = settings

    def truth(self, instance: MatroidInstance, costs: BiCost) -> FrontierTruth:
        return brute_force_frontiers(instance, costs, self.settings.enumeration_cap)

    def verify(
        self, instance: MatroidInstance, costs: BiCost, outcome: SolverOutcome
    ) -> list[str]:
        """Violations of ``outcome`` as plain messages; empty when it checks out."""

        truth = self.truth(instance, costs)
        log = outcome.sweep if outcome.sweep is not None else outcome.frontier
        violations = [str(violation) for violation in verify_sweep(log, truth)]
        if violations:
            logger.warning(
                "%s solver: %d verification violations",
                outcome.solver.value,
                len(violations),
            )
        else:
            logger.info("%s solver verified against the oracle", outcome.solver.value)
        return violations

    def report(
        self, instance: MatroidInstance, costs: BiCost, digest: str
    ) -> OracleReport:
        """Classify every image and check adjacency-graph connectivity."""

        truth = self.truth(instance, costs)
        graph = adjacency_graph(truth.bases)
        counts = Counter(truth.all_images)
        images = [
            ImageSummary(
                point=point.as_strings(),
                label=truth.labels[point].value,
                basis_count=counts[point],
            )
            for point in sorted(counts)
        ]
        components = [
            ComponentEntry(
                basis=list(basis),
                lo=format_rational(interval.lo),
                hi=format_rational(interval.hi),
            )
            for basis, interval in sorted(truth.weight_components.items())
        ]
        return OracleReport(
            instance_digest=digest,
            basis_count=len(truth.bases),
            images=images,
            y_n=[point.as_strings() for point in sorted(truth.y_n)],
            y_sn=[point.as_strings() for point in sorted(truth.y_sn)],
            y_esn=[point.as_strings() for point in sorted(truth.y_esn)],
            weight_components=components,
            d_se_connected=check_connectivity(graph, truth.x_se),
            d_ese_connected=check_connectivity(graph, truth.x_ese),
            weight_connectivity={
                format_rational(lam): connected
                for lam, connected in check_weight_connectivity(truth, graph).items()
            },
        )
