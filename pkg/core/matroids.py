"""Matroid representations behind one independence-oracle interface."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections import Counter
from collections.abc import Callable, Collection, Iterable, Sequence
from enum import Enum
from itertools import combinations
from math import comb

import networkx as nx

from .errors import InputError, InstanceValidationError, ResourceCapError

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 1_000_000

Basis = tuple[int, ...]
Circuit = frozenset[int]


def as_basis(elements: Iterable[int]) -> Basis:
    """Canonical sorted tuple form used for bases everywhere."""

    return tuple(sorted(set(elements)))


class MatroidKind(str, Enum):
    GRAPHIC = "graphic"
    UNIFORM = "uniform"
    PARTITION = "partition"
    VIEW = "view"


class UnionFind:
    """Disjoint sets over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int) -> None:
        self._parent = list(range(size))
        self._size = [1] * size

    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of ``x`` and ``y``; False if already merged."""
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        if self._size[root_x] < self._size[root_y]:
            root_x, root_y = root_y, root_x
        self._parent[root_y] = root_x
        self._size[root_x] += self._size[root_y]
        return True


def circuit_by_elimination(
    is_independent: Callable[[Collection[int]], bool], basis: Iterable[int], f: int
) -> Circuit:
    """Shrink ``B + f`` to its unique circuit by dropping basis elements whose
    removal keeps the set dependent."""

    candidate = set(basis)
    candidate.add(f)
    for e in sorted(candidate - {f}):
        trial = candidate - {e}
        if not is_independent(trial):
            candidate = trial
    return frozenset(candidate)


class MatroidInstance(ABC):
    """Ground set ``0..ground_size-1`` plus an independence oracle.

    Instances are immutable once built; every query is read-only.
    """

    kind: MatroidKind
    has_circuit_hook = False

    def __init__(self, ground_size: int) -> None:
        if ground_size < 0:
            raise InputError("Ground set size must be non-negative.")
        self._ground_size = ground_size

    @property
    def ground_size(self) -> int:
        return self._ground_size

    @property
    @abstractmethod
    def rank(self) -> int:
        """Size of every basis."""

    def elements(self) -> tuple[int, ...]:
        """Element ids that may appear in an independent set."""
        return tuple(range(self._ground_size))

    def is_independent(self, s: Iterable[int]) -> bool:
        members = frozenset(s)
        self._check_ids(members)
        return self._independent(members)

    def fundamental_circuit(self, basis: Sequence[int], f: int) -> Circuit:
        self._check_ids((*basis, f))
        if f in basis:
            raise InputError(f"Element {f} already belongs to the basis.")
        if len(set(basis)) != self.rank:
            raise InputError(
                f"Expected a basis of size {self.rank}, got {len(set(basis))} elements."
            )
        return self._circuit(basis, f)

    @abstractmethod
    def _independent(self, members: frozenset[int]) -> bool: ...

    def _circuit(self, basis: Sequence[int], f: int) -> Circuit:
        return circuit_by_elimination(self.is_independent, basis, f)

    def _check_ids(self, members: Iterable[int]) -> None:
        for e in members:
            if not 0 <= e < self._ground_size:
                raise InputError(
                    f"Element id {e} is outside the ground set "
                    f"0..{self._ground_size - 1}."
                )


class GraphicMatroid(MatroidInstance):
    """Edge set of a connected graph; independent sets are forests."""

    kind = MatroidKind.GRAPHIC
    has_circuit_hook = True

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]]) -> None:
        super().__init__(len(edges))
        if vertex_count < 1:
            raise InstanceValidationError("A graphic matroid needs a vertex.")
        for index, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InstanceValidationError(
                    f"Edge {index} ({u}, {v}) uses a vertex "
                    f"outside 0..{vertex_count - 1}."
                )
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(vertex_count))
        graph.add_edges_from(edges)
        if not nx.is_connected(graph):
            raise InstanceValidationError(
                "Graphic instances must describe a connected graph."
            )
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (int(u), int(v)) for u, v in edges
        )

    @property
    def rank(self) -> int:
        return self.vertex_count - 1

    def _independent(self, members: frozenset[int]) -> bool:
        forest = UnionFind(self.vertex_count)
        for e in members:
            u, v = self.edges[e]
            if not forest.union(u, v):
                return False
        return True

    def _circuit(self, basis: Sequence[int], f: int) -> Circuit:
        u, v = self.edges[f]
        if u == v:
            return frozenset({f})
        tree = nx.Graph()
        tree.add_nodes_from(range(self.vertex_count))
        for e in basis:
            a, b = self.edges[e]
            tree.add_edge(a, b, element=e)
        path = nx.shortest_path(tree, u, v)
        cycle = {tree[a][b]["element"] for a, b in zip(path, path[1:])}
        cycle.add(f)
        return frozenset(cycle)


class UniformMatroid(MatroidInstance):
    """``U(r, m)``: every set of at most ``r`` elements is independent."""

    kind = MatroidKind.UNIFORM
    has_circuit_hook = True

    def __init__(self, ground_size: int, rank_bound: int) -> None:
        super().__init__(ground_size)
        if not 0 <= rank_bound <= ground_size:
            raise InputError(
                f"Uniform rank {rank_bound} must lie in 0..{ground_size}."
            )
        self.rank_bound = rank_bound

    @property
    def rank(self) -> int:
        return self.rank_bound

    def _independent(self, members: frozenset[int]) -> bool:
        return len(members) <= self.rank_bound

    def _circuit(self, basis: Sequence[int], f: int) -> Circuit:
        return frozenset((*basis, f))


class PartitionMatroid(MatroidInstance):
    """Elements grouped into blocks; at most ``capacities[j]`` from block ``j``."""

    kind = MatroidKind.PARTITION
    has_circuit_hook = True

    def __init__(self, blocks: Sequence[int], capacities: Sequence[int]) -> None:
        super().__init__(len(blocks))
        for e, block in enumerate(blocks):
            if not 0 <= block < len(capacities):
                raise InstanceValidationError(
                    f"Element {e} refers to unknown block {block}."
                )
        if any(capacity < 0 for capacity in capacities):
            raise InstanceValidationError("Block capacities must be non-negative.")
        self.blocks: tuple[int, ...] = tuple(blocks)
        self.capacities: tuple[int, ...] = tuple(capacities)
        sizes = Counter(self.blocks)
        self._rank = sum(
            min(capacity, sizes[block]) for block, capacity in enumerate(capacities)
        )

    @property
    def rank(self) -> int:
        return self._rank

    def block_sizes(self) -> list[int]:
        sizes = Counter(self.blocks)
        return [sizes[block] for block in range(len(self.capacities))]

    def _independent(self, members: frozenset[int]) -> bool:
        used = Counter(self.blocks[e] for e in members)
        return all(count <= self.capacities[block] for block, count in used.items())

    def _circuit(self, basis: Sequence[int], f: int) -> Circuit:
        block = self.blocks[f]
        return frozenset(e for e in (*basis, f) if self.blocks[e] == block)


class MatroidView(MatroidInstance):
    """Restriction/contraction of a base instance that keeps the base's ids.

    Independent sets are ``{I : I disjoint from deleted and contracted,
    I + contracted independent in base}``.
    """

    kind = MatroidKind.VIEW

    def __init__(
        self,
        base: MatroidInstance,
        deleted: Iterable[int] = (),
        contracted: Iterable[int] = (),
    ) -> None:
        deleted_set = frozenset(deleted)
        contracted_set = frozenset(contracted)
        if isinstance(base, MatroidView):
            deleted_set |= base.deleted
            contracted_set |= base.contracted
            base = base.base
        super().__init__(base.ground_size)
        self._check_ids(deleted_set | contracted_set)
        if deleted_set & contracted_set:
            raise InputError("Deleted and contracted elements must be disjoint.")
        if not base.is_independent(contracted_set):
            raise InputError("The contracted set must be independent.")
        self.base = base
        self.deleted = deleted_set
        self.contracted = contracted_set
        excluded = deleted_set | contracted_set
        self._elements = tuple(e for e in base.elements() if e not in excluded)
        spanned = set(contracted_set)
        for e in self._elements:
            if base.is_independent(spanned | {e}):
                spanned.add(e)
        self._rank = len(spanned) - len(contracted_set)

    @property
    def rank(self) -> int:
        return self._rank

    def elements(self) -> tuple[int, ...]:
        return self._elements

    def _independent(self, members: frozenset[int]) -> bool:
        if members & (self.deleted | self.contracted):
            return False
        return self.base.is_independent(members | self.contracted)


class CountingOracle(MatroidInstance):
    """Wraps an instance and counts the oracle queries issued through it.

    A fundamental-circuit query answered by a kind's own circuit routine counts
    as one query; otherwise the circuit is found by elimination and every
    independence test it issues is counted. Create one per solver invocation.
    """

    def __init__(self, inner: MatroidInstance) -> None:
        super().__init__(inner.ground_size)
        self.inner = inner
        self.kind = inner.kind
        self.has_circuit_hook = inner.has_circuit_hook
        self.tests = 0

    @classmethod
    def wrap(cls, instance: MatroidInstance) -> CountingOracle:
        return instance if isinstance(instance, CountingOracle) else cls(instance)

    @property
    def rank(self) -> int:
        return self.inner.rank

    def elements(self) -> tuple[int, ...]:
        return self.inner.elements()

    def _independent(self, members: frozenset[int]) -> bool:
        self.tests += 1
        return self.inner._independent(members)

    def _circuit(self, basis: Sequence[int], f: int) -> Circuit:
        if self.inner.has_circuit_hook:
            self.tests += 1
            return self.inner._circuit(basis, f)
        return circuit_by_elimination(self.is_independent, basis, f)


def is_independent(instance: MatroidInstance, s: Iterable[int]) -> bool:
    return instance.is_independent(s)


def rank_of(instance: MatroidInstance) -> int:
    return instance.rank


def fundamental_circuit(instance: MatroidInstance, b: Sequence[int], f: int) -> Circuit:
    """The unique circuit inside ``b + f``."""

    return instance.fundamental_circuit(b, f)


def restrict_contract(
    instance: MatroidInstance, delete: Iterable[int] = (), contract: Iterable[int] = ()
) -> MatroidView:
    """Delete ``delete`` and contract ``contract``; nested views are flattened."""

    return MatroidView(instance, delete, contract)


def enumerate_bases(
    instance: MatroidInstance, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Basis]:
    """Every basis exactly once, in lexicographic order of sorted id tuples."""

    elements = instance.elements()
    candidates = comb(len(elements), instance.rank)
    if candidates > cap:
        raise ResourceCapError(
            f"Enumerating {candidates} candidate sets exceeds the cap of {cap}."
        )
    bases = [
        combo
        for combo in combinations(elements, instance.rank)
        if instance.is_independent(combo)
    ]
    logger.debug("Enumerated %d bases from %d candidates", len(bases), candidates)
    return bases
