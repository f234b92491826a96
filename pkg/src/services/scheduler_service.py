"""
Cost-based vertex partitioning and the thread pool that runs candidate waves.
"""
import heapq
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

from ..core.logger import logger
from ..models.graph import PropertyGraph

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class Partition:
    """
    Static split of the retained vertices over N threads.

    Attributes:
        assignments: per-thread tuple of vertex ids, ascending
        costs: per-thread total estimated cost
        capacity: most vertices any one thread may hold, ⌈retained/N⌉
    """
    assignments: Tuple[Tuple[int, ...], ...]
    costs: Tuple[int, ...]
    capacity: int

    @property
    def threads(self) -> int:
        return len(self.assignments)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for part in self.assignments for v in part)

    @property
    def max_load(self) -> int:
        return max(self.costs, default=0)

    def source_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(part) for part in self.assignments]


def estimate_cost(
    graph: PropertyGraph,
    v: int,
    frequent_labels: Iterable[int],
    frequent_attributes: Iterable[int],
) -> int:
    """Out-edges of v with a frequent label times the number of frequent attributes on v."""
    attrs = frozenset(frequent_attributes)
    frequent_on_v = sum(1 for a in graph.attribute_sets[v] if a in attrs)
    if not frequent_on_v:
        return 0
    return graph.out_edge_count(v, frozenset(frequent_labels)) * frequent_on_v


def partition(costs: Union[Dict[int, int], Sequence[int]], threads: int) -> Partition:
    """
    Longest-processing-time assignment.

    Vertices are taken in descending cost (ties by ascending id) and each
    goes to the least-loaded thread that still has room; equal loads go to
    the lowest thread index. Zero-cost vertices are expected to be removed
    by the caller.
    """
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    items = costs.items() if isinstance(costs, dict) else enumerate(costs)
    order = sorted(items, key=lambda item: (-item[1], item[0]))
    capacity = math.ceil(len(order) / threads) if order else 0

    heap = [(0, t) for t in range(threads)]
    parts: List[List[int]] = [[] for _ in range(threads)]
    loads = [0] * threads
    for v, cost in order:
        # a full thread is never pushed back, so the heap top always has room
        load, t = heapq.heappop(heap)
        parts[t].append(v)
        loads[t] = load + cost
        if len(parts[t]) < capacity:
            heapq.heappush(heap, (loads[t], t))

    return Partition(
        assignments=tuple(tuple(sorted(p)) for p in parts),
        costs=tuple(loads),
        capacity=capacity,
    )


def plan_partition(
    graph: PropertyGraph,
    frequent_labels: Iterable[int],
    frequent_attributes: Iterable[int],
    threads: int,
) -> Partition:
    """Cost every vertex, drop the zero-cost ones and split the rest over the threads."""
    labels = frozenset(frequent_labels)
    attrs = frozenset(frequent_attributes)
    costs = {}
    for v in range(graph.num_vertices):
        cost = estimate_cost(graph, v, labels, attrs)
        if cost > 0:
            costs[v] = cost
    plan = partition(costs, threads)
    logger.info(
        f"Partitioned {len(costs)} of {graph.num_vertices} vertices over {threads} threads "
        f"(max load {plan.max_load}, capacity {plan.capacity})"
    )
    logger.debug(f"Per-thread loads: {list(plan.costs)}")
    return plan


class WaveExecutor:
    """
    Runs one candidate wave over every partition and merges the partial
    results in partition order. With a single thread everything runs inline
    on the caller's thread.
    """

    def __init__(self, plan: Partition, threads: Optional[int] = None):
        self.plan = plan
        self.threads = threads or plan.threads
        self._sources = plan.source_sets()

    def map_partitions(self, task: Callable[[Optional[FrozenSet[int]]], R]) -> List[R]:
        """Run task(sources) once per partition; results come back in partition order."""
        if self.threads == 1 or len(self._sources) <= 1:
            # one partition already holds every retained vertex
            return [task(None)]
        with ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="wave") as pool:
            return list(pool.map(task, self._sources))

    def run_wave(
        self,
        candidates: Sequence[T],
        evaluate: Callable[[T, Optional[FrozenSet[int]]], R],
        merge: Callable[[T, List[R]], R],
    ) -> List[R]:
        """Evaluate every candidate on every partition, then merge per candidate."""
        if not candidates:
            return []
        if self.threads == 1 or len(self._sources) <= 1:
            return [merge(c, [evaluate(c, None)]) for c in candidates]

        def work(sources: FrozenSet[int]) -> List[R]:
            return [evaluate(c, sources) for c in candidates]

        with ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="wave") as pool:
            per_partition = list(pool.map(work, self._sources))
        return [merge(c, [part[i] for part in per_partition]) for i, c in enumerate(candidates)]
