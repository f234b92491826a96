from typing import Optional

import numpy as np

from ..core.exceptions import ConfigError
from ..core.logger import logger
from ..models.graph import Interner, PropertyGraph


def _zipf_weights(size: int, skew: float) -> Optional[np.ndarray]:
    """Probabilities ∝ 1/(i+1)^skew; None for a uniform draw."""
    if skew == 0 or size == 0:
        return None
    weights = 1.0 / np.arange(1, size + 1) ** skew
    return weights / weights.sum()


class GraphGeneratorService:
    """Seeded synthetic property graphs for tests and benchmarks"""

    def generate(
        self,
        num_vertices: int,
        num_edges: int,
        num_labels: int,
        num_attributes: int,
        attrs_per_vertex: float,
        seed: int,
        max_attrs_per_vertex: Optional[int] = None,
        attribute_skew: float = 0.0,
        label_skew: float = 0.0,
    ) -> PropertyGraph:
        """
        Random edges with uniform endpoints; each vertex draws a Poisson(λ)
        number of distinct attributes, clipped to [0, |A|] and to
        max_attrs_per_vertex when given.

        Attributes and labels are uniform by default. A positive skew draws
        them from a Zipf-like law instead, so a0 and l0 are the most common.

        Names are v0.., l0.. and a0.., interned in first-use order so the
        graph survives a save and reload unchanged.
        """
        self._check(num_vertices, num_edges, num_labels, num_attributes, attrs_per_vertex, attribute_skew, label_skew)
        rng = np.random.default_rng(seed)
        attribute_p = _zipf_weights(num_attributes, attribute_skew)
        label_p = _zipf_weights(num_labels, label_skew)

        cap = num_attributes if max_attrs_per_vertex is None else min(num_attributes, max_attrs_per_vertex)
        counts = np.clip(rng.poisson(attrs_per_vertex, size=num_vertices), 0, cap)
        attribute_dict = Interner()
        attribute_sets = []
        for count in counts:
            if count:
                drawn = rng.choice(num_attributes, size=int(count), replace=False, p=attribute_p)
                picked = sorted(int(a) for a in drawn)
            else:
                picked = []
            attribute_sets.append([attribute_dict.intern(f"a{a}") for a in picked])

        label_dict = Interner()
        edges = []
        if num_edges:
            sources = rng.integers(0, num_vertices, size=num_edges)
            targets = rng.integers(0, num_vertices, size=num_edges)
            if label_p is None:
                labels = rng.integers(0, num_labels, size=num_edges)
            else:
                labels = rng.choice(num_labels, size=num_edges, p=label_p)
            for src, label, dst in zip(sources, labels, targets):
                edges.append((int(src), label_dict.intern(f"l{int(label)}"), int(dst)))

        graph = PropertyGraph(
            [f"v{i}" for i in range(num_vertices)],
            attribute_sets,
            edges,
            label_dict,
            attribute_dict,
        )
        logger.info(f"Generated {graph!r} with seed {seed}")
        return graph

    @staticmethod
    def _check(n: int, m: int, labels: int, attributes: int, lam: float, attribute_skew: float, label_skew: float) -> None:
        problems = []
        if n < 0 or m < 0 or labels < 0 or attributes < 0:
            problems.append("counts must be nonnegative")
        if m > 0 and n == 0:
            problems.append("edges need at least one vertex")
        if m > 0 and labels == 0:
            problems.append("edges need at least one label")
        if lam < 0:
            problems.append("attributes per vertex must be nonnegative")
        if lam > attributes:
            problems.append(f"attributes per vertex ({lam}) exceeds the attribute vocabulary ({attributes})")
        if attribute_skew < 0 or label_skew < 0:
            problems.append("skew must be nonnegative")
        if problems:
            message = "; ".join(problems)
            logger.error(f"Rejected generator parameters: {message}")
            raise ConfigError(f"infeasible generator parameters: {message}")


# Create a singleton instance
graph_generator_service = GraphGeneratorService()
