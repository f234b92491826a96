from typing import Callable

import pytest

from src.models.graph import PropertyGraph
from src.schemas.miner_config import MinerConfig
from src.services.generator_service import graph_generator_service

from .support import load_campus


@pytest.fixture(scope="session")
def campus() -> PropertyGraph:
    """The 12-vertex, 15-edge example graph, loaded through the TSV reader."""
    return load_campus()


@pytest.fixture
def random_graph() -> Callable[..., PropertyGraph]:
    def make(
        seed: int = 0,
        vertices: int = 20,
        edges: int = 40,
        labels: int = 3,
        attributes: int = 5,
        attrs_per_vertex: float = 1.5,
    ) -> PropertyGraph:
        return graph_generator_service.generate(
            num_vertices=vertices,
            num_edges=edges,
            num_labels=labels,
            num_attributes=attributes,
            attrs_per_vertex=attrs_per_vertex,
            seed=seed,
            max_attrs_per_vertex=4,
        )

    return make


@pytest.fixture
def default_config() -> MinerConfig:
    return MinerConfig.build(1, 2)
