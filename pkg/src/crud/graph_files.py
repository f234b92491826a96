from pathlib import Path
from typing import Dict, Iterable, List, TextIO, Tuple

from ..core.exceptions import GraphFormatError
from ..core.logger import logger
from ..models.graph import Interner, PropertyGraph


def _content_lines(stream: Iterable[str]) -> Iterable[Tuple[int, str]]:
    """Numbered lines with comments and blank lines dropped."""
    for number, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield number, line


class CRUDGraphFiles:
    """
    Read and write property graphs in the TSV formats.

    Vertex file: `vertex_id<TAB>attr1,attr2,...`; the attribute column may be
    empty or absent. Edge file: `src_id<TAB>label<TAB>dst_id`.
    """

    def load_graph(
        self,
        vertex_source: TextIO,
        edge_source: TextIO,
        vertex_name: str = "<vertices>",
        edge_name: str = "<edges>",
    ) -> PropertyGraph:
        """Parse both streams; vertex ids follow first appearance in the vertex file."""
        ids: Dict[str, int] = {}
        names: List[str] = []
        attribute_sets: List[List[int]] = []
        attribute_dict = Interner()
        label_dict = Interner()

        for number, line in _content_lines(vertex_source):
            fields = line.split("\t")
            if len(fields) > 2:
                raise GraphFormatError(f"expected at most 2 tab-separated fields, got {len(fields)}", vertex_name, number)
            name = fields[0].strip()
            if not name:
                raise GraphFormatError("empty vertex id", vertex_name, number)
            if name in ids:
                raise GraphFormatError(f"duplicate vertex id {name!r}", vertex_name, number)
            attrs: List[int] = []
            if len(fields) == 2 and fields[1].strip():
                for token in fields[1].split(","):
                    attr = token.strip()
                    if not attr:
                        raise GraphFormatError("empty attribute name in attribute list", vertex_name, number)
                    if any(c in attr for c in "{}"):
                        raise GraphFormatError(f"attribute name {attr!r} contains a brace", vertex_name, number)
                    attrs.append(attribute_dict.intern(attr))
            ids[name] = len(names)
            names.append(name)
            attribute_sets.append(attrs)

        declared = len(names)
        edges: List[Tuple[int, int, int]] = []
        for number, line in _content_lines(edge_source):
            fields = [f.strip() for f in line.split("\t")]
            if len(fields) != 3:
                raise GraphFormatError(f"expected 3 tab-separated fields, got {len(fields)}", edge_name, number)
            if not all(fields):
                raise GraphFormatError("empty field in edge line", edge_name, number)
            src_name, label_name, dst_name = fields
            if ">" in label_name or label_name.endswith("*"):
                raise GraphFormatError(f"label {label_name!r} cannot contain '>' or end with '*'", edge_name, number)
            endpoints = []
            for vertex in (src_name, dst_name):
                ident = ids.get(vertex)
                if ident is None:
                    ident = len(names)
                    ids[vertex] = ident
                    names.append(vertex)
                    attribute_sets.append([])
                endpoints.append(ident)
            edges.append((endpoints[0], label_dict.intern(label_name), endpoints[1]))

        implicit = len(names) - declared
        if implicit:
            logger.warning(f"{implicit} vertices appear only in {edge_name}; created with no attributes")
        graph = PropertyGraph(names, attribute_sets, edges, label_dict, attribute_dict, implicit_vertices=implicit)
        logger.info(f"Loaded {graph!r}")
        return graph

    def load_graph_files(self, vertex_path: str | Path, edge_path: str | Path) -> PropertyGraph:
        try:
            with open(vertex_path, encoding="utf-8") as vertices, open(edge_path, encoding="utf-8") as edges:
                return self.load_graph(vertices, edges, str(vertex_path), str(edge_path))
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"input is not valid UTF-8: {e.reason}", f"{vertex_path} / {edge_path}")
        except OSError as e:
            raise GraphFormatError(f"cannot read input: {e.strerror}", str(e.filename or vertex_path))

    def save_graph(self, graph: PropertyGraph, vertex_sink: TextIO, edge_sink: TextIO) -> None:
        """Write both TSV files; vertex order is id order and edge order is stored order."""
        attribute_name = graph.attribute_dict.name_of
        label_name = graph.label_dict.name_of
        for v, name in enumerate(graph.vertex_names):
            attrs = ",".join(attribute_name(a) for a in graph.attribute_sets[v])
            vertex_sink.write(f"{name}\t{attrs}\n")
        for src, label, dst in graph.edges:
            edge_sink.write(f"{graph.vertex_names[src]}\t{label_name(label)}\t{graph.vertex_names[dst]}\n")

    def save_graph_files(self, graph: PropertyGraph, vertex_path: str | Path, edge_path: str | Path) -> None:
        with open(vertex_path, "w", encoding="utf-8", newline="\n") as vertices, \
                open(edge_path, "w", encoding="utf-8", newline="\n") as edges:
            self.save_graph(graph, vertices, edges)
        logger.info(f"Wrote {graph!r} to {vertex_path} and {edge_path}")


# Instance of the class to be imported by the services and the CLI
crud_graph_files = CRUDGraphFiles()
