"""Finite connected loopless multigraphs: parsing, invariants, subdivision, families.

Vertices are identified by string labels; the canonical vertex order is
first-appearance order in the input. Parallel edges are represented by
repetition in the edge list, never by weights.
"""

from __future__ import annotations

from collections import deque

from .errors import (
    DisconnectedError,
    EdgeListSyntaxError,
    EmptyGraphError,
    GraphError,
    LoopEdgeError,
)


class MultiGraph:
    """A finite, unweighted, connected multigraph without loop edges.

    Immutable after construction; all derived structure (adjacency,
    degrees, distance layers) is computed lazily and cached, so instances
    are safe to share across threads.
    """

    __slots__ = (
        "vertices",
        "edges",
        "_index",
        "_adj",
        "_degrees",
        "_layers",
        "_mult",
        "_snf_cache",
    )

    def __init__(self, vertices, edges):
        vertices = tuple(vertices)
        edges = tuple((u, v) for u, v in edges)
        if not vertices:
            raise EmptyGraphError("graph has no vertices")
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex labels")
        index = {v: i for i, v in enumerate(vertices)}
        for u, v in edges:
            if u == v:
                raise LoopEdgeError(f"loop edge at {u!r}")
            if u not in index or v not in index:
                raise GraphError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_degrees", None)
        object.__setattr__(self, "_layers", {})
        object.__setattr__(self, "_mult", None)
        object.__setattr__(self, "_snf_cache", None)
        self._check_connected()

    def __setattr__(self, name, value):
        raise AttributeError("MultiGraph is immutable")

    def _check_connected(self):
        n = len(self.vertices)
        if n == 1:
            return
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        adj = self.adjacency()
        count = 1
        while queue:
            i = queue.popleft()
            for j, _ in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    count += 1
                    queue.append(j)
        if count != n:
            raise DisconnectedError("graph is not connected")

    # -- basic queries ---------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"MultiGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertices == other.vertices and sorted(
            tuple(sorted(e)) for e in self.edges
        ) == sorted(tuple(sorted(e)) for e in other.edges)

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(tuple(sorted(e)) for e in self.edges))))

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def has_vertex(self, label):
        return label in self._index

    def adjacency(self):
        """Per-vertex list of (neighbor index, edge multiplicity)."""
        if self._adj is None:
            n = len(self.vertices)
            counts = [dict() for _ in range(n)]
            for u, v in self.edges:
                i, j = self._index[u], self._index[v]
                counts[i][j] = counts[i].get(j, 0) + 1
                counts[j][i] = counts[j].get(i, 0) + 1
            adj = tuple(tuple(sorted(c.items())) for c in counts)
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def degrees(self):
        """Vertex degrees (parallel edges counted) in canonical order."""
        if self._degrees is None:
            degs = [0] * len(self.vertices)
            for u, v in self.edges:
                degs[self._index[u]] += 1
                degs[self._index[v]] += 1
            object.__setattr__(self, "_degrees", tuple(degs))
        return self._degrees

    def degree(self, label):
        return self.degrees()[self.index(label)]

    def multiplicity(self, u, v):
        """Number of parallel edges between u and v."""
        if self._mult is None:
            mult = {}
            for a, b in self.edges:
                i, j = self._index[a], self._index[b]
                key = (i, j) if i < j else (j, i)
                mult[key] = mult.get(key, 0) + 1
            object.__setattr__(self, "_mult", mult)
        i, j = self.index(u), self.index(v)
        key = (i, j) if i < j else (j, i)
        return self._mult.get(key, 0)

    def distance_layers(self, root=0):
        """BFS layers from the given vertex index: layers[k] = indices at distance k."""
        if root not in self._layers:
            adj = self.adjacency()
            dist = [-1] * len(self.vertices)
            dist[root] = 0
            order = [root]
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for j, _ in adj[i]:
                    if dist[j] < 0:
                        dist[j] = dist[i] + 1
                        order.append(j)
                        queue.append(j)
            layers = []
            for i in order:
                d = dist[i]
                if d == len(layers):
                    layers.append([i])
                else:
                    layers[d].append(i)
            self._layers[root] = (tuple(dist), tuple(tuple(l) for l in layers))
        return self._layers[root]


def genus(g: MultiGraph) -> int:
    """Cyclomatic number |E| - |V| + 1."""
    return len(g.edges) - len(g.vertices) + 1


# -- edge-list text format ------------------------------------------------


def parse_graph(text: str) -> MultiGraph:
    """Parse edge-list text: one edge per line, two whitespace-separated labels.

    Blank lines and lines starting with '#' are ignored, except that a
    "# vertices: ..." header (as written by the serializer) pins the
    canonical vertex order; otherwise first appearance decides it.
    Parallel edges are given by repetition.
    """
    vertices = []
    seen = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("# vertices:"):
            for label in line[len("# vertices:"):].split():
                if label in seen:
                    raise EdgeListSyntaxError(
                        f"duplicate vertex {label!r} in header", line=lineno
                    )
                seen.add(label)
                vertices.append(label)
            continue
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListSyntaxError(
                f"expected two labels, got {len(parts)}: {line!r}", line=lineno
            )
        u, v = parts
        if u == v:
            raise LoopEdgeError(f"loop edge at {u!r} (line {lineno})")
        for w in (u, v):
            if w not in seen:
                seen.add(w)
                vertices.append(w)
        edges.append((u, v))
    if not vertices:
        raise EmptyGraphError("no edges or vertices in input")
    return MultiGraph(vertices, edges)


def serialize_graph(g: MultiGraph) -> str:
    """Inverse of parse_graph: vertex header comment, then edges in canonical order."""
    lines = ["# vertices: " + " ".join(g.vertices)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- subdivision -----------------------------------------------------------


def _subdivision_label(u, v, edge_index, j):
    return f"{u}__{v}__{edge_index}__{j}"


def subdivide_edges(g: MultiGraph, counts):
    """Replace edge i by a path of counts[i] >= 1 edges through fresh vertices.

    Returns (new graph, map from old vertex label to its label in the new
    graph). Fresh labels are "<u>__<v>__<edgeIndex>__<j>" with j in
    1..counts[i]-1, in path order from u to v.
    """
    counts = list(counts)
    if len(counts) != len(g.edges):
        raise GraphError("one subdivision count per edge required")
    if any(c < 1 for c in counts):
        raise GraphError("subdivision counts must be >= 1")
    vertices = list(g.vertices)
    edges = []
    for idx, (u, v) in enumerate(g.edges):
        k = counts[idx]
        prev = u
        for j in range(1, k):
            fresh = _subdivision_label(u, v, idx, j)
            vertices.append(fresh)
            edges.append((prev, fresh))
            prev = fresh
        edges.append((prev, v))
    return MultiGraph(vertices, edges), {v: v for v in g.vertices}


def subdivide(g: MultiGraph, k: int):
    """Subdivide every edge into k edges; genus is preserved."""
    if k < 1:
        raise GraphError("subdivision factor must be >= 1")
    return subdivide_edges(g, [k] * len(g.edges))


# -- named families --------------------------------------------------------


def complete_graph(n: int) -> MultiGraph:
    """Complete graph on n >= 2 vertices v1..vn."""
    if n < 2:
        raise GraphError("complete(n) requires n >= 2")
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [
        (vertices[i], vertices[j]) for i in range(n) for j in range(i + 1, n)
    ]
    return MultiGraph(vertices, edges)


def banana_graph(n: int) -> MultiGraph:
    """Two vertices Q1, Q2 joined by n >= 1 parallel edges."""
    if n < 1:
        raise GraphError("banana(n) requires n >= 1")
    return MultiGraph(["Q1", "Q2"], [("Q1", "Q2")] * n)


def banana_lengths_graph(lengths) -> MultiGraph:
    """Banana with the i-th edge subdivided into lengths[i] edges.

    Interior vertices on the i-th edge are labeled R<i>_<j> in path order
    from Q1 to Q2 (1-based i and j).
    """
    lengths = list(lengths)
    if not lengths:
        raise GraphError("banana_lengths requires at least one edge")
    if any(l < 1 for l in lengths):
        raise GraphError("edge lengths must be >= 1")
    vertices = ["Q1", "Q2"]
    edges = []
    for i, l in enumerate(lengths, start=1):
        prev = "Q1"
        for j in range(1, l):
            fresh = f"R{i}_{j}"
            vertices.append(fresh)
            edges.append((prev, fresh))
            prev = fresh
        edges.append((prev, "Q2"))
    return MultiGraph(vertices, edges)


def cycle_graph(n: int) -> MultiGraph:
    """Cycle on n >= 2 vertices (n = 2 gives two parallel edges)."""
    if n < 2:
        raise GraphError("cycle(n) requires n >= 2")
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    return MultiGraph(vertices, edges)


def path_graph(n: int) -> MultiGraph:
    """Path on n >= 1 vertices."""
    if n < 1:
        raise GraphError("path(n) requires n >= 1")
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = [(vertices[i], vertices[i + 1]) for i in range(n - 1)]
    return MultiGraph(vertices, edges)


_FAMILIES = {
    "complete": (complete_graph, 1),
    "banana": (banana_graph, 1),
    "banana_lengths": (banana_lengths_graph, None),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
}


def family(name: str, *params: int) -> MultiGraph:
    """Build a named family instance, e.g. family("banana", 3)."""
    if name not in _FAMILIES:
        raise GraphError(
            f"unknown family {name!r}; expected one of {sorted(_FAMILIES)}"
        )
    builder, arity = _FAMILIES[name]
    if arity is None:
        return builder(params)
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s)")
    return builder(*params)
