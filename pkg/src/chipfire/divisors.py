"""Divisor arithmetic, the Laplacian, and q-reduced normal forms.

A divisor is an integer vector indexed by the vertices of a fixed graph;
linear equivalence is difference by a Laplacian image. Equality of classes
is decided through the unique q-reduced representative, computed by
distance-layer debt settling followed by iterated Dhar burning.
"""

from __future__ import annotations

from .errors import MissingVertexError, UnboundVertexError
from .graphs import MultiGraph


class Divisor:
    """Sparse integer vector on the vertices of a bound MultiGraph.

    Coefficients are arbitrary-precision; absent vertices are zero.
    Instances are immutable and support +, -, and integer scaling.
    """

    __slots__ = ("graph", "_coeffs")

    def __init__(self, graph: MultiGraph, coeffs=None):
        object.__setattr__(self, "graph", graph)
        clean = {}
        if coeffs:
            for label, value in coeffs.items():
                if not graph.has_vertex(label):
                    raise UnboundVertexError(f"vertex {label!r} not in graph")
                value = int(value)
                if value != 0:
                    clean[label] = value
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    def __getitem__(self, label):
        if not self.graph.has_vertex(label):
            raise UnboundVertexError(f"vertex {label!r} not in graph")
        return self._coeffs.get(label, 0)

    def items(self):
        """Nonzero (label, coefficient) pairs in canonical vertex order."""
        return [
            (v, self._coeffs[v]) for v in self.graph.vertices if v in self._coeffs
        ]

    @property
    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def _same_graph(self, other):
        if self.graph is not other.graph and self.graph != other.graph:
            raise UnboundVertexError("divisors bound to different graphs")

    def __add__(self, other):
        self._same_graph(other)
        coeffs = dict(self._coeffs)
        for v, c in other._coeffs.items():
            coeffs[v] = coeffs.get(v, 0) + c
        return Divisor(self.graph, coeffs)

    def __sub__(self, other):
        self._same_graph(other)
        coeffs = dict(self._coeffs)
        for v, c in other._coeffs.items():
            coeffs[v] = coeffs.get(v, 0) - c
        return Divisor(self.graph, coeffs)

    def __neg__(self):
        return Divisor(self.graph, {v: -c for v, c in self._coeffs.items()})

    def __rmul__(self, k):
        return Divisor(self.graph, {v: int(k) * c for v, c in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.graph == other.graph and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((id(self.graph), tuple(sorted(self._coeffs.items()))))

    def __repr__(self):
        if not self._coeffs:
            return "Divisor(0)"
        parts = [f"{c}({v})" for v, c in self.items()]
        return "Divisor(" + " + ".join(parts) + ")"

    def to_json_dict(self):
        return dict(self.items())

    def to_vector(self):
        """Dense coefficient list in canonical vertex order."""
        return [self._coeffs.get(v, 0) for v in self.graph.vertices]

    @classmethod
    def from_vector(cls, graph, vec):
        return cls(graph, {graph.vertices[i]: c for i, c in enumerate(vec) if c})


def divisor_of_vertex(graph: MultiGraph, label, coeff=1) -> Divisor:
    return Divisor(graph, {label: coeff})


def zero_divisor(graph: MultiGraph) -> Divisor:
    return Divisor(graph, {})


# -- Laplacian ---------------------------------------------------------------


def laplacian_apply(g: MultiGraph, f) -> Divisor:
    """Apply the Laplacian to an integer vertex function.

    f maps every vertex label to an integer; the result sums
    (f(v) - f(w)) over all edge ends at v and always has degree zero.
    """
    for v in g.vertices:
        if v not in f:
            raise MissingVertexError(f"function missing vertex {v!r}")
    adj = g.adjacency()
    vals = [int(f[v]) for v in g.vertices]
    coeffs = {}
    for i, v in enumerate(g.vertices):
        total = 0
        for j, mult in adj[i]:
            total += mult * (vals[i] - vals[j])
        if total:
            coeffs[v] = total
    return Divisor(g, coeffs)


# -- q-reduction (hot path: plain int lists, no Divisor objects) -------------


def _settle_debts(g: MultiGraph, vec, q):
    """Make vec nonnegative away from q by one far-to-near pass over BFS layers.

    For each distance layer, un-fires the set of all vertices at that
    distance or farther (a set-firing of its complement, which contains q)
    as many times as the most indebted layer member needs. Later layers are
    never touched again, so a single pass suffices.
    """
    dist, layers = g.distance_layers(q)
    adj = g.adjacency()
    for depth in range(len(layers) - 1, 0, -1):
        t = 0
        for i in layers[depth]:
            if vec[i] < 0:
                gain = 0
                for j, mult in adj[i]:
                    if dist[j] == depth - 1:
                        gain += mult
                need = (-vec[i] + gain - 1) // gain  # ceil(-vec[i]/gain); gain >= 1 by BFS
                if need > t:
                    t = need
        if t:
            for i in layers[depth]:
                for j, mult in adj[i]:
                    if dist[j] == depth - 1:
                        vec[i] += t * mult
                        vec[j] -= t * mult


def _dhar_unburnt(adj, vec, q, n):
    """One Dhar burning pass from q; returns (unburnt set, threat array).

    threat[v] counts edges from v into the burnt region; v burns as soon as
    threat[v] exceeds vec[v]. Burning is a monotone closure, so the worklist
    order cannot change the result.
    """
    burnt = bytearray(n)
    burnt[q] = 1
    threat = [0] * n
    stack = [q]
    while stack:
        u = stack.pop()
        for j, mult in adj[u]:
            if not burnt[j]:
                threat[j] += mult
                if threat[j] > vec[j]:
                    burnt[j] = 1
                    stack.append(j)
    unburnt = [v for v in range(n) if not burnt[v]]
    return unburnt, threat


def reduce_vector(g: MultiGraph, vec, q=0):
    """q-reduce a dense coefficient list in place and return it."""
    n = len(g.vertices)
    if n == 1:
        return vec
    _settle_debts(g, vec, q)
    adj = g.adjacency()
    while True:
        unburnt, threat = _dhar_unburnt(adj, vec, q, n)
        if not unburnt:
            return vec
        # Fire the whole unburnt set the largest number of times that keeps
        # it nonnegative; legal because threat[v] <= vec[v] on the set.
        t = min(vec[v] // threat[v] for v in unburnt if threat[v] > 0)
        if t < 1:
            t = 1
        inside = [False] * n
        for v in unburnt:
            inside[v] = True
        for v in unburnt:
            for j, mult in adj[v]:
                if not inside[j]:
                    vec[v] -= t * mult
                    vec[j] += t * mult


def burn_order(g: MultiGraph, vec, q=0):
    """Dhar burn order of a q-reduced vector: q first, then one vertex at a time.

    Each burned vertex has more edges to earlier-burned vertices than chips,
    which is exactly the inequality the ordering certificate needs.
    """
    n = len(g.vertices)
    adj = g.adjacency()
    burnt = [False] * n
    burnt[q] = True
    order = [q]
    threat = [0] * n
    for j, mult in adj[q]:
        threat[j] += mult
    while len(order) < n:
        for v in range(n):
            if not burnt[v] and threat[v] > vec[v]:
                burnt[v] = True
                order.append(v)
                for j, mult in adj[v]:
                    if not burnt[j]:
                        threat[j] += mult
                break
        else:
            raise AssertionError("vector is not q-reduced: burning stalled")
    return order


def q_reduce(g: MultiGraph, d: Divisor, q) -> Divisor:
    """The unique divisor equivalent to d that is q-reduced.

    Nonnegative away from q, and no nonempty vertex set avoiding q can fire
    without driving one of its members negative.
    """
    qi = g.index(q)
    vec = d.to_vector()
    reduce_vector(g, vec, qi)
    return Divisor.from_vector(g, vec)


def is_q_reduced(g: MultiGraph, d: Divisor, q) -> bool:
    qi = g.index(q)
    vec = d.to_vector()
    if any(vec[i] < 0 for i in range(len(vec)) if i != qi):
        return False
    unburnt, _ = _dhar_unburnt(g.adjacency(), vec, qi, len(vec))
    return not unburnt


def is_equivalent(g: MultiGraph, d1: Divisor, d2: Divisor) -> bool:
    """Linear equivalence: equal degree and equal q-reduction at the first vertex."""
    if d1.degree != d2.degree:
        return False
    v1 = d1.to_vector()
    v2 = d2.to_vector()
    if v1 == v2:
        return True
    reduce_vector(g, v1, 0)
    reduce_vector(g, v2, 0)
    return v1 == v2


def is_winnable(g: MultiGraph, d: Divisor) -> bool:
    """True iff d is equivalent to an effective divisor."""
    vec = d.to_vector()
    reduce_vector(g, vec, 0)
    return vec[0] >= 0


def canonical_divisor(g: MultiGraph) -> Divisor:
    """Coefficient deg(v) - 2 at every vertex; degree 2*genus - 2."""
    degs = g.degrees()
    return Divisor(
        g, {v: degs[i] - 2 for i, v in enumerate(g.vertices) if degs[i] != 2}
    )
