"""Linear-system queries built on the rank engine.

Degree-minimal systems of given rank, gonality, hyperellipticity,
Weierstrass points and gap sequences. Searches enumerate one q-reduced
representative per divisor class: the part away from the base vertex
ranges over superstable configurations, which are closed downward, so the
enumeration prunes by a single burning test per extension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import MultiGraph, genus
from .divisors import Divisor, _dhar_unburnt
from .rank import _Session, _rank_geq, _rank_reduced


@dataclass(frozen=True)
class GrdWitness:
    """A divisor realizing a linear system of the recorded degree and rank."""

    divisor: Divisor
    degree: int
    rank: int


def superstable_configs(g: MultiGraph, max_size=None):
    """Yield all superstable configurations as dense tuples (base entry 0).

    A configuration is superstable when burning from the base vertex
    consumes the whole graph. Subconfigurations of superstable ones are
    superstable, so a failed extension cuts its branch.
    """
    n = len(g.vertices)
    adj = g.adjacency()
    degs = g.degrees()
    if max_size is None:
        max_size = sum(degs[i] - 1 for i in range(1, n))
    vec = [0] * n

    def extend(pos, remaining):
        if pos == n:
            yield tuple(vec)
            return
        yield from extend(pos + 1, remaining)  # zero needs no new check
        cap = min(degs[pos] - 1, remaining)
        for val in range(1, cap + 1):
            vec[pos] = val
            unburnt, _ = _dhar_unburnt(adj, vec, 0, n)
            if unburnt:
                break  # larger values fail too
            yield from extend(pos + 1, remaining - val)
        vec[pos] = 0

    yield from extend(1, max_size)


def _witness_at_degree(sess, g, r, d):
    """Some divisor class of degree exactly d with rank >= r, or None.

    Whether such a class exists is monotone in d: adding chips at the base
    vertex never lowers rank.
    """
    for config in superstable_configs(g, max_size=d):
        vec = list(config)
        vec[0] = d - sum(config)
        red = tuple(vec)  # superstable away from base: already reduced
        if _rank_geq(sess, red, r):
            exact = _rank_reduced(sess, red)
            return GrdWitness(
                divisor=Divisor.from_vector(g, vec), degree=d, rank=exact
            )
    return None


def exists_grd_witness(g: MultiGraph, r: int, d: int):
    """A witness of degree exactly d and rank >= r if one exists, else None."""
    if r < 0 or d < 0:
        raise ValueError("rank and degree must be nonnegative")
    return _witness_at_degree(_Session(g), g, r, d)


def min_degree_grd(g: MultiGraph, r: int, d_max: int):
    """The minimal-degree linear system of rank exactly r, searching d <= d_max.

    Every divisor class of each candidate degree is visited once through
    its reduced representative; at the minimal degree any witness has rank
    exactly r, since otherwise removing well-chosen vertices would produce
    a smaller witness.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    sess = _Session(g)
    for d in range(max(r, 1), d_max + 1):
        witness = _witness_at_degree(sess, g, r, d)
        if witness is not None:
            if witness.rank != r:
                raise AssertionError(
                    f"minimal-degree witness has rank {witness.rank}, expected {r}"
                )
            return witness
    return None


def rank_degree_floor(graph_genus: int, r: int) -> int:
    """Least degree any rank-r divisor can have on a genus-g graph.

    Either the divisor is nonspecial (degree g + r) or Clifford's bound
    r <= deg/2 applies, and the special route only exists for r <= g - 1.
    """
    if r <= graph_genus - 1:
        return min(graph_genus + r, 2 * r)
    return graph_genus + r


def gonality(g: MultiGraph) -> int:
    """Least degree of a rank-1 system; at most genus+1, which bounds the search."""
    witness = min_degree_grd(g, 1, genus(g) + 1)
    if witness is None:
        raise AssertionError("no rank-1 divisor of degree <= genus+1; engine broken")
    return witness.degree


def is_hyperelliptic(g: MultiGraph) -> bool:
    """Genus at least 2 and a degree-2 rank-1 system."""
    return genus(g) >= 2 and gonality(g) == 2


def weierstrass_points(g: MultiGraph):
    """Vertices P with rank(genus * (P)) >= 1, in canonical order."""
    gg = genus(g)
    sess = _Session(g)
    found = []
    for i, label in enumerate(g.vertices):
        vec = [0] * len(g.vertices)
        vec[i] = gg
        red = sess.reduced(tuple(vec))
        if _rank_geq(sess, red, 1):
            found.append(label)
    return tuple(found)


def gap_sequence(g: MultiGraph, p):
    """Sorted Weierstrass gaps of p: the k in [1, 2g-1] where the rank of
    k*(p) does not grow; there are always exactly genus of them."""
    gg = genus(g)
    if gg < 1:
        raise ValueError("gap sequences need genus >= 1")
    pi = g.index(p)
    sess = _Session(g)
    n = len(g.vertices)
    ranks = []
    for k in range(0, 2 * gg):
        vec = [0] * n
        vec[pi] = k
        ranks.append(_rank_reduced(sess, sess.reduced(tuple(vec))))
    gaps = [k for k in range(1, 2 * gg) if ranks[k] == ranks[k - 1]]
    if len(gaps) != gg:
        raise AssertionError(
            f"gap count {len(gaps)} != genus {gg}; the rank engine is broken"
        )
    return gaps


def is_residual_tree_vertex(g: MultiGraph, v) -> bool:
    """True when deleting v and its edges leaves a tree (so v is never a
    Weierstrass point)."""
    if genus(g) < 2:
        raise ValueError("residual-tree criterion needs genus >= 2")
    vi = g.index(v)
    n = len(g.vertices)
    keep = [i for i in range(n) if i != vi]
    edges = [
        (g.index(a), g.index(b))
        for a, b in g.edges
        if g.index(a) != vi and g.index(b) != vi
    ]
    if len(edges) != len(keep) - 1:
        return False
    parent = {i: i for i in keep}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False  # cycle
        parent[ra] = rb
    roots = {find(i) for i in keep}
    return len(roots) == 1
