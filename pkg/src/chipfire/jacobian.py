"""Integer linear algebra over the graph Laplacian.

Jacobian group structure via Smith normal form, spanning-tree counts via a
fraction-free determinant, and class coordinates used as an equivalence
oracle independent of the chip-firing machinery. Everything is exact
arbitrary-precision integer arithmetic; matrices here are desk-scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonzeroDegreeError
from .graphs import MultiGraph
from .divisors import Divisor


def reduced_laplacian(g: MultiGraph, q):
    """Laplacian matrix with the row and column of q deleted.

    Diagonal entries are vertex degrees, off-diagonal entries are minus the
    edge multiplicities; rows/columns follow canonical vertex order with q
    skipped.
    """
    qi = g.index(q)
    keep = [i for i in range(len(g.vertices)) if i != qi]
    adj = g.adjacency()
    degs = g.degrees()
    mult = [dict(adj[i]) for i in range(len(g.vertices))]
    return [
        [degs[i] if i == j else -mult[i].get(j, 0) for j in keep] for i in keep
    ]


def _bareiss_determinant(matrix):
    """Exact determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix):
    """Smith normal form with transforms: returns (U, S, V) with U*M*V = S.

    U and V are unimodular; S is diagonal with each entry dividing the next.
    Pivots are chosen by least absolute value, with exact integer
    elimination throughout.
    """
    s = [row[:] for row in matrix]
    n = len(s)
    cols = len(s[0]) if n else 0
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(a, b):
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def add_row(src, dst, factor):
        srow = s[src]
        drow = s[dst]
        for j in range(cols):
            drow[j] += factor * srow[j]
        urow_s = u[src]
        urow_d = u[dst]
        for j in range(n):
            urow_d[j] += factor * urow_s[j]

    def add_col(src, dst, factor):
        for row in s:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(a):
        s[a] = [-x for x in s[a]]
        u[a] = [-x for x in u[a]]

    for t in range(min(n, cols)):
        while True:
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, cols):
                    x = s[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(pi, t)
            if pj != t:
                swap_cols(pj, t)
            done = True
            for i in range(t + 1, n):
                if s[i][t] != 0:
                    add_row(t, i, -(s[i][t] // s[t][t]))
                    if s[i][t] != 0:
                        done = False
            for j in range(t + 1, cols):
                if s[t][j] != 0:
                    add_col(t, j, -(s[t][j] // s[t][t]))
                    if s[t][j] != 0:
                        done = False
            if not done:
                continue
            # Divisibility fix: fold any non-multiple into the pivot's column.
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, cols):
                    if s[i][j] % s[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if t < min(n, cols) and s[t][t] < 0:
            negate_row(t)

    diag = [s[i][i] for i in range(min(n, cols))]
    return u, diag, v


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant-factor form of a finite abelian group."""

    invariant_factors: tuple
    order: int

    @property
    def nontrivial_factors(self):
        """Factors greater than 1, for display."""
        return tuple(f for f in self.invariant_factors if f > 1)

    def describe(self) -> str:
        if not self.nontrivial_factors:
            return "trivial group"
        return " x ".join(f"Z/{f}" for f in self.nontrivial_factors)


def _snf_at_base(g: MultiGraph):
    """SNF of the reduced Laplacian at the canonical base vertex, cached.

    The transform is fixed at first use per graph so coordinates are
    reproducible within a session.
    """
    if g._snf_cache is None:
        matrix = reduced_laplacian(g, g.vertices[0])
        u, diag, v = smith_normal_form(matrix)
        object.__setattr__(g, "_snf_cache", (u, tuple(diag), v))
    return g._snf_cache


def jacobian_structure(g: MultiGraph) -> AbelianGroupStructure:
    """Invariant factors of the divisor class group Div0/Prin."""
    _, diag, _ = _snf_at_base(g)
    order = 1
    for d in diag:
        order *= d
    return AbelianGroupStructure(invariant_factors=tuple(diag), order=order)


def spanning_tree_count(g: MultiGraph) -> int:
    """Number of spanning trees, as the reduced-Laplacian determinant."""
    return _bareiss_determinant(reduced_laplacian(g, g.vertices[0]))


@dataclass(frozen=True)
class ClassCoordinates:
    """Coordinates of a degree-zero divisor class in the invariant-factor basis.

    The row transform pinning the basis is included so results can be
    reproduced; coordinates are all zero exactly when the divisor is
    principal.
    """

    coordinates: tuple
    invariant_factors: tuple
    row_transform: tuple

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coordinates)


def class_coordinates(g: MultiGraph, d: Divisor) -> ClassCoordinates:
    """Image of a degree-zero divisor in the invariant-factor decomposition."""
    if d.degree != 0:
        raise NonzeroDegreeError(
            f"class coordinates need degree 0, got {d.degree}"
        )
    u, diag, _ = _snf_at_base(g)
    vec = d.to_vector()[1:]  # drop the base vertex; degree 0 makes it redundant
    coords = []
    for i, factor in enumerate(diag):
        y = sum(u[i][j] * vec[j] for j in range(len(vec)))
        coords.append(y % factor)
    return ClassCoordinates(
        coordinates=tuple(coords),
        invariant_factors=tuple(diag),
        row_transform=tuple(tuple(row) for row in u),
    )
