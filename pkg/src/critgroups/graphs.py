"""Multigraphs, arithmetical structures, and the star-clique reduction.

An arithmetical structure on a connected loopless multigraph G assigns to
each vertex i a nonnegative integer d[i] and a positive integer r[i] such
that

    d[i] * r[i] == sum over j of mult[i][j] * r[j]      for every i,

with gcd of all r[i] equal to 1.  Equivalently (diag(d) - A) r = 0 for the
adjacency matrix A of multiplicities.  The matrix L = diag(d) - A plays
the role of a generalized Laplacian; its Smith normal form yields the
critical group of the structure.

The star-clique reduction removes one vertex v: every pair of neighbors
of v gets new parallel edges routed through v, all other multiplicities
are scaled by d[v], and the r-vector is rescaled to be primitive again.
It generalizes the classical smoothing of a degree-two vertex and works
at any vertex with any d value.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd

from .linalg import IntegerMatrix, chio_condense, smith_normal_form


class GraphError(ValueError):
    """A multigraph invariant (shape, symmetry, looplessness, connectivity) fails."""


class StructureError(ValueError):
    """An arithmetical-structure invariant fails."""


@dataclass(frozen=True)
class Multigraph:
    """Connected loopless multigraph given by its symmetric multiplicity matrix.

    ``mult[i][j]`` is the number of parallel edges between vertices i and
    j (0-based).  A single vertex with no edges is the one permitted
    trivial graph.
    """

    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.mult)
        if n == 0:
            raise GraphError("graph needs at least one vertex")
        for i, row in enumerate(self.mult):
            if len(row) != n:
                raise GraphError("multiplicity matrix must be square")
            if row[i] != 0:
                raise GraphError(f"loop at vertex {i}: multiplicity matrix diagonal must be zero")
            for j, x in enumerate(row):
                if not isinstance(x, int):
                    raise GraphError("multiplicities must be integers")
                if x < 0:
                    raise GraphError(f"negative multiplicity at ({i}, {j})")
                if x != self.mult[j][i]:
                    raise GraphError(f"multiplicity matrix not symmetric at ({i}, {j})")
        if not self._connected():
            raise GraphError("graph must be connected")

    def _connected(self) -> bool:
        n = len(self.mult)
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j, x in enumerate(self.mult[i]):
                if x > 0 and not seen[j]:
                    seen[j] = True
                    queue.append(j)
        return all(seen)

    @classmethod
    def from_edges(cls, n: int, edges) -> Multigraph:
        """Build from (i, j, multiplicity) triples with 0-based endpoints.

        Multiplicities of repeated pairs are summed; (i, j) and (j, i)
        name the same undirected edge.
        """
        mult = [[0] * n for _ in range(n)]
        for i, j, m in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge endpoint out of range: ({i}, {j})")
            if i == j:
                raise GraphError(f"loop at vertex {i} not allowed")
            if m < 1:
                raise GraphError(f"edge multiplicity must be positive, got {m}")
            mult[i][j] += m
            mult[j][i] += m
        return cls(tuple(tuple(row) for row in mult))

    @classmethod
    def path(cls, n: int) -> Multigraph:
        return cls.from_edges(n, [(i, i + 1, 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Multigraph:
        if n < 3:
            raise GraphError("cycle needs at least three vertices")
        return cls.from_edges(n, [(i, (i + 1) % n, 1) for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.mult)

    def degree(self, i: int) -> int:
        return sum(self.mult[i])

    def edge_list(self) -> list[tuple[int, int, int]]:
        """Sorted (i, j, multiplicity) triples with i < j, 0-based."""
        return [
            (i, j, self.mult[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.mult[i][j] > 0
        ]


@dataclass(frozen=True)
class ArithmeticalStructure:
    """A (d, r) pair; the graph-independent invariants are enforced here.

    d entries must be nonnegative, r entries positive with gcd 1.  Whether
    (d, r) actually satisfies the vertex equations of a particular graph
    is checked by :func:`validate_structure`.
    """

    d: tuple[int, ...]
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.d) != len(self.r) or not self.d:
            raise StructureError("d and r must be nonempty vectors of equal length")
        if any(not isinstance(x, int) or x < 0 for x in self.d):
            raise StructureError("d entries must be nonnegative integers")
        if any(not isinstance(x, int) or x < 1 for x in self.r):
            raise StructureError("r entries must be positive integers")
        if gcd(*self.r) != 1:
            raise StructureError(f"r must be primitive, gcd is {gcd(*self.r)}")

    @property
    def n(self) -> int:
        return len(self.d)


@dataclass(frozen=True)
class StructureViolation:
    """Why a candidate (d, r) is not an arithmetical structure.

    ``vertex`` is the 0-based failing vertex, or None for a failure of
    the global gcd condition.
    """

    vertex: int | None
    message: str


@dataclass(frozen=True)
class CriticalGroup:
    """Invariant-factor decomposition of the critical group."""

    invariant_factors: tuple[int, ...]
    order: int

    def describe(self) -> str:
        nontrivial = [f for f in self.invariant_factors if f != 1]
        if not nontrivial:
            return "trivial"
        return " x ".join(f"Z/{f}" for f in nontrivial)


@dataclass(frozen=True)
class ReductionResult:
    """Output of :func:`star_clique_reduction`.

    ``r_divisor`` is the gcd the surviving r entries were divided by to
    make the new r primitive.
    """

    graph: Multigraph
    structure: ArithmeticalStructure
    vertex: int
    r_divisor: int


def validate_structure(g: Multigraph, d, r) -> StructureViolation | None:
    """Check whether (d, r) is an arithmetical structure on g.

    Returns None if valid, otherwise a report for the first violation
    found (scanning r positivity, d nonnegativity, the per-vertex
    equations, then the gcd condition).
    """
    d = tuple(d)
    r = tuple(r)
    if len(d) != g.n or len(r) != g.n:
        raise ValueError(f"expected vectors of length {g.n}, got d:{len(d)} r:{len(r)}")
    for i, x in enumerate(r):
        if not isinstance(x, int) or x < 1:
            return StructureViolation(i, f"r[{i}] = {x!r} is not a positive integer")
    for i, x in enumerate(d):
        if not isinstance(x, int) or x < 0:
            return StructureViolation(i, f"d[{i}] = {x!r} is not a nonnegative integer")
    for i in range(g.n):
        lhs = d[i] * r[i]
        rhs = sum(m * r[j] for j, m in enumerate(g.mult[i]))
        if lhs != rhs:
            return StructureViolation(
                i, f"vertex {i}: d[{i}]*r[{i}] = {lhs} but neighbors sum to {rhs}"
            )
    g_all = gcd(*r)
    if g_all != 1:
        return StructureViolation(None, f"gcd(r) = {g_all}, expected 1")
    return None


def laplacian_structure(g: Multigraph) -> ArithmeticalStructure:
    """The Laplacian structure: d = vertex degrees, r = all ones."""
    return ArithmeticalStructure(
        tuple(g.degree(i) for i in range(g.n)), tuple(1 for _ in range(g.n))
    )


def structure_matrix(g: Multigraph, s: ArithmeticalStructure, last_vertex: int | None = None) -> IntegerMatrix:
    """The matrix L = diag(d) - A of a valid structure.

    With ``last_vertex=v`` the rows and columns are reordered so that
    vertex v comes last while all other vertices keep their relative
    order; this is the labeling under which the corner minors D_k* refer
    to v.
    """
    violation = validate_structure(g, s.d, s.r)
    if violation is not None:
        raise StructureError(violation.message)
    order = list(range(g.n))
    if last_vertex is not None:
        if not 0 <= last_vertex < g.n:
            raise IndexError(f"vertex {last_vertex} out of range")
        order = [i for i in order if i != last_vertex] + [last_vertex]
    return IntegerMatrix(
        tuple(tuple(s.d[i] if i == j else -g.mult[i][j] for j in order) for i in order)
    )


def critical_group(g: Multigraph, s: ArithmeticalStructure) -> CriticalGroup:
    """Critical group from the Smith normal form of L = diag(d) - A.

    L always has rank n - 1, so the group is the product of Z/a for the
    first n - 1 invariant factors; its order is the gcd of the (n-1) x
    (n-1) minors of L.
    """
    snf = smith_normal_form(structure_matrix(g, s))
    if snf.rank != g.n - 1:
        raise ArithmeticError(
            f"L has Smith rank {snf.rank}, expected {g.n - 1}; "
            "this contradicts the structure equations"
        )
    factors = snf.diag[: g.n - 1]
    order = 1
    for f in factors:
        order *= f
    return CriticalGroup(factors, order)


def star_clique_reduction(g: Multigraph, s: ArithmeticalStructure, v: int) -> ReductionResult:
    """Remove vertex v, rerouting its star through new clique edges.

    For surviving vertices i != j (in their original relative order):

        mult'[i][j] = mult[i][j] * d[v] + mult[i][v] * mult[v][j]
        d'[i]       = d[i] * d[v] - mult[i][v] ** 2
        r'[i]       = r[i] / gcd of surviving r entries

    The output is again a valid arithmetical structure; its matrix L' is
    exactly the condensation of L on the corner entry d[v] (see
    :func:`operation_matrix_consistency`).
    """
    n = g.n
    if n < 2:
        raise GraphError("reduction needs at least two vertices")
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range 0..{n - 1}")
    violation = validate_structure(g, s.d, s.r)
    if violation is not None:
        raise StructureError(violation.message)
    mult = g.mult
    dv = s.d[v]
    others = [i for i in range(n) if i != v]
    new_mult = tuple(
        tuple(
            0 if i == j else mult[i][j] * dv + mult[i][v] * mult[v][j]
            for j in others
        )
        for i in others
    )
    new_d = tuple(s.d[i] * dv - mult[i][v] * mult[v][i] for i in others)
    divisor = gcd(*(s.r[i] for i in others))
    new_r = tuple(s.r[i] // divisor for i in others)
    try:
        new_graph = Multigraph(new_mult)
    except GraphError as exc:
        raise GraphError(
            f"reduction at vertex {v} produced an invalid graph ({exc}); "
            f"input mult={g.mult}, d={s.d}, r={s.r}"
        ) from exc
    new_structure = ArithmeticalStructure(new_d, new_r)
    violation = validate_structure(new_graph, new_d, new_r)
    if violation is not None:
        raise ArithmeticError(
            f"reduction at vertex {v} produced an invalid structure: {violation.message}; "
            f"input mult={g.mult}, d={s.d}, r={s.r}"
        )
    return ReductionResult(new_graph, new_structure, v, divisor)


def operation_matrix_consistency(g: Multigraph, s: ArithmeticalStructure, v: int) -> bool:
    """True when L' of the reduced structure equals the condensation of L.

    Both sides are computed independently (one through the graph formulas,
    one through 2 x 2 corner minors of L with v moved last); a mismatch
    would mean an implementation bug, never bad input.
    """
    reduced = star_clique_reduction(g, s, v)
    lhs = structure_matrix(reduced.graph, reduced.structure)
    rhs = chio_condense(structure_matrix(g, s, last_vertex=v))
    return lhs == rhs
