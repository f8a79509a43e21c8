"""Exact integer linear algebra over arbitrary-precision integers.

Everything in this module is exact: matrices hold Python ints, so there is
no overflow and no floating point anywhere.  The primitives are the ones
needed to study integer matrices up to unimodular equivalence:

* determinants (fraction-free Bareiss elimination),
* minors and GCDs of k x k minors ("determinantal divisors" D_k),
* the corner variant D_k* restricted to minors that use the last row and
  last column,
* Chio pivotal condensation and the Desnanot-Jacobi identity,
* Smith normal form diagonals.

Indices are 0-based throughout.  A "minor" here is the (unsigned)
determinant of the submatrix selected by a row set and a column set of
equal size; no cofactor sign is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable dense matrix of Python ints (at least 1 x 1)."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows: all rows must have equal length")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows) -> IntegerMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(tuple(zip(*self.entries)))

    def submatrix(self, row_idx, col_idx) -> IntegerMatrix:
        """Submatrix selected by iterables of 0-based row/column indices."""
        ri = tuple(row_idx)
        ci = tuple(col_idx)
        if not ri or not ci:
            raise ValueError("submatrix needs at least one row and one column")
        for i in ri:
            if not 0 <= i < self.rows:
                raise IndexError(f"row index {i} out of range")
        for j in ci:
            if not 0 <= j < self.cols:
                raise IndexError(f"column index {j} out of range")
        return IntegerMatrix(tuple(tuple(self.entries[i][j] for j in ci) for i in ri))

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(
            "[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self.entries
        )


@dataclass(frozen=True)
class MinorSpec:
    """A choice of k row indices and k column indices, strictly increasing."""

    row_set: tuple[int, ...]
    col_set: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.row_set) != len(self.col_set):
            raise ValueError("row set and column set must have equal size")
        if not self.row_set:
            raise ValueError("minor needs at least one row and one column")
        for seq in (self.row_set, self.col_set):
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise ValueError("index sets must be strictly increasing")
            if seq[0] < 0:
                raise IndexError("indices must be nonnegative")

    @property
    def size(self) -> int:
        return len(self.row_set)


@dataclass(frozen=True)
class SnfResult:
    """Diagonal of the Smith normal form, padded with zeros to full length.

    ``diag[i] > 0`` and ``diag[i] | diag[i+1]`` for i < rank; all later
    entries are 0.  Transform matrices are not tracked.
    """

    diag: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class MinorGcdProfile:
    """All determinantal-divisor data of one matrix in a single bundle.

    ``dk[k]`` is the GCD of all k x k minors for k = 0..min(rows, cols),
    with dk[0] = 1 by convention.  ``dk_star[k-1]`` is the GCD of the
    k x k minors whose rows include the last row and whose columns include
    the last column, for k = 1..min(rows, cols).  ``row_gcds[i]`` and
    ``col_gcds[j]`` are entry GCDs of single rows/columns.
    """

    dk: tuple[int, ...]
    dk_star: tuple[int, ...]
    row_gcds: tuple[int, ...]
    col_gcds: tuple[int, ...]


# ---------------------------------------------------------------------------
# determinants


def _det_lists(a: list[list[int]]) -> int:
    """Determinant of a small list-of-lists matrix (mutates its argument)."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        (a11, a12, a13), (a21, a22, a23), (a31, a32, a33) = a
        return (
            a11 * (a22 * a33 - a23 * a32)
            - a12 * (a21 * a33 - a23 * a31)
            + a13 * (a21 * a32 - a22 * a31)
        )
    # Bareiss fraction-free elimination: every division below is exact, so
    # the result is the exact integer determinant.
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = a[k]
        pivot = pivot_row[k]
        for i in range(k + 1, n):
            row = a[i]
            factor = row[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pivot - factor * pivot_row[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant of a square matrix."""
    if not m.is_square:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    return _det_lists([list(row) for row in m.entries])


def _minor_det(entries, row_set, col_set) -> int:
    """Determinant of the submatrix selected by the given index tuples."""
    k = len(row_set)
    if k == 1:
        return entries[row_set[0]][col_set[0]]
    if k == 2:
        r0 = entries[row_set[0]]
        r1 = entries[row_set[1]]
        j0, j1 = col_set
        return r0[j0] * r1[j1] - r0[j1] * r1[j0]
    return _det_lists([[entries[i][j] for j in col_set] for i in row_set])


def minor(m: IntegerMatrix, spec: MinorSpec) -> int:
    """Unsigned minor: the determinant of the selected square submatrix."""
    if spec.row_set[-1] >= m.rows or spec.col_set[-1] >= m.cols:
        raise IndexError("minor index sets exceed matrix dimensions")
    return _minor_det(m.entries, spec.row_set, spec.col_set)


# ---------------------------------------------------------------------------
# GCDs of minors


def row_gcd(m: IntegerMatrix, i: int) -> int:
    """GCD of the entries of row i (nonnegative; 0 for an all-zero row)."""
    if not 0 <= i < m.rows:
        raise IndexError(f"row index {i} out of range")
    g = 0
    for x in m.entries[i]:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _column_gcd(entries, j: int) -> int:
    g = 0
    for row in entries:
        g = gcd(g, row[j])
        if g == 1:
            break
    return g


def minor_gcd_all(m: IntegerMatrix, k: int) -> int:
    """GCD of all k x k minors (the k-th determinantal divisor D_k).

    D_0 = 1 by the empty-minor convention.  The scan over index pairs is
    lexicographic and stops as soon as the running GCD reaches 1.  Returns
    0 exactly when every k x k minor vanishes.
    """
    size = min(m.rows, m.cols)
    if not 0 <= k <= size:
        raise ValueError(f"k={k} out of range 0..{size}")
    if k == 0:
        return 1
    entries = m.entries
    g = 0
    col_sets = tuple(combinations(range(m.cols), k))
    for ri in combinations(range(m.rows), k):
        for ci in col_sets:
            g = gcd(g, _minor_det(entries, ri, ci))
            if g == 1:
                return 1
    return g


def minor_gcd_corner(m: IntegerMatrix, k: int) -> int:
    """GCD of the k x k minors using the last row and last column (D_k*).

    k = 0 is invalid: there is no empty minor containing the corner.
    """
    size = min(m.rows, m.cols)
    if not 1 <= k <= size:
        raise ValueError(f"k={k} out of range 1..{size}")
    entries = m.entries
    last_r = m.rows - 1
    last_c = m.cols - 1
    g = 0
    col_sets = tuple(ci + (last_c,) for ci in combinations(range(last_c), k - 1))
    for ri_head in combinations(range(last_r), k - 1):
        ri = ri_head + (last_r,)
        for ci in col_sets:
            g = gcd(g, _minor_det(entries, ri, ci))
            if g == 1:
                return 1
    return g


def minor_gcd_profile(m: IntegerMatrix) -> MinorGcdProfile:
    """Compute dk, dk_star and the row/column GCDs of one matrix.

    Once D_k = 0 every larger minor vanishes too, so the dk scan stops
    early; the dk_star values do not inherit zeros that way and are each
    computed outright.
    """
    size = min(m.rows, m.cols)
    dk = [1]
    for k in range(1, size + 1):
        if dk[-1] == 0:
            dk.append(0)
            continue
        dk.append(minor_gcd_all(m, k))
    dk_star = [minor_gcd_corner(m, k) for k in range(1, size + 1)]
    row_gcds = tuple(row_gcd(m, i) for i in range(m.rows))
    col_gcds = tuple(_column_gcd(m.entries, j) for j in range(m.cols))
    return MinorGcdProfile(tuple(dk), tuple(dk_star), row_gcds, col_gcds)


# ---------------------------------------------------------------------------
# condensation identities


def chio_condense(m: IntegerMatrix) -> IntegerMatrix:
    """Chio pivotal condensation on the last diagonal entry.

    The result B' is (n-1) x (n-1) with entries
    ``b[i][j] * b[n-1][n-1] - b[i][n-1] * b[n-1][j]`` (the 2 x 2 corner
    minors of B), and satisfies det(B') = b[n-1][n-1]**(n-2) * det(B).
    """
    if not m.is_square:
        raise ValueError(f"condensation needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n < 2:
        raise ValueError("condensation needs at least a 2x2 matrix")
    e = m.entries
    last = e[n - 1]
    corner = last[n - 1]
    return IntegerMatrix(
        tuple(
            tuple(e[i][j] * corner - e[i][n - 1] * last[j] for j in range(n - 1))
            for i in range(n - 1)
        )
    )


def _first_minor(entries, n: int, i: int, j: int) -> int:
    rows = tuple(r for r in range(n) if r != i)
    cols = tuple(c for c in range(n) if c != j)
    if not rows:
        return 1
    return _minor_det(entries, rows, cols)


def desnanot_jacobi_residual(m: IntegerMatrix, i1: int, i2: int, j1: int, j2: int) -> int:
    """Residual of the Desnanot-Jacobi identity; identically 0 for ints.

    With M[i,j] the unsigned first minor deleting row i and column j, and
    C the central minor deleting both rows i1 < i2 and columns j1 < j2
    (the empty central minor of a 2x2 matrix counts as 1), the residual is

        C * det(m) - (M[i1,j1] * M[i2,j2] - M[i1,j2] * M[i2,j1])
    """
    if not m.is_square:
        raise ValueError(f"identity needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n < 2:
        raise ValueError("identity needs at least a 2x2 matrix")
    if not (0 <= i1 < i2 < n and 0 <= j1 < j2 < n):
        raise IndexError("need 0 <= i1 < i2 < n and 0 <= j1 < j2 < n")
    entries = m.entries
    rows = tuple(r for r in range(n) if r not in (i1, i2))
    cols = tuple(c for c in range(n) if c not in (j1, j2))
    central = _minor_det(entries, rows, cols) if rows else 1
    lhs = central * determinant(m)
    rhs = _first_minor(entries, n, i1, j1) * _first_minor(entries, n, i2, j2) - _first_minor(
        entries, n, i1, j2
    ) * _first_minor(entries, n, i2, j1)
    return lhs - rhs


# ---------------------------------------------------------------------------
# Smith normal form


def _fold_divisibility(diag: list[int]) -> list[int]:
    """Repair a positive diagonal into a divisibility chain.

    diag(a, b) is unimodularly equivalent to diag(gcd(a, b), lcm(a, b)),
    so pairwise folding preserves the equivalence class; at the fixpoint
    every entry divides the next, which is the Smith condition.
    """
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                g = gcd(a, b)
                if g == a:
                    continue
                diag[i] = g
                diag[j] = a * b // g
                changed = True
    return diag


def smith_normal_form(m: IntegerMatrix) -> SnfResult:
    """Smith normal form diagonal of an integer matrix.

    Pivoting picks the nonzero entry of minimum absolute value in the
    working submatrix; row/column reductions strictly shrink that minimum,
    so the elimination terminates.  The diagonal is then normalized to a
    positive divisibility chain.
    """
    a = [list(row) for row in m.entries]
    rows, cols = m.rows, m.cols
    size = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < size:
        best = None
        best_abs = 0
        for i in range(t, rows):
            ai = a[i]
            for j in range(t, cols):
                v = ai[j]
                if v != 0 and (best is None or -best_abs < v < best_abs):
                    best = (i, j)
                    best_abs = abs(v)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        while True:
            pivot = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    row, prow = a[i], a[t]
                    for j in range(t, cols):
                        row[j] -= q * prow[j]
                if a[i][t] != 0:
                    # remainder smaller than the pivot: promote it and retry
                    a[t], a[i] = a[i], a[t]
                    clean = False
                    break
            if not clean:
                continue
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    clean = False
                    break
            if clean:
                break
        diag.append(abs(a[t][t]))
        t += 1
    _fold_divisibility(diag)
    rank = len(diag)
    diag.extend([0] * (size - rank))
    return SnfResult(tuple(diag), rank)
