"""Exact linear algebra over the rationals.

Vectors are sequences of Fraction (or int); matrices are sequences of rows.
Everything here is deterministic: no floating point, no randomized pivoting.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import PreconditionError

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def to_integer_row(row: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational row to a primitive integer row.

    The result has integer entries with gcd 1 and its first nonzero entry
    positive.  A zero row stays zero.
    """
    fracs = [Fraction(x) for x in row]
    denom_lcm = 1
    for x in fracs:
        d = x.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def _reduce_int_row(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


class RowSpace:
    """Incrementally built row space with exact integer echelon rows.

    Rows are kept primitive (integer entries, gcd 1) and in echelon order:
    pivot columns strictly increase down the stored list.  Elimination uses
    cross multiplication so no fractions ever appear.
    """

    def __init__(self, width: int) -> None:
        if width < 0:
            raise PreconditionError("row width must be nonnegative")
        self.width = width
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis_rows(self) -> list[tuple[Fraction, ...]]:
        """Current echelon rows as Fraction tuples (a basis of the span)."""
        return [tuple(Fraction(v) for v in row) for row in self._rows]

    def add(self, row: Sequence[Fraction | int]) -> bool:
        """Insert a row; return True iff it enlarged the span."""
        if len(row) != self.width:
            raise PreconditionError(
                f"row has length {len(row)}, expected {self.width}"
            )
        cur = list(to_integer_row(row))
        for stored, p in zip(self._rows, self._pivots):
            if cur[p] != 0:
                a, b = stored[p], cur[p]
                cur = [b_i * a - s_i * b for b_i, s_i in zip(cur, stored)]
                cur = _reduce_int_row(cur)
        pivot = next((i for i, v in enumerate(cur) if v != 0), None)
        if pivot is None:
            return False
        if cur[pivot] < 0:
            cur = [-v for v in cur]
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < pivot:
            pos += 1
        self._rows.insert(pos, cur)
        self._pivots.insert(pos, pivot)
        return True

    def contains(self, row: Sequence[Fraction | int]) -> bool:
        """True iff the row lies in the current span (span unchanged)."""
        if len(row) != self.width:
            raise PreconditionError(
                f"row has length {len(row)}, expected {self.width}"
            )
        cur = list(to_integer_row(row))
        for stored, p in zip(self._rows, self._pivots):
            if cur[p] != 0:
                a, b = stored[p], cur[p]
                cur = [b_i * a - s_i * b for b_i, s_i in zip(cur, stored)]
                cur = _reduce_int_row(cur)
        return all(v == 0 for v in cur)

    def extend(self, rows: Iterable[Sequence[Fraction | int]]) -> int:
        """Add many rows; return how many of them enlarged the span."""
        added = 0
        for row in rows:
            if self.add(row):
                added += 1
        return added


def rank(rows: Iterable[Sequence[Fraction | int]], width: int) -> int:
    space = RowSpace(width)
    space.extend(rows)
    return space.rank


def spans_equal(
    rows_a: Sequence[Sequence[Fraction | int]],
    rows_b: Sequence[Sequence[Fraction | int]],
    width: int,
) -> bool:
    """Decide span(rows_a) == span(rows_b) by mutual containment of ranks."""
    space_a = RowSpace(width)
    space_a.extend(rows_a)
    space_b = RowSpace(width)
    space_b.extend(rows_b)
    if space_a.rank != space_b.rank:
        return False
    joint = RowSpace(width)
    joint.extend(rows_a)
    joint.extend(rows_b)
    return joint.rank == space_a.rank


def rref(matrix: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Fraction; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise PreconditionError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix: Sequence[Sequence[Fraction | int]], ncols: int) -> list[Vector]:
    """Basis of {x : M x = 0}, one vector per free column of M."""
    if not matrix:
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(tuple(v))
        return basis
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx][fc]
        basis.append(tuple(v))
    return basis


class DisjointSets:
    """Union-find over the integers 0..n-1 with path compression."""

    def __init__(self, size: int) -> None:
        self._parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[x] != root:
            self._parent[x], x = root, self._parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; return True iff they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self._parent[ry] = rx
        return True


def difference_span_rank(size: int, pairs: Iterable[tuple[int, int]]) -> int:
    """Rank of span{e_i - e_j : (i, j) in pairs} inside Q^size.

    Equals (#indices that occur in some pair) minus (#connected components
    among those indices), so no row reduction is needed.
    """
    sets = DisjointSets(size)
    touched: set[int] = set()
    rank_count = 0
    for i, j in pairs:
        touched.add(i)
        touched.add(j)
        if sets.union(i, j):
            rank_count += 1
    return rank_count


def mat_from_rows(rows: Sequence[Sequence[Fraction | int]]) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def zero_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: Fraction | int, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise PreconditionError("matrix shapes do not match")
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a square rational matrix; raises if singular."""
    n = len(a)
    for row in a:
        if len(row) != n:
            raise PreconditionError("inverse needs a square matrix")
    augmented = [
        list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(a)
    ]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n)):
        raise PreconditionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction | int, a: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def zero_vector(n: int) -> Vector:
    return tuple(Fraction(0) for _ in range(n))


def is_zero_vector(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)
