"""Finite-dimensional algebras over the rationals via structure constants.

An algebra is the tensor C[i][j][k] with e_i . e_j = sum_k C[i][j][k] e_k
(indices 0-based internally, 1-based in constructors and the CLI).  All
vector-quantified checks are evaluated on basis tuples only; multilinearity
makes that sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import InputError, PreconditionError
from .linalg import RowSpace, nullspace, vec_sub, zero_vector
from .permutations import (
    Permutation,
    SubgroupId,
    act_on_tuple,
    signature,
    subgroup_elements,
)

Vector = tuple[Fraction, ...]

RationalLike = Fraction | int | str


def _as_fraction(x: RationalLike) -> Fraction:
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {x!r}") from exc


@dataclass(frozen=True)
class Algebra:
    dim: int
    c: tuple[tuple[tuple[Fraction, ...], ...], ...]
    name: str = field(default="", compare=False)
    basis_labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise PreconditionError("dimension must be positive")
        if len(self.c) != self.dim:
            raise PreconditionError("structure tensor has wrong shape")
        for plane in self.c:
            if len(plane) != self.dim:
                raise PreconditionError("structure tensor has wrong shape")
            for row in plane:
                if len(row) != self.dim:
                    raise PreconditionError("structure tensor has wrong shape")

    @staticmethod
    def zero(dim: int, name: str = "") -> Algebra:
        z = Fraction(0)
        c = tuple(
            tuple(tuple(z for _ in range(dim)) for _ in range(dim))
            for _ in range(dim)
        )
        return Algebra(dim, c, name=name)

    @staticmethod
    def from_products(
        dim: int,
        products: Mapping[tuple[int, int], Mapping[int, RationalLike]],
        name: str = "",
        basis_labels: Sequence[str] = (),
    ) -> Algebra:
        """Build from a sparse 1-based product table; unlisted products are 0."""
        tensor = [
            [[Fraction(0) for _ in range(dim)] for _ in range(dim)]
            for _ in range(dim)
        ]
        for (i, j), result in products.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise InputError(f"product index ({i},{j}) out of range 1..{dim}")
            for k, coeff in result.items():
                if not 1 <= k <= dim:
                    raise InputError(f"result index {k} out of range 1..{dim}")
                tensor[i - 1][j - 1][k - 1] = _as_fraction(coeff)
        c = tuple(tuple(tuple(row) for row in plane) for plane in tensor)
        return Algebra(dim, c, name=name, basis_labels=tuple(basis_labels))

    def basis_vector(self, i: int) -> Vector:
        if not 1 <= i <= self.dim:
            raise InputError(f"basis index {i} out of range 1..{self.dim}")
        return tuple(
            Fraction(1 if k == i - 1 else 0) for k in range(self.dim)
        )

    def multiply(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        if len(u) != self.dim or len(v) != self.dim:
            raise InputError("vector length does not match algebra dimension")
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            plane = self.c[i]
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                uv = ui * vj
                row = plane[j]
                for k in range(self.dim):
                    if row[k] != 0:
                        out[k] += uv * row[k]
        return tuple(out)

    def associator(
        self,
        x: Sequence[Fraction],
        y: Sequence[Fraction],
        z: Sequence[Fraction],
    ) -> Vector:
        """(xy)z - x(yz), exactly."""
        left = self.multiply(self.multiply(x, y), z)
        right = self.multiply(x, self.multiply(y, z))
        return vec_sub(left, right)

    def opposite(self) -> Algebra:
        c = tuple(
            tuple(self.c[j][i] for j in range(self.dim)) for i in range(self.dim)
        )
        return Algebra(self.dim, c, name=f"op({self.name})" if self.name else "")

    def commutator_lie(self) -> Algebra:
        """Antisymmetrization [x,y] = xy - yx as a new algebra."""
        c = tuple(
            tuple(
                tuple(
                    self.c[i][j][k] - self.c[j][i][k] for k in range(self.dim)
                )
                for j in range(self.dim)
            )
            for i in range(self.dim)
        )
        return Algebra(self.dim, c, name=f"[{self.name}]" if self.name else "")

    def is_commutative(self) -> bool:
        return all(
            self.c[i][j] == self.c[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_antisymmetric(self) -> bool:
        for i in range(self.dim):
            for j in range(i, self.dim):
                for k in range(self.dim):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        return False
        return True

    def _associator_support(self) -> dict[tuple[int, int, int], Vector]:
        """Nonzero associator values on basis triples, 0-based index keys."""
        support: dict[tuple[int, int, int], Vector] = {}
        n = self.dim
        basis = [self.basis_vector(i + 1) for i in range(n)]
        products = [[self.multiply(basis[i], basis[j]) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                left_ij = products[i][j]
                for k in range(n):
                    left = self.multiply(left_ij, basis[k])
                    right = self.multiply(basis[i], products[j][k])
                    val = vec_sub(left, right)
                    if any(x != 0 for x in val):
                        support[(i, j, k)] = val
        return support

    def g_associative(self, g: SubgroupId) -> bool:
        return self.g_associative_profile([g])[g]

    def g_associative_profile(
        self, which: Sequence[SubgroupId] | None = None
    ) -> dict[SubgroupId, bool]:
        """Signed associator-sum check for several subgroups in one pass.

        For each basis triple t the condition is
        sum over sigma in G of sign(sigma) * associator(act(sigma, t)) = 0;
        triples whose whole G-orbit misses the associator support are skipped.
        """
        ids = list(which) if which is not None else list(SubgroupId)
        support = self._associator_support()
        zero = zero_vector(self.dim)
        result: dict[SubgroupId, bool] = {}
        for gid in ids:
            group = subgroup_elements(gid)
            candidates: set[tuple[int, int, int]] = set()
            for key in support:
                for p in group:
                    candidates.add(act_on_tuple(p.inverse(), key))
            ok = True
            for t in candidates:
                total = list(zero)
                for p in group:
                    val = support.get(act_on_tuple(p, t))
                    if val is not None:
                        s = signature(p)
                        for idx in range(self.dim):
                            total[idx] += s * val[idx]
                if any(x != 0 for x in total):
                    ok = False
                    break
            result[gid] = ok
        return result

    def jacobi_holds(self) -> bool:
        if not self.is_antisymmetric():
            raise PreconditionError("jacobi_holds requires an antisymmetric law")
        n = self.dim
        basis = [self.basis_vector(i + 1) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    x, y, z = basis[i], basis[j], basis[k]
                    term1 = self.multiply(self.multiply(x, y), z)
                    term2 = self.multiply(self.multiply(y, z), x)
                    term3 = self.multiply(self.multiply(z, x), y)
                    if any(
                        term1[m] + term2[m] + term3[m] != 0 for m in range(n)
                    ):
                        return False
        return True


class Identity3Id(Enum):
    """Monomial identities on triple products of an (associative) algebra.

    Each value lists the argument orderings asserted equal to x1.x2.x3.
    Both parenthesizations are checked, so the check is meaningful even on
    non-associative input.
    """

    TotallyCommutative3 = (
        (1, 3, 2),
        (2, 1, 3),
        (2, 3, 1),
        (3, 1, 2),
        (3, 2, 1),
    )
    AcbBac = ((1, 3, 2), (2, 1, 3))
    Acb = ((1, 3, 2),)
    Bac = ((2, 1, 3),)
    Cba = ((3, 2, 1),)
    BcaCab = ((2, 3, 1), (3, 1, 2))


def check_identity_3(alg: Algebra, ident: Identity3Id) -> bool:
    """True iff every listed triple-product equality holds on basis elements."""
    n = alg.dim
    basis = [alg.basis_vector(i + 1) for i in range(n)]

    def left(t: tuple[int, int, int]) -> Vector:
        return alg.multiply(alg.multiply(basis[t[0]], basis[t[1]]), basis[t[2]])

    def right(t: tuple[int, int, int]) -> Vector:
        return alg.multiply(basis[t[0]], alg.multiply(basis[t[1]], basis[t[2]]))

    for a in range(n):
        for b in range(n):
            for c in range(n):
                base = (a, b, c)
                lbase, rbase = left(base), right(base)
                for ordering in ident.value:
                    perm = (base[ordering[0] - 1], base[ordering[1] - 1], base[ordering[2] - 1])
                    if left(perm) != lbase or right(perm) != rbase:
                        return False
    return True


@dataclass(frozen=True)
class LieInvariants:
    derived_series: tuple[int, ...]
    lower_central_series: tuple[int, ...]
    center_dim: int
    is_two_step_nilpotent: bool
    is_abelian: bool


def _span_basis(vectors: Sequence[Vector], width: int) -> list[Vector]:
    space = RowSpace(width)
    kept: list[Vector] = []
    for v in vectors:
        if space.add(v):
            kept.append(tuple(v))
    return kept


def _bracket_span(
    alg: Algebra, us: Sequence[Vector], vs: Sequence[Vector]
) -> list[Vector]:
    products = [alg.multiply(u, v) for u in us for v in vs]
    return _span_basis(products, alg.dim)


def lie_invariants(alg: Algebra) -> LieInvariants:
    """Series dimensions and center of an antisymmetric Jacobi law."""
    if not alg.is_antisymmetric():
        raise PreconditionError("lie_invariants requires an antisymmetric law")
    if not alg.jacobi_holds():
        raise PreconditionError("lie_invariants requires the Jacobi identity")
    n = alg.dim
    whole = [alg.basis_vector(i + 1) for i in range(n)]

    derived = [n]
    current = whole
    while True:
        nxt = _bracket_span(alg, current, current)
        derived.append(len(nxt))
        if len(nxt) == 0 or len(nxt) == len(current):
            break
        current = nxt

    lower = [n]
    current = whole
    while True:
        nxt = _bracket_span(alg, whole, current)
        lower.append(len(nxt))
        if len(nxt) == 0 or len(nxt) == len(current):
            break
        current = nxt

    rows = []
    for j in range(n):
        for k in range(n):
            rows.append(tuple(alg.c[i][j][k] for i in range(n)))
    center_dim = len(nullspace(rows, n))

    two_step = lower[1] == 0 or (len(lower) >= 3 and lower[2] == 0)
    return LieInvariants(
        derived_series=tuple(derived),
        lower_central_series=tuple(lower),
        center_dim=center_dim,
        is_two_step_nilpotent=two_step,
        is_abelian=lower[1] == 0,
    )


def all_associators_equal(alg: Algebra) -> bool:
    """True iff associator(t) = associator(act(sigma, t)) for all sigma, t."""
    support = alg._associator_support()
    group = subgroup_elements(SubgroupId.G6)
    keys: set[tuple[int, int, int]] = set()
    for key in support:
        for p in group:
            keys.add(act_on_tuple(p, key))
    zero = zero_vector(alg.dim)
    for t in keys:
        base = support.get(t, zero)
        for p in group:
            if support.get(act_on_tuple(p, t), zero) != base:
                return False
    return True
