"""Bimodule pairs over nonassociative algebra flavors.

A module over an algebra (A, mu) is carried by two actions: a left action
lambda(X, v) and a right action rho(v, X).  Both are stored as operator
matrices per algebra basis vector.  Each flavor's axioms are exactly the
statement that the split null extension A + M (with M.M = 0) satisfies the
corresponding signed associator-sum identity on mixed triples; that
equivalence is kept as an independent test route via
:func:`split_null_extension`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, RationalLike
from .errors import ContractViolationError, InputError, PreconditionError
from .fixtures import get_fixture
from .linalg import (
    Matrix,
    mat_commutator,
    mat_from_rows,
    mat_scale,
    mat_sub,
    zero_matrix,
)
from .permutations import SubgroupId


class ModuleFlavor(Enum):
    """Which algebra structure the module axioms refer to."""

    LieAdm = "LieAdm"
    Vinberg = "Vinberg"
    Type4 = "Type4"
    Type5 = "Type5"
    Lie = "Lie"


_FLAVOR_SUBGROUP: dict[ModuleFlavor, SubgroupId] = {
    ModuleFlavor.LieAdm: SubgroupId.G6,
    ModuleFlavor.Vinberg: SubgroupId.G2,
    ModuleFlavor.Type4: SubgroupId.G4,
    ModuleFlavor.Type5: SubgroupId.G5,
}


@dataclass(frozen=True)
class BimodulePair:
    """Actions lambda and rho as matrices: left[i] is the operator
    lambda(e_{i+1}, .), right[i] is rho(., e_{i+1}), both on a module of
    dimension ``module_dim``."""

    alg: Algebra
    module_dim: int
    left: tuple[Matrix, ...]
    right: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if self.module_dim < 1:
            raise PreconditionError("module dimension must be positive")
        for side, mats in (("left", self.left), ("right", self.right)):
            if len(mats) != self.alg.dim:
                raise PreconditionError(
                    f"{side} needs one matrix per algebra basis vector"
                )
            for mat in mats:
                if len(mat) != self.module_dim or any(
                    len(row) != self.module_dim for row in mat
                ):
                    raise PreconditionError(
                        f"{side} matrices must be {self.module_dim}x{self.module_dim}"
                    )

    @staticmethod
    def from_lists(
        alg: Algebra,
        module_dim: int,
        left: Sequence[Sequence[Sequence[RationalLike]]],
        right: Sequence[Sequence[Sequence[RationalLike]]],
    ) -> BimodulePair:
        return BimodulePair(
            alg,
            module_dim,
            tuple(mat_from_rows(m) for m in left),
            tuple(mat_from_rows(m) for m in right),
        )

    @staticmethod
    def zero(alg: Algebra, module_dim: int) -> BimodulePair:
        z = zero_matrix(module_dim)
        n = alg.dim
        return BimodulePair(alg, module_dim, (z,) * n, (z,) * n)


@dataclass(frozen=True)
class ModuleWitness:
    """First failing instance: condition label, 1-based algebra basis pair,
    and the 1-based module basis vector on which the identity fails."""

    condition: str
    left_index: int
    right_index: int
    vector_index: int

    def describe(self) -> str:
        return (
            f"{self.condition} fails at (e{self.left_index}, "
            f"e{self.right_index}) on module vector v{self.vector_index}"
        )


@dataclass(frozen=True)
class ModuleCheckResult:
    ok: bool
    witness: ModuleWitness | None

    def __bool__(self) -> bool:
        return self.ok


def _mat_add_scaled(acc: list[list[Fraction]], coeff: Fraction, mat: Matrix) -> None:
    if coeff == 0:
        return
    for r, row in enumerate(mat):
        for c, x in enumerate(row):
            if x != 0:
                acc[r][c] += coeff * x


def _combo(coeffs: Sequence[Fraction], mats: Sequence[Matrix], m: int) -> Matrix:
    acc = [[Fraction(0)] * m for _ in range(m)]
    for coeff, mat in zip(coeffs, mats):
        _mat_add_scaled(acc, coeff, mat)
    return tuple(tuple(row) for row in acc)


def _mul(a: Matrix, b: Matrix) -> Matrix:
    m = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _first_bad_column(mat: Matrix) -> int | None:
    """1-based index of the first column holding a nonzero entry."""
    m = len(mat)
    for col in range(m):
        if any(mat[row][col] != 0 for row in range(m)):
            return col + 1
    return None


def _flavor_conditions(
    pair: BimodulePair, flavor: ModuleFlavor, i: int, j: int
) -> list[tuple[str, Matrix]]:
    """Operator identities for the 0-based basis pair (i, j), as matrices
    that must vanish."""
    alg = pair.alg
    m = pair.module_dim
    left, right = pair.left, pair.right
    li, lj = left[i], left[j]
    ri, rj = right[i], right[j]
    commutator = tuple(
        alg.c[i][j][k] - alg.c[j][i][k] for k in range(alg.dim)
    )
    l_bracket = _combo(commutator, left, m)
    r_bracket = _combo(commutator, right, m)
    l_mu_ij = _combo(alg.c[i][j], left, m)
    r_mu_ij = _combo(alg.c[i][j], right, m)
    r_mu_ji = _combo(alg.c[j][i], right, m)

    if flavor is ModuleFlavor.LieAdm:
        total = mat_sub(_mul(li, lj), _mul(lj, li))
        total = mat_sub(total, l_bracket)
        total = mat_sub(total, _mul(li, rj))
        total = _madd(total, _mul(rj, li))
        total = _madd(total, r_bracket)
        total = mat_sub(total, _mul(rj, ri))
        total = mat_sub(total, _mul(ri, lj))
        total = _madd(total, _mul(lj, ri))
        total = _madd(total, _mul(ri, rj))
        return [("lie-admissible-ten-term", total)]
    if flavor is ModuleFlavor.Vinberg:
        first = mat_sub(mat_sub(_mul(li, lj), _mul(lj, li)), l_bracket)
        second = mat_sub(_mul(li, rj), _mul(rj, li))
        second = mat_sub(second, r_mu_ij)
        second = _madd(second, _mul(rj, ri))
        return [("vinberg-left-action", first), ("vinberg-mixed-action", second)]
    if flavor is ModuleFlavor.Type4:
        first = mat_sub(l_mu_ij, _mul(li, lj))
        first = mat_sub(first, _mul(ri, rj))
        first = _madd(first, r_mu_ji)
        second = mat_sub(_mul(rj, li), _mul(li, rj))
        second = mat_sub(second, _mul(ri, lj))
        second = _madd(second, _mul(lj, ri))
        return [("type4-outer", first), ("type4-inner", second)]
    if flavor is ModuleFlavor.Type5:
        total = mat_sub(l_mu_ij, _mul(li, lj))
        total = _madd(total, _mul(ri, lj))
        total = mat_sub(total, _mul(lj, ri))
        total = mat_sub(total, r_mu_ij)
        total = _madd(total, _mul(rj, ri))
        return [("type5-cyclic", total)]
    total = mat_sub(mat_sub(_mul(li, lj), _mul(lj, li)), l_mu_ij)
    return [("lie-action", total)]


def _madd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _require_flavor_compatible(pair: BimodulePair, flavor: ModuleFlavor) -> None:
    alg = pair.alg
    if flavor is ModuleFlavor.Lie:
        if not alg.is_antisymmetric():
            raise PreconditionError("Lie flavor needs an antisymmetric law")
        if not alg.jacobi_holds():
            raise PreconditionError("Lie flavor needs the Jacobi identity")
        if any(
            r != mat_scale(-1, l) for l, r in zip(pair.left, pair.right)
        ):
            raise PreconditionError("Lie flavor requires right = -left")
        return
    gid = _FLAVOR_SUBGROUP[flavor]
    if not alg.g_associative(gid):
        raise PreconditionError(
            f"algebra does not satisfy the {gid.value} associator identity "
            f"required by flavor {flavor.value}"
        )


def check_module(pair: BimodulePair, flavor: ModuleFlavor) -> ModuleCheckResult:
    """Evaluate the flavor's operator identities on all ordered basis pairs.

    Returns the first failing (condition, basis pair, module vector) as a
    witness.  The identities per flavor agree with G-associativity of the
    split null extension on mixed triples.
    """
    _require_flavor_compatible(pair, flavor)
    n = pair.alg.dim
    for i in range(n):
        for j in range(n):
            for condition, mat in _flavor_conditions(pair, flavor, i, j):
                bad = _first_bad_column(mat)
                if bad is not None:
                    return ModuleCheckResult(
                        False, ModuleWitness(condition, i + 1, j + 1, bad)
                    )
    return ModuleCheckResult(True, None)


def split_null_extension(pair: BimodulePair) -> Algebra:
    """The algebra on A + M with (a+v)(b+w) = ab + lambda(a,w) + rho(v,b).

    Products of two module vectors are zero, so the flavor axioms of the
    pair are exactly the algebra's signed associator identities on triples
    that involve module vectors.
    """
    n = pair.alg.dim
    m = pair.module_dim
    total = n + m
    z = Fraction(0)
    tensor = [[[z] * total for _ in range(total)] for _ in range(total)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                tensor[i][j][k] = pair.alg.c[i][j][k]
    for i in range(n):
        lmat = pair.left[i]
        rmat = pair.right[i]
        for l in range(m):
            for r in range(m):
                tensor[i][n + l][n + r] = lmat[r][l]
                tensor[n + l][i][n + r] = rmat[r][l]
    c = tuple(tuple(tuple(row) for row in plane) for plane in tensor)
    name = f"{pair.alg.name}+M{m}" if pair.alg.name else ""
    return Algebra(total, c, name=name)


def regular_pair(alg: Algebra) -> BimodulePair:
    """The algebra acting on itself: lambda = left multiplication,
    rho = right multiplication."""
    n = alg.dim
    left = tuple(
        tuple(tuple(alg.c[i][l][k] for l in range(n)) for k in range(n))
        for i in range(n)
    )
    right = tuple(
        tuple(tuple(alg.c[l][i][k] for l in range(n)) for k in range(n))
        for i in range(n)
    )
    return BimodulePair(alg, n, left, right)


def hat_lambda(pair: BimodulePair) -> tuple[Matrix, ...]:
    """The combined action hat(X) = lambda(X, .) - rho(., X).

    Requires a valid pair of flavor LieAdm.  The returned matrices are
    checked to represent the commutator Lie algebra: hat([X,Y]) must equal
    the matrix commutator [hat(X), hat(Y)].  A failure there is a contract
    violation, since it is forced by the ten-term identity.
    """
    result = check_module(pair, ModuleFlavor.LieAdm)
    if not result.ok:
        assert result.witness is not None
        raise PreconditionError(
            "pair is not a valid module: " + result.witness.describe()
        )
    hats = tuple(mat_sub(l, r) for l, r in zip(pair.left, pair.right))
    alg = pair.alg
    n = alg.dim
    m = pair.module_dim
    for i in range(n):
        for j in range(i + 1, n):
            commutator = tuple(
                alg.c[i][j][k] - alg.c[j][i][k] for k in range(n)
            )
            lhs = _combo(commutator, hats, m)
            rhs = mat_commutator(hats[i], hats[j])
            if lhs != rhs:
                raise ContractViolationError(
                    "hat action fails the Lie axiom at basis pair "
                    f"({i + 1}, {j + 1})"
                )
    return hats


def solvable2_scalar_pair(
    alpha: RationalLike, beta: RationalLike, gamma: RationalLike
) -> BimodulePair:
    """The one-dimensional module family over the solvable 2-dim bracket:
    lambda(X1)=alpha, lambda(X2)=beta, rho(X1)=gamma, rho(X2)=beta."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return BimodulePair.from_lists(
        get_fixture("solv2"), 1, [[[a]], [[b]]], [[[g]], [[b]]]
    )


def _square_same(*mats: Matrix) -> int:
    size = len(mats[0])
    for mat in mats:
        if len(mat) != size or any(len(row) != size for row in mat):
            raise InputError("matrices must be square and of equal size")
    return size


def solvable2_matrix_relation(
    a: Matrix, b: Matrix, c: Matrix, d: Matrix
) -> bool:
    """[(B-D), (C-A)] = 2(B-D) for the operator matrices of
    lambda(X1), lambda(X2), rho(X1), rho(X2) over the solvable 2-dim bracket.

    The factor two appears because the commutator of the antisymmetric law
    is twice the law itself, as in the companion relations with constants
    4, -4, 2; it characterizes validity of the corresponding pair.
    """
    _square_same(a, b, c, d)
    bd = mat_sub(b, d)
    return mat_commutator(bd, mat_sub(c, a)) == mat_scale(2, bd)


def sl2_matrix_relations(
    a1: Matrix, a2: Matrix, a3: Matrix, b1: Matrix, b2: Matrix, b3: Matrix
) -> bool:
    """[A1-B1, A2-B2] = 4(A2-B2), [A1-B1, A3-B3] = -4(A3-B3),
    [A2-B2, A3-B3] = 2(A1-B1) for operator matrices over the 3-dim simple
    bracket with constants 2, -2, 1."""
    _square_same(a1, a2, a3, b1, b2, b3)
    d1 = mat_sub(a1, b1)
    d2 = mat_sub(a2, b2)
    d3 = mat_sub(a3, b3)
    return (
        mat_commutator(d1, d2) == mat_scale(4, d2)
        and mat_commutator(d1, d3) == mat_scale(-4, d3)
        and mat_commutator(d2, d3) == mat_scale(2, d1)
    )
