"""Cogebra duality, tensor products with golden bracket tables, and the
fibration picture relating a Lie law to its compatible products.

Three constructions live here.  First, every algebra yields a cogebra on
the dual space by transposing the structure tensor; the signed
coassociativity diagram mirrors the signed associativity condition, and
converting back (with or without a leg flip) recovers the algebra or its
opposite.  Second, the tensor product of an algebra satisfying a signed
associativity condition with an algebra on the dual side of that condition
satisfies the same condition; the commutator Lie algebras of the
two-dimensional catalog pairs are compared entrywise against golden
bracket tables.  Third, half of an antisymmetric Jacobi law is a section
of the commutator projection, and an eight-term criterion decides when a
symmetric perturbation of that section lands in the Vinberg class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .algebra import Algebra, check_identity_3
from .errors import ContractViolationError, InputError, PreconditionError
from .fixtures import get_fixture
from .linalg import Matrix, Vector, mat_inverse, vec_add, vec_scale, zero_vector
from .multilinear import MultiMap, algebra_from_bilinear, mu_multimap
from .operads import dual_identities, operad_for_subgroup
from .permutations import SubgroupId, act_on_tuple, signature, subgroup_elements

RationalLike = Fraction | int | str

_SUBGROUP_ORDER = tuple(SubgroupId)


@dataclass(frozen=True)
class Cogebra:
    """Comultiplication on a finite-dimensional space, as a tensor.

    delta[k][i][j] is the coefficient of f_i (x) f_j in the coproduct of
    the k-th basis vector.  flavor, when set, is the smallest tensor-slot
    subgroup for which the signed coassociativity diagram is known to hold.
    """

    dim: int
    delta: tuple[tuple[tuple[Fraction, ...], ...], ...]
    flavor: SubgroupId | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise PreconditionError("dimension must be positive")
        if len(self.delta) != self.dim:
            raise PreconditionError("coproduct tensor has wrong shape")
        for plane in self.delta:
            if len(plane) != self.dim:
                raise PreconditionError("coproduct tensor has wrong shape")
            for row in plane:
                if len(row) != self.dim:
                    raise PreconditionError("coproduct tensor has wrong shape")


def _coassociator(c: Cogebra) -> list[list[list[list[Fraction]]]]:
    """Difference of the two double-coproduct tensors, indexed [k][a][b][c].

    Expanding the coproduct on its first leg contributes
    sum_m delta[k][m][c] * delta[m][a][b]; expanding on the second leg
    contributes sum_m delta[k][a][m] * delta[m][b][c].
    """
    n = c.dim
    d = c.delta
    out = [
        [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)
    ]
    for k in range(n):
        for a in range(n):
            for b in range(n):
                for cc in range(n):
                    total = Fraction(0)
                    for m in range(n):
                        total += d[k][m][cc] * d[m][a][b]
                        total -= d[k][a][m] * d[m][b][cc]
                    out[k][a][b][cc] = total
    return out


def cogebra_diagram_holds(c: Cogebra, g: SubgroupId) -> bool:
    """Signed sum over the subgroup of the slot-permuted coassociator is zero."""
    defect = _coassociator(c)
    n = c.dim
    group = subgroup_elements(g)
    signed = [(p, signature(p)) for p in group]
    for k in range(n):
        plane = defect[k]
        for a in range(n):
            for b in range(n):
                for cc in range(n):
                    total = Fraction(0)
                    for p, s in signed:
                        pa, pb, pc = act_on_tuple(p, (a, b, cc))
                        total += s * plane[pa][pb][pc]
                    if total:
                        return False
    return True


def dual_cogebra(alg: Algebra) -> Cogebra:
    """Cogebra on the dual space: the coproduct tensor is the transpose.

    For every slot subgroup whose signed associativity condition the
    algebra satisfies, the matching diagram condition is verified on the
    result; transposition must carry one condition to the other, so a
    failure raises ContractViolationError.
    """
    n = alg.dim
    delta = tuple(
        tuple(tuple(alg.c[i][j][k] for j in range(n)) for i in range(n))
        for k in range(n)
    )
    probe = Cogebra(n, delta)
    profile = alg.g_associative_profile()
    flavor: SubgroupId | None = None
    for gid in _SUBGROUP_ORDER:
        if not profile[gid]:
            continue
        if not cogebra_diagram_holds(probe, gid):
            raise ContractViolationError(
                f"transposed tensor fails the {gid.value} diagram although "
                f"the algebra satisfies the {gid.value} condition"
            )
        if flavor is None:
            flavor = gid
    name = f"dual({alg.name})" if alg.name else ""
    return Cogebra(n, delta, flavor, name)


def cogebra_to_algebra(c: Cogebra, twisted: bool) -> Algebra:
    """Product on the dual space induced by the coproduct.

    Untwisted, the structure tensor is the transpose of the coproduct
    tensor, so applying this to the transposed cogebra of an algebra
    recovers that algebra; twisted, the two coproduct legs are flipped
    first, which yields the opposite product instead.
    """
    n = c.dim
    if twisted:
        tensor = tuple(
            tuple(tuple(c.delta[k][b][a] for k in range(n)) for b in range(n))
            for a in range(n)
        )
    else:
        tensor = tuple(
            tuple(tuple(c.delta[k][a][b] for k in range(n)) for b in range(n))
            for a in range(n)
        )
    suffix = "twisted" if twisted else "plain"
    name = f"product({c.name},{suffix})" if c.name else ""
    return Algebra(n, tensor, name)


def which_g_associative_dual(c: Cogebra, twisted: bool) -> set[SubgroupId]:
    """Subgroups whose signed condition the induced dual product satisfies."""
    profile = cogebra_to_algebra(c, twisted).g_associative_profile()
    return {gid for gid, ok in profile.items() if ok}


def _outer_flip_witness() -> Algebra:
    """Two-dimensional algebra satisfying exactly the outer-flip condition.

    Its signed-condition profile is {G4, G6}; found by exhaustive scan
    over small integer structure constants and pinned by tests.
    """
    return Algebra.from_products(
        2, {(1, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}, name="outer-flip witness"
    )


def _admissible_only_witness() -> Algebra:
    """Two-dimensional algebra whose profile is exactly {G6}."""
    return Algebra.from_products(
        2, {(1, 1): {1: 1}, (1, 2): {1: 1}}, name="admissible-only witness"
    )


@dataclass(frozen=True)
class DualityRow:
    """One fixture's signed-condition profile next to its dual's profile."""

    fixture: str
    flavors: tuple[SubgroupId, ...]
    dual_flavors: tuple[SubgroupId, ...]


def _duality_witnesses() -> tuple[tuple[str, Algebra], ...]:
    base = [(n, get_fixture(n)) for n in ("a1", "b7", "a7", "a8", "a9")]
    opposites = [(f"{n} opposite", get_fixture(n).opposite()) for n in ("a7", "a9")]
    rest = [(n, get_fixture(n)) for n in ("heis3", "sl2", "solv2", "abel5_3order")]
    extra = [
        ("outer-flip witness", _outer_flip_witness()),
        ("admissible-only witness", _admissible_only_witness()),
    ]
    return tuple(base + opposites + rest + extra)


def duality_table(twisted: bool = True) -> tuple[DualityRow, ...]:
    """Profile of each witness algebra next to the profile of its dual product.

    The witness list covers every subgroup as a smallest profile entry:
    the two-dimensional catalog, opposites of its one-sided members, the
    antisymmetric fixtures, and two scanned witnesses for the conditions
    the catalog misses.
    """
    rows = []
    for label, alg in _duality_witnesses():
        profile = alg.g_associative_profile()
        flavors = tuple(g for g in _SUBGROUP_ORDER if profile[g])
        dual_set = which_g_associative_dual(dual_cogebra(alg), twisted)
        dual_flavors = tuple(g for g in _SUBGROUP_ORDER if g in dual_set)
        rows.append(DualityRow(label, flavors, dual_flavors))
    return tuple(rows)


def duality_map(twisted: bool = True) -> dict[SubgroupId, SubgroupId]:
    """Empirical flavor correspondence read off the duality table.

    For each source flavor the candidate targets are the flavors whose
    presence in the dual profile matches the source's presence in the
    algebra profile on every witness.  The witness list is rich enough to
    leave exactly one candidate per source; zero or several candidates
    mean the table does not determine a map and raise
    ContractViolationError.
    """
    rows = duality_table(twisted)
    out: dict[SubgroupId, SubgroupId] = {}
    for src in _SUBGROUP_ORDER:
        candidates = [
            dst
            for dst in _SUBGROUP_ORDER
            if all((src in row.flavors) == (dst in row.dual_flavors) for row in rows)
        ]
        if len(candidates) != 1:
            shown = "/".join(c.value for c in candidates) or "none"
            raise ContractViolationError(
                f"duality witnesses leave {shown} as targets for {src.value}"
            )
        out[src] = candidates[0]
    return out


def tensor_product(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product on basis f_ij = X_i (x) e_j, row-major in (i, j).

    The structure constants are the Kronecker product of the two factors'
    structure constants.
    """
    n, m = a.dim, b.dim
    dim = n * m
    tensor = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for k in range(n):
            plane = a.c[i][k]
            for j in range(m):
                for l in range(m):
                    row = b.c[j][l]
                    for p in range(n):
                        if plane[p]:
                            for q in range(m):
                                if row[q]:
                                    tensor[i * m + j][k * m + l][p * m + q] = (
                                        plane[p] * row[q]
                                    )
    labels: tuple[str, ...] = ()
    if n <= 9 and m <= 9:
        labels = tuple(f"f{i + 1}{j + 1}" for i in range(n) for j in range(m))
    name = f"{a.name}(x){b.name}" if a.name and b.name else ""
    return Algebra(
        dim,
        tuple(tuple(tuple(r) for r in plane) for plane in tensor),
        name,
        labels,
    )


def tensor_theorem_check(a: Algebra, b: Algebra, g: SubgroupId) -> bool:
    """Check that the tensor product inherits the signed condition of g.

    Preconditions: a satisfies the signed condition of g, and b is
    associative and satisfies the monomial identities presenting the dual
    side of that condition.  Returns whether the tensor product satisfies
    the condition of g; a False falsifies the functor statement.
    """
    if not a.g_associative(g):
        raise PreconditionError(
            f"left factor does not satisfy the {g.value} condition"
        )
    if not b.g_associative(SubgroupId.G1):
        raise PreconditionError("right factor must be associative")
    ident = dual_identities(operad_for_subgroup(g)).identity3
    if ident is not None and not check_identity_3(b, ident):
        raise PreconditionError(
            f"right factor fails the {ident.name} identity required opposite {g.value}"
        )
    return tensor_product(a, b).g_associative(g)


@dataclass(frozen=True)
class BracketTable:
    """Golden antisymmetric bracket values on pairs of basis vectors.

    entries holds (i, j, value) with 1-based i < j; unlisted pairs are
    zero and values for i > j follow by antisymmetry.
    """

    dim: int
    entries: tuple[tuple[int, int, Vector], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for i, j, value in self.entries:
            if not 1 <= i < j <= self.dim:
                raise InputError(f"bad entry pair ({i}, {j})")
            if len(value) != self.dim:
                raise InputError(f"entry ({i}, {j}) has wrong length")

    def entry(self, i: int, j: int) -> Vector:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise InputError(f"basis index out of range: ({i}, {j})")
        for a, b, value in self.entries:
            if (a, b) == (i, j):
                return value
            if (a, b) == (j, i):
                return vec_scale(-1, value)
        return zero_vector(self.dim)


@dataclass(frozen=True)
class TableEntryDiff:
    left: int
    right: int
    computed: Vector
    expected: Vector

    @property
    def match(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class TableDiff:
    """Entrywise comparison of a computed bracket against a golden table."""

    table: str
    entries: tuple[TableEntryDiff, ...]

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def matching(self) -> int:
        return sum(1 for e in self.entries if e.match)

    def mismatches(self) -> tuple[TableEntryDiff, ...]:
        return tuple(e for e in self.entries if not e.match)

    def agreement(self) -> Fraction:
        return Fraction(self.matching, self.total)


def bracket_table_compare(computed: Algebra, expected: BracketTable) -> TableDiff:
    """Compare each bracket [f_i, f_j], i < j, against the golden table."""
    if computed.dim != expected.dim:
        raise InputError(
            f"dimension mismatch: computed {computed.dim}, table {expected.dim}"
        )
    entries = []
    for i in range(1, computed.dim + 1):
        for j in range(i + 1, computed.dim + 1):
            got = computed.multiply(
                computed.basis_vector(i), computed.basis_vector(j)
            )
            entries.append(TableEntryDiff(i, j, got, expected.entry(i, j)))
    return TableDiff(expected.name, tuple(entries))


def bracket_table_to_json(table: BracketTable) -> dict:
    """JSON-ready form of a bracket table; rationals as strings."""
    return {
        "dim": table.dim,
        "entries": [
            {
                "left": i,
                "right": j,
                "value": {
                    str(k + 1): str(coeff)
                    for k, coeff in enumerate(value)
                    if coeff
                },
            }
            for i, j, value in table.entries
        ],
    }


def bracket_table_from_json(name: str, obj: dict) -> BracketTable:
    """Parse one golden table; inverse of bracket_table_to_json."""
    try:
        dim = int(obj["dim"])
        entries = []
        for item in obj["entries"]:
            value = [Fraction(0)] * dim
            for key, text in item["value"].items():
                k = int(key)
                if not 1 <= k <= dim:
                    raise InputError(f"table {name}: index {k} out of range")
                value[k - 1] = Fraction(text)
            entries.append((int(item["left"]), int(item["right"]), tuple(value)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed bracket table {name!r}: {exc}") from exc
    return BracketTable(dim, tuple(entries), name)


def golden_tables() -> dict[str, BracketTable]:
    """All golden bracket tables shipped with the package."""
    text = (
        resources.files("lieadm").joinpath("data/bracket_tables.json").read_text()
    )
    raw = json.loads(text)
    return {name: bracket_table_from_json(name, obj) for name, obj in raw.items()}


@dataclass(frozen=True)
class TableRun:
    """Pairing of a golden table with the fixtures whose tensor produces it.

    expected_mismatches lists (i, j) basis pairs where the golden value is
    recorded as a suspected misprint; the computed value is kept as the
    reference for those entries.
    """

    table: str
    left: str
    left_params: tuple[tuple[str, RationalLike], ...]
    right: str
    right_params: tuple[tuple[str, RationalLike], ...] = ()
    expected_mismatches: tuple[tuple[int, int], ...] = ()

    def build(self) -> tuple[Algebra, Algebra]:
        a = get_fixture(self.left, dict(self.left_params) or None)
        b = get_fixture(self.right, dict(self.right_params) or None)
        return a, b


TABLE_RUNS: tuple[TableRun, ...] = (
    TableRun("g17", "a1", (), "b7"),
    TableRun("g27", "a2", (), "b7"),
    TableRun("g37", "a3", (), "b7"),
    TableRun("g47", "a4", (), "b7"),
    TableRun("g57", "a5", (), "b7"),
    TableRun("g67", "a6", (), "b7"),
    TableRun("gi1", "a8", (), "b1"),
    TableRun("gi2", "a8", (), "b2"),
    TableRun("gi3", "a8", (), "b3", (), ((1, 3),)),
    TableRun("gi4", "a8", (), "b4"),
    TableRun("gi5", "a8", (), "b5"),
    TableRun("gi6", "a8", (), "b6"),
    TableRun("g77", "a7", (("b", 1), ("e", 2)), "b7"),
    TableRun("g87", "a9", (("a", 2),), "b7"),
    TableRun("g97", "a8", (("a", 2), ("c", 3)), "b7"),
)


def run_table_comparisons() -> dict[str, TableDiff]:
    """Commutator bracket of every registered tensor pair vs its golden table."""
    tables = golden_tables()
    out: dict[str, TableDiff] = {}
    for run in TABLE_RUNS:
        if run.table not in tables:
            raise InputError(f"no golden table named {run.table!r}")
        a, b = run.build()
        lie = tensor_product(a, b).commutator_lie()
        out[run.table] = bracket_table_compare(lie, tables[run.table])
    return out


def transport(alg: Algebra, m: Matrix) -> Algebra:
    """Structure transported along the invertible map with matrix m.

    The new product is x * y = m_inv(m(x) m(y)); the result is isomorphic
    to the input, so every multilinear identity is preserved.
    """
    n = alg.dim
    if len(m) != n or any(len(row) != n for row in m):
        raise InputError("transport matrix has wrong shape")
    w = mat_inverse(m)
    tensor = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            image = [Fraction(0)] * n
            for i in range(n):
                if not m[i][a]:
                    continue
                for j in range(n):
                    if not m[j][b]:
                        continue
                    coeff = m[i][a] * m[j][b]
                    for l in range(n):
                        if alg.c[i][j][l]:
                            image[l] += coeff * alg.c[i][j][l]
            for k in range(n):
                tensor[a][b][k] = sum(
                    (w[k][l] * image[l] for l in range(n) if image[l]),
                    Fraction(0),
                )
    return Algebra(n, tuple(tuple(tuple(r) for r in plane) for plane in tensor))


def _require_lie(mu_lie: Algebra, who: str) -> None:
    if not mu_lie.is_antisymmetric():
        raise PreconditionError(f"{who} needs an antisymmetric law")
    if not mu_lie.jacobi_holds():
        raise PreconditionError(f"{who} needs a law satisfying the Jacobi identity")


def section_s(mu_lie: Algebra) -> Algebra:
    """Half of an antisymmetric Jacobi law; a section of the commutator map.

    The commutator bracket of the result equals the input law, because
    antisymmetry doubles the half.
    """
    _require_lie(mu_lie, "section_s")
    half = tuple(
        tuple(tuple(x / 2 for x in row) for row in plane) for plane in mu_lie.c
    )
    name = f"half({mu_lie.name})" if mu_lie.name else ""
    return Algebra(mu_lie.dim, half, name, mu_lie.basis_labels)


def fiber_membership(mu_lie: Algebra, candidate: Algebra) -> bool:
    """True iff the candidate's commutator bracket equals the given law."""
    if mu_lie.dim != candidate.dim:
        raise InputError("dimension mismatch between law and candidate")
    return candidate.commutator_lie() == mu_lie


def deformation_vinberg_check(mu_lie: Algebra, phi: MultiMap) -> bool:
    """Eight-term criterion for half the law plus phi to be Vinberg.

    Evaluates, on every basis triple (X1, X2, X3),

        4 phi(mu(X2,X1), X3) + 2 mu(X1, phi(X2,X3)) + 2 phi(X1, mu(X2,X3))
        + 4 phi(X1, phi(X2,X3)) - 2 mu(X2, phi(X1,X3))
        - 2 phi(X2, mu(X1,X3)) - 4 phi(X2, phi(X1,X3))
        + mu(mu(X2,X1), X3)

    and reports whether every value vanishes.  For an antisymmetric Jacobi
    law and symmetric phi this is equivalent to the law mu/2 + phi
    satisfying the Vinberg condition.
    """
    _require_lie(mu_lie, "deformation_vinberg_check")
    if phi.arity != 2 or phi.dim != mu_lie.dim:
        raise PreconditionError("perturbation must be bilinear on the same space")
    if not phi.is_symmetric():
        raise PreconditionError("perturbation must be symmetric")
    n = mu_lie.dim
    basis = [mu_lie.basis_vector(i + 1) for i in range(n)]
    mu = mu_lie.multiply
    for i in range(n):
        x1 = basis[i]
        for j in range(n):
            x2 = basis[j]
            mu21 = mu(x2, x1)
            for k in range(n):
                x3 = basis[k]
                phi23 = phi.apply(x2, x3)
                phi13 = phi.apply(x1, x3)
                total = vec_scale(4, phi.apply(mu21, x3))
                total = vec_add(total, vec_scale(2, mu(x1, phi23)))
                total = vec_add(total, vec_scale(2, phi.apply(x1, mu(x2, x3))))
                total = vec_add(total, vec_scale(4, phi.apply(x1, phi23)))
                total = vec_add(total, vec_scale(-2, mu(x2, phi13)))
                total = vec_add(total, vec_scale(-2, phi.apply(x2, mu(x1, x3))))
                total = vec_add(total, vec_scale(-4, phi.apply(x2, phi13)))
                total = vec_add(total, mu(mu21, x3))
                if any(x != 0 for x in total):
                    return False
    return True


def deformed_law(mu_lie: Algebra, phi: MultiMap, t: RationalLike = 1) -> Algebra:
    """The algebra with law mu/2 + t*phi."""
    _require_lie(mu_lie, "deformed_law")
    if phi.arity != 2 or phi.dim != mu_lie.dim:
        raise PreconditionError("perturbation must be bilinear on the same space")
    law = mu_multimap(mu_lie).scale(Fraction(1, 2)) + phi.scale(Fraction(t))
    name = f"deformed({mu_lie.name})" if mu_lie.name else ""
    return algebra_from_bilinear(law, name)
