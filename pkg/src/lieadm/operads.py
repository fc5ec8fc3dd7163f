"""Binary quadratic operads presented inside the free operad on one product.

Monomials of arity n are planar binary trees with leaves labeled 1..n,
encoded as nested pairs: a leaf is its integer label, an inner node is a
(left, right) tuple.  The basis of the arity-n component enumerates tree
shapes by descending left-subtree size (recursively) and, within a shape,
labelings in lexicographic order.  At arity 3 this gives the fixed order

    (x1.x2).x3, (x1.x3).x2, (x2.x1).x3, (x2.x3).x1, (x3.x1).x2, (x3.x2).x1,
    x1.(x2.x3), x1.(x3.x2), x2.(x1.x3), x2.(x3.x1), x3.(x1.x2), x3.(x2.x1)

and the 12-dimensional space Arity3Element lives over it.

The symmetric group acts by relabeling leaves, l -> p(l); this is a left
action.  Signed relation generators, the scalar product, orthogonal
complements, dual identities, and dimension counts by exact rank all follow
the conventions documented on each function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from math import factorial

from .algebra import Identity3Id
from .errors import ContractViolationError, InputError, PreconditionError
from .linalg import (
    RowSpace,
    difference_span_rank,
    nullspace,
    to_integer_row,
)
from .permutations import Permutation, SubgroupId, signature, subgroup_elements
from .series import TruncatedSeries

Tree = int | tuple

MAX_ARITY = 5

# Catalan numbers: number of planar binary tree shapes with n leaves.
_CATALAN = (1, 1, 2, 5, 14)


def tree_arity(t: Tree) -> int:
    if isinstance(t, int):
        return 1
    return tree_arity(t[0]) + tree_arity(t[1])


def tree_labels(t: Tree) -> tuple[int, ...]:
    if isinstance(t, int):
        return (t,)
    return tree_labels(t[0]) + tree_labels(t[1])


def relabel_tree(t: Tree, p: Permutation) -> Tree:
    """Relabel every leaf l -> p(l)."""
    if isinstance(t, int):
        return p(t)
    return (relabel_tree(t[0], p), relabel_tree(t[1], p))


def tree_str(t: Tree) -> str:
    def walk(node: Tree, top: bool) -> str:
        if isinstance(node, int):
            return f"x{node}"
        inner = f"{walk(node[0], False)}.{walk(node[1], False)}"
        return inner if top else f"({inner})"

    return walk(t, True)


def compose_trees(w: Tree, i: int, v: Tree) -> Tree:
    """Graft v into input i of w, renumbering labels order-preservingly.

    If w has arity n and v has arity m, the labels of v become
    i .. i+m-1 and the labels of w above i shift up by m-1.
    """
    n = tree_arity(w)
    m = tree_arity(v)
    if not 1 <= i <= n:
        raise PreconditionError(f"slot {i} out of range 1..{n}")

    def walk(node: Tree) -> Tree:
        if isinstance(node, int):
            if node == i:
                return shift(v)
            if node > i:
                return node + m - 1
            return node
        return (walk(node[0]), walk(node[1]))

    def shift(node: Tree) -> Tree:
        if isinstance(node, int):
            return node + i - 1
        return (shift(node[0]), shift(node[1]))

    return walk(w)


@lru_cache(maxsize=None)
def tree_shapes(n: int) -> tuple[Tree, ...]:
    """Shapes with leaves labeled 1..n left to right, larger left side first."""
    if n == 1:
        return (1,)
    shapes: list[Tree] = []
    for left_size in range(n - 1, 0, -1):
        for left in tree_shapes(left_size):
            for right in tree_shapes(n - left_size):

                def shift(node: Tree, by: int) -> Tree:
                    if isinstance(node, int):
                        return node + by
                    return (shift(node[0], by), shift(node[1], by))

                shapes.append((left, shift(right, left_size)))
    return tuple(shapes)


@dataclass(frozen=True)
class ArityNBasis:
    n: int
    monomials: tuple[Tree, ...]
    index: dict[Tree, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.monomials)


@lru_cache(maxsize=None)
def arity_basis(n: int) -> ArityNBasis:
    if not 2 <= n <= MAX_ARITY:
        raise InputError(f"arity must be in 2..{MAX_ARITY}")
    monomials: list[Tree] = []
    for shape in tree_shapes(n):
        for labels in iter_permutations(range(1, n + 1)):
            p = Permutation(labels)
            monomials.append(relabel_tree(shape, p))
    expected = _CATALAN[n - 1] * factorial(n)
    if len(monomials) != expected or len(set(monomials)) != expected:
        raise ContractViolationError(f"arity-{n} basis enumeration broken")
    mono_tuple = tuple(monomials)
    return ArityNBasis(n, mono_tuple, {m: i for i, m in enumerate(mono_tuple)})


_DIM3 = 12


@dataclass(frozen=True)
class Arity3Element:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != _DIM3:
            raise PreconditionError("Arity3Element needs 12 coordinates")

    @staticmethod
    def zero() -> Arity3Element:
        return Arity3Element(tuple(Fraction(0) for _ in range(_DIM3)))

    @staticmethod
    def monomial(tree: Tree) -> Arity3Element:
        idx = arity_basis(3).index.get(tree)
        if idx is None:
            raise InputError(f"not an arity-3 monomial: {tree!r}")
        return Arity3Element(
            tuple(Fraction(1 if i == idx else 0) for i in range(_DIM3))
        )

    def __add__(self, other: Arity3Element) -> Arity3Element:
        return Arity3Element(
            tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: Arity3Element) -> Arity3Element:
        return Arity3Element(
            tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> Arity3Element:
        return Arity3Element(tuple(-a for a in self.coords))

    def scale(self, c: Fraction | int) -> Arity3Element:
        c = Fraction(c)
        return Arity3Element(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        basis = arity_basis(3)
        parts = []
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            mono = tree_str(basis.monomials[i])
            if a == 1:
                parts.append(f"+ {mono}")
            elif a == -1:
                parts.append(f"- {mono}")
            elif a > 0:
                parts.append(f"+ {a} {mono}")
            else:
                parts.append(f"- {-a} {mono}")
        return " ".join(parts) if parts else "0"


def _left_comb(i: int, j: int, k: int) -> Tree:
    return ((i, j), k)


def _right_comb(i: int, j: int, k: int) -> Tree:
    return (i, (j, k))


ASSOC = Arity3Element.monomial(_left_comb(1, 2, 3)) - Arity3Element.monomial(
    _right_comb(1, 2, 3)
)


@lru_cache(maxsize=None)
def _relabel_index_map(n: int, images: tuple[int, ...]) -> tuple[int, ...]:
    """out[i] = index of the relabeled i-th monomial of the arity-n basis."""
    basis = arity_basis(n)
    p = Permutation(images)
    return tuple(basis.index[relabel_tree(m, p)] for m in basis.monomials)


def s3_action(p: Permutation, e: Arity3Element) -> Arity3Element:
    """Relabel leaves l -> p(l); a left action on Arity3Element."""
    if p.degree != 3:
        raise InputError("s3_action needs a degree-3 permutation")
    mapping = _relabel_index_map(3, p.images)
    out = [Fraction(0)] * _DIM3
    for i, a in enumerate(e.coords):
        if a != 0:
            out[mapping[i]] += a
    return Arity3Element(tuple(out))


def signed_associator_sum(g: SubgroupId) -> Arity3Element:
    """sum over sigma in G of sign(sigma) * (relabeled associativity element)."""
    total = Arity3Element.zero()
    for p in subgroup_elements(g):
        term = s3_action(p, ASSOC)
        total = total + (term if signature(p) == 1 else -term)
    return total


@dataclass(frozen=True)
class OperadId:
    """One of the six primal operads, optionally its quadratic dual."""

    base: str
    dual: bool = False

    _PRIMAL = ("Ass", "Vinb", "PreLie", "G4Ass", "G5Ass", "LieAdm")

    def __post_init__(self) -> None:
        if self.base not in self._PRIMAL:
            raise InputError(
                f"unknown operad {self.base!r}; valid: {', '.join(self._PRIMAL)}"
            )

    def dual_id(self) -> OperadId:
        return OperadId(self.base, not self.dual)

    def display(self) -> str:
        return self.base + ("!" if self.dual else "")

    @staticmethod
    def parse(text: str) -> OperadId:
        name = text.strip()
        if name == "Perm":
            return OperadId("PreLie", True)
        dual = name.endswith("!")
        if dual:
            name = name[:-1]
        if name not in OperadId._PRIMAL:
            raise InputError(
                f"unknown operad {text!r}; valid: "
                + ", ".join(OperadId._PRIMAL)
                + " (optionally with '!'), or Perm"
            )
        return OperadId(name, dual)


ASS = OperadId("Ass")
VINB = OperadId("Vinb")
PRELIE = OperadId("PreLie")
G4ASS = OperadId("G4Ass")
G5ASS = OperadId("G5Ass")
LIEADM = OperadId("LieAdm")
PERM = PRELIE.dual_id()

PRIMAL_OPERADS = (ASS, VINB, PRELIE, G4ASS, G5ASS, LIEADM)

_BASE_SUBGROUP = {
    "Ass": SubgroupId.G1,
    "Vinb": SubgroupId.G2,
    "PreLie": SubgroupId.G3,
    "G4Ass": SubgroupId.G4,
    "G5Ass": SubgroupId.G5,
    "LieAdm": SubgroupId.G6,
}

_SUBGROUP_BASE = {gid: base for base, gid in _BASE_SUBGROUP.items()}


def operad_for_subgroup(g: SubgroupId) -> OperadId:
    """Primal operad presented by the signed associator sum over g."""
    return OperadId(_SUBGROUP_BASE[g])


# Monomial identities presenting each quadratic dual: the dual of each
# primal operad is associative algebras obeying x1x2x3 = x_w1 x_w2 x_w3
# for the listed orderings w.
DUAL_IDENTITY_WORDS: dict[str, tuple[tuple[int, int, int], ...]] = {
    "Ass": (),
    "Vinb": ((2, 1, 3),),
    "PreLie": ((1, 3, 2),),
    "G4Ass": ((3, 2, 1),),
    "G5Ass": ((2, 3, 1), (3, 1, 2)),
    "LieAdm": ((1, 3, 2), (2, 1, 3)),
}

_WORDS_TO_IDENTITY3: dict[tuple[tuple[int, int, int], ...], Identity3Id | None] = {
    (): None,
    ((2, 1, 3),): Identity3Id.Bac,
    ((1, 3, 2),): Identity3Id.Acb,
    ((3, 2, 1),): Identity3Id.Cba,
    ((2, 3, 1), (3, 1, 2)): Identity3Id.BcaCab,
    ((1, 3, 2), (2, 1, 3)): Identity3Id.AcbBac,
}


@dataclass(frozen=True)
class RelationModule:
    operad: OperadId
    basis: tuple[Arity3Element, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _reduce_elements(elems: list[Arity3Element]) -> tuple[Arity3Element, ...]:
    space = RowSpace(_DIM3)
    space.extend(e.coords for e in elems)
    return tuple(Arity3Element(row) for row in space.basis_rows())


def _s3_orbit(e: Arity3Element) -> list[Arity3Element]:
    return [s3_action(p, e) for p in subgroup_elements(SubgroupId.G6)]


def _word_difference_elements(
    word: tuple[int, int, int]
) -> list[Arity3Element]:
    """x1x2x3 = x_w1 x_w2 x_w3 in both parenthesizations, as differences."""
    i, j, k = word
    return [
        Arity3Element.monomial(_left_comb(1, 2, 3))
        - Arity3Element.monomial(_left_comb(i, j, k)),
        Arity3Element.monomial(_right_comb(1, 2, 3))
        - Arity3Element.monomial(_right_comb(i, j, k)),
    ]


def presentation_generators(op: OperadId) -> tuple[Arity3Element, ...]:
    """A (possibly redundant) S_3-closed generating set of the relation space.

    Primal operads: the S3 orbit of the signed associator sum of the
    matching subgroup.  Dual operads: the associativity orbit plus the
    orbits of the dual-identity differences.
    """
    if not op.dual:
        gens: list[Arity3Element] = []
        seen: set[tuple[int, ...]] = set()
        for e in _s3_orbit(signed_associator_sum(_BASE_SUBGROUP[op.base])):
            key = to_integer_row(e.coords)
            if any(v != 0 for v in key) and key not in seen:
                seen.add(key)
                gens.append(e)
        return tuple(gens)
    elems: list[Arity3Element] = list(_s3_orbit(ASSOC))
    for word in DUAL_IDENTITY_WORDS[op.base]:
        for diff in _word_difference_elements(word):
            elems.extend(_s3_orbit(diff))
    out: list[Arity3Element] = []
    seen = set()
    for e in elems:
        key = to_integer_row(e.coords)
        if any(v != 0 for v in key) and key not in seen:
            seen.add(key)
            out.append(e)
    return tuple(out)


@lru_cache(maxsize=None)
def relation_module(op: OperadId) -> RelationModule:
    """Row-reduced basis of the relation subspace of the 12-dim component."""
    if op.dual:
        return orthogonal_complement(relation_module(op.dual_id()))
    basis = _reduce_elements(list(presentation_generators(op)))
    return RelationModule(op, basis)


# Diagonal values of the arity-3 pairing: left combs carry -sgn(labels),
# right combs +sgn(labels); distinct monomials are orthogonal.
def _gram3() -> tuple[int, ...]:
    basis = arity_basis(3)
    values = []
    for idx, mono in enumerate(basis.monomials):
        labels = tree_labels(mono)
        sgn = signature(Permutation(labels))
        left_comb = isinstance(mono, tuple) and isinstance(mono[0], tuple)
        values.append(-sgn if left_comb else sgn)
    return tuple(values)


GRAM3 = _gram3()


def scalar_product(a: Arity3Element, b: Arity3Element) -> Fraction:
    return sum(
        (x * y * g for x, y, g in zip(a.coords, b.coords, GRAM3)),
        Fraction(0),
    )


def orthogonal_complement(r: RelationModule) -> RelationModule:
    """{v : <u, v> = 0 for all u in r}, labeled with the dual operad id."""
    rows = [
        tuple(u.coords[i] * GRAM3[i] for i in range(_DIM3)) for u in r.basis
    ]
    comp = [Arity3Element(v) for v in nullspace(rows, _DIM3)]
    if len(comp) + r.dim != _DIM3:
        raise ContractViolationError(
            "orthogonal complement dimension defect: "
            f"{r.dim} + {len(comp)} != {_DIM3}"
        )
    return RelationModule(r.operad.dual_id(), _reduce_elements(comp))


def in_relation_span(r: RelationModule, e: Arity3Element) -> bool:
    space = RowSpace(_DIM3)
    space.extend(u.coords for u in r.basis)
    return space.contains(e.coords)


@dataclass(frozen=True)
class DualIdentities:
    operad: OperadId
    words: tuple[tuple[int, int, int], ...]
    identity3: Identity3Id | None
    description: str


def dual_identities(op: OperadId) -> DualIdentities:
    """Monomial identities presenting the quadratic dual, span-verified.

    The span of the associativity orbit plus the identity-difference orbits
    must equal the orthogonal complement of the relation module; any
    mismatch raises, because it would falsify the presentation.
    """
    if op.dual:
        raise InputError("dual_identities expects a primal operad id")
    words = DUAL_IDENTITY_WORDS[op.base]
    claimed = OperadId(op.base, True)
    claimed_span = RowSpace(_DIM3)
    claimed_span.extend(e.coords for e in presentation_generators(claimed))
    complement = relation_module(op.dual_id())
    ortho_span = RowSpace(_DIM3)
    ortho_span.extend(e.coords for e in complement.basis)
    joint = RowSpace(_DIM3)
    joint.extend(e.coords for e in presentation_generators(claimed))
    joint.extend(e.coords for e in complement.basis)
    if not (claimed_span.rank == ortho_span.rank == joint.rank):
        raise ContractViolationError(
            f"dual identities for {op.display()} span "
            f"{claimed_span.rank}, orthogonal complement {ortho_span.rank}, "
            f"joint {joint.rank}"
        )
    if words:
        text = "associative with " + " = ".join(
            ["abc"] + ["".join("abc"[i - 1] for i in w) for w in words]
        )
    else:
        text = "associative (self-dual)"
    return DualIdentities(op, words, _WORDS_TO_IDENTITY3[words], text)


def _tree_compositions(t: Tree) -> list[Tree]:
    """All one-step graftings of t with a binary generator, both orders."""
    nu_list: list[Tree] = [(1, 2), (2, 1)]
    n = tree_arity(t)
    out: list[Tree] = []
    for nu in nu_list:
        for slot in (1, 2):
            out.append(compose_trees(nu, slot, t))
        for slot in range(1, n + 1):
            out.append(compose_trees(t, slot, nu))
    return out


def _composition_index_maps(n: int) -> list[tuple[int, ...]]:
    """Index maps basis(n) -> basis(n+1), one per composition operation."""
    src = arity_basis(n)
    dst = arity_basis(n + 1)
    count = len(_tree_compositions(src.monomials[0]))
    maps: list[list[int]] = [[0] * len(src) for _ in range(count)]
    for i, mono in enumerate(src.monomials):
        for op_idx, composed in enumerate(_tree_compositions(mono)):
            maps[op_idx][i] = dst.index[composed]
    return [tuple(m) for m in maps]


def _is_difference_presented(gens: tuple[Arity3Element, ...]) -> bool:
    for g in gens:
        nz = [c for c in g.coords if c != 0]
        if sorted(nz) != [Fraction(-1), Fraction(1)]:
            return False
    return True


def _difference_pairs(gens: tuple[Arity3Element, ...]) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for g in gens:
        pos = next(i for i, c in enumerate(g.coords) if c > 0)
        neg = next(i for i, c in enumerate(g.coords) if c < 0)
        pairs.add((min(pos, neg), max(pos, neg)))
    return pairs


def _sn_images(n: int) -> list[tuple[int, ...]]:
    return [tuple(images) for images in iter_permutations(range(1, n + 1))]


def _grow_pairs(
    pairs: set[tuple[int, int]], n: int
) -> set[tuple[int, int]]:
    """Compose difference pairs of arity n into arity n+1, S_{n+1}-closed."""
    src = arity_basis(n)
    comp_maps = _composition_index_maps(n)
    grown: set[tuple[int, int]] = set()
    for a, b in pairs:
        for cmap in comp_maps:
            x, y = cmap[a], cmap[b]
            if x != y:
                grown.add((min(x, y), max(x, y)))
    closed: set[tuple[int, int]] = set()
    for images in _sn_images(n + 1):
        rmap = _relabel_index_map(n + 1, images)
        for a, b in grown:
            x, y = rmap[a], rmap[b]
            closed.add((min(x, y), max(x, y)))
    return closed


@lru_cache(maxsize=None)
def _ideal_pairs(op: OperadId, n: int) -> frozenset[tuple[int, int]]:
    gens = presentation_generators(op)
    if not _is_difference_presented(gens):
        raise PreconditionError(
            f"{op.display()} is not presented by monomial differences"
        )
    pairs = _difference_pairs(gens)
    for arity in range(3, n):
        pairs = _grow_pairs(pairs, arity)
    return frozenset(pairs)


@lru_cache(maxsize=None)
def _ideal_rank_dense(op: OperadId, n: int) -> int:
    """Rank of the weight-(n-2) ideal component by integer echelon."""
    if n != 4:
        raise PreconditionError("dense ideal expansion implemented for arity 4")
    comp_maps = _composition_index_maps(3)
    dst_size = len(arity_basis(4))
    rows: set[tuple[int, ...]] = set()
    relabels = [_relabel_index_map(4, images) for images in _sn_images(4)]
    for gen in presentation_generators(op):
        for cmap in comp_maps:
            base = [Fraction(0)] * dst_size
            for i, coeff in enumerate(gen.coords):
                if coeff != 0:
                    base[cmap[i]] += coeff
            for rmap in relabels:
                moved = [Fraction(0)] * dst_size
                for i, coeff in enumerate(base):
                    if coeff != 0:
                        moved[rmap[i]] = coeff
                row = to_integer_row(moved)
                if any(v != 0 for v in row):
                    rows.add(row)
    space = RowSpace(dst_size)
    space.extend(rows)
    return space.rank


@lru_cache(maxsize=None)
def operad_dimension(op: OperadId, n: int) -> int:
    """dim of the arity-n component: free component minus ideal rank."""
    if n < 1 or n > MAX_ARITY:
        raise InputError(f"arity must be in 1..{MAX_ARITY}")
    if n == 1:
        return 1
    if n == 2:
        return 2
    if n == 3:
        return _DIM3 - relation_module(op).dim
    gens = presentation_generators(op)
    difference_mode = _is_difference_presented(gens)
    if n == 5 and not difference_mode:
        raise InputError(
            "arity 5 needs a monomial-difference presentation "
            "(dense rank is limited to arity 4); available for Ass and "
            "the dual operads"
        )
    size = len(arity_basis(n))
    if difference_mode:
        rank = difference_span_rank(size, sorted(_ideal_pairs(op, n)))
    else:
        rank = _ideal_rank_dense(op, n)
    dim = size - rank
    if dim < 0:
        raise ContractViolationError(f"negative dimension for {op.display()}")
    return dim


def poincare_series(op: OperadId, order: int) -> TruncatedSeries:
    """sum over n of (-1)^n dim(n) x^n / n!, exactly, up to the given order."""
    if order < 1:
        raise InputError("series order must be at least 1")
    coeffs = []
    for n in range(1, order + 1):
        d = operad_dimension(op, n)
        coeffs.append(Fraction((-1) ** n * d, factorial(n)))
    return TruncatedSeries(tuple(coeffs))


def koszul_residual(op: OperadId, order: int) -> TruncatedSeries:
    """Series composition g_op(g_dual(x)) minus x; zero iff the functional
    equation holds to the given order."""
    outer = poincare_series(op, order)
    inner = poincare_series(op.dual_id(), order)
    composed = outer.compose(inner)
    x = TruncatedSeries.monomial(order)
    return composed - x
