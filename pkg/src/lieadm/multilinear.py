"""Dense multilinear maps and the insertion products built on them.

A :class:`MultiMap` is a k-linear map on a fixed finite-dimensional space,
stored as a dense rational tensor.  On top of it live the antisymmetrization
operator ``P``, the six insertion products ``odot(1..6)``, the graded bracket,
and the coboundary operators used throughout the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Sequence

from .algebra import Algebra
from .errors import ContractViolationError, InputError, PreconditionError
from .linalg import Vector, nullspace, vec_sub
from .permutations import Permutation, signature

MAX_MAP_ARITY = 4
MAX_MAP_DIM = 6

# Dense storage is data[flat(inputs) * dim + output] with row-major flat();
# cost n**(k+1) bounds both caps above.


def _check_shape(dim: int, arity: int) -> None:
    if dim < 1 or dim > MAX_MAP_DIM:
        raise InputError(f"map dimension {dim} outside 1..{MAX_MAP_DIM}")
    if arity < 0 or arity > MAX_MAP_ARITY:
        raise InputError(f"map arity {arity} outside 0..{MAX_MAP_ARITY}")


@dataclass(frozen=True)
class MultiMap:
    """A k-linear map V^k -> V over the rationals, as a dense tensor."""

    dim: int
    arity: int
    data: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        _check_shape(self.dim, self.arity)
        if len(self.data) != self.dim ** (self.arity + 1):
            raise InputError("tensor size does not match dim and arity")

    @staticmethod
    def zero(dim: int, arity: int) -> MultiMap:
        _check_shape(dim, arity)
        return MultiMap(dim, arity, (Fraction(0),) * dim ** (arity + 1))

    @staticmethod
    def from_basis_function(
        dim: int, arity: int, fn: Callable[[tuple[int, ...]], Sequence[Fraction]]
    ) -> MultiMap:
        """Build from values on basis tuples; ``fn`` takes 0-based indices."""
        _check_shape(dim, arity)
        data: list[Fraction] = []
        for ins in product(range(dim), repeat=arity):
            value = fn(ins)
            if len(value) != dim:
                raise InputError("basis value has wrong length")
            data.extend(Fraction(v) for v in value)
        return MultiMap(dim, arity, tuple(data))

    def _flat(self, ins: tuple[int, ...]) -> int:
        index = 0
        for i in ins:
            index = index * self.dim + i
        return index * self.dim

    def value_on_basis(self, ins: tuple[int, ...]) -> Vector:
        """Value on a tuple of 0-based basis indices."""
        base = self._flat(ins)
        return self.data[base : base + self.dim]

    def entry(self, ins: tuple[int, ...], out: int) -> Fraction:
        return self.data[self._flat(ins) + out]

    def apply(self, *vectors: Sequence[Fraction]) -> Vector:
        if len(vectors) != self.arity:
            raise InputError(f"expected {self.arity} arguments")
        for v in vectors:
            if len(v) != self.dim:
                raise InputError("argument length does not match dimension")
        out = [Fraction(0)] * self.dim
        for ins in product(range(self.dim), repeat=self.arity):
            coeff = Fraction(1)
            for v, i in zip(vectors, ins):
                coeff *= v[i]
                if coeff == 0:
                    break
            if coeff == 0:
                continue
            base = self._flat(ins)
            for k in range(self.dim):
                if self.data[base + k] != 0:
                    out[k] += coeff * self.data[base + k]
        return tuple(out)

    def __add__(self, other: MultiMap) -> MultiMap:
        self._compatible(other)
        return MultiMap(
            self.dim,
            self.arity,
            tuple(a + b for a, b in zip(self.data, other.data)),
        )

    def __sub__(self, other: MultiMap) -> MultiMap:
        self._compatible(other)
        return MultiMap(
            self.dim,
            self.arity,
            tuple(a - b for a, b in zip(self.data, other.data)),
        )

    def __neg__(self) -> MultiMap:
        return MultiMap(self.dim, self.arity, tuple(-a for a in self.data))

    def scale(self, s: Fraction | int) -> MultiMap:
        s = Fraction(s)
        return MultiMap(self.dim, self.arity, tuple(s * a for a in self.data))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.data)

    def permute_arguments(self, p: Permutation) -> MultiMap:
        """The map (X_1,..,X_k) -> f(X_{p(1)},..,X_{p(k)})."""
        if p.degree != self.arity:
            raise InputError("permutation degree must equal the arity")
        images = p.images

        def value(ins: tuple[int, ...]) -> Vector:
            return self.value_on_basis(tuple(ins[i - 1] for i in images))

        return MultiMap.from_basis_function(self.dim, self.arity, value)

    def is_symmetric(self) -> bool:
        if self.arity != 2:
            raise InputError("symmetry check is for bilinear maps")
        n = self.dim
        return all(
            self.value_on_basis((i, j)) == self.value_on_basis((j, i))
            for i in range(n)
            for j in range(i + 1, n)
        )

    def is_alternating(self) -> bool:
        """True when swapping any two adjacent arguments negates the map."""
        if self.arity < 2:
            return True
        for pos in range(1, self.arity):
            images = list(range(1, self.arity + 1))
            images[pos - 1], images[pos] = images[pos], images[pos - 1]
            swapped = self.permute_arguments(Permutation(tuple(images)))
            if any(a != -b for a, b in zip(self.data, swapped.data)):
                return False
        return True

    def _compatible(self, other: MultiMap) -> None:
        if self.dim != other.dim or self.arity != other.arity:
            raise InputError("maps have mismatched dimension or arity")


def mu_multimap(alg: Algebra) -> MultiMap:
    """The multiplication of ``alg`` as a bilinear MultiMap."""
    if alg.dim > MAX_MAP_DIM:
        raise InputError(f"algebra dimension exceeds map cap {MAX_MAP_DIM}")
    return MultiMap.from_basis_function(
        alg.dim, 2, lambda ins: alg.c[ins[0]][ins[1]]
    )


def identity_map(dim: int) -> MultiMap:
    return MultiMap.from_basis_function(
        dim, 1, lambda ins: tuple(Fraction(1 if k == ins[0] else 0) for k in range(dim))
    )


def algebra_from_bilinear(m: MultiMap, name: str = "") -> Algebra:
    """Package a bilinear map as an Algebra (inverse of mu_multimap)."""
    if m.arity != 2:
        raise InputError("an algebra law must be bilinear")
    c = tuple(
        tuple(m.value_on_basis((i, j)) for j in range(m.dim))
        for i in range(m.dim)
    )
    return Algebra(m.dim, c, name=name)


def compose_at(f: MultiMap, i: int, g: MultiMap) -> MultiMap:
    """Insertion f o_i g: feed g's output into the i-th slot of f (1-based)."""
    if f.dim != g.dim:
        raise InputError("maps have mismatched dimension")
    n, m = f.arity, g.arity
    if n < 1 or m < 1:
        raise InputError("insertion needs arities at least 1")
    if not 1 <= i <= n:
        raise InputError(f"insertion slot {i} outside 1..{n}")
    arity = n + m - 1
    _check_shape(f.dim, arity)
    dim = f.dim

    def value(ins: tuple[int, ...]) -> Vector:
        inner = g.value_on_basis(ins[i - 1 : i - 1 + m])
        out = [Fraction(0)] * dim
        head, tail = ins[: i - 1], ins[i - 1 + m :]
        for t in range(dim):
            if inner[t] == 0:
                continue
            row = f.value_on_basis(head + (t,) + tail)
            for k in range(dim):
                if row[k] != 0:
                    out[k] += inner[t] * row[k]
        return tuple(out)

    return MultiMap.from_basis_function(dim, arity, value)


def comp_product_1(f: MultiMap, g: MultiMap) -> MultiMap:
    """Signed insertion sum: sum_i (-1)^((i-1)(m-1)) f o_i g."""
    n, m = f.arity, g.arity
    total = MultiMap.zero(f.dim, n + m - 1)
    for i in range(1, n + 1):
        term = compose_at(f, i, g)
        if (i - 1) * (m - 1) % 2:
            term = -term
        total = total + term
    return total


@lru_cache(maxsize=None)
def _basis_tuples(dim: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(product(range(dim), repeat=k))


@lru_cache(maxsize=None)
def _argument_tables(
    dim: int, k: int
) -> tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]:
    """(images, sign, block table) per permutation of k arguments.

    table[flat(ins)] = flat(ins composed with the permutation), so a signed
    argument sum is a pure gather over precomputed indices.
    """
    tuples = _basis_tuples(dim, k)
    flat_of = {t: i for i, t in enumerate(tuples)}
    rows = []
    for images in permutations(range(1, k + 1)):
        sign = signature(Permutation(images))
        table = tuple(
            flat_of[tuple(t[i - 1] for i in images)] for t in tuples
        )
        rows.append((images, sign, table))
    return tuple(rows)


def _signed_argument_sum(
    h: MultiMap, rows: Sequence[tuple[tuple[int, ...], int, tuple[int, ...]]]
) -> MultiMap:
    dim = h.dim
    data = [Fraction(0)] * len(h.data)
    source = h.data
    for _, sign, table in rows:
        for target, src in enumerate(table):
            base_t = target * dim
            base_s = src * dim
            for c in range(dim):
                v = source[base_s + c]
                if v:
                    data[base_t + c] += v if sign > 0 else -v
    return MultiMap(dim, h.arity, tuple(data))


def antisymmetrize(f: MultiMap) -> MultiMap:
    """P(f): the signed sum of f over all permutations of its arguments."""
    if f.arity < 1:
        raise InputError("antisymmetrization needs arity at least 1")
    return _signed_argument_sum(f, _argument_tables(f.dim, f.arity))


def odot(i: int, f: MultiMap, g: MultiMap) -> MultiMap:
    """The i-th insertion product, i in 1..6.

    odot(1) is the plain signed insertion sum; odot(6) is its full signed
    symmetrization P(f odot_1 g).  odot(2), odot(3) and odot(4) symmetrize
    over the permutations fixing the last, first and second argument
    respectively, and odot(5) sums over the even permutations.  At arity
    pair (2, 2) the products odot(2)..odot(6) applied to a law with itself
    are exactly the five signed associator-sum defect operators.
    """
    if i == 1:
        return comp_product_1(f, g)
    h = comp_product_1(f, g)
    k = h.arity
    rows = _argument_tables(h.dim, k)
    if i == 2:
        selected = [r for r in rows if r[0][k - 1] == k]
    elif i == 3:
        selected = [r for r in rows if r[0][0] == 1]
    elif i == 4:
        if k < 2:
            raise InputError("odot(4) needs result arity at least 2")
        selected = [r for r in rows if r[0][1] == 2]
    elif i == 5:
        selected = [(im, 1, table) for im, sign, table in rows if sign == 1]
    elif i == 6:
        selected = list(rows)
    else:
        raise InputError(f"odot index {i} outside 1..6")
    return _signed_argument_sum(h, selected)


def odot6_reference(f: MultiMap, g: MultiMap) -> MultiMap:
    """Literal double sum over permutations and insertion slots.

    Kept as an independent evaluation route for odot(6); no intermediate
    tensors are formed.
    """
    if f.dim != g.dim:
        raise InputError("maps have mismatched dimension")
    n, m = f.arity, g.arity
    k = n + m - 1
    _check_shape(f.dim, k)
    dim = f.dim
    data: list[Fraction] = []
    perms = [
        (images, signature(Permutation(images)))
        for images in permutations(range(1, k + 1))
    ]
    for ins in product(range(dim), repeat=k):
        out = [Fraction(0)] * dim
        for images, sign in perms:
            arranged = tuple(ins[j - 1] for j in images)
            for slot in range(1, n + 1):
                term_sign = sign * (-1 if (slot - 1) * (m - 1) % 2 else 1)
                inner = g.value_on_basis(arranged[slot - 1 : slot - 1 + m])
                head = arranged[: slot - 1]
                tail = arranged[slot - 1 + m :]
                for t in range(dim):
                    if inner[t] == 0:
                        continue
                    row = f.value_on_basis(head + (t,) + tail)
                    for c in range(dim):
                        if row[c] != 0:
                            out[c] += term_sign * inner[t] * row[c]
        data.extend(out)
    return MultiMap(dim, k, tuple(data))


@dataclass(frozen=True)
class GradedBracketResult:
    """Bracket value together with the arities that produced it."""

    value: MultiMap
    left_arity: int
    right_arity: int

    def __post_init__(self) -> None:
        if self.value.arity != self.left_arity + self.right_arity - 1:
            raise ContractViolationError("bracket arity arithmetic violated")


def graded_bracket(f: MultiMap, g: MultiMap) -> GradedBracketResult:
    """[f,g] = f odot_6 g - (-1)^((n-1)(m-1)) g odot_6 f."""
    n, m = f.arity, g.arity
    left = odot(6, f, g)
    right = odot(6, g, f)
    if (n - 1) * (m - 1) % 2 == 0:
        value = left - right
    else:
        value = left + right
    return GradedBracketResult(value, n, m)


@lru_cache(maxsize=64)
def _cached_law(mu: Algebra) -> tuple[MultiMap, bool]:
    law = mu_multimap(mu)
    return law, odot(6, law, law).is_zero()


def differential(mu: Algebra, phi: MultiMap) -> MultiMap:
    """Coboundary of phi: minus the graded bracket of the law with phi.

    Requires the law to square to zero under odot(6), i.e. the commutator
    must satisfy Jacobi.
    """
    law, admissible = _cached_law(mu)
    if phi.dim != mu.dim:
        raise InputError("cochain dimension does not match the algebra")
    if phi.arity < 1 or phi.arity + 1 > MAX_MAP_ARITY:
        raise PreconditionError(
            f"cochain arity must be 1..{MAX_MAP_ARITY - 1} for the differential"
        )
    if not admissible:
        raise PreconditionError(
            "law does not satisfy the alternating associator-sum identity"
        )
    return -graded_bracket(law, phi).value


def chevalley_differential(mu: Algebra, phi: MultiMap) -> MultiMap:
    """Classical coboundary of an alternating 2-cochain over a Lie law."""
    if not mu.is_antisymmetric():
        raise PreconditionError("law must be antisymmetric")
    if not mu.jacobi_holds():
        raise PreconditionError("law must satisfy Jacobi")
    if phi.dim != mu.dim or phi.arity != 2:
        raise PreconditionError("cochain must be bilinear on the same space")
    if not phi.is_alternating():
        raise PreconditionError("cochain must be alternating")

    def value(ins: tuple[int, ...]) -> Vector:
        x1 = mu.basis_vector(ins[0] + 1)
        x2 = mu.basis_vector(ins[1] + 1)
        x3 = mu.basis_vector(ins[2] + 1)
        out = mu.multiply(x1, phi.apply(x2, x3))
        out = vec_sub(out, mu.multiply(x2, phi.apply(x1, x3)))
        out = tuple(
            a + b for a, b in zip(out, mu.multiply(x3, phi.apply(x1, x2)))
        )
        out = vec_sub(out, phi.apply(mu.multiply(x1, x2), x3))
        out = tuple(
            a + b for a, b in zip(out, phi.apply(mu.multiply(x1, x3), x2))
        )
        out = vec_sub(out, phi.apply(mu.multiply(x2, x3), x1))
        return out

    return MultiMap.from_basis_function(mu.dim, 3, value)


def lemma_scaling_probe(f: MultiMap, g: MultiMap) -> tuple[Fraction, Fraction]:
    """Scalars (c1, c2) with P(P(f) o g) = c1 P(f o g), P(f o P(g)) = c2 P(f o g).

    Raises if the base P(f o g) vanishes or either side fails to be an exact
    scalar multiple of it.
    """
    base = antisymmetrize(comp_product_1(f, g))
    if base.is_zero():
        raise PreconditionError("P(f odot_1 g) vanishes; no scale to measure")
    lhs1 = antisymmetrize(comp_product_1(antisymmetrize(f), g))
    lhs2 = antisymmetrize(comp_product_1(f, antisymmetrize(g)))

    def ratio(lhs: MultiMap) -> Fraction:
        pivot = next(t for t, a in enumerate(base.data) if a != 0)
        c = lhs.data[pivot] / base.data[pivot]
        if any(x != c * b for x, b in zip(lhs.data, base.data)):
            raise ContractViolationError(
                "scaled identity fails: side is not proportional to P(f odot_1 g)"
            )
        return c

    return ratio(lhs1), ratio(lhs2)


def h_map(mu: Algebra, x: Sequence[Fraction]) -> MultiMap:
    """The commutator-with-x map Y -> mu(x, Y) - mu(Y, x)."""
    if len(x) != mu.dim:
        raise InputError("vector length does not match the algebra")

    def value(ins: tuple[int, ...]) -> Vector:
        y = mu.basis_vector(ins[0] + 1)
        return vec_sub(mu.multiply(x, y), mu.multiply(y, x))

    return MultiMap.from_basis_function(mu.dim, 1, value)


def c0_space(mu: Algebra) -> tuple[Vector, ...]:
    """Basis of the degree-0 cocycle space {x : differential(h_x) = 0}.

    The coboundary of h_x is symmetric whenever the law is admissible, so
    being fixed by P forces it to vanish; the space is the kernel of the
    linear map x -> differential(mu, h_map(mu, x)).
    """
    from .permutations import SubgroupId

    if not mu.g_associative(SubgroupId.G6):
        raise PreconditionError("law must have Jacobi-compatible commutator")
    tensors = [
        differential(mu, h_map(mu, mu.basis_vector(i + 1))).data
        for i in range(mu.dim)
    ]
    rows = [
        tuple(tensors[i][c] for i in range(mu.dim))
        for c in range(len(tensors[0]))
    ]
    return nullspace(rows, mu.dim)
