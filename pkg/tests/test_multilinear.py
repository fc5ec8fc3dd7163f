"""Multilinear maps, insertion products, and the cochain differential.

The differential is pinned against a 24-term explicit signed expansion
written out block by block, evaluated on basis triples with no shared
code path.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lieadm.algebra import Algebra
from lieadm.errors import InputError, PreconditionError
from lieadm.fixtures import get_fixture
from lieadm.multilinear import (
    MultiMap,
    algebra_from_bilinear,
    antisymmetrize,
    c0_space,
    chevalley_differential,
    comp_product_1,
    differential,
    graded_bracket,
    h_map,
    lemma_scaling_probe,
    mu_multimap,
    odot,
    odot6_reference,
)
from lieadm.permutations import SubgroupId
from lieadm.sampling import (
    random_alternating_bilinear,
    random_multimap,
    random_vector,
)

# Each block is (sign, first, second): a pair in first position means
# outer(inner(Xa, Xb), Xc), a pair in second means outer(Xc, inner(Xa, Xb)).
# The full expansion sums the twelve blocks for (outer, inner) = (law, phi)
# and again for (outer, inner) = (phi, law).
BLOCKS = (
    (+1, (1, 2), 3),
    (-1, 1, (2, 3)),
    (+1, (2, 3), 1),
    (-1, 2, (3, 1)),
    (-1, 3, (1, 2)),
    (+1, (3, 1), 2),
    (-1, (2, 1), 3),
    (+1, 2, (1, 3)),
    (-1, (3, 2), 1),
    (+1, 3, (2, 1)),
    (+1, 1, (3, 2)),
    (-1, (1, 3), 2),
)


def bracket_expansion(law: MultiMap, phi: MultiMap) -> MultiMap:
    dim = law.dim

    def value(t: tuple[int, ...]) -> tuple[Fraction, ...]:
        xs = {
            i + 1: tuple(
                Fraction(1 if k == t[i] else 0) for k in range(dim)
            )
            for i in range(3)
        }
        out = [Fraction(0)] * dim
        for outer, inner in ((law, phi), (phi, law)):
            for sign, first, second in BLOCKS:
                if isinstance(first, tuple):
                    a, b = first
                    v = outer.apply(inner.apply(xs[a], xs[b]), xs[second])
                else:
                    a, b = second
                    v = outer.apply(xs[first], inner.apply(xs[a], xs[b]))
                for k in range(dim):
                    out[k] += sign * v[k]
        return tuple(out)

    return MultiMap.from_basis_function(dim, 3, value)


def test_multimap_shape_validation():
    with pytest.raises(InputError):
        MultiMap(2, 2, (Fraction(0),) * 7)
    z = MultiMap.zero(2, 2)
    assert z.is_zero() and len(z.data) == 8
    with pytest.raises(InputError):
        z.apply((Fraction(1), Fraction(0)))


def test_apply_is_multilinear(rng: random.Random):
    f = random_multimap(rng, 3, 2)
    u = random_vector(rng, 3)
    v = random_vector(rng, 3)
    w = random_vector(rng, 3)
    s = Fraction(3, 2)
    left = f.apply(tuple(s * a + b for a, b in zip(u, v)), w)
    right = tuple(
        s * x + y for x, y in zip(f.apply(u, w), f.apply(v, w))
    )
    assert left == right


def test_value_on_basis_matches_apply():
    alg = get_fixture("b7")
    m = mu_multimap(alg)
    for i in range(2):
        for j in range(2):
            assert m.value_on_basis((i, j)) == alg.multiply(
                alg.basis_vector(i + 1), alg.basis_vector(j + 1)
            )


def test_mu_multimap_round_trip():
    alg = get_fixture("a8")
    again = algebra_from_bilinear(mu_multimap(alg))
    assert again == Algebra(alg.dim, alg.c)
    with pytest.raises(InputError):
        algebra_from_bilinear(MultiMap.zero(2, 3))


def test_antisymmetrize_is_alternating_and_scales(rng: random.Random):
    f = random_multimap(rng, 3, 2)
    p = antisymmetrize(f)
    u = random_vector(rng, 3)
    v = random_vector(rng, 3)
    assert p.apply(u, v) == tuple(-x for x in p.apply(v, u))
    assert p.apply(u, u) == (Fraction(0),) * 3
    # P is idempotent up to the factorial of the arity.
    assert antisymmetrize(p) == p.scale(2)


def test_comp_product_arity_arithmetic(rng: random.Random):
    f = random_multimap(rng, 2, 2)
    g = random_multimap(rng, 2, 3)
    assert comp_product_1(f, g).arity == 4
    assert comp_product_1(g, f).arity == 4
    assert odot(6, f, g).arity == 4


def test_odot6_equals_antisymmetrized_insertion(rng: random.Random):
    for dims, arities in (((3, (2, 2))), ((3, (2, 3)))):
        f = random_multimap(rng, dims, arities[0])
        g = random_multimap(rng, dims, arities[1])
        expected = antisymmetrize(comp_product_1(f, g))
        assert odot(6, f, g) == expected
        assert odot6_reference(f, g) == expected


def test_law_self_products_detect_signed_conditions():
    for name in ("a1", "a7", "a8", "sl2", "solv2", "heis3", "b7"):
        alg = get_fixture(name)
        law = mu_multimap(alg)
        for i, g in enumerate(SubgroupId, start=1):
            assert odot(i, law, law).is_zero() == alg.g_associative(g), (
                name,
                g,
            )


def test_differential_matches_24_term_expansion(rng: random.Random):
    for name in ("sl2", "heis3"):
        mu = get_fixture(name)
        law = mu_multimap(mu)
        for _ in range(5):
            phi = random_multimap(rng, mu.dim, 2)
            assert bracket_expansion(law, phi) == differential(mu, phi).scale(-1)


def test_differential_vanishes_on_two_dimensional_laws(rng: random.Random):
    # An alternating trilinear map needs three independent arguments.
    mu = get_fixture("solv2")
    for _ in range(5):
        phi = random_multimap(rng, 2, 2)
        assert differential(mu, phi).is_zero()


def test_differential_squares_to_zero(rng: random.Random):
    for name in ("sl2", "heis3", "solv2", "a1", "b7"):
        mu = get_fixture(name)
        for arity in (1, 2):
            for _ in range(5):
                phi = random_multimap(rng, mu.dim, arity)
                assert differential(mu, differential(mu, phi)).is_zero(), (
                    name,
                    arity,
                )


def test_differential_rejects_non_admissible_law():
    sl2 = get_fixture("sl2")
    c = [[list(row) for row in plane] for plane in sl2.c]
    c[0][1] = [-x for x in c[0][1]]
    broken = Algebra(3, tuple(tuple(tuple(r) for r in p) for p in c))
    assert not broken.g_associative(SubgroupId.G6)
    with pytest.raises(PreconditionError):
        differential(broken, MultiMap.zero(3, 2))


def test_graded_bracket_arities_and_symmetry(rng: random.Random):
    f = random_multimap(rng, 3, 2)
    g = random_multimap(rng, 3, 2)
    result = graded_bracket(f, g)
    assert result.value.arity == 3
    # Odd-degree maps (arity 2 means degree 1): [f,g] = [g,f].
    assert graded_bracket(g, f).value == result.value
    law = mu_multimap(get_fixture("sl2"))
    assert graded_bracket(law, law).value == odot(6, law, law).scale(2)


def test_chevalley_factor_four(rng: random.Random):
    for name in ("sl2", "solv2"):
        mu = get_fixture(name)
        for _ in range(5):
            phi = random_alternating_bilinear(rng, mu.dim)
            assert differential(mu, phi) == chevalley_differential(mu, phi).scale(4)


def test_chevalley_preconditions():
    with pytest.raises(PreconditionError):
        chevalley_differential(get_fixture("b7"), MultiMap.zero(2, 2))
    sl2 = get_fixture("sl2")
    symmetric = MultiMap.from_basis_function(
        3,
        2,
        lambda ins: tuple(
            Fraction(1 if ins == (0, 0) and k == 0 else 0) for k in range(3)
        ),
    )
    with pytest.raises(PreconditionError):
        chevalley_differential(sl2, symmetric)


def test_lemma_scaling_constants(rng: random.Random):
    f = random_multimap(rng, 3, 2)
    g = random_multimap(rng, 3, 2)
    assert lemma_scaling_probe(f, g) == (Fraction(2), Fraction(2))
    f3 = random_multimap(rng, 4, 2)
    g3 = random_multimap(rng, 4, 3)
    assert lemma_scaling_probe(f3, g3) == (Fraction(2), Fraction(6))


def test_lemma_probe_needs_nonzero_base(rng: random.Random):
    # Alternating bilinear maps over dim 2 give an alternating trilinear
    # product, which vanishes identically there.
    f = random_alternating_bilinear(rng, 2)
    g = random_alternating_bilinear(rng, 2)
    with pytest.raises(PreconditionError):
        lemma_scaling_probe(f, g)


def test_h_map_is_the_commutator_action(rng: random.Random):
    mu = get_fixture("a8")
    x = random_vector(rng, 2)
    h = h_map(mu, x)
    y = random_vector(rng, 2)
    expected = tuple(
        a - b
        for a, b in zip(mu.multiply(x, y), mu.multiply(y, x))
    )
    assert h.apply(y) == expected
    with pytest.raises(InputError):
        h_map(mu, (Fraction(1),))


def test_c0_space_dimensions():
    expected = {"b7": 2, "a1": 2, "zero4": 4, "heis3": 3, "sl2": 3, "solv2": 2}
    for name, dim in expected.items():
        assert len(c0_space(get_fixture(name))) == dim, name


def test_c0_space_requires_admissible_law():
    sl2 = get_fixture("sl2")
    c = [[list(row) for row in plane] for plane in sl2.c]
    c[0][1] = [-x for x in c[0][1]]
    broken = Algebra(3, tuple(tuple(tuple(r) for r in p) for p in c))
    with pytest.raises(PreconditionError):
        c0_space(broken)
