"""Bimodule axioms, scalar and matrix relation characterizations, and the
split null extension used as an independent route to the same checks."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from lieadm.errors import InputError, PreconditionError
from lieadm.fixtures import fixture_names, get_fixture
from lieadm.linalg import (
    mat_add,
    mat_commutator,
    mat_from_rows,
    mat_inverse,
    mat_mul,
    mat_scale,
    mat_sub,
)
from lieadm.modules import (
    BimodulePair,
    ModuleFlavor,
    check_module,
    hat_lambda,
    regular_pair,
    sl2_matrix_relations,
    solvable2_matrix_relation,
    solvable2_scalar_pair,
    split_null_extension,
)
from lieadm.permutations import SubgroupId
from lieadm.sampling import random_matrix

FLAVOR_SUBGROUP = {
    ModuleFlavor.LieAdm: SubgroupId.G6,
    ModuleFlavor.Vinberg: SubgroupId.G2,
    ModuleFlavor.Type4: SubgroupId.G4,
    ModuleFlavor.Type5: SubgroupId.G5,
}


def adjoint_matrices(alg):
    comm = alg.commutator_lie()
    n = alg.dim
    return [
        mat_from_rows([[comm.c[i][l][k] for l in range(n)] for k in range(n)])
        for i in range(n)
    ]


def test_pair_shape_validation():
    solv2 = get_fixture("solv2")
    z = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    with pytest.raises(PreconditionError):
        BimodulePair(solv2, 0, (), ())
    with pytest.raises(PreconditionError):
        BimodulePair(solv2, 2, (z,), (z, z))
    with pytest.raises(PreconditionError):
        BimodulePair(solv2, 2, (z, ((Fraction(0),),)), (z, z))
    zero = BimodulePair.zero(solv2, 3)
    assert check_module(zero, ModuleFlavor.LieAdm).ok


def test_regular_pair_is_a_module_for_every_admissible_law():
    names = [n for n in fixture_names() if n != "zero<n>"] + ["zero2", "zero4"]
    for name in names:
        alg = get_fixture(name)
        assert alg.g_associative(SubgroupId.G6), name
        assert check_module(regular_pair(alg), ModuleFlavor.LieAdm).ok, name


def test_scalar_family_members_are_valid(rng: random.Random):
    for _ in range(20):
        a, b, g = (
            Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(3)
        )
        pair = solvable2_scalar_pair(a, b, g)
        assert check_module(pair, ModuleFlavor.LieAdm).ok, (a, b, g)


def test_perturbed_scalar_pair_fails_with_witness():
    bad = BimodulePair.from_lists(
        get_fixture("solv2"), 1, [[[1]], [[2]]], [[[3]], [[5]]]
    )
    res = check_module(bad, ModuleFlavor.LieAdm)
    assert not res.ok and not bool(res)
    assert res.witness is not None
    text = res.witness.describe()
    assert "fails at (e" in text and "on module vector v" in text


def test_matrix_relation_matches_module_check_on_solvable_law(
    rng: random.Random,
):
    solv2 = get_fixture("solv2")
    valid = 0
    for trial in range(200):
        a, b, c, d = (random_matrix(rng, 2) for _ in range(4))
        pair = BimodulePair(solv2, 2, (a, b), (c, d))
        lhs = solvable2_matrix_relation(a, b, c, d)
        rhs = check_module(pair, ModuleFlavor.LieAdm).ok
        assert lhs == rhs, trial
        valid += lhs
    # Random quadruples almost never satisfy the relation; the equivalence
    # must also be exercised on valid instances, below.
    assert valid <= 5


def test_shifted_quadruples_are_valid_and_need_the_factor_two(
    rng: random.Random,
):
    solv2 = get_fixture("solv2")
    p = mat_from_rows([[0, 0], [0, 2]])
    q = mat_from_rows([[0, 0], [-2, 0]])
    assert mat_commutator(p, q) == mat_scale(2, q)
    for _ in range(25):
        c, d = random_matrix(rng, 2), random_matrix(rng, 2)
        a, b = mat_add(p, c), mat_add(q, d)
        assert solvable2_matrix_relation(a, b, c, d)
        assert check_module(
            BimodulePair(solv2, 2, (a, b), (c, d)), ModuleFlavor.LieAdm
        ).ok
        # The unscaled version [(B-D),(C-A)] = (B-D) rejects these.
        assert mat_commutator(mat_sub(b, d), mat_sub(c, a)) != mat_sub(b, d)
    for _ in range(15):
        c, d, x = (random_matrix(rng, 3) for _ in range(3))
        a = mat_add(x, c)
        pair = BimodulePair(solv2, 3, (a, d), (c, d))
        assert solvable2_matrix_relation(a, d, c, d)
        assert check_module(pair, ModuleFlavor.LieAdm).ok


def test_matrix_relation_rejects_non_square_input():
    sq = mat_from_rows([[1, 0], [0, 1]])
    rect = (
        (Fraction(1), Fraction(0)),
        (Fraction(0),),
    )
    with pytest.raises(InputError):
        solvable2_matrix_relation(sq, sq, sq, rect)


def test_simple_law_relations_match_module_check(rng: random.Random):
    sl2 = get_fixture("sl2")
    for trial in range(120):
        mats = [random_matrix(rng, 2) for _ in range(6)]
        pair = BimodulePair(sl2, 2, tuple(mats[:3]), tuple(mats[3:]))
        assert sl2_matrix_relations(*mats) == check_module(
            pair, ModuleFlavor.LieAdm
        ).ok, trial


def test_adjoint_shifted_simple_instance_is_valid(rng: random.Random):
    sl2 = get_fixture("sl2")
    ad = adjoint_matrices(sl2)
    right = [random_matrix(rng, 3) for _ in range(3)]
    left = [mat_add(ad[i], right[i]) for i in range(3)]
    assert sl2_matrix_relations(*left, *right)
    pair = BimodulePair(sl2, 3, tuple(left), tuple(right))
    assert check_module(pair, ModuleFlavor.LieAdm).ok
    assert hat_lambda(pair) == tuple(ad)


def test_hat_of_regular_pair_is_the_adjoint_action():
    for name in ("b7", "a1", "a8", "sl2", "heis3", "solv2", "abel5_3order"):
        alg = get_fixture(name)
        hats = hat_lambda(regular_pair(alg))
        assert list(hats) == adjoint_matrices(alg), name


def test_hat_of_scalar_family():
    pair = solvable2_scalar_pair(Fraction(3), Fraction(5, 2), Fraction(1))
    hats = hat_lambda(pair)
    assert hats == (((Fraction(2),),), ((Fraction(0),),))


def test_hat_requires_a_valid_pair():
    bad = BimodulePair.from_lists(
        get_fixture("solv2"), 1, [[[1]], [[2]]], [[[3]], [[5]]]
    )
    with pytest.raises(PreconditionError):
        hat_lambda(bad)


def test_lie_modules_satisfy_weaker_flavors(rng: random.Random):
    solv2 = get_fixture("solv2")
    p = mat_from_rows([[0, 0], [0, 1]])
    q = mat_from_rows([[0, 0], [1, 0]])
    done = 0
    while done < 10:
        g = random_matrix(rng, 2)
        try:
            gi = mat_inverse(g)
        except PreconditionError:
            continue
        l1 = mat_mul(mat_mul(g, p), gi)
        l2 = mat_mul(mat_mul(g, q), gi)
        pair = BimodulePair(
            solv2, 2, (l1, l2), (mat_scale(-1, l1), mat_scale(-1, l2))
        )
        assert check_module(pair, ModuleFlavor.Lie).ok
        assert check_module(pair, ModuleFlavor.LieAdm).ok
        assert check_module(pair, ModuleFlavor.Type5).ok
        done += 1


def test_lie_flavor_requires_right_equals_minus_left():
    fam = solvable2_scalar_pair(2, 3, 1)
    assert check_module(fam, ModuleFlavor.LieAdm).ok
    with pytest.raises(PreconditionError):
        check_module(fam, ModuleFlavor.Lie)


def test_lie_flavor_requires_a_lie_law():
    b7 = get_fixture("b7")
    with pytest.raises(PreconditionError):
        check_module(BimodulePair.zero(b7, 1), ModuleFlavor.Lie)


def test_flavor_requires_a_compatible_law():
    sl2 = get_fixture("sl2")
    with pytest.raises(PreconditionError):
        check_module(BimodulePair.zero(sl2, 1), ModuleFlavor.Vinberg)


def test_split_null_extension_structure(rng: random.Random):
    alg = get_fixture("b7")
    pair = BimodulePair(
        alg,
        2,
        tuple(random_matrix(rng, 2) for _ in range(2)),
        tuple(random_matrix(rng, 2) for _ in range(2)),
    )
    big = split_null_extension(pair)
    assert big.dim == 4
    for i in range(2):
        for j in range(2):
            assert big.c[i][j][:2] == alg.c[i][j]
            assert all(x == 0 for x in big.c[i][j][2:])
            # Module-by-module products vanish.
            assert all(x == 0 for x in big.c[2 + i][2 + j])


def test_split_null_extension_equivalence(rng: random.Random):
    cases = {
        ModuleFlavor.LieAdm: ("solv2", "sl2", "b7"),
        ModuleFlavor.Vinberg: ("b7", "a1"),
        ModuleFlavor.Type4: ("a6", "b7"),
        ModuleFlavor.Type5: ("solv2", "heis3", "b7"),
    }
    for flavor, names in cases.items():
        gid = FLAVOR_SUBGROUP[flavor]
        for name in names:
            alg = get_fixture(name)
            assert alg.g_associative(gid), (flavor, name)
            for trial in range(15):
                pair = BimodulePair(
                    alg,
                    2,
                    tuple(random_matrix(rng, 2) for _ in range(alg.dim)),
                    tuple(random_matrix(rng, 2) for _ in range(alg.dim)),
                )
                direct = check_module(pair, flavor).ok
                via_extension = split_null_extension(pair).g_associative(gid)
                assert direct == via_extension, (flavor, name, trial)
            reg = regular_pair(alg)
            assert check_module(reg, flavor).ok == split_null_extension(
                reg
            ).g_associative(gid)
