"""Operad dimensions, quadratic duals, and series pairings.

The arity-4 dimensions are cross-checked two independent ways: exact rank
of the relation ideal, and the order-4 coefficient forced by the series
functional equation given the lower-order data.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from lieadm.algebra import Identity3Id
from lieadm.errors import InputError
from lieadm.linalg import spans_equal
from lieadm.operads import (
    OperadId,
    dual_identities,
    koszul_residual,
    operad_dimension,
    operad_for_subgroup,
    orthogonal_complement,
    poincare_series,
    relation_module,
)
from lieadm.permutations import SubgroupId
from lieadm.series import TruncatedSeries

PRIMALS = [OperadId(b) for b in ("Ass", "Vinb", "PreLie", "G4Ass", "G5Ass", "LieAdm")]
ARITY3 = {"Ass": 6, "Vinb": 9, "PreLie": 9, "G4Ass": 9, "G5Ass": 10, "LieAdm": 11}
DUAL3 = {"Ass": 6, "Vinb": 3, "PreLie": 3, "G4Ass": 3, "G5Ass": 2, "LieAdm": 1}
ARITY4 = {"Ass": 24, "Vinb": 64, "PreLie": 64, "G4Ass": 61, "G5Ass": 81, "LieAdm": 101}
DUAL4 = {"Ass": 24, "Vinb": 4, "PreLie": 4, "G4Ass": 1, "G5Ass": 1, "LieAdm": 1}


def test_operad_id_parse_and_display():
    assert OperadId.parse("Vinb!").dual
    assert OperadId.parse("Perm") == OperadId("PreLie", True)
    assert OperadId.parse(" LieAdm ").display() == "LieAdm"
    assert OperadId("Ass").dual_id().display() == "Ass!"
    with pytest.raises(InputError):
        OperadId.parse("nonsense")
    with pytest.raises(InputError):
        OperadId("Perm")


def test_operad_for_subgroup():
    expected = {
        SubgroupId.G1: "Ass",
        SubgroupId.G2: "Vinb",
        SubgroupId.G3: "PreLie",
        SubgroupId.G4: "G4Ass",
        SubgroupId.G5: "G5Ass",
        SubgroupId.G6: "LieAdm",
    }
    for g, base in expected.items():
        op = operad_for_subgroup(g)
        assert op == OperadId(base)


def test_low_arity_dimensions_are_uniform():
    for op in PRIMALS:
        for target in (op, op.dual_id()):
            assert operad_dimension(target, 1) == 1
            assert operad_dimension(target, 2) == 2


def test_arity3_dimensions():
    for op in PRIMALS:
        assert operad_dimension(op, 3) == ARITY3[op.base], op.base
        assert operad_dimension(op.dual_id(), 3) == DUAL3[op.base], op.base


def test_arity3_complementarity():
    for op in PRIMALS:
        primal = operad_dimension(op, 3)
        dual = operad_dimension(op.dual_id(), 3)
        assert primal + dual == 12, op.base


def test_arity3_equals_free_minus_relations():
    for op in PRIMALS:
        r = relation_module(op)
        assert operad_dimension(op, 3) == 12 - r.dim, op.base
        # The dual's arity-3 component has the dimension of the primal
        # relation module itself.
        assert operad_dimension(op.dual_id(), 3) == r.dim, op.base


def test_orthogonal_complement_dimensions():
    for op, expected in (("LieAdm", 11), ("G4Ass", 9), ("G5Ass", 10)):
        comp = orthogonal_complement(relation_module(OperadId(op)))
        assert comp.dim == expected, op


def test_double_complement_restores_the_span():
    for op in PRIMALS:
        r = relation_module(op)
        back = orthogonal_complement(orthogonal_complement(r))
        a = [e.coords for e in r.basis]
        b = [e.coords for e in back.basis]
        assert spans_equal(a, b, 12), op.base


def test_arity4_dimensions():
    for op in PRIMALS:
        assert operad_dimension(op, 4) == ARITY4[op.base], op.base
        assert operad_dimension(op.dual_id(), 4) == DUAL4[op.base], op.base


def test_arity4_cross_oracles():
    # Associative: dim equals the number of argument orderings.
    assert operad_dimension(OperadId("Ass"), 4) == factorial(4)
    assert operad_dimension(OperadId("Ass", True), 4) == factorial(4)
    # Labeled rooted trees on n nodes: n^(n-1) at arity 4.
    assert operad_dimension(OperadId("PreLie"), 4) == 4**3
    assert operad_dimension(OperadId("Vinb"), 4) == 4**3
    # Opposite symmetry at arity 3 as well.
    assert operad_dimension(OperadId("PreLie"), 3) == 3**2


def test_arity5_stress_dimensions():
    assert operad_dimension(OperadId("Ass"), 5) == 120
    assert operad_dimension(OperadId("Ass", True), 5) == 120
    assert operad_dimension(OperadId("PreLie", True), 5) == 5
    assert operad_dimension(OperadId("Vinb", True), 5) == 5
    assert operad_dimension(OperadId("LieAdm", True), 5) == 1
    with pytest.raises(InputError):
        operad_dimension(OperadId("LieAdm"), 5)
    with pytest.raises(InputError):
        operad_dimension(OperadId("Ass"), 6)


def series_from_dims(dims: list[int]) -> TruncatedSeries:
    return TruncatedSeries(
        tuple(
            Fraction((-1) ** n * d, factorial(n))
            for n, d in enumerate(dims, start=1)
        )
    )


def test_arity4_dimension_forced_by_series_equation():
    """Solve the order-4 coefficient of the functional equation for dim P(4).

    With dims of P through arity 3 and of the dual through arity 4 fixed,
    the order-4 coefficient of g_P(g_dual(x)) - x is linear in dim P(4)
    with unit leading coefficient (up to sign and 4!), so the equation
    determines it.  The rank computation must agree.
    """
    for op in PRIMALS:
        base = op.base
        dual_dims = [operad_dimension(op.dual_id(), n) for n in range(1, 5)]
        primal_low = [operad_dimension(op, n) for n in range(1, 4)]
        with_zero = series_from_dims(primal_low + [0])
        inner = series_from_dims(dual_dims)
        residue = with_zero.compose(inner).coeff(4)
        # Adding d to the arity-4 slot contributes d/24 times (inner
        # linear coefficient)^4 = d/24, so zero residual forces:
        forced = -residue * 24
        assert forced == ARITY4[base], (base, forced)
        assert operad_dimension(op, 4) == forced, base


def test_poincare_series_coefficients():
    s = poincare_series(OperadId("LieAdm"), 3)
    assert s.coeffs == (Fraction(-1), Fraction(1), Fraction(-11, 6))
    assert poincare_series(OperadId("Ass"), 4).coeffs == (
        Fraction(-1),
        Fraction(1),
        Fraction(-1),
        Fraction(1),
    )
    with pytest.raises(InputError):
        poincare_series(OperadId("Ass"), 0)


def test_koszul_residuals_vanish_through_order_4():
    for op in PRIMALS:
        residual = koszul_residual(op, 4)
        assert residual.is_zero(), op.base


def test_koszul_residual_order_5_for_supported_pairs():
    assert koszul_residual(OperadId("Ass"), 5).is_zero()
    with pytest.raises(InputError):
        koszul_residual(OperadId("PreLie"), 5)


DUAL_PRESENTATIONS = {
    "Ass": (None, "associative (self-dual)"),
    "Vinb": (Identity3Id.Bac, "associative with abc = bac"),
    "PreLie": (Identity3Id.Acb, "associative with abc = acb"),
    "G4Ass": (Identity3Id.Cba, "associative with abc = cba"),
    "G5Ass": (Identity3Id.BcaCab, "associative with abc = bca = cab"),
    "LieAdm": (Identity3Id.AcbBac, "associative with abc = acb = bac"),
}


def test_dual_identity_presentations():
    for op in PRIMALS:
        info = dual_identities(op)
        ident, description = DUAL_PRESENTATIONS[op.base]
        assert info.identity3 is ident, op.base
        assert info.description == description, op.base
        assert info.operad == op
    with pytest.raises(InputError):
        dual_identities(OperadId("Ass", True))


def test_dual_identity_word_counts():
    # Number of independent monomial identifications beyond associativity
    # matches the dual dimension drop from 6 (plain associative count).
    for op in PRIMALS:
        info = dual_identities(op)
        if op.base == "Ass":
            assert info.words == ()
        else:
            assert len(info.words) >= 1
