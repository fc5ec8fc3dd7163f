"""Built-in example algebras.

The 2-dimensional catalog a1..a9 (a7, a8, a9 take rational parameters),
its commutative aliases b1..b6, the noncommutative b7, three small Lie
algebras (sl2, heis3, solv2), a 5-dimensional associative algebra whose
triple products are fully symmetric, and zero algebras zero<n>.

sl2 normalization: mu(X1,X2) = 2 X2, mu(X1,X3) = -2 X3, mu(X2,X3) = X1
(the classical h, e, f basis).  Its commutator bracket is then 2 mu, with
structure constants (4, -4, 2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .algebra import Algebra, Identity3Id, RationalLike, check_identity_3
from .errors import FixtureError, InputError
from .permutations import SubgroupId

MAX_ZERO_DIM = 12


def _params(
    given: Mapping[str, RationalLike] | None,
    defaults: dict[str, Fraction],
    fixture: str,
) -> dict[str, Fraction]:
    out = dict(defaults)
    for key, value in (given or {}).items():
        if key not in defaults:
            raise InputError(
                f"fixture {fixture} has no parameter {key!r}; "
                f"valid: {sorted(defaults)}"
            )
        try:
            out[key] = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational for {key}: {value!r}") from exc
    return out


def _a1(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        2,
        {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {2: 1}},
        name="a1",
    )


def _a2(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        2,
        {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}},
        name="a2",
    )


def _a3(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        2,
        {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {1: -1}},
        name="a3",
    )


def _a4(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(2, {(1, 1): {2: 1}}, name="a4")


def _a5(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(2, {(1, 1): {1: 1}}, name="a5")


def _a6(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.zero(2, name="a6")


def _a7(p: Mapping[str, RationalLike] | None) -> Algebra:
    vals = _params(p, {"b": Fraction(1), "e": Fraction(1)}, "a7")
    b, e = vals["b"], vals["e"]
    if e == 0:
        raise InputError("fixture a7 requires e != 0")
    return Algebra.from_products(
        2,
        {
            (1, 1): {1: (b * b + 2 * e) / e, 2: -b * (b * b + e) / (e * e)},
            (1, 2): {1: b, 2: -(b * b - e) / e},
            (2, 1): {1: b, 2: -b * b / e},
            (2, 2): {1: e, 2: -b},
        },
        name=f"a7(b={b},e={e})",
    )


def _a8(p: Mapping[str, RationalLike] | None) -> Algebra:
    vals = _params(p, {"a": Fraction(1), "c": Fraction(1)}, "a8")
    a, c = vals["a"], vals["c"]
    return Algebra.from_products(
        2,
        {(1, 1): {1: a, 2: c}, (1, 2): {2: 1}},
        name=f"a8(a={a},c={c})",
    )


def _a9(p: Mapping[str, RationalLike] | None) -> Algebra:
    vals = _params(p, {"a": Fraction(1)}, "a9")
    a = vals["a"]
    return Algebra.from_products(
        2,
        {(1, 1): {1: a}, (1, 2): {2: a + 1}, (2, 1): {2: a}},
        name=f"a9(a={a})",
    )


def _b7(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        2, {(1, 1): {1: 1}, (1, 2): {2: 1}}, name="b7"
    )


def _sl2(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        3,
        {
            (1, 2): {2: 2},
            (2, 1): {2: -2},
            (1, 3): {3: -2},
            (3, 1): {3: 2},
            (2, 3): {1: 1},
            (3, 2): {1: -1},
        },
        name="sl2",
        basis_labels=("h", "e", "f"),
    )


def _heis3(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        3, {(1, 2): {3: 1}, (2, 1): {3: -1}}, name="heis3"
    )


def _solv2(p: Mapping[str, RationalLike] | None) -> Algebra:
    return Algebra.from_products(
        2, {(1, 2): {2: 1}, (2, 1): {2: -1}}, name="solv2"
    )


def _abel5_3order(p: Mapping[str, RationalLike] | None) -> Algebra:
    alg = Algebra.from_products(
        5,
        {
            (1, 1): {2: 1},
            (1, 2): {3: 1},
            (2, 1): {3: 1},
            (1, 4): {5: 1},
            (4, 1): {3: 1, 5: 1},
            (4, 4): {3: 1},
        },
        name="abel5_3order",
    )
    if not alg.g_associative(SubgroupId.G1):
        raise FixtureError("abel5_3order completion is not associative")
    if not check_identity_3(alg, Identity3Id.TotallyCommutative3):
        raise FixtureError("abel5_3order triple products are not symmetric")
    return alg


_BUILDERS: dict[str, Callable[[Mapping[str, RationalLike] | None], Algebra]] = {
    "a1": _a1,
    "a2": _a2,
    "a3": _a3,
    "a4": _a4,
    "a5": _a5,
    "a6": _a6,
    "a7": _a7,
    "a8": _a8,
    "a9": _a9,
    "b1": _a1,
    "b2": _a2,
    "b3": _a3,
    "b4": _a4,
    "b5": _a5,
    "b6": _a6,
    "b7": _b7,
    "sl2": _sl2,
    "heis3": _heis3,
    "solv2": _solv2,
    "abel5_3order": _abel5_3order,
}

FIXTURE_DESCRIPTIONS: dict[str, str] = {
    "a1": "2-dim commutative: X1X1=X1, X1X2=X2X1=X2, X2X2=X2",
    "a2": "2-dim commutative: X1X1=X1, X1X2=X2X1=X2",
    "a3": "2-dim commutative: X1X1=X1, X1X2=X2X1=X2, X2X2=-X1",
    "a4": "2-dim commutative: X1X1=X2",
    "a5": "2-dim commutative: X1X1=X1",
    "a6": "2-dim zero algebra",
    "a7": "2-dim noncommutative family, parameters b, e (e nonzero)",
    "a8": "2-dim noncommutative family, parameters a, c",
    "a9": "2-dim noncommutative family, parameter a",
    "b1": "alias of a1",
    "b2": "alias of a2",
    "b3": "alias of a3",
    "b4": "alias of a4",
    "b5": "alias of a5",
    "b6": "alias of a6",
    "b7": "2-dim noncommutative associative: e1e1=e1, e1e2=e2",
    "sl2": "3-dim simple Lie bracket, constants 2, -2, 1 on h, e, f",
    "heis3": "3-dim Heisenberg Lie bracket [e1,e2]=e3",
    "solv2": "2-dim solvable Lie bracket [X1,X2]=X2",
    "abel5_3order": "5-dim associative with fully symmetric triple products",
    "zero<n>": "zero algebra of dimension n (e.g. zero3)",
}


def zero_algebra(n: int) -> Algebra:
    if not 1 <= n <= MAX_ZERO_DIM:
        raise InputError(f"zero algebra dimension must be in 1..{MAX_ZERO_DIM}")
    return Algebra.zero(n, name=f"zero{n}")


def fixture_names() -> list[str]:
    return sorted(_BUILDERS) + ["zero<n>"]


def get_fixture(
    name: str, params: Mapping[str, RationalLike] | None = None
) -> Algebra:
    """Look up a fixture by name; parameters apply to a7, a8, a9 only."""
    if name.startswith("zero") and name[4:].isdigit():
        if params:
            raise InputError("zero algebras take no parameters")
        return zero_algebra(int(name[4:]))
    builder = _BUILDERS.get(name)
    if builder is None:
        raise InputError(
            f"unknown fixture {name!r}; valid: {', '.join(fixture_names())}"
        )
    if params and name not in ("a7", "a8", "a9"):
        raise InputError(f"fixture {name} takes no parameters")
    return builder(params)
