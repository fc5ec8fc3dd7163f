"""JSON formats for algebras, multilinear maps, and module pairs.

All rationals serialize as strings ("p/q" or "p"), all basis indices are
1-based, and unlisted entries are zero.  Serialization is canonical
(sorted keys, zero entries omitted), so parse -> serialize -> parse is
the identity on content.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra
from .errors import InputError
from .modules import BimodulePair
from .multilinear import MultiMap

FIELD_NAME = "rational"


def _fraction(text: object, where: str) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InputError(f"{where}: rational values must be strings, got {text!r}")
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: bad rational {text!r}: {exc}") from exc


def _index(value: object, dim: int, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: basis index must be an integer, got {value!r}")
    if not 1 <= value <= dim:
        raise InputError(f"{where}: basis index {value} out of range 1..{dim}")
    return value


def _dim(obj: dict, where: str) -> int:
    dim = obj.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise InputError(f"{where}: 'dim' must be a positive integer")
    return dim


def algebra_to_obj(alg: Algebra) -> dict:
    products = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            result = [
                [k + 1, str(alg.c[i][j][k])]
                for k in range(alg.dim)
                if alg.c[i][j][k]
            ]
            if result:
                products.append({"left": i + 1, "right": j + 1, "result": result})
    obj: dict = {"dim": alg.dim, "field": FIELD_NAME, "products": products}
    if alg.name:
        obj["name"] = alg.name
    if alg.basis_labels:
        obj["labels"] = list(alg.basis_labels)
    return obj


def algebra_from_obj(obj: object) -> Algebra:
    if not isinstance(obj, dict):
        raise InputError("algebra file must be a JSON object")
    dim = _dim(obj, "algebra")
    if obj.get("field", FIELD_NAME) != FIELD_NAME:
        raise InputError(f"unsupported field {obj.get('field')!r}; only 'rational'")
    products = obj.get("products", [])
    if not isinstance(products, list):
        raise InputError("'products' must be a list")
    tensor = [
        [[Fraction(0) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)
    ]
    seen: set[tuple[int, int]] = set()
    for idx, item in enumerate(products):
        where = f"products[{idx}]"
        if not isinstance(item, dict):
            raise InputError(f"{where}: must be an object")
        i = _index(item.get("left"), dim, where)
        j = _index(item.get("right"), dim, where)
        if (i, j) in seen:
            raise InputError(f"{where}: duplicate product ({i}, {j})")
        seen.add((i, j))
        result = item.get("result", [])
        if not isinstance(result, list):
            raise InputError(f"{where}: 'result' must be a list")
        for pair in result:
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError(f"{where}: result entries are [index, rational]")
            k = _index(pair[0], dim, where)
            tensor[i - 1][j - 1][k - 1] += _fraction(pair[1], where)
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise InputError("'name' must be a string")
    labels = obj.get("labels", [])
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise InputError("'labels' must be a list of strings")
    if labels and len(labels) != dim:
        raise InputError(f"'labels' must have {dim} entries")
    return Algebra(
        dim,
        tuple(tuple(tuple(row) for row in plane) for plane in tensor),
        name,
        tuple(labels),
    )


def multimap_to_obj(m: MultiMap) -> dict:
    return {
        "dim": m.dim,
        "arity": m.arity,
        "values": [str(x) for x in m.data],
    }


def multimap_from_obj(obj: object) -> MultiMap:
    if not isinstance(obj, dict):
        raise InputError("cochain file must be a JSON object")
    dim = _dim(obj, "cochain")
    arity = obj.get("arity")
    if isinstance(arity, bool) or not isinstance(arity, int) or arity < 1:
        raise InputError("cochain: 'arity' must be a positive integer")
    values = obj.get("values")
    if not isinstance(values, list):
        raise InputError("cochain: 'values' must be a list of rational strings")
    expected = dim ** (arity + 1)
    if len(values) != expected:
        raise InputError(
            f"cochain: expected {expected} values for dim {dim} arity {arity}, "
            f"got {len(values)}"
        )
    data = tuple(_fraction(v, f"values[{i}]") for i, v in enumerate(values))
    return MultiMap(dim, arity, data)


def _matrix_to_obj(rows: tuple[tuple[Fraction, ...], ...]) -> list[list[str]]:
    return [[str(x) for x in row] for row in rows]


def _matrix_from_obj(obj: object, size: int, where: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(obj, list) or len(obj) != size:
        raise InputError(f"{where}: expected a {size}x{size} matrix")
    rows = []
    for r, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != size:
            raise InputError(f"{where}: row {r + 1} must have {size} entries")
        rows.append(tuple(_fraction(x, f"{where} row {r + 1}") for x in row))
    return tuple(rows)


def pair_to_obj(pair: BimodulePair) -> dict:
    return {
        "algebra": algebra_to_obj(pair.alg),
        "module_dim": pair.module_dim,
        "left": [_matrix_to_obj(m) for m in pair.left],
        "right": [_matrix_to_obj(m) for m in pair.right],
    }


def pair_from_obj(obj: object) -> BimodulePair:
    if not isinstance(obj, dict):
        raise InputError("module pair file must be a JSON object")
    if "algebra" not in obj:
        raise InputError("module pair: missing 'algebra'")
    alg = algebra_from_obj(obj["algebra"])
    m = obj.get("module_dim")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InputError("module pair: 'module_dim' must be a positive integer")
    left = obj.get("left")
    right = obj.get("right")
    if not isinstance(left, list) or len(left) != alg.dim:
        raise InputError(f"module pair: 'left' must list {alg.dim} matrices")
    if not isinstance(right, list) or len(right) != alg.dim:
        raise InputError(f"module pair: 'right' must list {alg.dim} matrices")
    lefts = tuple(
        _matrix_from_obj(item, m, f"left[{i + 1}]") for i, item in enumerate(left)
    )
    rights = tuple(
        _matrix_from_obj(item, m, f"right[{i + 1}]") for i, item in enumerate(right)
    )
    return BimodulePair(alg, m, lefts, rights)


def _load(path: str | Path, what: str) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {what} file {p}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} file {p} is not valid JSON: {exc}") from exc


def load_algebra(path: str | Path) -> Algebra:
    return algebra_from_obj(_load(path, "algebra"))


def save_algebra(path: str | Path, alg: Algebra) -> None:
    Path(path).write_text(json.dumps(algebra_to_obj(alg), indent=2) + "\n")


def load_multimap(path: str | Path) -> MultiMap:
    return multimap_from_obj(_load(path, "cochain"))


def save_multimap(path: str | Path, m: MultiMap) -> None:
    Path(path).write_text(json.dumps(multimap_to_obj(m), indent=2) + "\n")


def load_pair(path: str | Path) -> BimodulePair:
    return pair_from_obj(_load(path, "module pair"))


def save_pair(path: str | Path, pair: BimodulePair) -> None:
    Path(path).write_text(json.dumps(pair_to_obj(pair), indent=2) + "\n")
