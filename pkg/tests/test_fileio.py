"""JSON round trips and error reporting for the on-disk formats."""

from __future__ import annotations

import json
import random

import pytest

from lieadm.errors import InputError
from lieadm.fileio import (
    algebra_from_obj,
    algebra_to_obj,
    load_algebra,
    load_multimap,
    load_pair,
    multimap_from_obj,
    pair_from_obj,
    save_algebra,
    save_multimap,
    save_pair,
)
from lieadm.fixtures import get_fixture
from lieadm.modules import BimodulePair, regular_pair
from lieadm.sampling import random_algebra, random_multimap


def test_algebra_round_trip(tmp_path, rng: random.Random):
    for _ in range(5):
        alg = random_algebra(rng, 3)
        path = tmp_path / "alg.json"
        save_algebra(path, alg)
        assert load_algebra(path) == alg


def test_round_trip_keeps_name_and_labels(tmp_path):
    heis3 = get_fixture("heis3")
    path = tmp_path / "heis3.json"
    save_algebra(path, heis3)
    again = load_algebra(path)
    assert again == heis3
    assert again.name == heis3.name
    assert again.basis_labels == heis3.basis_labels


def test_serialization_is_canonical():
    alg = get_fixture("a8")
    obj = algebra_to_obj(alg)
    assert algebra_to_obj(algebra_from_obj(obj)) == obj
    # Zero products are omitted entirely.
    zero_obj = algebra_to_obj(get_fixture("zero3"))
    assert zero_obj["products"] == []


def test_multimap_round_trip(tmp_path, rng: random.Random):
    m = random_multimap(rng, 3, 2)
    path = tmp_path / "phi.json"
    save_multimap(path, m)
    assert load_multimap(path) == m


def test_pair_round_trip(tmp_path):
    pair = regular_pair(get_fixture("sl2"))
    path = tmp_path / "pair.json"
    save_pair(path, pair)
    assert load_pair(path) == pair


def test_missing_file_reports_input_error(tmp_path):
    with pytest.raises(InputError):
        load_algebra(tmp_path / "absent.json")


def test_malformed_json_reports_input_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(InputError):
        load_algebra(path)


def test_algebra_object_validation():
    with pytest.raises(InputError):
        algebra_from_obj([1, 2])
    with pytest.raises(InputError):
        algebra_from_obj({"dim": 0})
    with pytest.raises(InputError):
        algebra_from_obj({"dim": 2, "field": "real"})
    with pytest.raises(InputError):
        algebra_from_obj({"dim": 2, "products": "nope"})


def test_product_entry_validation():
    base = {"dim": 2}
    cases = [
        [{"left": 3, "right": 1, "result": []}],
        [{"left": 1, "right": 1, "result": [[1, "1/0"]]}],
        [{"left": 1, "right": 1, "result": [[1, True]]}],
        [{"left": 1, "right": 1, "result": [[1]]}],
        [
            {"left": 1, "right": 1, "result": [[1, "1"]]},
            {"left": 1, "right": 1, "result": [[2, "1"]]},
        ],
    ]
    for products in cases:
        with pytest.raises(InputError):
            algebra_from_obj({**base, "products": products})


def test_error_messages_locate_the_bad_entry():
    with pytest.raises(InputError) as info:
        algebra_from_obj(
            {
                "dim": 2,
                "products": [
                    {"left": 1, "right": 1, "result": [[1, "1"]]},
                    {"left": 1, "right": 9, "result": []},
                ],
            }
        )
    assert "products[1]" in str(info.value)


def test_label_length_must_match_dimension():
    with pytest.raises(InputError):
        algebra_from_obj({"dim": 2, "products": [], "labels": ["x"]})
    with pytest.raises(InputError):
        algebra_from_obj({"dim": 2, "products": [], "labels": [1, 2]})


def test_multimap_object_validation():
    with pytest.raises(InputError):
        multimap_from_obj({"dim": 2, "arity": 0, "values": []})
    with pytest.raises(InputError):
        multimap_from_obj({"dim": 2, "arity": 2, "values": ["0"] * 7})
    with pytest.raises(InputError):
        multimap_from_obj({"dim": 2, "arity": 1, "values": ["0", "x", "0", "0"]})


def test_pair_object_validation(tmp_path):
    pair = BimodulePair.zero(get_fixture("solv2"), 2)
    obj = json.loads(
        json.dumps(
            {
                "algebra": algebra_to_obj(pair.alg),
                "module_dim": 2,
                "left": [[["0", "0"], ["0", "0"]]] * 2,
                "right": [[["0", "0"], ["0", "0"]]] * 2,
            }
        )
    )
    assert pair_from_obj(obj) == pair
    for broken in (
        {**obj, "module_dim": 0},
        {**obj, "left": obj["left"][:1]},
        {**obj, "right": [[["0"], ["0"]]] * 2},
        {k: v for k, v in obj.items() if k != "algebra"},
    ):
        with pytest.raises(InputError):
            pair_from_obj(broken)
