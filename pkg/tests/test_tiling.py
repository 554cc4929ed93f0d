import pytest

from src.core.errors import CapExceededError, InvalidTilingError
from src.core.lattice import HnfForm, hnf
from src.core.tiling import (
    Orientation,
    Tiling,
    TilingEnumerator,
    TilingType,
    constant,
    enumerate_tilings,
    is_valid,
    type_of,
)

L, D, R = Orientation.L, Orientation.D, Orientation.R


def test_displacements():
    assert L.xi == (-1, 1)
    assert D.xi == (0, 0)
    assert R.xi == (0, 1)
    assert Orientation.from_displacement((0, 1)) is R


def test_is_valid_examples():
    assert is_valid(HnfForm(1, 1, 0), [D])
    assert not is_valid(HnfForm(2, 1, 0), [L, D])
    assert is_valid(HnfForm(2, 1, 0), [D, R])


def test_is_valid_length_mismatch():
    with pytest.raises(InvalidTilingError):
        is_valid(HnfForm(2, 1, 0), [D])


def test_enumerate_index_one():
    words = [t.word for t in enumerate_tilings(HnfForm(1, 1, 0))]
    assert words == ["L", "D", "R"]


def test_enumerate_strip():
    words = [t.word for t in enumerate_tilings(HnfForm(2, 1, 0))]
    assert words == ["LL", "DD", "DR", "RD", "RR"]


def test_enumerate_matches_exhaustive_filter():
    from itertools import product

    for form in (HnfForm(2, 2, 1), HnfForm(3, 2, 2), HnfForm(1, 4, 0)):
        expected = [
            "".join(o.value for o in cells)
            for cells in product((L, D, R), repeat=form.index)
            if is_valid(form, cells)
        ]
        assert [t.word for t in enumerate_tilings(form)] == expected


def test_enumerate_contains_constants(index12_basis):
    form = hnf(index12_basis)
    tilings = enumerate_tilings(form)
    for o in (L, D, R):
        assert constant(form, o) in tilings
    assert all(is_valid(form, t.cells) for t in tilings)


def test_enumeration_cap():
    with pytest.raises(CapExceededError, match="cap 4"):
        TilingEnumerator(cap=4).enumerate(HnfForm(5, 1, 0))


def test_type_of(sample_tiling):
    assert type_of(constant(HnfForm(3, 2, 1), D)) == TilingType(0, 6, 0)
    assert type_of(Tiling.from_word(HnfForm(2, 1, 0), "DR")) == TilingType(0, 1, 1)
    assert type_of(sample_tiling) == TilingType(2, 2, 8)


def test_constant():
    assert constant(HnfForm(1, 1, 0), L).word == "L"
    assert type_of(constant(HnfForm(2, 1, 0), R)) == TilingType(0, 0, 2)
    assert type_of(constant(HnfForm(6, 2, 2), D)) == TilingType(0, 12, 0)


def test_tiling_dict_round_trip(sample_tiling, index12_basis):
    data = sample_tiling.to_dict(index12_basis)
    assert data == {
        "basis": [[2, -2], [2, 4]],
        "hnf": {"a": 6, "b": 2, "c": 2},
        "cells": "LLRRRDRDRRRR",
    }
    assert Tiling.from_dict(data) == sample_tiling


def test_from_dict_rejects_invalid_cells():
    with pytest.raises(InvalidTilingError):
        Tiling.from_dict({"hnf": {"a": 2, "b": 1, "c": 0}, "cells": "LD"})
    with pytest.raises(InvalidTilingError):
        Tiling.from_dict({"hnf": {"a": 2, "b": 1, "c": 0}, "cells": "DX"})
    with pytest.raises(InvalidTilingError):
        Tiling.from_dict({"basis": [[1, 0], [0, 1]], "hnf": {"a": 2, "b": 1, "c": 0}, "cells": "DR"})


@pytest.mark.parametrize(
    "record",
    [
        {"hnf": {"a": 2, "b": 1, "c": 5}, "cells": "DR"},
        {"hnf": {"a": 2, "b": 1}, "cells": "DR"},
        {"hnf": {"a": 2, "b": 1, "c": 0}},
        {"hnf": {"a": 2, "b": 1, "c": 0}, "basis": [[1, 0]], "cells": "DR"},
        ["DR"],
    ],
)
def test_from_dict_rejects_malformed_records(record):
    with pytest.raises(InvalidTilingError):
        Tiling.from_dict(record)
