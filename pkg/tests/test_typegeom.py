import random

import pytest

from src.algorithms.heights import Fingerprint
from src.algorithms.typegeom import (
    all_types,
    bracelet_count,
    bracelet_total,
    burnside_count,
    count_summary,
    edge_tilings,
    fingerprint_to_type,
    necklace_count,
    necklace_total,
    triangle,
    type_to_fingerprint,
)
from src.core.errors import TypeGeometryError, UnrealizableFingerprintError
from src.core.lattice import Basis, all_hnfs, hnf
from src.core.tiling import TilingType, enumerate_tilings, is_valid, type_of
from tests.test_lattice import random_unimodular


def test_triangle_vertices(index12_basis, identity_basis, strip_basis):
    tri = triangle(index12_basis)
    assert (tri.vL, tri.vD, tri.vR) == (Fingerprint(-6, -6), Fingerprint(6, 0), Fingerprint(0, 6))
    tri = triangle(identity_basis)
    assert (tri.vL, tri.vD, tri.vR) == (Fingerprint(-1, -2), Fingerprint(2, 1), Fingerprint(-1, 1))
    tri = triangle(strip_basis)
    assert (tri.vL, tri.vD, tri.vR) == (Fingerprint(-2, -2), Fingerprint(4, 1), Fingerprint(-2, 1))


def test_triangle_invariants():
    for form in all_hnfs(12):
        basis = form.basis()
        tri = triangle(basis)
        assert tri.vL.d1 + tri.vD.d1 + tri.vR.d1 == 0
        assert tri.vL.d2 + tri.vD.d2 + tri.vR.d2 == 0
        assert (tri.vL.d1 - tri.vD.d1) % 3 == 0 and (tri.vR.d2 - tri.vD.d2) % 3 == 0
        assert tri.doubled_area == 9 * form.index


def test_fingerprint_to_type(index12_basis):
    assert fingerprint_to_type(index12_basis, Fingerprint(0, 3)) == TilingType(2, 2, 8)
    assert fingerprint_to_type(index12_basis, Fingerprint(6, 0)) == TilingType(0, 12, 0)
    assert fingerprint_to_type(index12_basis, Fingerprint(3, 3)) == TilingType(0, 6, 6)


def test_fingerprint_to_type_rejects(index12_basis):
    with pytest.raises(UnrealizableFingerprintError):
        fingerprint_to_type(index12_basis, Fingerprint(0, 1))
    with pytest.raises(UnrealizableFingerprintError):
        fingerprint_to_type(index12_basis, Fingerprint(9, 9))


def test_type_to_fingerprint(index12_basis):
    assert type_to_fingerprint(index12_basis, TilingType(2, 2, 8)) == Fingerprint(0, 3)
    assert type_to_fingerprint(index12_basis, TilingType(4, 4, 4)) == Fingerprint(0, 0)
    assert type_to_fingerprint(index12_basis, TilingType(12, 0, 0)) == triangle(index12_basis).vL
    with pytest.raises(TypeGeometryError):
        type_to_fingerprint(index12_basis, TilingType(1, 1, 1))


def test_all_types_index12(index12_basis):
    pairs = all_types(index12_basis)
    assert len(pairs) == 10
    interior = {t for _, t in pairs if t.is_interior}
    assert interior == {TilingType(4, 4, 4), TilingType(8, 2, 2), TilingType(2, 8, 2), TilingType(2, 2, 8)}
    assert pairs == sorted(pairs)
    for fp, t in pairs:
        assert type_to_fingerprint(index12_basis, t) == fp
        assert fingerprint_to_type(index12_basis, fp) == t


def test_all_types_small(identity_basis, strip_basis):
    assert len(all_types(identity_basis)) == 3
    types = {t for _, t in all_types(strip_basis)}
    assert types == {TilingType(2, 0, 0), TilingType(0, 2, 0), TilingType(0, 1, 1), TilingType(0, 0, 2)}


def test_count_summary(index12_basis, strip_basis, identity_basis):
    s = count_summary(index12_basis)
    assert (s.boundary_DL, s.boundary_LR, s.boundary_RD, s.interior, s.monomials) == (3, 3, 3, 4, 10)
    s = count_summary(strip_basis)
    assert (s.boundary_DL, s.boundary_LR, s.boundary_RD, s.interior, s.monomials) == (2, 2, 3, 0, 4)
    assert count_summary(identity_basis).monomials == 3


def test_monomials_match_type_scan():
    for form in all_hnfs(30):
        basis = form.basis()
        assert count_summary(basis).monomials == len(all_types(basis))


def test_realized_types_match_scan():
    for form in all_hnfs(9):
        basis = form.basis()
        assert {type_of(t) for t in enumerate_tilings(form)} == {t for _, t in all_types(basis)}


def test_type_multiset_invariant_under_basis_change(index12_basis):
    rng = random.Random(23)
    expected = sorted(t for _, t in all_types(index12_basis))
    for _ in range(5):
        changed = index12_basis.transform(random_unimodular(rng))
        assert sorted(t for _, t in all_types(changed)) == expected


def test_necklaces():
    assert necklace_count(2, 1) == 1
    assert necklace_count(4, 2) == 2
    assert necklace_count(1, 0) == 1
    assert necklace_total(2) == 3
    assert necklace_total(1) == 2
    assert necklace_total(6) == 14
    with pytest.raises(TypeGeometryError):
        necklace_count(3, 4)


def test_necklace_formula_matches_rotation_burnside():
    for d in range(1, 13):
        assert sum(necklace_count(d, i) for i in range(d + 1)) == necklace_total(d)
        for i in range(d + 1):
            assert necklace_count(d, i) == burnside_count(d, i)


def test_bracelets():
    assert bracelet_count(4, 2) == 2
    assert bracelet_count(6, 3) == 3
    assert bracelet_total(6) == 13
    for d in range(1, 10):
        for i in range(d + 1):
            assert bracelet_count(d, i) <= necklace_count(d, i)


@pytest.mark.parametrize("edge, missing", [("DR", 0), ("LR", 1), ("DL", 2)])
def test_edge_tilings_match_enumeration(index12_basis, edge, missing):
    form = hnf(index12_basis)
    built = edge_tilings(index12_basis, edge)
    assert len(built) == 2 ** 2
    assert all(is_valid(form, t.cells) for t, _ in built)
    expected = [t for t in enumerate_tilings(form) if type_of(t).as_tuple()[missing] == 0]
    assert [t for t, _ in built] == expected


def test_edge_tilings_types(strip_basis):
    built = edge_tilings(strip_basis, "DR")
    assert [(t.word, zeros) for t, zeros in built] == [("DD", 2), ("DR", 1), ("RD", 1), ("RR", 0)]
    assert all(type_of(t).nD == zeros for t, zeros in built)
