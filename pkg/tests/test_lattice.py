import random

import pytest

from src.core.errors import RankDeficientError
from src.core.lattice import Basis, Cell, HnfForm, all_hnfs, hnf, index, lattice_coordinates, reduce


def random_unimodular(rng: random.Random):
    u = [[1, 0], [0, 1]]
    for _ in range(6):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            u = [[u[0][0] + k * u[0][1], u[0][1]], [u[1][0] + k * u[1][1], u[1][1]]]
        else:
            u = [[u[0][0], u[0][1] + k * u[0][0]], [u[1][0], u[1][1] + k * u[1][0]]]
    if rng.random() < 0.5:
        u = [[u[0][1], u[0][0]], [u[1][1], u[1][0]]]
    return u


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([[1, 0], [0, 1]], (1, 1, 0)),
        ([[2, 0], [0, 1]], (2, 1, 0)),
        ([[2, -2], [2, 4]], (6, 2, 2)),
    ],
)
def test_hnf_examples(matrix, expected):
    form = hnf(Basis.from_matrix(matrix))
    assert (form.a, form.b, form.c) == expected


def test_hnf_generates_same_lattice(index12_basis):
    form = hnf(index12_basis)
    for generator in (index12_basis.a, index12_basis.b):
        assert form.contains(generator)
    for generator in (form.basis().a, form.basis().b):
        lattice_coordinates(index12_basis, generator)


def test_singular_basis_rejected():
    with pytest.raises(RankDeficientError, match="rank-deficient lattice"):
        Basis((1, 2), (2, 4))


def test_index_examples(index12_basis, strip_basis, identity_basis):
    assert index(identity_basis) == 1
    assert index(index12_basis) == 12
    assert index(strip_basis) == 2
    assert index(Basis((0, 1), (1, 0))) == 1


def test_reduce_examples():
    assert reduce((-1, 0), HnfForm(2, 1, 0)) == Cell(1, 0)
    assert reduce((0, 2), HnfForm(6, 2, 2)) == Cell(4, 0)
    form = HnfForm(6, 2, 2)
    assert reduce((6, 0), form) == Cell(0, 0)
    assert reduce((2, 2), form) == Cell(0, 0)


def test_reduce_is_retraction_and_periodic():
    rng = random.Random(7)
    for form in all_hnfs(9):
        generators = [form.basis().a, form.basis().b]
        for _ in range(20):
            p = (rng.randint(-20, 20), rng.randint(-20, 20))
            cell = reduce(p, form)
            assert reduce(cell.point, form) == cell
            for g in generators:
                k = rng.randint(-3, 3)
                assert reduce((p[0] + k * g[0], p[1] + k * g[1]), form) == cell


def test_hnf_invariant_under_unimodular_change():
    rng = random.Random(11)
    for _ in range(50):
        form = HnfForm(rng.randint(1, 6), rng.randint(1, 5), 0)
        form = HnfForm(form.a, form.b, rng.randrange(form.a))
        basis = form.basis().transform(random_unimodular(rng))
        assert hnf(basis) == form
        assert index(basis) == form.a * form.b


def test_all_hnfs_counts_sublattices():
    # number of index-n sublattices of Z² is the divisor sum σ(n)
    forms = list(all_hnfs(9))
    assert len(forms) == sum(sum(d for d in range(1, n + 1) if n % d == 0) for n in range(1, 10))
    assert len(set(forms)) == len(forms)


def test_basis_parse_column_major():
    basis = Basis.parse("2,2,-2,4")
    assert basis.a == (2, 2)
    assert basis.b == (-2, 4)
    assert basis.as_matrix() == [[2, -2], [2, 4]]
    with pytest.raises(ValueError):
        Basis.parse("1,2,3")
