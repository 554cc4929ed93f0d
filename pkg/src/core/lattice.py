"""
Integer lattice bookkeeping: bases, Hermite normal form and cell reduction

Points of the triangular lattice are integer pairs (λ1, λ2) meaning
λ1·u + λ2·v. A sublattice Λ is given by two column vectors a, b; its
canonical form is generated by (a, 0) and (c, b) with 0 <= c < a.
"""

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .errors import RankDeficientError

Point = Tuple[int, int]


@dataclass(frozen=True)
class Basis:
    """Two integer column vectors spanning a sublattice of Λ₀"""

    a: Point
    b: Point

    def __post_init__(self):
        if self.determinant == 0:
            raise RankDeficientError()

    @property
    def determinant(self) -> int:
        return self.a[0] * self.b[1] - self.b[0] * self.a[1]

    @property
    def index(self) -> int:
        return abs(self.determinant)

    def transform(self, unimodular: Sequence[Sequence[int]]) -> "Basis":
        """Return the basis [a'|b'] = [a|b]·U"""
        (u11, u12), (u21, u22) = unimodular
        if u11 * u22 - u12 * u21 not in (1, -1):
            raise ValueError(f"Matrix {unimodular} is not unimodular")
        a1, a2 = self.a
        b1, b2 = self.b
        return Basis(
            (a1 * u11 + b1 * u21, a2 * u11 + b2 * u21),
            (a1 * u12 + b1 * u22, a2 * u12 + b2 * u22),
        )

    def as_matrix(self) -> List[List[int]]:
        """Row-major matrix [[a1, b1], [a2, b2]]"""
        return [[self.a[0], self.b[0]], [self.a[1], self.b[1]]]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Basis":
        (a1, b1), (a2, b2) = matrix
        return cls((int(a1), int(a2)), (int(b1), int(b2)))

    @classmethod
    def parse(cls, text: str) -> "Basis":
        """Parse the column-major flag form 'a1,a2,b1,b2'"""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"Expected four comma-separated integers, got '{text}'")
        a1, a2, b1, b2 = (int(p) for p in parts)
        return cls((a1, a2), (b1, b2))


@dataclass(frozen=True)
class Cell:
    """Canonical representative j·u + i·v of a class of Λ₀/Λ"""

    j: int
    i: int

    @property
    def point(self) -> Point:
        return (self.j, self.i)


@dataclass(frozen=True, order=True)
class HnfForm:
    """Triangular canonical basis (a, 0), (c, b) of a sublattice"""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0 or not 0 <= self.c < self.a:
            raise ValueError(f"Invalid HNF ({self.a},{self.b},{self.c})")

    @property
    def index(self) -> int:
        return self.a * self.b

    def basis(self) -> Basis:
        return Basis((self.a, 0), (self.c, self.b))

    def cells(self) -> List[Cell]:
        """All cells in linear index order"""
        return [Cell(j, i) for i in range(self.b) for j in range(self.a)]

    def linear_index(self, cell: Cell) -> int:
        return cell.i * self.a + cell.j

    def cell_at(self, position: int) -> Cell:
        i, j = divmod(position, self.a)
        return Cell(j, i)

    def reduce(self, point: Point) -> Cell:
        x, y = point
        i = y % self.b
        k = (y - i) // self.b
        return Cell((x - k * self.c) % self.a, i)

    def position(self, point: Point) -> int:
        """Linear index of the cell containing point"""
        cell = self.reduce(point)
        return cell.i * self.a + cell.j

    def contains(self, point: Point) -> bool:
        return self.reduce(point) == Cell(0, 0)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_dict(cls, data: dict) -> "HnfForm":
        return cls(int(data["a"]), int(data["b"]), int(data["c"]))


def hnf(basis: Basis) -> HnfForm:
    """Hermite normal form by Euclidean column reduction on second coordinates"""
    if basis.determinant == 0:
        raise RankDeficientError()
    first, second = list(basis.a), list(basis.b)
    while second[1] != 0:
        q = first[1] // second[1]
        first = [first[0] - q * second[0], first[1] - q * second[1]]
        first, second = second, first
    # second = (±a, 0), first = (y, ±b)
    a = abs(second[0])
    x, y = first
    if y < 0:
        x, y = -x, -y
    return HnfForm(a, y, x % a)


def index(basis: Basis) -> int:
    return basis.index


def reduce(point: Point, form: HnfForm) -> Cell:
    return form.reduce(point)


def lattice_coordinates(basis: Basis, vector: Point) -> Tuple[int, int]:
    """Integer coordinates (k1, k2) with vector = k1·a + k2·b"""
    det = basis.determinant
    y1, y2 = vector
    n1 = y1 * basis.b[1] - basis.b[0] * y2
    n2 = basis.a[0] * y2 - basis.a[1] * y1
    if n1 % det or n2 % det:
        raise ValueError(f"Vector {vector} is not in the lattice")
    return n1 // det, n2 // det


def all_hnfs(max_index: int) -> Iterator[HnfForm]:
    """Every sublattice of index at most max_index, once each"""
    for n in range(1, max_index + 1):
        for a in range(1, n + 1):
            if n % a:
                continue
            for c in range(a):
                yield HnfForm(a, n // a, c)
