"""
Periodic lozenge tilings: representation, validity and exhaustive enumeration
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CapExceededError, InvalidTilingError, TilingEngineError
from .lattice import Basis, Cell, HnfForm, Point, hnf

DEFAULT_ENUMERATION_CAP = 16


class Orientation(str, Enum):
    """Lozenge orientation; ξ is the displacement from the up to the down triangle"""

    L = "L"
    D = "D"
    R = "R"

    @property
    def xi(self) -> Point:
        return _XI[self]

    @property
    def rank(self) -> int:
        return _RANK[self]

    @classmethod
    def from_displacement(cls, displacement: Point) -> "Orientation":
        for orientation, xi in _XI.items():
            if xi == displacement:
                return orientation
        raise InvalidTilingError(f"No lozenge has displacement {displacement}")


_XI: Dict[Orientation, Point] = {
    Orientation.L: (-1, 1),
    Orientation.D: (0, 0),
    Orientation.R: (0, 1),
}
_RANK: Dict[Orientation, int] = {Orientation.L: 0, Orientation.D: 1, Orientation.R: 2}

ORIENTATIONS: Tuple[Orientation, ...] = (Orientation.L, Orientation.D, Orientation.R)


@dataclass(frozen=True, order=True)
class TilingType:
    """Census (nL, nD, nR) of lozenge orientations per fundamental domain"""

    nL: int
    nD: int
    nR: int

    @property
    def total(self) -> int:
        return self.nL + self.nD + self.nR

    @property
    def is_interior(self) -> bool:
        return self.nL > 0 and self.nD > 0 and self.nR > 0

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.nL, self.nD, self.nR)

    def to_dict(self) -> dict:
        return {"L": self.nL, "D": self.nD, "R": self.nR}

    def __str__(self) -> str:
        return f"({self.nL},{self.nD},{self.nR})"


@dataclass(frozen=True)
class Tiling:
    """Orientation per cell of the fundamental domain, in linear index order"""

    hnf: HnfForm
    cells: Tuple[Orientation, ...]

    def __post_init__(self):
        if len(self.cells) != self.hnf.index:
            raise InvalidTilingError(
                f"Expected {self.hnf.index} cells for HNF {self.hnf.to_dict()}, got {len(self.cells)}"
            )

    @classmethod
    def from_word(cls, form: HnfForm, word: str) -> "Tiling":
        try:
            cells = tuple(Orientation(letter) for letter in word)
        except ValueError:
            raise InvalidTilingError(f"Cell word '{word}' has letters outside L, D, R")
        return cls(form, cells)

    @property
    def word(self) -> str:
        return "".join(o.value for o in self.cells)

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return tuple(o.rank for o in self.cells)

    def at(self, point: Point) -> Orientation:
        """Orientation of the up triangle at any point of Λ₀"""
        return self.cells[self.hnf.position(point)]

    def cell(self, cell: Cell) -> Orientation:
        return self.cells[self.hnf.linear_index(cell)]

    def down_target(self, position: int) -> int:
        """Linear index of the down triangle covered by the lozenge at a cell"""
        j, i = self.hnf.cell_at(position).point
        dx, dy = self.cells[position].xi
        return self.hnf.position((j + dx, i + dy))

    def to_dict(self, basis: Optional[Basis] = None) -> dict:
        basis = basis or self.hnf.basis()
        return {"basis": basis.as_matrix(), "hnf": self.hnf.to_dict(), "cells": self.word}

    @classmethod
    def from_dict(cls, data: dict) -> "Tiling":
        try:
            form = HnfForm.from_dict(data["hnf"])
            declared = hnf(Basis.from_matrix(data["basis"])) if "basis" in data else form
            word = str(data["cells"])
        except TilingEngineError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidTilingError(f"Malformed tiling record: {e!r}") from e
        if declared != form:
            raise InvalidTilingError(
                f"Basis {data['basis']} does not generate HNF {form.to_dict()}"
            )
        tiling = cls.from_word(form, word)
        if not is_valid(form, tiling.cells):
            raise InvalidTilingError(f"Cells '{tiling.word}' violate the matching axiom")
        return tiling

    def __str__(self) -> str:
        return self.word


def is_valid(form: HnfForm, cells: Sequence[Orientation]) -> bool:
    """Each down triangle is covered by exactly one of its three candidate lozenges"""
    if len(cells) != form.index:
        raise InvalidTilingError(f"Expected {form.index} cells, got {len(cells)}")
    for cell in form.cells():
        j, i = cell.point
        count = (
            (cells[form.position((j, i))] is Orientation.R)
            + (cells[form.position((j + 1, i))] is Orientation.L)
            + (cells[form.position((j, i + 1))] is Orientation.D)
        )
        if count != 1:
            return False
    return True


def constant(form: HnfForm, orientation: Orientation) -> Tiling:
    return Tiling(form, (orientation,) * form.index)


def type_of(tiling: Tiling) -> TilingType:
    return TilingType(
        sum(o is Orientation.L for o in tiling.cells),
        sum(o is Orientation.D for o in tiling.cells),
        sum(o is Orientation.R for o in tiling.cells),
    )


class TilingEnumerator:
    """Depth-first enumeration of all Λ-periodic tilings of one lattice"""

    def __init__(self, cap: int = DEFAULT_ENUMERATION_CAP):
        self.logger = logging.getLogger(__name__)
        self.cap = cap

    def enumerate(self, form: HnfForm) -> List[Tiling]:
        """
        All valid tilings in lexicographic order with L < D < R

        Args:
            form: HNF of the period lattice

        Returns:
            List of Tiling objects
        """
        if form.index > self.cap:
            raise CapExceededError("enumeration", form.index, self.cap)

        n = form.index
        # targets[p][o]: down class covered when cell p takes orientation o
        targets: List[Dict[Orientation, int]] = []
        for position in range(n):
            j, i = form.cell_at(position).point
            targets.append(
                {o: form.position((j + o.xi[0], i + o.xi[1])) for o in ORIENTATIONS}
            )

        # A down class is settled once every up cell that could cover it is assigned
        deadline = [0] * n
        for position in range(n):
            for o in ORIENTATIONS:
                down = targets[position][o]
                deadline[down] = max(deadline[down], position)
        settled_at: List[List[int]] = [[] for _ in range(n)]
        for down, position in enumerate(deadline):
            settled_at[position].append(down)

        covered = [0] * n
        assignment: List[Orientation] = []
        tilings: List[Tiling] = []

        def extend(position: int):
            if position == n:
                tilings.append(Tiling(form, tuple(assignment)))
                return
            for o in ORIENTATIONS:
                down = targets[position][o]
                if covered[down]:
                    continue
                covered[down] = 1
                if all(covered[d] for d in settled_at[position]):
                    assignment.append(o)
                    extend(position + 1)
                    assignment.pop()
                covered[down] = 0

        extend(0)
        self.logger.info(f"Enumerated {len(tilings)} tilings for HNF ({form.a},{form.b},{form.c})")
        return tilings


def enumerate_tilings(form: HnfForm, cap: int = DEFAULT_ENUMERATION_CAP) -> List[Tiling]:
    return TilingEnumerator(cap).enumerate(form)
