"""
Shift classes and the involution I: orbit censuses Z1 and Z2
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, List, Sequence, Tuple

from ..core.lattice import Basis, Point, hnf
from ..core.polyring import Poly
from ..core.tiling import DEFAULT_ENUMERATION_CAP, Tiling, TilingEnumerator, type_of
from .kasteleyn import census


class UnionFind:
    """Disjoint sets with union by rank and path compression"""

    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


def find_orbits(generators: Sequence[Callable], space: Sequence) -> List[List]:
    """Orbits of the group generated by the given maps on a finite set"""
    uf = UnionFind(space)
    for g in generators:
        for x in space:
            uf.union(x, g(x))
    orbits: Dict = {}
    for x in space:
        orbits.setdefault(uf.find(x), []).append(x)
    return list(orbits.values())


@dataclass(frozen=True)
class OrbitSet:
    """Partition of a tiling set into orbits, canonically ordered"""

    orbits: Tuple[Tuple[Tiling, ...], ...]

    def census(self) -> Poly:
        return census(orbit[0] for orbit in self.orbits)

    def __len__(self) -> int:
        return len(self.orbits)


def shift(tiling: Tiling, s: Point) -> Tiling:
    """τ'(x) = τ(x + s)"""
    form = tiling.hnf
    cells = tuple(tiling.at((c.j + s[0], c.i + s[1])) for c in form.cells())
    return Tiling(form, cells)


def involute(tiling: Tiling) -> Tiling:
    """(Iτ)(x) is the orientation of the lozenge covering the down triangle at -x"""
    form = tiling.hnf
    covering = {tiling.down_target(w): w for w in range(form.index)}
    cells = tuple(
        tiling.cells[covering[form.position((-c.j, -c.i))]] for c in form.cells()
    )
    return Tiling(form, cells)


def orbits(tilings: Sequence[Tiling], shifts: bool = True, involution: bool = False) -> OrbitSet:
    generators: List[Callable[[Tiling], Tiling]] = []
    if shifts:
        generators += [lambda t: shift(t, (1, 0)), lambda t: shift(t, (0, 1))]
    if involution:
        generators.append(involute)
    parts = find_orbits(generators, list(tilings))
    ordered = [tuple(sorted(part, key=lambda t: t.sort_key)) for part in parts]
    ordered.sort(key=lambda orbit: orbit[0].sort_key)
    return OrbitSet(tuple(ordered))


class OrbitCounter:
    """Enumerates a lattice once and reports orbit censuses"""

    def __init__(self, cap: int = DEFAULT_ENUMERATION_CAP):
        self.logger = logging.getLogger(__name__)
        self.enumerator = TilingEnumerator(cap)

    def classes(self, basis: Basis, shifts: bool = True, involution: bool = False) -> OrbitSet:
        tilings = self.enumerator.enumerate(hnf(basis))
        result = orbits(tilings, shifts=shifts, involution=involution)
        self.logger.info(
            f"{len(tilings)} tilings fall into {len(result)} orbits "
            f"(shifts={shifts}, involution={involution})"
        )
        for orbit in result.orbits:
            if len({type_of(t) for t in orbit}) != 1:
                self.logger.warning(f"Orbit of {orbit[0]} mixes tiling types")
        return result


def z1(basis: Basis, cap: int = DEFAULT_ENUMERATION_CAP) -> Poly:
    return OrbitCounter(cap).classes(basis, shifts=True).census()


def z2(basis: Basis, cap: int = DEFAULT_ENUMERATION_CAP) -> Poly:
    return OrbitCounter(cap).classes(basis, shifts=True, involution=True).census()
