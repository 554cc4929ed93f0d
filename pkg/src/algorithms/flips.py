"""
Flips: exchanging the two fillings of a unit hexagon, and flip-graph connectivity
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..core.errors import FlipError
from ..core.lattice import Basis, Cell, hnf
from ..core.tiling import (
    DEFAULT_ENUMERATION_CAP,
    Orientation,
    Tiling,
    TilingEnumerator,
    TilingType,
    type_of,
)


class FlipConfig(str, Enum):
    """Filling of the hexagon around vertex m + u"""

    QUOIN = "A"  # (D, L, R): solid cube
    INNER_CORNER = "B"  # (R, D, L)

    @property
    def pattern(self) -> Tuple[Orientation, Orientation, Orientation]:
        return _PATTERNS[self]

    @property
    def opposite(self) -> "FlipConfig":
        return FlipConfig.INNER_CORNER if self is FlipConfig.QUOIN else FlipConfig.QUOIN


_PATTERNS = {
    FlipConfig.QUOIN: (Orientation.D, Orientation.L, Orientation.R),
    FlipConfig.INNER_CORNER: (Orientation.R, Orientation.D, Orientation.L),
}


@dataclass(frozen=True)
class FlipSite:
    m: Cell
    config: FlipConfig

    def to_dict(self) -> dict:
        return {"m": [self.m.j, self.m.i], "config": self.config.value}


def _hexagon(tiling: Tiling, m: Cell) -> Tuple[int, int, int]:
    """Positions of the up cells m, m + u, m + u - v"""
    form = tiling.hnf
    j, i = m.point
    return form.position((j, i)), form.position((j + 1, i)), form.position((j + 1, i - 1))


def flip_sites(tiling: Tiling) -> List[FlipSite]:
    sites = []
    for m in tiling.hnf.cells():
        positions = _hexagon(tiling, m)
        if len(set(positions)) < 3:
            continue
        triple = tuple(tiling.cells[p] for p in positions)
        for config in FlipConfig:
            if triple == config.pattern:
                sites.append(FlipSite(m, config))
    return sites


def apply_flip(tiling: Tiling, site: FlipSite) -> Tiling:
    positions = _hexagon(tiling, site.m)
    if len(set(positions)) < 3 or tuple(tiling.cells[p] for p in positions) != site.config.pattern:
        raise FlipError(f"stale flip site {site.to_dict()} for tiling {tiling.word}")
    cells = list(tiling.cells)
    for p, o in zip(positions, site.config.opposite.pattern):
        cells[p] = o
    return Tiling(tiling.hnf, tuple(cells))


@dataclass(frozen=True)
class FlipGraphSummary:
    tiling_type: TilingType
    order: int
    size: int
    components: int

    @property
    def connected(self) -> bool:
        return self.components <= 1

    def to_dict(self) -> dict:
        return {
            "type": self.tiling_type.to_dict(),
            "order": self.order,
            "size": self.size,
            "components": self.components,
            "connected": self.connected,
        }


class FlipGraph:
    """Tilings of one type joined by single flips"""

    def __init__(self, tilings: List[Tiling]):
        self.tilings = sorted(tilings, key=lambda t: t.sort_key)
        self.index: Dict[Tiling, int] = {t: k for k, t in enumerate(self.tilings)}
        self.edges: List[Tuple[int, int]] = []
        for k, tiling in enumerate(self.tilings):
            for site in flip_sites(tiling):
                other = self.index.get(apply_flip(tiling, site))
                if other is None:
                    raise FlipError(f"Flip of {tiling.word} left the tiling set")
                if k < other:
                    self.edges.append((k, other))

    def components(self) -> int:
        n = len(self.tilings)
        if n == 0:
            return 0
        rows = np.array([e[0] for e in self.edges], dtype=np.int64)
        cols = np.array([e[1] for e in self.edges], dtype=np.int64)
        adjacency = coo_matrix((np.ones(len(self.edges)), (rows, cols)), shape=(n, n))
        count, _ = connected_components(adjacency, directed=False)
        return int(count)

    def summary(self, tiling_type: TilingType) -> FlipGraphSummary:
        return FlipGraphSummary(tiling_type, len(self.tilings), len(self.edges), self.components())


class FlipAnalyzer:
    """Builds flip graphs per type for one lattice"""

    def __init__(self, cap: int = DEFAULT_ENUMERATION_CAP):
        self.logger = logging.getLogger(__name__)
        self.enumerator = TilingEnumerator(cap)

    def graph(self, basis: Basis, t: TilingType) -> FlipGraph:
        tilings = [x for x in self.enumerator.enumerate(hnf(basis)) if type_of(x) == t]
        if not tilings:
            raise FlipError(f"Type {t} is not realized on this lattice")
        graph = FlipGraph(tilings)
        self.logger.info(f"Flip graph of type {t}: {len(graph.tilings)} tilings, {len(graph.edges)} flips")
        return graph


def flip_connected(basis: Basis, t: TilingType, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    return FlipAnalyzer(cap).graph(basis, t).summary(t).connected


def site_at(tiling: Tiling, m: Cell) -> Optional[FlipSite]:
    """Flip site centred at m, if any"""
    for site in flip_sites(tiling):
        if site.m == m:
            return site
    return None
