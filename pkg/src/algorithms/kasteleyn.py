"""
Kasteleyn matrices of a periodic lozenge lattice and the generating function Z(L, D, R)

Rows are indexed by up triangles j·u + i·v (row i·a + j), columns by down
triangles (i+1)·v + j·u. The lozenge of orientation o at up cell p covers the
down triangle at p + ξ(o), whose column is the cell of p + ξ(o) - v.
"""

import logging
from collections import Counter
from typing import Dict, Iterable, List, Optional, Tuple

from ..core.errors import CapExceededError, KasteleynError
from ..core.lattice import Basis, HnfForm, hnf
from ..core.polyring import (
    DEFAULT_PERMANENT_CAP,
    ZERO,
    Poly,
    PolyMatrix,
)
from ..core.polyring import D as VAR_D
from ..core.polyring import L as VAR_L
from ..core.polyring import R as VAR_R
from ..core.tiling import Tiling, type_of

DEFAULT_DETERMINANT_CAP = 16
DEFAULT_EDGE_CAP = 30

# Variable zeroed for each edge of the fundamental triangle
EDGE_MISSING = {"DR": "L", "LR": "D", "DL": "R"}


def _columns(form: HnfForm, j: int, i: int) -> Tuple[int, int, int]:
    """Columns hit by the R, L and D lozenges of up cell (j, i)"""
    return (
        form.position((j, i)),
        form.position((j - 1, i)),
        form.position((j, i - 1)),
    )


def build_m(form: HnfForm) -> PolyMatrix:
    """Unsigned bipartite adjacency matrix"""
    return _build(form, 1, 1, signed=False)


def build_m_prime(form: HnfForm, s1: int, s2: int) -> PolyMatrix:
    """Signed matrix with the markers ω1 = s1 and ω2 = s2 substituted"""
    if s1 not in (1, -1) or s2 not in (1, -1):
        raise ValueError(f"Markers must be ±1, got ({s1}, {s2})")
    return _build(form, s1, s2, signed=True)


def _build(form: HnfForm, s1: int, s2: int, signed: bool) -> PolyMatrix:
    n = form.index
    rows: List[List[Poly]] = [[ZERO] * n for _ in range(n)]
    for cell in form.cells():
        j, i = cell.point
        r = form.linear_index(cell)
        col_r, col_l, col_d = _columns(form, j, i)
        sign_l, sign_d = 1, 1
        if signed:
            sign_l = s1 if j == 0 else -1
            if i == 0:
                if j < form.a - form.c:
                    sign_d = (-1) ** (form.b + 1) * s2
                else:
                    sign_d = (-1) ** form.b * s1 * s2
        rows[r][col_r] = rows[r][col_r] + VAR_R
        rows[r][col_l] = rows[r][col_l] + VAR_L * sign_l
        rows[r][col_d] = rows[r][col_d] + VAR_D * sign_d
    return PolyMatrix.from_rows(rows)


class KasteleynSolver:
    """Four-determinant evaluation of the tiling generating function"""

    def __init__(self, cap: int = DEFAULT_DETERMINANT_CAP):
        self.logger = logging.getLogger(__name__)
        self.cap = cap

    def genfun(self, basis: Basis, missing: Optional[str] = None) -> Poly:
        """
        Z(L, D, R) = (g(1,1) + g(1,-1) + g(-1,1) - g(-1,-1)) / 2

        Args:
            basis: Period lattice basis
            missing: Optional variable name set to zero before the determinants

        Returns:
            Generating function polynomial
        """
        form = hnf(basis)
        if form.index > self.cap:
            raise CapExceededError("determinant", form.index, self.cap)
        values: Dict[Tuple[int, int], Poly] = {}
        for s1 in (1, -1):
            for s2 in (1, -1):
                matrix = build_m_prime(form, s1, s2)
                if missing is not None:
                    matrix = matrix.map(lambda p: p.substitute(**{missing: 0}))
                values[(s1, s2)] = matrix.determinant()
                self.logger.debug(f"g({s1},{s2}) = {values[(s1, s2)]}")
        combination = values[(1, 1)] + values[(1, -1)] + values[(-1, 1)] - values[(-1, -1)]
        try:
            result = combination.exact_div(2)
        except ArithmeticError as e:
            self.logger.error(f"Four-determinant combination failed: {e}")
            raise KasteleynError(f"non-integral determinant combination: {e}")
        self.logger.info(
            f"Generating function for HNF ({form.a},{form.b},{form.c}) has {len(result.terms)} monomials"
        )
        return result

    def edge_genfun(self, basis: Basis, edge: str) -> Poly:
        if edge not in EDGE_MISSING:
            raise ValueError(f"Unknown triangle edge {edge}")
        return self.genfun(basis, missing=EDGE_MISSING[edge])


def genfun(basis: Basis, cap: int = DEFAULT_DETERMINANT_CAP) -> Poly:
    return KasteleynSolver(cap).genfun(basis)


def edge_genfun(basis: Basis, edge: str, cap: int = DEFAULT_EDGE_CAP) -> Poly:
    return KasteleynSolver(cap).edge_genfun(basis, edge)


def permanent_genfun(basis: Basis, cap: int = DEFAULT_PERMANENT_CAP) -> Poly:
    """Matching census read off the unsigned matrix"""
    return build_m(hnf(basis)).permanent(cap)


def census(tilings: Iterable[Tiling]) -> Poly:
    """Sum of L^nL D^nD R^nR over the given tilings"""
    counts = Counter(type_of(t).as_tuple() for t in tilings)
    return Poly.from_mapping(dict(counts))
