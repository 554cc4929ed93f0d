"""
Height functions, fingerprints and the construction of tilings from fingerprints
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import HeightError, InvalidTilingError, UnrealizableFingerprintError
from ..core.lattice import Basis, HnfForm, Point, hnf, lattice_coordinates
from ..core.tiling import Orientation, Tiling, enumerate_tilings, is_valid

Triple = Tuple[int, int, int]

U: Point = (1, 0)
V: Point = (0, 1)
U_MINUS_V: Point = (1, -1)

# Height increment along each of the six steps
INCREMENTS: Dict[Point, int] = {
    (1, 0): -1,
    (-1, 0): 1,
    (0, 1): 1,
    (0, -1): -1,
    (1, -1): 1,
    (-1, 1): -1,
}


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Height holonomy (e(a), e(b)) along the two basis vectors"""

    d1: int
    d2: int

    def as_tuple(self) -> Point:
        return (self.d1, self.d2)

    def to_list(self) -> List[int]:
        return [self.d1, self.d2]

    @classmethod
    def parse(cls, text: str) -> "Fingerprint":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"Expected 'd1,d2', got '{text}'")
        return cls(int(parts[0]), int(parts[1]))

    def __str__(self) -> str:
        return f"({self.d1},{self.d2})"


@dataclass(frozen=True)
class HeightField:
    """Heights of the fundamental-domain vertices plus the holonomy of the basis"""

    basis: Basis
    form: HnfForm
    base: Tuple[int, ...]
    holonomy: Tuple[int, int]

    def height(self, point: Point) -> int:
        position = self.form.position(point)
        rep = self.form.cell_at(position).point
        k1, k2 = lattice_coordinates(self.basis, (point[0] - rep[0], point[1] - rep[1]))
        return self.base[position] + k1 * self.holonomy[0] + k2 * self.holonomy[1]

    @property
    def fingerprint(self) -> Fingerprint:
        return Fingerprint(*self.holonomy)


def edge_exists(tiling: Tiling, point: Point, step: Point) -> bool:
    """Whether the lattice edge point -> point+step is not crossed by a lozenge"""
    x, y = point
    step = tuple(step)
    if step == (1, 0):
        return tiling.at((x, y)) is not Orientation.D
    if step == (0, 1):
        return tiling.at((x, y)) is not Orientation.L
    if step == (-1, 1):
        return tiling.at((x - 1, y)) is not Orientation.R
    if step == (-1, 0):
        return tiling.at((x - 1, y)) is not Orientation.D
    if step == (0, -1):
        return tiling.at((x, y - 1)) is not Orientation.L
    if step == (1, -1):
        return tiling.at((x, y - 1)) is not Orientation.R
    raise HeightError(f"invalid step {step}")


def _check_basis(tiling: Tiling, basis: Basis):
    if hnf(basis) != tiling.hnf:
        raise InvalidTilingError(
            f"Basis {basis.as_matrix()} does not generate the tiling's lattice {tiling.hnf.to_dict()}"
        )


def heights(tiling: Tiling, basis: Basis) -> HeightField:
    """
    Solve the edge equations of the quotient graph for base heights and holonomy

    Each vertex class gets an affine form c + ca·e(a) + cb·e(b) from a
    breadth-first spanning tree; every remaining edge is an equation in
    (e(a), e(b)) that must be satisfied exactly.
    """
    _check_basis(tiling, basis)
    form = tiling.hnf
    n = form.index

    # (source, target, lattice offset of target, increment)
    edges: List[Tuple[int, int, Tuple[int, int], int]] = []
    adjacency: List[List[int]] = [[] for _ in range(n)]
    for source in range(n):
        p = form.cell_at(source).point
        for step in (U, V, U_MINUS_V):
            if not edge_exists(tiling, p, step):
                continue
            q = (p[0] + step[0], p[1] + step[1])
            target = form.position(q)
            rep = form.cell_at(target).point
            offset = lattice_coordinates(basis, (q[0] - rep[0], q[1] - rep[1]))
            adjacency[source].append(len(edges))
            adjacency[target].append(len(edges))
            edges.append((source, target, offset, INCREMENTS[step]))

    forms: List[Optional[Triple]] = [None] * n
    forms[0] = (0, 0, 0)
    queue = deque([0])
    while queue:
        node = queue.popleft()
        c, ca, cb = forms[node]
        for e in adjacency[node]:
            source, target, (k1, k2), f = edges[e]
            if source == node and forms[target] is None:
                forms[target] = (c + f, ca - k1, cb - k2)
                queue.append(target)
            elif target == node and forms[source] is None:
                forms[source] = (c - f, ca + k1, cb + k2)
                queue.append(source)
    if any(f is None for f in forms):
        raise HeightError("height not well-defined: quotient edge graph is disconnected")

    # alpha·e(a) + beta·e(b) + gamma = 0 per edge
    equations = []
    for source, target, (k1, k2), f in edges:
        cs, cas, cbs = forms[source]
        ct, cat, cbt = forms[target]
        equations.append((cat - cas + k1, cbt - cbs + k2, ct - cs - f))

    holonomy = _solve_holonomy(equations)
    ea, eb = holonomy
    for alpha, beta, gamma in equations:
        if alpha * ea + beta * eb + gamma != 0:
            raise HeightError("height not well-defined")
    base = tuple(c + ca * ea + cb * eb for c, ca, cb in forms)
    return HeightField(basis, form, base, holonomy)


def _solve_holonomy(equations: Sequence[Triple]) -> Tuple[int, int]:
    first = None
    for alpha, beta, gamma in equations:
        if alpha == 0 and beta == 0:
            if gamma != 0:
                raise HeightError("height not well-defined")
            continue
        if first is None:
            first = (alpha, beta, gamma)
            continue
        a1, b1, g1 = first
        det = a1 * beta - alpha * b1
        if det == 0:
            continue
        x_num = -g1 * beta + b1 * gamma
        y_num = -a1 * gamma + alpha * g1
        if x_num % det or y_num % det:
            raise HeightError("height not well-defined: non-integral holonomy")
        return (x_num // det, y_num // det)
    raise HeightError("height not well-defined: holonomy undetermined")


def fingerprint(tiling: Tiling, basis: Basis) -> Fingerprint:
    return heights(tiling, basis).fingerprint


def coords3(tiling: Tiling, point: Point, basis: Optional[Basis] = None) -> Triple:
    """Position of a vertex on the stepped surface in Z³"""
    field = heights(tiling, basis or tiling.hnf.basis())
    return _lift(point, field.height(point))


def _lift(point: Point, height: int) -> Triple:
    l1, l2 = point
    t, remainder = divmod(height - l2 + l1, 3)
    if remainder:
        raise HeightError(f"height {height} at {point} has the wrong residue")
    return (-l1 + t, t, l2 + t)


def transform_fingerprint(fp: Fingerprint, unimodular: Sequence[Sequence[int]]) -> Fingerprint:
    """Fingerprint in the basis [a|b]·U"""
    (u11, u12), (u21, u22) = unimodular
    return Fingerprint(u11 * fp.d1 + u21 * fp.d2, u12 * fp.d1 + u22 * fp.d2)


def skeleton(basis: Basis, target: Fingerprint) -> Tuple[Triple, Triple]:
    """3D points of the surface above a and b for any tiling with this fingerprint"""
    points = []
    for (x1, x2), delta in ((basis.a, target.d1), (basis.b, target.d2)):
        numerators = (delta - 2 * x1 - x2, delta + x1 - x2, delta + x1 + 2 * x2)
        if any(v % 3 for v in numerators):
            raise UnrealizableFingerprintError()
        points.append(tuple(v // 3 for v in numerators))
    return points[0], points[1]


def tiling_for_fingerprint(basis: Basis, target: Fingerprint, method: str = "plane") -> Tiling:
    """
    Construct a tiling with the requested fingerprint

    Args:
        basis: Period lattice basis
        target: Fingerprint to realize
        method: 'plane', 'octants' or 'search'

    Returns:
        A valid Tiling whose fingerprint in basis is target
    """
    from .typegeom import fingerprint_to_type

    tiling_type = fingerprint_to_type(basis, target)
    form = hnf(basis)

    if method == "plane":
        tiling = _stepped_plane(form, tiling_type.nL, tiling_type.nD, tiling_type.nR)
    elif method == "octants":
        tiling = _octant_union(basis, form, target)
    elif method == "search":
        tiling = next(
            (t for t in enumerate_tilings(form) if fingerprint(t, basis) == target),
            None,
        )
        if tiling is None:
            raise UnrealizableFingerprintError()
    else:
        raise ValueError(f"Unknown construction method: {method}")

    if not is_valid(form, tiling.cells) or fingerprint(tiling, basis) != target:
        raise UnrealizableFingerprintError(f"unrealizable fingerprint {target} by method {method}")
    return tiling


def _stepped_plane(form: HnfForm, n_l: int, n_d: int, n_r: int) -> Tiling:
    """Stepped surface under the plane with normal (nD, nR, nL)"""
    n = form.index
    cells = []
    for cell in form.cells():
        l1, l2 = cell.point
        q = (n_d * l1 - n_l * l2) % n
        if q < n_l:
            cells.append(Orientation.L)
        elif q < n_l + n_r:
            cells.append(Orientation.R)
        else:
            cells.append(Orientation.D)
    return Tiling(form, tuple(cells))


def _octant_union(basis: Basis, form: HnfForm, target: Fingerprint) -> Tiling:
    """Boundary of the union of downward octants below every skeleton translate"""
    spread = max(abs(v) for v in basis.a + basis.b)
    radius = 2 * form.index + 2 * spread + 2

    def skeleton_level(y: Point) -> int:
        # (1,1,1)-level of the skeleton point above the lattice vector y
        k1, k2 = lattice_coordinates(basis, y)
        return (k1 * target.d1 + k2 * target.d2 - y[1] + y[0]) // 3

    @lru_cache(maxsize=None)
    def level(point: Point) -> int:
        x1, x2 = point
        best = None
        for m2 in range(-(radius // form.b) - 1, radius // form.b + 2):
            for m1 in range(-(radius // form.a) - 2 - abs(m2), radius // form.a + 3 + abs(m2)):
                y = (m1 * form.a + m2 * form.c, m2 * form.b)
                if abs(y[0] - x1) > radius or abs(y[1] - x2) > radius:
                    continue
                s = skeleton_level(y)
                # min over coordinates of skeleton minus the base position of x
                value = min(-y[0] + s + x1, s, y[1] + s - x2)
                if best is None or value > best:
                    best = value
        return best

    def height(point: Point) -> int:
        return point[1] - point[0] + 3 * level(point)

    cells = []
    for cell in form.cells():
        x = cell.point
        h = height(x)
        if height((x[0] + 1, x[1])) - h == 2:
            cells.append(Orientation.D)
        elif height((x[0], x[1] + 1)) - h == -2:
            cells.append(Orientation.L)
        else:
            cells.append(Orientation.R)
    return Tiling(form, tuple(cells))
