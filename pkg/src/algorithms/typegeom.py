"""
Fundamental triangle geometry, type/fingerprint conversion and closed-form counts
"""

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Dict, List, Tuple

from scipy.special import comb

from ..core.errors import TypeGeometryError, UnrealizableFingerprintError
from ..core.lattice import Basis, hnf
from ..core.tiling import Orientation, Tiling, TilingType
from .heights import Fingerprint

EDGES = ("DL", "LR", "DR")


@dataclass(frozen=True)
class FundamentalTriangle:
    """Fingerprints of the three constant tilings"""

    vL: Fingerprint
    vD: Fingerprint
    vR: Fingerprint

    @property
    def doubled_area(self) -> int:
        (x1, y1), (x2, y2), (x3, y3) = (v.as_tuple() for v in (self.vL, self.vD, self.vR))
        return abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1))

    def to_dict(self) -> dict:
        return {"L": self.vL.to_list(), "D": self.vD.to_list(), "R": self.vR.to_list()}


@dataclass(frozen=True)
class CountSummary:
    """Boundary and interior lattice-point counts of the fundamental triangle"""

    boundary_DL: int
    boundary_LR: int
    boundary_RD: int
    interior: int
    monomials: int

    def to_dict(self) -> dict:
        return {
            "boundary_DL": self.boundary_DL,
            "boundary_LR": self.boundary_LR,
            "boundary_RD": self.boundary_RD,
            "interior": self.interior,
            "monomials": self.monomials,
        }


def triangle(basis: Basis) -> FundamentalTriangle:
    (a1, a2), (b1, b2) = basis.a, basis.b
    return FundamentalTriangle(
        Fingerprint(-a1 - 2 * a2, -b1 - 2 * b2),
        Fingerprint(2 * a1 + a2, 2 * b1 + b2),
        Fingerprint(-a1 + a2, -b1 + b2),
    )


def _cross(p: Tuple[int, int], q: Tuple[int, int]) -> int:
    return p[0] * q[1] - p[1] * q[0]


def fingerprint_to_type(basis: Basis, p: Fingerprint) -> TilingType:
    """Barycentric coordinates of p in the fundamental triangle, scaled by the index"""
    tri = triangle(basis)
    n = basis.index
    if (p.d1 - tri.vD.d1) % 3 or (p.d2 - tri.vD.d2) % 3:
        raise UnrealizableFingerprintError(f"unrealizable fingerprint {p}: wrong residue mod 3")
    r = tri.vR.as_tuple()
    el = (tri.vL.d1 - r[0], tri.vL.d2 - r[1])
    ed = (tri.vD.d1 - r[0], tri.vD.d2 - r[1])
    rel = (p.d1 - r[0], p.d2 - r[1])
    det = _cross(el, ed)
    n_l_num = n * _cross(rel, ed)
    n_d_num = n * _cross(el, rel)
    if n_l_num % det or n_d_num % det:
        raise UnrealizableFingerprintError(f"unrealizable fingerprint {p}: not a lattice point")
    n_l, n_d = n_l_num // det, n_d_num // det
    n_r = n - n_l - n_d
    if min(n_l, n_d, n_r) < 0:
        raise UnrealizableFingerprintError(f"unrealizable fingerprint {p}: outside the triangle")
    return TilingType(n_l, n_d, n_r)


def type_to_fingerprint(basis: Basis, t: TilingType) -> Fingerprint:
    n = basis.index
    if t.total != n or min(t.as_tuple()) < 0:
        raise TypeGeometryError(f"Type {t} does not sum to index {n}")
    tri = triangle(basis)
    coords = []
    for k in range(2):
        total = sum(
            count * vertex.as_tuple()[k]
            for count, vertex in zip(t.as_tuple(), (tri.vL, tri.vD, tri.vR))
        )
        if total % n:
            raise TypeGeometryError(f"Type {t} is impossible for this lattice")
        coords.append(total // n)
    return Fingerprint(*coords)


def all_types(basis: Basis) -> List[Tuple[Fingerprint, TilingType]]:
    """Every realizable (fingerprint, type) pair, sorted by fingerprint"""
    tri = triangle(basis)
    vertices = [tri.vL.as_tuple(), tri.vD.as_tuple(), tri.vR.as_tuple()]
    origin = tri.vD.as_tuple()
    # scan (3Z)² shifted by vD over the bounding box
    lo = [min(v[k] for v in vertices) for k in range(2)]
    hi = [max(v[k] for v in vertices) for k in range(2)]
    start = [origin[k] - 3 * ((origin[k] - lo[k]) // 3) for k in range(2)]
    pairs = []
    for d1 in range(start[0], hi[0] + 1, 3):
        for d2 in range(start[1], hi[1] + 1, 3):
            p = Fingerprint(d1, d2)
            try:
                pairs.append((p, fingerprint_to_type(basis, p)))
            except UnrealizableFingerprintError:
                continue
    return sorted(pairs)


def boundary_gcds(basis: Basis) -> Dict[str, int]:
    """Lattice-point spacing along each triangle edge"""
    (a1, a2), (b1, b2) = basis.a, basis.b
    return {"DL": gcd(a1 + a2, b1 + b2), "LR": gcd(a2, b2), "DR": gcd(a1, b1)}


def count_summary(basis: Basis) -> CountSummary:
    n = basis.index
    g = boundary_gcds(basis)
    border = g["DL"] + g["LR"] + g["DR"]
    # Pick's theorem on the triangle scaled by 1/3 (area n/2)
    interior, remainder = divmod(n - border, 2)
    if remainder:
        raise TypeGeometryError(f"Parity mismatch between index {n} and boundary {border}")
    return CountSummary(
        boundary_DL=g["DL"] + 1,
        boundary_LR=g["LR"] + 1,
        boundary_RD=g["DR"] + 1,
        interior=interior + 1,
        monomials=interior + 1 + border,
    )


def _totient(k: int) -> int:
    return sum(1 for m in range(1, k + 1) if gcd(m, k) == 1)


def _divisors(n: int) -> List[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def necklace_count(d: int, i: int) -> int:
    """Binary necklaces of length d with i coloured beads"""
    if d <= 0 or not 0 <= i <= d:
        raise TypeGeometryError(f"necklace_count requires 0 <= i <= d, d > 0 (got d={d}, i={i})")
    total = sum(
        _totient(k) * comb(d // k, i // k, exact=True)
        for k in _divisors(gcd(i, d))
    )
    return total // d


def necklace_total(d: int) -> int:
    if d <= 0:
        raise TypeGeometryError(f"necklace_total requires d > 0 (got {d})")
    return sum(_totient(k) * 2 ** (d // k) for k in _divisors(d)) // d


def _group(d: int, dihedral: bool) -> List[List[int]]:
    perms = [[(x + r) % d for x in range(d)] for r in range(d)]
    if dihedral:
        perms += [[(r - x) % d for x in range(d)] for r in range(d)]
    return perms


def _cycle_lengths(perm: List[int]) -> List[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return lengths


def burnside_count(d: int, i: int, dihedral: bool = False) -> int:
    """Orbits of i-subsets of Z_d under rotations, or rotations and reflections"""
    if d <= 0 or not 0 <= i <= d:
        raise TypeGeometryError(f"burnside_count requires 0 <= i <= d, d > 0 (got d={d}, i={i})")
    group = _group(d, dihedral)
    fixed = 0
    for perm in group:
        # coefficient of x^i in prod (1 + x^len)
        poly = [1] + [0] * d
        for length in _cycle_lengths(perm):
            for k in range(d, length - 1, -1):
                poly[k] += poly[k - length]
        fixed += poly[i]
    return fixed // len(group)


def bracelet_count(d: int, i: int) -> int:
    return burnside_count(d, i, dihedral=True)


def bracelet_total(d: int) -> int:
    return sum(bracelet_count(d, i) for i in range(d + 1))


def edge_tilings(basis: Basis, edge: str = "DR") -> List[Tuple[Tiling, int]]:
    """
    The 2^g tilings whose type lies on one edge of the fundamental triangle

    On the DR edge a tiling is constant along v and determined by a binary
    word indexed by λ1 mod gcd(a1, b1); LR tilings are constant along u and
    DL tilings along u - v.

    Returns:
        (tiling, number of first-letter lozenges per period word) pairs, sorted by tiling
    """
    if edge not in EDGES:
        raise TypeGeometryError(f"Unknown triangle edge {edge}")
    form = hnf(basis)
    g = boundary_gcds(basis)[edge]
    letters = {
        "DR": (Orientation.D, Orientation.R),
        "LR": (Orientation.L, Orientation.R),
        "DL": (Orientation.D, Orientation.L),
    }[edge]

    def key(point: Tuple[int, int]) -> int:
        if edge == "DR":
            return point[0] % g
        if edge == "LR":
            return point[1] % g
        return (point[0] + point[1]) % g

    results = []
    for word in product((0, 1), repeat=g):
        cells = tuple(letters[word[key(cell.point)]] for cell in form.cells())
        results.append((Tiling(form, cells), word.count(0)))
    return sorted(results, key=lambda pair: pair[0].sort_key)
