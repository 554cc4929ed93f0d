"""
Cross-check harness: every symbolic result against the brute-force enumerator
"""

import logging
from collections import Counter
from typing import Callable, Dict, List, Sequence

from scipy.special import comb

from ..core.lattice import Basis, HnfForm, all_hnfs, hnf
from ..core.polyring import Poly, eval_ones
from ..core.tiling import DEFAULT_ENUMERATION_CAP, Tiling, TilingEnumerator, TilingType, type_of
from .flips import FlipGraph, apply_flip, flip_sites, site_at
from .heights import INCREMENTS, edge_exists, fingerprint, heights
from .kasteleyn import KasteleynSolver, census, permanent_genfun
from .quotients import involute, orbits, shift
from .typegeom import (
    all_types,
    boundary_gcds,
    bracelet_count,
    count_summary,
    edge_tilings,
    necklace_count,
    triangle,
)


class CrossCheckSuite:
    """Runs the oracle-equality checks over all small lattices"""

    def __init__(self, cap: int = DEFAULT_ENUMERATION_CAP):
        self.logger = logging.getLogger(__name__)
        self.cap = cap
        self.enumerator = TilingEnumerator(cap)
        self.solver = KasteleynSolver(cap)

    def run(self, max_index: int, extra_bases: Sequence[Basis] = ()) -> dict:
        """
        Check every HNF with a·b <= max_index, then any extra bases

        Returns:
            JSON-ready report with per-lattice check results and an overall verdict
        """
        bases = [form.basis() for form in all_hnfs(max_index)] + list(extra_bases)
        lattices = []
        for basis in bases:
            lattices.append(self.check_lattice(basis))
        failures = [
            {"hnf": entry["hnf"], "check": name}
            for entry in lattices
            for name, ok in sorted(entry["checks"].items())
            if not ok
        ]
        passed = not failures
        self.logger.info(f"Checked {len(lattices)} lattices: {'all passed' if passed else f'{len(failures)} failures'}")
        return {
            "max_index": max_index,
            "lattices": lattices,
            "failures": failures,
            "passed": passed,
        }

    def check_lattice(self, basis: Basis) -> dict:
        form = hnf(basis)
        tilings = self.enumerator.enumerate(form)
        z = self.solver.genfun(basis)
        checks: Dict[str, bool] = {}

        def record(name: str, check: Callable[[], bool]):
            try:
                checks[name] = bool(check())
            except Exception as e:
                self.logger.error(f"Check {name} raised for HNF {form.to_dict()}: {e}")
                checks[name] = False
            if not checks[name]:
                self.logger.warning(f"Check {name} failed for HNF {form.to_dict()}")

        brute = census(tilings)
        record("genfun_equals_census", lambda: z == brute)
        record("permanent_equals_census", lambda: permanent_genfun(basis, cap=self.cap) == brute)
        record("count_equals_z_at_ones", lambda: eval_ones(z) == len(tilings))
        record("vertex_coefficients", lambda: self._vertex_coefficients(z, form.index))
        record("homogeneous_degree", lambda: z.total_degrees() == [form.index])
        record("monomial_count", lambda: self._monomial_count(basis, z))
        record("realized_types", lambda: self._realized_types(basis, tilings))
        record("fingerprint_identity", lambda: self._fingerprint_identity(basis, tilings))
        record("missing_edge_detour", lambda: self._missing_edge_detour(basis, tilings))
        record("edge_binomials", lambda: self._edge_binomials(basis, z))
        record("edge_construction", lambda: self._edge_construction(basis, tilings))
        record("involution", lambda: self._involution(tilings))
        record("quotient_support_and_edges", lambda: self._quotients(basis, tilings, z))
        record("flip_moves", lambda: self._flip_moves(basis, tilings))
        record("flip_sites_iff_interior", lambda: self._flip_sites_iff_interior(form, tilings))
        record("interior_flip_connectivity", lambda: self._flip_connectivity(tilings))

        return {
            "hnf": form.to_dict(),
            "basis": basis.as_matrix(),
            "tilings": len(tilings),
            "monomials": len(z.terms),
            "checks": checks,
        }

    def _vertex_coefficients(self, z: Poly, n: int) -> bool:
        return all(z.coefficient(e) == 1 for e in ((n, 0, 0), (0, n, 0), (0, 0, n)))

    def _monomial_count(self, basis: Basis, z: Poly) -> bool:
        return len(z.terms) == count_summary(basis).monomials == len(all_types(basis))

    def _realized_types(self, basis: Basis, tilings: List[Tiling]) -> bool:
        return {type_of(t) for t in tilings} == {t for _, t in all_types(basis)}

    def _fingerprint_identity(self, basis: Basis, tilings: List[Tiling]) -> bool:
        tri = triangle(basis)
        n = basis.index
        for tiling in tilings:
            t = type_of(tiling)
            fp = fingerprint(tiling, basis)
            for k in range(2):
                weighted = t.nL * tri.vL.as_tuple()[k] + t.nD * tri.vD.as_tuple()[k] + t.nR * tri.vR.as_tuple()[k]
                if n * fp.as_tuple()[k] != weighted:
                    return False
        return True

    def _missing_edge_detour(self, basis: Basis, tilings: List[Tiling]) -> bool:
        for tiling in tilings:
            field = heights(tiling, basis)
            for cell in tiling.hnf.cells():
                x = cell.point
                for step, f in INCREMENTS.items():
                    if edge_exists(tiling, x, step):
                        continue
                    y = (x[0] + step[0], x[1] + step[1])
                    if field.height(y) - field.height(x) != -2 * f:
                        return False
        return True

    def _edge_binomials(self, basis: Basis, z: Poly) -> bool:
        n = basis.index
        d = boundary_gcds(basis)["DR"]
        total = 0
        for i in range(d + 1):
            c = z.coefficient((0, i * n // d, (d - i) * n // d))
            if c != comb(d, i, exact=True):
                return False
            total += c
        return total == 2 ** d

    def _edge_construction(self, basis: Basis, tilings: List[Tiling]) -> bool:
        for edge, missing in (("DR", 0), ("LR", 1), ("DL", 2)):
            built = {t for t, _ in edge_tilings(basis, edge)}
            found = {t for t in tilings if type_of(t).as_tuple()[missing] == 0}
            if built != found:
                return False
        return True

    def _involution(self, tilings: List[Tiling]) -> bool:
        shift_class = self._shift_classes(tilings)
        for tiling in tilings:
            image = involute(tiling)
            if involute(image) != tiling or type_of(image) != type_of(tiling):
                return False
            if shift_class[involute(shift(tiling, (1, 0)))] != shift_class[image]:
                return False
            if shift_class[involute(shift(tiling, (0, 1)))] != shift_class[image]:
                return False
        return True

    def _shift_classes(self, tilings: List[Tiling]) -> Dict[Tiling, int]:
        labels = {}
        for k, orbit in enumerate(orbits(tilings).orbits):
            for tiling in orbit:
                labels[tiling] = k
        return labels

    def _quotients(self, basis: Basis, tilings: List[Tiling], z: Poly) -> bool:
        z1 = orbits(tilings, shifts=True).census()
        z2 = orbits(tilings, shifts=True, involution=True).census()
        if not (z.monomials() == z1.monomials() == z2.monomials()):
            return False
        if any(z2.coefficient(e) > z1.coefficient(e) for e in z1.monomials()):
            return False
        n = basis.index
        d = boundary_gcds(basis)["DR"]
        for i in range(d + 1):
            e = (0, i * n // d, (d - i) * n // d)
            if z1.coefficient(e) != necklace_count(d, i) or z2.coefficient(e) != bracelet_count(d, i):
                return False
        return True

    def _flip_moves(self, basis: Basis, tilings: List[Tiling]) -> bool:
        for tiling in tilings:
            before = heights(tiling, basis)
            for site in flip_sites(tiling):
                flipped = apply_flip(tiling, site)
                changed = sum(a != b for a, b in zip(tiling.cells, flipped.cells))
                after = heights(flipped, basis)
                if changed != 3 or type_of(flipped) != type_of(tiling):
                    return False
                if after.holonomy != before.holonomy:
                    return False
                reverse = site_at(flipped, site.m)
                if reverse is None or apply_flip(flipped, reverse) != tiling:
                    return False
                diffs = [b - a for a, b in zip(before.base, after.base)]
                offset = Counter(diffs).most_common(1)[0][0]
                moved = [k for k, delta in enumerate(diffs) if delta != offset]
                center = tiling.hnf.position((site.m.j + 1, site.m.i))
                if moved != [center] or abs(diffs[center] - offset) != 3:
                    return False
        return True

    def _flip_sites_iff_interior(self, form: HnfForm, tilings: List[Tiling]) -> bool:
        if form.index < 3:
            return all(not flip_sites(t) for t in tilings)
        return all(bool(flip_sites(t)) == type_of(t).is_interior for t in tilings)

    def _flip_connectivity(self, tilings: List[Tiling]) -> bool:
        by_type: Dict[TilingType, List[Tiling]] = {}
        for tiling in tilings:
            by_type.setdefault(type_of(tiling), []).append(tiling)
        for t, members in sorted(by_type.items()):
            if t.is_interior and not FlipGraph(members).summary(t).connected:
                return False
        return True


