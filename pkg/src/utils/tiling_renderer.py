"""
Geometry and SVG emission for periodic lozenge tilings
"""

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.tiling import Orientation, Tiling

# Corners of the lozenge at up cell x, as offsets in the (u, v) frame
LOZENGE_CORNERS: Dict[Orientation, Tuple[Tuple[int, int], ...]] = {
    Orientation.D: ((0, 0), (1, -1), (1, 0), (0, 1)),
    Orientation.R: ((0, 0), (1, 0), (1, 1), (0, 1)),
    Orientation.L: ((0, 0), (1, 0), (0, 1), (-1, 1)),
}

DEFAULT_COLORS: Dict[Orientation, str] = {
    Orientation.L: "#d95f02",
    Orientation.D: "#1b3a5c",
    Orientation.R: "#e6c229",
}

# u = (1, 0), v = (1/2, √3/2)
EMBEDDING = np.array([[1.0, 0.5], [0.0, np.sqrt(3.0) / 2.0]])

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%(width).3f" height="%(height).3f" viewBox="%(min_x).3f %(min_y).3f %(width).3f %(height).3f">
"""

POSTAMBLE = "</svg>\n"


@dataclass
class RenderOptions:
    unit: float = 40.0
    repetitions: int = 3
    colors: Dict[Orientation, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))
    outline: bool = False
    stroke: str = "#000000"
    stroke_width: float = 1.0


@dataclass
class Lozenge:
    orientation: Orientation
    corners: np.ndarray  # 4 x 2, screen coordinates


def embed(points: Sequence[Tuple[float, float]], unit: float) -> np.ndarray:
    """Map (λ1, λ2) pairs to screen coordinates with y pointing down"""
    screen = (EMBEDDING @ np.asarray(points, dtype=float).T).T * unit
    screen[:, 1] *= -1.0
    return screen


def lozenges(tiling: Tiling, options: RenderOptions) -> List[Lozenge]:
    """Lozenges of repetitions x repetitions copies of the fundamental domain"""
    form = tiling.hnf
    shapes = []
    for m2 in range(options.repetitions):
        for m1 in range(options.repetitions):
            ox, oy = m1 * form.a + m2 * form.c, m2 * form.b
            for cell in form.cells():
                o = tiling.cell(cell)
                x, y = cell.j + ox, cell.i + oy
                corners = [(x + dx, y + dy) for dx, dy in LOZENGE_CORNERS[o]]
                shapes.append(Lozenge(o, embed(corners, options.unit)))
    return shapes


def domain_outline(tiling: Tiling, options: RenderOptions) -> np.ndarray:
    form = tiling.hnf
    k = options.repetitions
    corners = [(0, 0), (k * form.a, 0), (k * (form.a + form.c), k * form.b), (k * form.c, k * form.b)]
    return embed(corners, options.unit)


class SVG:
    """Accumulates polygon commands and tracks the drawing bounds"""

    def __init__(self):
        self.min_x = None
        self.max_x = None
        self.min_y = None
        self.max_y = None
        self.commands: List[str] = []

    def require(self, x: float, y: float):
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
        else:
            self.min_x = min(self.min_x, x)
            self.max_x = max(self.max_x, x)
            self.min_y = min(self.min_y, y)
            self.max_y = max(self.max_y, y)

    def polygon(self, points: np.ndarray, fill: str, stroke: str, width: float, css_class: str = ""):
        for x, y in points:
            self.require(float(x), float(y))
        path = " ".join("%.3f,%.3f" % (x, y) for x, y in points)
        klass = ' class="%s"' % css_class if css_class else ""
        self.commands.append(
            '<polygon%s points="%s" style="fill:%s;stroke:%s;stroke-width:%.3f"/>'
            % (klass, path, fill, stroke, width)
        )

    def text(self) -> str:
        pad = 0.05 * max(self.max_x - self.min_x, self.max_y - self.min_y, 1.0)
        min_x = self.min_x - pad
        min_y = self.min_y - pad
        width = self.max_x - self.min_x + 2 * pad
        height = self.max_y - self.min_y + 2 * pad
        lines = [PREAMBLE % locals()]
        lines.extend(item + "\n" for item in self.commands)
        lines.append(POSTAMBLE)
        return "".join(lines)


def render(tiling: Tiling, repetitions: int = 3, options: Optional[RenderOptions] = None) -> str:
    """SVG text of a periodic tiling, one polygon per lozenge"""
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive, got {repetitions}")
    options = replace(options or RenderOptions(), repetitions=repetitions)
    svg = SVG()
    for shape in lozenges(tiling, options):
        svg.polygon(
            shape.corners,
            options.colors[shape.orientation],
            options.stroke,
            options.stroke_width,
            css_class="lozenge-%s" % shape.orientation.value,
        )
    if options.outline:
        svg.polygon(domain_outline(tiling, options), "none", "#c00000", 2 * options.stroke_width, "domain")
    return svg.text()
