"""
Export manager for tilings, polynomials, reports and rendered figures
"""

import json
import logging
import os
from typing import Any, Optional, Tuple

from PIL import Image, ImageDraw

from ..core.errors import InvalidTilingError
from ..core.lattice import Basis, hnf
from ..core.polyring import Poly
from ..core.tiling import Tiling
from .tiling_renderer import RenderOptions, lozenges, domain_outline, render


RENDER_FORMATS = (".svg", ".png")


def dumps(data: Any) -> str:
    """Canonical JSON text"""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


class ExportManager:
    """Handles reading and writing engine artifacts"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def export_tiling(self, tiling: Tiling, output_path: str, basis: Optional[Basis] = None):
        self._write_text(output_path, dumps(tiling.to_dict(basis)))

    def load_tiling(self, input_path: str) -> Tuple[Basis, Tiling]:
        """
        Load a tiling JSON file

        Returns:
            (basis, tiling); the basis defaults to the HNF generators when absent
        """
        try:
            with open(input_path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            self.logger.error(f"Tiling file {input_path} is not valid JSON: {e}")
            raise InvalidTilingError(f"{input_path} is not valid JSON: {e}") from e
        except OSError as e:
            self.logger.error(f"Failed to read tiling file {input_path}: {e}")
            raise
        try:
            tiling = Tiling.from_dict(data)
            basis = Basis.from_matrix(data["basis"]) if "basis" in data else tiling.hnf.basis()
            self.logger.info(f"Loaded tiling {tiling.word} from {input_path}")
            return basis, tiling
        except Exception as e:
            self.logger.error(f"Failed to load tiling from {input_path}: {str(e)}")
            raise

    def export_polynomial(self, poly: Poly, output_path: str):
        self._write_text(output_path, dumps(poly.to_json()))

    def load_polynomial(self, input_path: str) -> Poly:
        with open(input_path, "r", encoding="utf-8") as f:
            return Poly.from_json(json.load(f))

    def export_report(self, report: dict, output_path: str):
        self._write_text(output_path, dumps(report))

    def export_render(self, tiling: Tiling, output_path: str, options: Optional[RenderOptions] = None):
        """
        Export a rendering; format follows the file extension

        Args:
            tiling: Tiling to draw
            output_path: '.svg' or '.png' path
            options: Render options
        """
        options = options or RenderOptions()
        try:
            self.logger.info(f"Rendering tiling {tiling.word} to {output_path}")
            extension = os.path.splitext(output_path)[1].lower()
            if extension not in RENDER_FORMATS:
                raise ValueError(f"Unsupported format: {extension or output_path}")
            if extension == ".svg":
                self._write_text(output_path, render(tiling, options.repetitions, options))
            else:
                self.save_png(tiling, output_path, options)
        except Exception as e:
            self.logger.error(f"Failed to export rendering: {str(e)}")
            raise

    def save_png(self, tiling: Tiling, output_path: str, options: RenderOptions):
        """Rasterize the same geometry as the SVG renderer"""
        shapes = lozenges(tiling, options)
        xs = [float(x) for s in shapes for x in s.corners[:, 0]]
        ys = [float(y) for s in shapes for y in s.corners[:, 1]]
        pad = 0.05 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
        min_x, min_y = min(xs) - pad, min(ys) - pad
        width = int(round(max(xs) - min_x + pad)) + 1
        height = int(round(max(ys) - min_y + pad)) + 1

        image = Image.new("RGB", (width, height), "white")
        draw = ImageDraw.Draw(image)
        for shape in shapes:
            points = [(float(x) - min_x, float(y) - min_y) for x, y in shape.corners]
            draw.polygon(points, fill=options.colors[shape.orientation], outline=options.stroke)
        if options.outline:
            outline = [(float(x) - min_x, float(y) - min_y) for x, y in domain_outline(tiling, options)]
            draw.line(outline + outline[:1], fill="#c00000", width=2)
        image.save(output_path, "PNG")
        self.logger.info(f"Saved PNG ({width} x {height}) to {output_path}")

    def _write_text(self, output_path: str, text: str):
        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output_path, "w", encoding="utf-8") as f:
            f.write(text)
        self.logger.debug(f"Wrote {len(text)} characters to {output_path}")


def basis_matches(basis: Basis, tiling: Tiling) -> bool:
    return hnf(basis) == tiling.hnf
