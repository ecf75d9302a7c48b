"""
SVG drawings of lozenge tilings.

Lattice coordinates (u, Y) use doubled heights, so a unit vertical edge spans
two Y steps. A column is sqrt(3)/2 units wide.

Functions:
    svg_root: An empty ``<svg>`` element of the given pixel size.
    render_tiling: Builds the SVG element tree of one tiling.
    emit_svg: Writes the drawing of one tiling to a file.
"""

import math
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Iterable, Union

from typing_extensions import List, Tuple

from blocksym.exceptions import InvalidParameterError, InvalidShapeError
from blocksym.logger import logger
from blocksym.regions import LEFT, RIGHT, Region, TrapezoidRegion, Triangle
from blocksym.tilings import Orientation, Tiling

SCALE = 40
MARGIN = 20
COLUMN = math.sqrt(3) / 2

FILL = {
    Orientation.NEGATIVE: "#9a9a9a",
    Orientation.POSITIVE: "#ffffff",
    Orientation.HORIZONTAL: "#ffffff",
}


def svg_root(w: float, h: float) -> ET.Element:
    return ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                      version="1.1",
                      width="{}px".format(round(w)),
                      height="{}px".format(round(h)),
                      viewBox="0 0 {} {}".format(round(w), round(h)))


def _to_canvas(point: Tuple[int, int], top: int) -> Tuple[float, float]:
    u, y = point
    return MARGIN + u * COLUMN * SCALE, MARGIN + (top - y) * SCALE / 2


def _cyclic(points: Iterable[Tuple[float, float]]) -> List[Tuple[float, float]]:
    points = list(points)
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _polygon(parent: ET.Element, points: List[Tuple[float, float]], **attrs) -> ET.Element:
    text = " ".join("{:.2f},{:.2f}".format(x, y) for x, y in points)
    return ET.SubElement(parent, "polygon", points=text, **attrs)


def _dent_triangles(region: Region) -> List[Triangle]:
    if not isinstance(region, TrapezoidRegion):
        return []
    return ([Triangle(LEFT, 1, p) for p in region.right_dents]
            + [Triangle(RIGHT, region.m, p) for p in region.left_dents])


def render_tiling(tiling: Tiling, region: Region) -> ET.Element:
    """
    Draws the lattice under the region, the lozenges (negative ones shaded)
    and the removed dent triangles.

    Args:
        tiling (Tiling): A tiling of ``region``.
        region (Region): The tiled region.

    Returns:
        ET.Element: The ``<svg>`` root.

    Raises:
        InvalidParameterError: If the region has no triangles.
        InvalidShapeError: If the tiling does not tile the region.
    """
    tris = region.triangles()
    if not tris:
        raise InvalidParameterError(f"{region} is empty, nothing to draw")
    if not tiling.covers(region):
        raise InvalidShapeError(f"the tiling does not tile {region}")

    low, high = region.bounds()
    root = svg_root(2 * MARGIN + region.width * COLUMN * SCALE, 2 * MARGIN + (high - low) * SCALE / 2)

    lattice = ET.SubElement(root, "g", {"class": "lattice", "stroke": "#d0d0d0", "fill": "none"})
    for tri in sorted(tris):
        _polygon(lattice, [_to_canvas(v, high) for v in tri.vertices()], **{"class": "triangle"})

    dents = ET.SubElement(root, "g", {"class": "dents", "stroke": "#c03030", "fill": "none",
                                      "stroke-dasharray": "4 3"})
    for tri in _dent_triangles(region):
        _polygon(dents, [_to_canvas(v, high) for v in tri.vertices()], **{"class": "dent"})

    lozenges = ET.SubElement(root, "g", {"class": "lozenges", "stroke": "#000000", "stroke-width": "1.5"})
    for loz in tiling.lozenges:
        corners = _cyclic(_to_canvas(v, high) for v in loz.vertices())
        _polygon(lozenges, corners, fill=FILL[loz.orientation],
                 **{"class": "lozenge", "data-orientation": loz.orientation.value})
    return root


def emit_svg(tiling: Tiling, region: Region, path: Union[str, Path]) -> Path:
    """
    Writes a standalone SVG drawing of one tiling.

    Args:
        tiling (Tiling): A tiling of ``region``.
        region (Region): The tiled region.
        path (str | Path): Output file.

    Returns:
        Path: The written file.

    Raises:
        InvalidParameterError: If the region is empty.
        InvalidShapeError: If the tiling does not tile the region.
        OSError: If the file cannot be written.
    """
    root = render_tiling(tiling, region)
    path = Path(path)
    ET.ElementTree(root).write(path, encoding="utf-8", xml_declaration=True)
    logger.debug(f"wrote {len(tiling)} lozenges of {region} to {path}")
    return path


__all__ = (
    'svg_root',
    'render_tiling',
    'emit_svg',
)
