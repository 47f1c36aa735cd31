# -*- coding: utf-8 -*-

import logging
import math
import os
from typing import List, Optional, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

from hilbert import X, Y, Z, Monomial
from read_config import *
from tilings import Region, Tiling, build_region, enumerate_tilings
from utils import create_directory

logger = logging.getLogger(__name__)

# the three triangle directions; i, j, k move along them
DIRECTIONS = ((0.0, -1.0), (math.sqrt(3) / 2, 0.5), (-math.sqrt(3) / 2, 0.5))
KIND_ORDER = ("x", "y", "z")


def position(label: Monomial, edge_length: float) -> Tuple[float, float]:
    """

    :param label: Monomial of degree s+2, a vertex of the triangular grid.
    :param edge_length: float side of a unit triangle.
    :return: tuple of the plane coordinates of the vertex.
    """
    x = sum(e * d[0] for e, d in zip(label, DIRECTIONS))
    y = sum(e * d[1] for e, d in zip(label, DIRECTIONS))
    return x * edge_length, y * edge_length


def up_corners(n: Monomial) -> List[Monomial]:
    return [n.times(X), n.times(Y), n.times(Z)]


def down_corners(m: Monomial) -> List[Monomial]:
    return [m.times(X).times(Y), m.times(X).times(Z), m.times(Y).times(Z)]


def render_region(region: Region, path: str, tiling: Optional[Tiling] = None, edge_length: float = None,
                  fills: List[str] = None) -> dict:
    """

    :param region: Region to draw.
    :param path: str of the SVG file.
    :param tiling: Tiling shaded by lozenge kind, or None for the bare triangles.
    :param edge_length: float, defaults to `svg_edge_length`.
    :param fills: list of three colours for the x, y and z lozenges, defaults to `svg_fills`.
    :return: dict with the path and the number of triangles and lozenges drawn.

     A function draws the punctured hexagon with matplotlib patches and stores it as SVG; the puncture is
     outlined with a dashed line and left unfilled.
    """
    edge_length = edge_length or model_parameters["svg_edge_length"]
    fills = fills or model_parameters["svg_fills"]
    plt.rcParams["svg.hashsalt"] = "amaci-wlp"
    fig, ax = plt.subplots(1, 1)
    triangles = 0
    for r, m in enumerate(region.down):
        colour = "white"
        if tiling is not None:
            colour = fills[KIND_ORDER.index(tiling.kind(r))]
        corners = [position(v, edge_length) for v in down_corners(m)]
        ax.add_patch(Polygon(corners, closed=True, facecolor=colour, edgecolor="black", linewidth=0.5))
        triangles += 1
    partner_of = {}
    if tiling is not None:
        partner_of = {c: r for r, c in enumerate(tiling.partner)}
    for c, n in enumerate(region.up):
        colour = "white"
        if c in partner_of:
            colour = fills[KIND_ORDER.index(tiling.kind(partner_of[c]))]
        corners = [position(v, edge_length) for v in up_corners(n)]
        ax.add_patch(Polygon(corners, closed=True, facecolor=colour, edgecolor="black", linewidth=0.5))
        triangles += 1
    if region.M > 0:
        corners = [position(v, edge_length) for v in region.puncture_corners()]
        ax.add_patch(Polygon(corners, closed=True, fill=False, edgecolor="black", linestyle="--", linewidth=1.0))
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.axis("off")
    create_directory(os.path.dirname(os.path.abspath(path)))
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    lozenges = len(tiling.partner) if tiling is not None else 0
    logger.info("rendered %s: %d triangles, %d lozenges", path, triangles, lozenges)
    return {"path": path, "triangles": triangles, "lozenges": lozenges}


def render_first_tiling(p, path: str, node_budget: int = None) -> dict:
    """

    :param p: AciParams, hexagonal.
    :param path: str of the SVG file.
    :param node_budget: int for the tiling search.
    :return: dict as `render_region`; the region is drawn bare when it has no tiling.
    """
    region = build_region(p)
    tiling = next(iter(enumerate_tilings(region, node_budget)), None)
    return render_region(region, path, tiling)
