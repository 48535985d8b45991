"""Planar polygons, cell complexes, Hausdorff distance and disk-approximating sequences."""

from specgeom.polygeom.complexes import (
    CellComplex,
    ComplexError,
    euler_characteristic,
    holes_from_chi,
    polygon_complex,
    square_annulus,
    two_hole_complex,
)
from specgeom.polygeom.constructions import (
    StaircaseReport,
    disk_samples,
    hausdorff_to_disk,
    inscribed_regular_ngon,
    staircase_polygon,
    staircase_report,
)
from specgeom.polygeom.hausdorff import PointCloud, directed_hausdorff, hausdorff_distance
from specgeom.polygeom.io import GeometryFileError, dump_polygon, load_complex, load_polygon, parse_polygon
from specgeom.polygeom.polygon import (
    DegenerateVertexError,
    Polygon,
    PolygonError,
    area,
    interior_angles,
    min_interior_angle,
    perimeter,
)

__all__ = [
    "CellComplex",
    "ComplexError",
    "DegenerateVertexError",
    "GeometryFileError",
    "PointCloud",
    "Polygon",
    "PolygonError",
    "StaircaseReport",
    "area",
    "directed_hausdorff",
    "disk_samples",
    "dump_polygon",
    "euler_characteristic",
    "hausdorff_distance",
    "hausdorff_to_disk",
    "holes_from_chi",
    "inscribed_regular_ngon",
    "interior_angles",
    "load_complex",
    "load_polygon",
    "min_interior_angle",
    "parse_polygon",
    "perimeter",
    "polygon_complex",
    "square_annulus",
    "staircase_polygon",
    "staircase_report",
    "two_hole_complex",
]
