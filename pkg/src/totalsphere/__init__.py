"""360 degree spherical perspective.

Directions seen from an observer are flattened onto a disc of radius pi by
the azimuthal-equidistant map. The `constructions` subpackage redraws lines,
planes and parallels using only drawing-board steps (straightedge, compass,
a pin at the centre); `analysis` measures how far those drawings stray from
the exact images.
"""

from .errors import GeometryError, ParseError
from .flattening import (
    DiscPoint, MeasuringLine, NaturalCoords, TheodoliteAngles, flatten, from_theodolite,
    measuring_line, to_natural, to_theodolite, unflatten,
)
from .sphere import (
    B, D, F, L, R, U, GreatCircle, SpaceLine, SpacePlane, SpaceSegment, SphereLineImage,
    UnitDirection, antipode, direction_of, vanishing_line_of_plane, vanishing_points_of_line,
)

__version__ = "0.1.0"
