from .antipodes import (
    BLOWUP, CENTER, BlowupToken, antipode_in_disc, antipode_in_disc_freehand,
    antipode_or_blowup, blowup_along, equator_point, measuring_line_order,
    reflect_across_observer_plane,
)
from .fatline import DEFAULT_K, FatLine, fat_line, fat_line_from_knots, measuring_line_points
from .lines import (
    CircleConstruction, LineImagePath, classify_line, construct_anterior_point,
    frontal_line_anterior, frontal_posterior_line_image, line_construction, line_image,
    plane_image, receding_line_image, segment_image,
)
from .primitives import Arc, StraightSegment, arc_through, piece_intersections, ray_hits
from .parallels import (
    exact_parallel_points, parallel_anchor_points, parallel_image, reflected_parallel_knots,
)
from .presets import (
    PRESET_DEFAULTS, Marker, Preset, PresetImage, PresetItem, generate_preset,
    preset_entities, resolve_params,
)
