from .geom2d import (
    area,
    conjugate,
    contains_polygon,
    hausdorff_distance,
    polar_axial,
    polar_polygon,
    polar_with_check,
    radial_value,
    support_value,
)
from .revolve import (
    approximate,
    frustum_volume,
    normalize,
    normalize_polygon,
    polar_body,
    verify_slice_projection_duality,
    volume,
    volume_axial,
)
from .mahler import (
    CYLINDER_BOUND,
    PSH_BOUND,
    SANTALO_CONE_BOUND,
    functional_product,
    mahler_product,
    mahler_product_psh,
    santalo_axis_search,
)

__all__ = [
    'area', 'conjugate', 'contains_polygon', 'hausdorff_distance', 'polar_axial',
    'polar_polygon', 'polar_with_check', 'radial_value', 'support_value',
    'approximate', 'frustum_volume', 'normalize', 'normalize_polygon', 'polar_body',
    'verify_slice_projection_duality', 'volume', 'volume_axial',
    'CYLINDER_BOUND', 'PSH_BOUND', 'SANTALO_CONE_BOUND',
    'functional_product', 'mahler_product', 'mahler_product_psh', 'santalo_axis_search',
]
