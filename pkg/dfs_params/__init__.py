"""
Per-vertex DFS parameters: low / high points, ``B_p`` counts and extreme points.
"""
from .high_points import compute_high_points
from .scalar_params import ScalarParams, compute_scalar_params, VERTEX_FIELDS, COUNT_FIELDS
from .extreme_points import ExtremePoints, compute_extreme_points
from .param_view import ParamView, build_param_views

__all__ = [
    'compute_high_points',
    'ScalarParams',
    'compute_scalar_params',
    'VERTEX_FIELDS',
    'COUNT_FIELDS',
    'ExtremePoints',
    'compute_extreme_points',
    'ParamView',
    'build_param_views',
]
