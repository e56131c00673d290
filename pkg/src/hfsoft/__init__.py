"""Hesitant fuzzy soft sets and the mappings between hesitant fuzzy soft classes."""

from .errors import *  # noqa: F401,F403
from .hfe import (
    EPS,
    HFE,
    NULL,
    UnionMode,
    bounds,
    complement,
    hfe_intersection,
    hfe_union,
    hfe_union_n,
    is_null,
    mk_hfe,
    parse_hfe,
)
from .hfss import (
    HFSS,
    SoftClass,
    empty_hfss,
    hfss_equal,
    hfss_get,
    hfss_union,
    mk_class,
    mk_hfss,
    render_hfss,
)
from .mapping import (
    PointMap,
    SoftMapping,
    compose,
    composite_image,
    identity_mapping,
    image,
    inverse_image,
    invert,
    is_bijective,
    is_injective,
    is_many_one,
    is_surjective,
    mappings_equal,
    mk_mapping,
    preimage_points,
)
from .scenario import Scenario, load_scenario, parse_scenario, render_scenario

__version__ = "0.1.0"
