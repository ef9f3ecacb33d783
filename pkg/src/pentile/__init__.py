"""Edge-to-edge pentagonal tilings of the sphere as combinatorial maps:
construction, enumeration under anglewise vertex combinations, label
reductions/splittings, orbit counting, and drawing."""

from .avc import (Avc, PentagonArrangement, VertexType, avc_emt,
                  enumerate_arrangements, parse_avc)
from .build import (earth_map, glue_patch_tilings, pentagonal_subdivision,
                    platonic, rotation_modification,
                    simple_pentagonal_subdivisions)
from .docio import document, from_document, load, save
from .search import (SearchConfig, SearchStats, enumerate_quad_substrates,
                     enumerate_tilings, exchange_classes, verify_tiling)
from .tiling import (ORIENTED, UNORIENTED, Tiling, canonical_code,
                     canonical_form, isomorphic, mirror)
from .transforms import (LabelMap, Neighborhood, get_map, reduce_avc,
                         reduce_tiling, reorient_neighborhood,
                         split_tilings)

__all__ = [
    "Avc", "PentagonArrangement", "VertexType", "avc_emt",
    "enumerate_arrangements", "parse_avc",
    "earth_map", "glue_patch_tilings", "pentagonal_subdivision",
    "platonic", "rotation_modification", "simple_pentagonal_subdivisions",
    "document", "from_document", "load", "save",
    "SearchConfig", "SearchStats", "enumerate_quad_substrates",
    "enumerate_tilings", "exchange_classes", "verify_tiling",
    "ORIENTED", "UNORIENTED", "Tiling", "canonical_code",
    "canonical_form", "isomorphic", "mirror",
    "LabelMap", "Neighborhood", "get_map", "reduce_avc", "reduce_tiling",
    "reorient_neighborhood", "split_tilings",
]

__version__ = "1.0.0"
