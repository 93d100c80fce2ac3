"""Topological Tutte polynomials of graphs on the torus and their SO(3) traces."""

from .gaingraph import (
    Edge,
    GainGraph,
    GraphError,
    HomologyProfile,
    classify_loop,
    contract,
    delete,
    gauge_shift,
    homology_profile,
)
from .golden import PHI, PHI_INV, GoldenNumber, format_golden, golden, parse_golden
from .moves import (
    golden_check,
    ih_flip,
    ih_flip_ribbon,
    is_cubic,
    jw_triple,
    planar_golden_check,
)
from .polynomial import MultiPoly, format_poly, parse_poly, poly_eval
from .ribbon import (
    BoundaryCircle,
    RibbonGraph,
    dual,
    faces,
    surround_loops,
    validate_cellulation,
)
from .roots import RootOfUnityData, quantum_integer, root_data
from .statesum import (
    ResourceCapError,
    chrom_poly_top,
    dc_eval,
    eval_R5,
    eval_R10,
    eval_Rr,
    flow_poly_top,
    full_poly,
)
from .trace import TraceResult, loop_eigenvalue, trace

__version__ = "0.1.0"
