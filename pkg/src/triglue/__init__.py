"""triglue: generalised triangulations, their face counts and dual graphs.

Build triangulations of manifolds and pseudomanifolds by gluing simplices
along ridges, compute identified face lattices, links, exact homology,
dual-graph block structure, and the vertex-count bounds those control.
"""

from .analysis import (
    BettiBoundReport,
    BoundHypothesis,
    ClassificationReport,
    HomologyProfile,
    VertexBoundReport,
    betti_bound_report,
    classify,
    conjecture_check,
    dehn_sommerville_check,
    delta,
    enumerate_closed,
    closed_triangulations,
    homology,
    orientability,
    surface_type,
)
from .constructions import (
    ds1,
    ds2,
    p2,
    p3,
    p3_nl,
    p4,
    pillow,
    snapped_ball,
    sphere_even,
    sphere_odd,
    tripod,
)
from .dualgraph import (
    BlockDecomposition,
    CutProfile,
    Multigraph,
    TheoremBoundReport,
    block_decompositions,
    branching_number,
    construct_low_crit_sequence,
    crit_bruteforce,
    crit_of_sequence,
    cut_profile,
    dual_graph,
    theorem_bound_check,
    two_connected_sequence,
)
from .links import LinkResult, link
from .moves import (
    TwoZeroSite,
    find_two_zero_sites,
    remove_loops,
    two_zero_vertex_move,
    zero_two_vertex_move,
)
from .tableio import ParseError, export_dot, parse, serialize
from .triangulation import (
    FaceClass,
    FaceLattice,
    Gluing,
    GluingError,
    InvalidFaceError,
    Triangulation,
    compute_face_lattice,
    new_triangulation,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
