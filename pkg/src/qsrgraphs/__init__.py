"""Verification, analysis and exhaustive enumeration of quasi-strongly regular graphs."""

__version__ = "0.1.0"

from .graphcore import (  # noqa: E402
    Graph,
    common_neighbours,
    cut_size,
    decode_graph6,
    degree,
    encode_graph6,
    independence_number,
    is_regular,
    is_triangle_free,
    make_graph,
    neighbours,
)
from .catalog import build_g1, build_g2, build_h8, build_named  # noqa: E402
from .qsr import (  # noqa: E402
    QsrSignature,
    TProfile,
    analyze,
    check_counting_identities,
    matches,
    sqsr_bounds,
    t_profile,
)
from .canon import automorphism_count, canonical_form, is_isomorphic, refine  # noqa: E402
from .enumeration import (  # noqa: E402
    EnumReport,
    EnumSpec,
    brute_force_enumerate,
    certify,
    enumerate_graphs,
)
