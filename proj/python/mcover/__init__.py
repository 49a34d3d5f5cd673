"""Monochromatic component covers of edge-colored partite hypergraphs."""

from ._mcover import (  # noqa: F401
    AnomalyError,
    Coloring,
    InputError,
    ResourceError,
    bound_formula,
    build_basic,
    build_general,
    build_nonspanning_sharp,
    instance_digest,
    parse_instance,
    proved_upper_bound,
    random_spanning_coloring,
    run_search,
    verify_certificate,
)
