"""Exact-arithmetic distinct-distance laboratory.

Thin python surface over the C++ core. Rationals cross the boundary as
"num/den" strings, points as (x, y) pairs of such strings.
"""

from ._ddlab import (  # noqa: F401
    annulus_filter,
    annulus_index,
    bound_report_csv,
    build_F,
    common_component_check,
    concentric_report,
    curve_pair_intersection,
    curve_total_degree,
    diagonal_quadruples,
    distance_set,
    energy_lower_bound,
    eval_curve,
    even_spaced_counterexample,
    f_pq_eval,
    gen_circle,
    gen_generic_plane,
    incidence_count,
    intersect_with_2flat,
    isolated_point_probe,
    phi,
    phi_inverse,
    quadruple_count,
    quadruple_count_bruteforce,
    quadruple_count_offdiag,
    r4_verify,
    reduced_curve_poly,
    sq_dist,
)

__all__ = [name for name in dir() if not name.startswith("_")]
