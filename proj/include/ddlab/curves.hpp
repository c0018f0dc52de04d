#pragma once

#include <vector>

#include "ddlab/bivar.hpp"
#include "ddlab/point.hpp"

namespace ddlab {

// (|p - u|^2 - |q - v|^2), the equal-distance quadric; vanishes exactly when
// sq_dist(u, p) == sq_dist(v, q).
Rational f_pq_eval(const Point2& p, const Point2& q, const Point2& u, const Point2& v);

// F(x, y) = (1+x^2)^2 (1+y^2)^2 * f_pq(phi(x), phi(y)), expanded exactly.
// Rejects p == q == (0, 0), the only pair for which F vanishes identically.
BivarPoly build_F(const Point2& p, const Point2& q);

// F with the real-point-free factors (1+x^2)(1+y^2) divided out; has the
// same real zero set as F and is the right object for component
// comparisons between two curves of the family.
BivarPoly reduced_curve_poly(const Point2& p, const Point2& q);

struct CurveEntry {
    Point2 p, q;
    BivarPoly F;
};

// One entry per ordered pair (p, q), p != q, in input order.
std::vector<CurveEntry> build_curve_family(const std::vector<Point2>& P);

// All ordered p != q pairs of P, in input order.
std::vector<std::pair<Point2, Point2>> ordered_pairs(const std::vector<Point2>& P);

// Number of triples (x, y, (p,q)) with x, y in s_params and F_{p,q}(x,y) = 0,
// counted over the indexed pair family (no curve deduplication). Equals
// quadruple_count_offdiag(phi(s_params), P) when pairs covers all ordered
// p != q pairs of P.
std::uint64_t incidence_count(const std::vector<CircleParam>& s_params,
                              const std::vector<std::pair<Point2, Point2>>& pairs);

// True iff gcd(F1, F2) over Q has positive total degree. Both inputs must be
// nonzero.
bool common_component_check(const BivarPoly& F1, const BivarPoly& F2);

}  // namespace ddlab
