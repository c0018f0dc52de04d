#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

// Affine hyperplane {w in R^4 : normal . w = offset}.
struct Hyperplane4 {
    Point4 normal;
    Rational offset;
};

// C_{p,q} = {(u,v) : |u|=|v|=1, |u-p|=|v-q|} linearizes on the torus to the
// hyperplane with normal (p1, p2, -q1, -q2) and offset (|p|^2 - |q|^2)/2.
Hyperplane4 hyperplane_of(const Point2& p, const Point2& q);

// Intersection of two hyperplanes with linearly independent normals.
class TwoFlat {
public:
    TwoFlat(Hyperplane4 h1, Hyperplane4 h2);
    const Hyperplane4& h1() const { return h1_; }
    const Hyperplane4& h2() const { return h2_; }

private:
    Hyperplane4 h1_, h2_;
};

// Exact cardinality of a curve/flat (or curve/curve) intersection, plus
// refined floating-point witnesses. `degenerate` flags a positive-dimensional
// intersection (the eliminating resultant vanished identically); `count` is
// meaningful only when it is false.
struct IntersectionResult {
    bool degenerate = false;
    int count = 0;
    std::vector<std::array<double, 4>> witnesses;
};

// |C_{p,q} /\ K|. Counts are certified by Sturm sequences over Q; witnesses
// are bisection-isolated and Newton-polished, with torus residuals <= 1e-12.
IntersectionResult intersect_with_2flat(const Point2& p, const Point2& q, const TwoFlat& K);

// |C_{p,q} /\ C_{p2,q2}| for distinct pairs. Scalar-multiple pairs with
// nonzero offset short-circuit to 0 (the curves live in disjoint parallel
// hyperplanes); with offset 0 the hyperplanes coincide and the result is
// degenerate.
IntersectionResult curve_pair_intersection(const Point2& p, const Point2& q,
                                           const Point2& p2, const Point2& q2);

// Continuation step of the non-isolation argument: from an exact rational
// point (u, v) on C_{p,q}, returns (u_t, v_t) on the unit circles with
// |u_t - p| = |u - p| + t and |v_t - q| = |v - q| + t, chosen on the same
// side of the line through p (resp. q) and the origin. Requires
// |p| != |q|, | |p| - |q| | != 2, both checked exactly, and |t| below the
// safe continuation radius.
std::array<double, 4> isolated_point_probe(const Point2& p, const Point2& q,
                                           const Point4& point, double t);

}  // namespace ddlab
