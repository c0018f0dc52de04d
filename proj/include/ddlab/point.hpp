#pragma once

#include <array>
#include <compare>
#include <vector>

#include "ddlab/rational.hpp"

namespace ddlab {

struct Point2 {
    Rational x1, x2;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
        if (auto c = a.x1 <=> b.x1; c != 0) return c;
        return a.x2 <=> b.x2;
    }

    bool is_origin() const { return x1.is_zero() && x2.is_zero(); }
    Point2 scaled(const Rational& t) const { return {x1 * t, x2 * t}; }
};

struct Point4 {
    std::array<Rational, 4> x;

    const Rational& operator[](size_t i) const { return x[i]; }
    Rational& operator[](size_t i) { return x[i]; }
    friend bool operator==(const Point4&, const Point4&) = default;
    bool is_zero() const {
        return x[0].is_zero() && x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
    }
};

// Parameter of the rational point phi(t) on the unit circle.
struct CircleParam {
    Rational t;
    friend bool operator==(const CircleParam&, const CircleParam&) = default;
    friend std::strong_ordering operator<=>(const CircleParam& a, const CircleParam& b) {
        return a.t <=> b.t;
    }
};

inline Rational dot(const Point2& a, const Point2& b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline Rational cross(const Point2& a, const Point2& b) { return a.x1 * b.x2 - a.x2 * b.x1; }
inline Rational sq_norm(const Point2& p) { return p.x1 * p.x1 + p.x2 * p.x2; }
inline Rational dot(const Point4& a, const Point4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Squared euclidean distance; all distance comparisons in this library are
// done on squared values so everything stays in Q.
Rational sq_dist(const Point2& a, const Point2& b);

// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); lands exactly on the unit circle and
// never hits (-1, 0).
Point2 phi(const Rational& t);
inline Point2 phi(const CircleParam& p) { return phi(p.t); }

// Inverse of phi on rational unit-circle points: t = u2/(1+u1).
// Rejects points off the circle and the excluded point (-1, 0).
Rational phi_inverse(const Point2& u);

bool on_unit_circle(const Point2& u);

// Index k >= 0 of the half-open annulus (2k)^2 <= |p|^2 < (2k+2)^2,
// computed by exact integer square root (no floating point).
unsigned long annulus_index(const Point2& p);

// Exact predicate for | |p| - |q| | == 2, via
// (|p|^2 - |q|^2 - 4)^2 == 16 |q|^2 with the sign condition |p|^2 >= |q|^2 + 4
// (checked in both orders).
bool norm_gap_is_two(const Point2& p, const Point2& q);

// Keeps the larger of the two alternating annulus color classes, preserving
// input order; ties go to the even class. No two surviving points are at
// norm difference exactly 2.
std::vector<Point2> annulus_filter(const std::vector<Point2>& points);

}  // namespace ddlab
