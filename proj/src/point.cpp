#include "ddlab/point.hpp"

#include <stdexcept>

namespace ddlab {

Rational sq_dist(const Point2& a, const Point2& b) {
    Rational dx = a.x1 - b.x1;
    Rational dy = a.x2 - b.x2;
    return dx * dx + dy * dy;
}

Point2 phi(const Rational& t) {
    Rational t2 = t * t;
    Rational den = Rational(1) + t2;
    return {(Rational(1) - t2) / den, (Rational(2) * t) / den};
}

bool on_unit_circle(const Point2& u) { return sq_norm(u) == Rational(1); }

Rational phi_inverse(const Point2& u) {
    if (!on_unit_circle(u))
        throw std::invalid_argument("phi_inverse: point is not on the unit circle");
    Rational one_plus = Rational(1) + u.x1;
    if (one_plus.is_zero())
        throw std::invalid_argument("phi_inverse: (-1, 0) is not in the image of phi");
    return u.x2 / one_plus;
}

unsigned long annulus_index(const Point2& p) {
    mpz_class m = sq_norm(p).floor_sqrt();  // floor of |p|
    mpz_class k = m / 2;
    return k.get_ui();
}

bool norm_gap_is_two(const Point2& p, const Point2& q) {
    auto check = [](const Rational& a2, const Rational& b2) {
        // |a| == |b| + 2 with a2 = |a|^2, b2 = |b|^2
        Rational lhs = a2 - b2 - Rational(4);
        if (lhs.sign() < 0) return false;
        return lhs.squared() == Rational(16) * b2;
    };
    Rational p2 = sq_norm(p), q2 = sq_norm(q);
    return check(p2, q2) || check(q2, p2);
}

std::vector<Point2> annulus_filter(const std::vector<Point2>& points) {
    size_t even = 0;
    std::vector<bool> is_even(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        is_even[i] = annulus_index(points[i]) % 2 == 0;
        if (is_even[i]) ++even;
    }
    bool keep_even = even >= points.size() - even;
    std::vector<Point2> out;
    out.reserve(keep_even ? even : points.size() - even);
    for (size_t i = 0; i < points.size(); ++i)
        if (is_even[i] == keep_even) out.push_back(points[i]);
    return out;
}

}  // namespace ddlab
