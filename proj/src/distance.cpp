#include "ddlab/distance.hpp"

#include <stdexcept>

namespace ddlab {

namespace {

// sum over p in P of sum_t v_p(t)^2, where v_p is the histogram of squared
// distances from p to S. This is exactly the p == q quadruple count.
std::uint64_t per_point_square_sum(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    std::uint64_t total = 0;
    for (const Point2& p : P) {
        DistanceHistogram h;
        for (const Point2& u : S) ++h[sq_dist(u, p)];
        for (const auto& [t, v] : h) total += v * v;
    }
    return total;
}

void require_distinct(const std::vector<Point2>& P) {
    std::set<Point2> seen;
    for (const Point2& p : P)
        if (!seen.insert(p).second)
            throw std::invalid_argument("quadruple_count_offdiag: repeated point in P");
}

}  // namespace

DistanceHistogram distance_histogram(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    DistanceHistogram h;
    for (const Point2& u : S)
        for (const Point2& p : P) ++h[sq_dist(u, p)];
    return h;
}

std::set<Rational> distance_set(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    std::set<Rational> out;
    for (const Point2& u : S)
        for (const Point2& p : P) out.insert(sq_dist(u, p));
    return out;
}

std::uint64_t quadruple_count(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    std::uint64_t total = 0;
    for (const auto& [t, v] : distance_histogram(S, P)) total += v * v;
    return total;
}

std::uint64_t quadruple_count_bruteforce(const std::vector<Point2>& S,
                                         const std::vector<Point2>& P) {
    std::uint64_t total = 0;
    for (const Point2& u : S)
        for (const Point2& v : S)
            for (const Point2& p : P)
                for (const Point2& q : P)
                    if (sq_dist(u, p) == sq_dist(v, q)) ++total;
    return total;
}

std::uint64_t quadruple_count_offdiag(const std::vector<Point2>& S,
                                      const std::vector<Point2>& P) {
    require_distinct(P);
    return quadruple_count(S, P) - per_point_square_sum(S, P);
}

std::uint64_t diagonal_quadruples(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    for (const Point2& u : S)
        if (!on_unit_circle(u))
            throw std::invalid_argument("diagonal_quadruples: S must lie on the unit circle");
    for (const Point2& p : P)
        if (p.is_origin())
            throw std::invalid_argument("diagonal_quadruples: (0,0) must not be in P");
    return per_point_square_sum(S, P);
}

Rational energy_lower_bound(const std::vector<Point2>& S, const std::vector<Point2>& P) {
    if (S.empty() || P.empty())
        throw std::invalid_argument("energy_lower_bound: empty input");
    Rational sp(static_cast<long>(S.size() * P.size()));
    Rational q(static_cast<long>(quadruple_count(S, P)));
    return sp.squared() / q;
}

}  // namespace ddlab
