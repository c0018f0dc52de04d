#include "ddlab/verify.hpp"

#include <cmath>
#include <sstream>

#include "ddlab/generators.hpp"
#include "ddlab/r4.hpp"

namespace ddlab {

namespace {

Point2 random_point(Rng& rng, long bound) { return {rng.rational(bound), rng.rational(bound)}; }

// (p, q) with |p| != |q| (which also excludes p = q = 0)
std::pair<Point2, Point2> random_curve_pair(Rng& rng, long bound) {
    for (;;) {
        Point2 p = random_point(rng, bound), q = random_point(rng, bound);
        if (!(sq_norm(p) == sq_norm(q))) return {p, q};
    }
}

Hyperplane4 random_hyperplane(Rng& rng, long bound) {
    for (;;) {
        Hyperplane4 h{{{rng.rational(bound), rng.rational(bound), rng.rational(bound),
                        rng.rational(bound)}},
                      rng.rational(bound)};
        if (!h.normal.is_zero()) return h;
    }
}

TwoFlat random_flat(Rng& rng, long bound, const Point2& p, const Point2& q, bool through_curve) {
    for (;;) {
        Hyperplane4 h1 = through_curve ? hyperplane_of(p, q) : random_hyperplane(rng, bound);
        Hyperplane4 h2 = random_hyperplane(rng, bound);
        try {
            return TwoFlat(h1, h2);
        } catch (const std::invalid_argument&) {
            // dependent normals, redraw
        }
    }
}

std::size_t bad_witnesses(const Point2& p, const Point2& q, const IntersectionResult& res) {
    std::size_t bad = 0;
    double p1 = p.x1.to_double(), p2 = p.x2.to_double();
    double q1 = q.x1.to_double(), q2 = q.x2.to_double();
    double off = ((sq_norm(p) - sq_norm(q)) / Rational(2)).to_double();
    for (const auto& w : res.witnesses) {
        double cu = std::abs(w[0] * w[0] + w[1] * w[1] - 1);
        double cv = std::abs(w[2] * w[2] + w[3] * w[3] - 1);
        double hp = std::abs(p1 * w[0] + p2 * w[1] - q1 * w[2] - q2 * w[3] - off);
        if (std::max(std::max(cu, cv), hp) > 1e-12) ++bad;
    }
    return bad;
}

}  // namespace

std::string R4VerifySummary::str() const {
    std::ostringstream os;
    os << "flats: " << flat_trials << " trials, max count " << max_flat_count << ", "
       << flat_violations << " violations; pairs: " << pair_trials << " trials, max count "
       << max_pair_count << ", " << pair_violations << " violations; scalar pairs: "
       << scalar_trials << " trials, " << scalar_violations << " nonzero; degenerate: "
       << degenerate_results << "; bad witnesses: " << witness_violations;
    return os.str();
}

R4VerifySummary r4_verify(std::size_t trials, std::uint64_t seed) {
    const long bound = 16;
    R4VerifySummary sum;

    // 2-flat intersections; every second flat passes through the curve's own
    // hyperplane, since a fully random 2-flat misses the curve almost surely
    Rng rng_flat(mix_seed(seed, 101));
    for (std::size_t i = 0; i < trials; ++i) {
        auto [p, q] = random_curve_pair(rng_flat, bound);
        TwoFlat K = random_flat(rng_flat, bound, p, q, i % 2 == 0);
        IntersectionResult res = intersect_with_2flat(p, q, K);
        ++sum.flat_trials;
        if (res.degenerate) {
            ++sum.degenerate_results;
            continue;
        }
        if (res.count > sum.max_flat_count) sum.max_flat_count = res.count;
        if (res.count > 4) ++sum.flat_violations;
        sum.witness_violations += bad_witnesses(p, q, res);
    }

    // curve pair intersections
    Rng rng_pair(mix_seed(seed, 202));
    for (std::size_t i = 0; i < trials; ++i) {
        auto [p, q] = random_curve_pair(rng_pair, bound);
        Point2 p2 = random_point(rng_pair, bound), q2 = random_point(rng_pair, bound);
        if ((p == p2 && q == q2) || (p2.is_origin() && q2.is_origin())) {
            --i;
            continue;
        }
        IntersectionResult res = curve_pair_intersection(p, q, p2, q2);
        ++sum.pair_trials;
        if (res.degenerate) {
            ++sum.degenerate_results;
            continue;
        }
        if (res.count > sum.max_pair_count) sum.max_pair_count = res.count;
        if (res.count > 4) ++sum.pair_violations;
        sum.witness_violations += bad_witnesses(p, q, res);
    }

    // scalar multiples t != 0, 1 of a |p| != |q| pair never meet the original
    Rng rng_scalar(mix_seed(seed, 303));
    std::size_t scalar_trials = trials / 5 + 1;
    for (std::size_t i = 0; i < scalar_trials; ++i) {
        auto [p, q] = random_curve_pair(rng_scalar, bound);
        Rational t;
        while (t.is_zero() || t == Rational(1)) t = rng_scalar.rational(bound);
        IntersectionResult res = curve_pair_intersection(p, q, p.scaled(t), q.scaled(t));
        ++sum.scalar_trials;
        if (res.degenerate || res.count != 0) ++sum.scalar_violations;
    }
    return sum;
}

}  // namespace ddlab
