#include "ddlab/concentric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ddlab/distance.hpp"

namespace ddlab {

AngleRep::AngleRep(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
    if (!(c_ * c_ + s_ * s_ == Rational(1)))
        throw std::invalid_argument("AngleRep: cos^2 + sin^2 != 1");
}

AngleRep AngleRep::compose(const AngleRep& o) const {
    return AngleRep(c_ * o.c_ - s_ * o.s_, s_ * o.c_ + c_ * o.s_, unchecked{});
}

AngleRep angle_between(const Point2& p, const Point2& q) {
    if (p.is_origin() || q.is_origin())
        throw std::invalid_argument("angle_between: the origin subtends no angle");
    Rational n2 = sq_norm(p) * sq_norm(q);
    auto n = n2.exact_sqrt();
    if (!n)
        throw std::invalid_argument("angle_between: |p||q| is irrational (exact mode)");
    return AngleRep(dot(p, q) / *n, cross(p, q) / *n);
}

std::vector<Point2> ConcentricConfig::s_points() const {
    std::vector<Point2> out;
    out.reserve(s_params.size());
    for (const auto& t : s_params) out.push_back(phi(t).scaled(r1));
    return out;
}

std::vector<Point2> ConcentricConfig::p_points() const {
    std::vector<Point2> out;
    out.reserve(p_params.size());
    for (const auto& t : p_params) out.push_back(phi(t).scaled(r2));
    return out;
}

void ConcentricConfig::validate() const {
    if (!(r1.sign() > 0) || !(r2.sign() > 0))
        throw std::invalid_argument("ConcentricConfig: radii must be positive");
    for (const auto* params : {&s_params, &p_params}) {
        std::set<Rational> seen;
        for (const auto& t : *params)
            if (!seen.insert(t.t).second)
                throw std::invalid_argument("ConcentricConfig: repeated circle parameter");
    }
}

AngleRep SeparatedConfig::angle_of(const Point2& x) const {
    AngleRep a = angle_between(ref, x);
    return side > 0 ? a : a.inverse();
}

SeparatedConfig separating_line(const ConcentricConfig& cfg) {
    cfg.validate();
    std::vector<Point2> S = cfg.s_points(), P = cfg.p_points();
    if (S.empty() || P.empty())
        throw std::invalid_argument("separating_line: empty input");

    // majority semicircle of P (x2 == 0 counts as upper)
    std::vector<Point2> upper, lower;
    for (const Point2& p : P) (p.x2.sign() >= 0 ? upper : lower).push_back(p);
    bool use_upper = upper.size() >= lower.size();
    std::vector<Point2>& half = use_upper ? upper : lower;

    // angle order within a semicircle is x1 order (descending on the upper
    // half, ascending on the lower)
    std::sort(half.begin(), half.end(), [&](const Point2& a, const Point2& b) {
        return use_upper ? b.x1 < a.x1 : a.x1 < b.x1;
    });
    const Point2& z = half[(half.size() - 1) / 2];

    // keep the closed side with more of S
    auto side_count = [&](int side, const std::vector<Point2>& pts) {
        size_t n = 0;
        for (const Point2& x : pts)
            if (cross(z, x).sign() * side >= 0) ++n;
        return n;
    };
    int side = side_count(+1, S) >= side_count(-1, S) ? +1 : -1;

    SeparatedConfig sep;
    sep.r1 = cfg.r1;
    sep.r2 = cfg.r2;
    sep.ref = z;
    sep.side = side;
    for (const Point2& x : S)
        if (cross(z, x).sign() * side >= 0) sep.S.push_back(x);
    for (const Point2& x : P)
        if (cross(z, x).sign() * side >= 0) sep.P.push_back(x);
    return sep;
}

std::pair<std::set<AngleRep>, std::set<AngleRep>> angle_sets(const SeparatedConfig& sep) {
    std::set<AngleRep> A, B;
    for (const Point2& x : sep.S) A.insert(sep.angle_of(x));
    for (const Point2& x : sep.P) B.insert(sep.angle_of(x));
    return {A, B};
}

std::set<AngleRep> difference_set(const std::set<AngleRep>& X, const std::set<AngleRep>& Y) {
    std::set<AngleRep> out;
    for (const AngleRep& x : X)
        for (const AngleRep& y : Y) out.insert(x.compose(y.inverse()));
    return out;
}

MultiplicityReport max_angle_multiplicity(const std::vector<Point2>& P) {
    if (P.size() < 2)
        throw std::invalid_argument("max_angle_multiplicity: need at least two points");
    std::map<AngleRep, std::uint64_t> all, offdiag;
    for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < P.size(); ++j) {
            AngleRep a = angle_between(P[j], P[i]);  // theta_i - theta_j
            ++all[a];
            if (i != j) ++offdiag[a];
        }
    MultiplicityReport rep;
    for (const auto& [a, n] : all) rep.m = std::max(rep.m, n);
    for (const auto& [a, n] : offdiag) rep.m_offdiag = std::max(rep.m_offdiag, n);
    rep.alpha_hat = std::log(static_cast<double>(rep.m)) /
                    (2 * std::log(static_cast<double>(P.size())));
    return rep;
}

bool ruzsa_check(const std::set<AngleRep>& A, const std::set<AngleRep>& B,
                 const std::set<AngleRep>& C) {
    std::uint64_t lhs = A.size() * difference_set(B, C).size();
    std::uint64_t rhs = difference_set(A, B).size() * difference_set(A, C).size();
    return lhs <= rhs;
}

ConcentricReport concentric_report(const SeparatedConfig& sep) {
    auto [A, B] = angle_sets(sep);
    ConcentricReport rep;
    rep.s_kept = sep.S.size();
    rep.p_kept = sep.P.size();
    rep.delta = distance_set(sep.S, sep.P).size();
    rep.a_minus_b = difference_set(A, B).size();
    rep.b_minus_b = difference_set(B, B).size();
    if (sep.P.size() >= 2) {
        MultiplicityReport mult = max_angle_multiplicity(sep.P);
        rep.m = mult.m;
        rep.m_offdiag = mult.m_offdiag;
        rep.alpha_hat = mult.alpha_hat;
    } else {
        rep.m = 1;  // the single diagonal pair
    }
    bool cos_two_to_one = 2 * rep.delta >= rep.a_minus_b;
    bool ruzsa = rep.a_minus_b * rep.a_minus_b >= A.size() * rep.b_minus_b;
    bool pigeonhole = rep.b_minus_b * rep.m >= B.size() * B.size();
    rep.chain_ok = cos_two_to_one && ruzsa && pigeonhole;
    rep.chain_bound = 0.5 * std::sqrt(static_cast<double>(A.size()) * B.size() * B.size() /
                                      static_cast<double>(rep.m));
    return rep;
}

std::pair<std::vector<ApproxPoint>, std::vector<ApproxPoint>> even_spaced_counterexample(
    int n, double scale) {
    if (n < 1) throw std::invalid_argument("even_spaced_counterexample: n >= 1 required");
    if (!(scale > 0) || scale == 1.0)
        throw std::invalid_argument("even_spaced_counterexample: scale must be positive and != 1");
    std::vector<ApproxPoint> S(n), P(n);
    for (int k = 0; k < n; ++k) {
        double th = 2 * M_PI * k / n;
        S[k] = {std::cos(th), std::sin(th)};
        P[k] = {scale * S[k][0], scale * S[k][1]};
    }
    return {S, P};
}

std::size_t approx_distinct_sq_distances(const std::vector<ApproxPoint>& S,
                                         const std::vector<ApproxPoint>& P, double rel_tol) {
    std::vector<double> d;
    d.reserve(S.size() * P.size());
    for (const auto& u : S)
        for (const auto& p : P) {
            double dx = u[0] - p[0], dy = u[1] - p[1];
            d.push_back(dx * dx + dy * dy);
        }
    if (d.empty()) return 0;
    std::sort(d.begin(), d.end());
    std::size_t count = 1;
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] - d[i - 1] > rel_tol * std::max(d[i], 1e-300)) ++count;
    return count;
}

}  // namespace ddlab
