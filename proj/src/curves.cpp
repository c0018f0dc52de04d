#include "ddlab/curves.hpp"

#include <set>
#include <stdexcept>

namespace ddlab {

Rational f_pq_eval(const Point2& p, const Point2& q, const Point2& u, const Point2& v) {
    return sq_dist(u, p) - sq_dist(v, q);
}

namespace {

const UnivarPoly& one_plus_sq() {
    static const UnivarPoly p = UnivarPoly::of({Rational(1), Rational(0), Rational(1)});
    return p;
}

}  // namespace

BivarPoly build_F(const Point2& p, const Point2& q) {
    if (p.is_origin() && q.is_origin())
        throw std::invalid_argument("build_F: vanishes identically for p = q = (0,0)");
    // With X = 1+x^2, A = 1-x^2, B = 2x (and Y, C, D in y):
    //   F = Y^2 [(p1 X - A)^2 + (p2 X - B)^2] - X^2 [(q1 Y - C)^2 + (q2 Y - D)^2]
    // which is the denominator-cleared form of f_pq(phi(x), phi(y)).
    BivarPoly X = BivarPoly::from_x(one_plus_sq());
    BivarPoly A = BivarPoly::from_x(UnivarPoly::of({Rational(1), Rational(0), Rational(-1)}));
    BivarPoly B = BivarPoly::from_x(UnivarPoly::of({Rational(0), Rational(2)}));
    BivarPoly Y = BivarPoly::from_y(one_plus_sq());
    BivarPoly C = BivarPoly::from_y(UnivarPoly::of({Rational(1), Rational(0), Rational(-1)}));
    BivarPoly D = BivarPoly::from_y(UnivarPoly::of({Rational(0), Rational(2)}));

    BivarPoly tu1 = X.scaled(p.x1) - A;
    BivarPoly tu2 = X.scaled(p.x2) - B;
    BivarPoly tv1 = Y.scaled(q.x1) - C;
    BivarPoly tv2 = Y.scaled(q.x2) - D;
    return Y * Y * (tu1 * tu1 + tu2 * tu2) - X * X * (tv1 * tv1 + tv2 * tv2);
}

BivarPoly reduced_curve_poly(const Point2& p, const Point2& q) {
    BivarPoly F = build_F(p, q);
    auto g = F.divide_exact_x(one_plus_sq());
    if (g) {
        auto h = g->divide_exact_y(one_plus_sq());
        if (h) return *h;
    }
    throw std::logic_error("reduced_curve_poly: (1+x^2)(1+y^2) did not divide F");
}

std::vector<std::pair<Point2, Point2>> ordered_pairs(const std::vector<Point2>& P) {
    std::vector<std::pair<Point2, Point2>> out;
    out.reserve(P.size() * P.size());
    for (const Point2& p : P)
        for (const Point2& q : P)
            if (!(p == q)) out.emplace_back(p, q);
    return out;
}

std::vector<CurveEntry> build_curve_family(const std::vector<Point2>& P) {
    std::vector<CurveEntry> out;
    for (auto& [p, q] : ordered_pairs(P)) out.push_back({p, q, build_F(p, q)});
    return out;
}

std::uint64_t incidence_count(const std::vector<CircleParam>& s_params,
                              const std::vector<std::pair<Point2, Point2>>& pairs) {
    std::set<Rational> seen;
    for (const auto& s : s_params)
        if (!seen.insert(s.t).second)
            throw std::invalid_argument("incidence_count: repeated circle parameter");
    std::uint64_t total = 0;
    for (const auto& [p, q] : pairs) {
        if (p == q) throw std::invalid_argument("incidence_count: pair with p == q");
        BivarPoly F = build_F(p, q);
        for (const auto& sx : s_params)
            for (const auto& sy : s_params)
                if (F.eval(sx.t, sy.t).is_zero()) ++total;
    }
    return total;
}

bool common_component_check(const BivarPoly& F1, const BivarPoly& F2) {
    if (F1.is_zero() || F2.is_zero())
        throw std::invalid_argument("common_component_check: zero polynomial");
    return bivar_gcd(F1, F2).total_degree() > 0;
}

}  // namespace ddlab
