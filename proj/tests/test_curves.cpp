#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddlab/curves.hpp"
#include "ddlab/distance.hpp"
#include "ddlab/generators.hpp"

using namespace ddlab;

namespace {
const Point2 kP{Rational(2), Rational(0)};
const Point2 kQ{Rational(7, 5), Rational(1, 5)};
const UnivarPoly kOnePlusSq = UnivarPoly::of({Rational(1), Rational(0), Rational(1)});
}  // namespace

TEST_CASE("f_pq_eval examples") {
    Point2 u{Rational(3, 5), Rational(4, 5)}, v{Rational(0), Rational(1)};
    CHECK(f_pq_eval(kP, kP, u, u) == Rational(0));
    CHECK(f_pq_eval(kP, kQ, u, v) == Rational(0));  // both squared distances are 13/5
    Point2 w{Rational(1), Rational(0)};
    CHECK(f_pq_eval(kP, kQ, w, w) == Rational(4, 5));
}

TEST_CASE("build_F worked examples") {
    BivarPoly F = build_F(kP, kQ);
    CHECK(F.eval(Rational(1, 2), Rational(1)) == Rational(0));
    CHECK(F.eval(Rational(0), Rational(0)) == Rational(4, 5));
    CHECK(F.total_degree() <= 12);
    CHECK(F.total_degree() <= 8);  // the observed sharper degree for this pair

    CHECK_THROWS_AS(build_F({Rational(0), Rational(0)}, {Rational(0), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("p == q forces the diagonal onto the curve") {
    Rng rng(13);
    Point2 p{Rational(3, 2), Rational(-1, 3)};
    BivarPoly F = build_F(p, p);
    for (int i = 0; i < 20; ++i) {
        Rational x = rng.rational();
        CHECK(F.eval(x, x) == Rational(0));
    }
}

TEST_CASE("evaluation identity against the rational substitution") {
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        Point2 p{rng.rational(), rng.rational()}, q{rng.rational(), rng.rational()};
        if (p.is_origin() && q.is_origin()) continue;
        BivarPoly F = build_F(p, q);
        Rational x = rng.rational(), y = rng.rational();
        Rational clear = ((Rational(1) + x * x) * (Rational(1) + y * y)).squared();
        CHECK(F.eval(x, y) == clear * f_pq_eval(p, q, phi(x), phi(y)));
    }
}

TEST_CASE("degree bound and the (1+x^2)(1+y^2) factor") {
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        Point2 p{rng.rational(), rng.rational()}, q{rng.rational(), rng.rational()};
        if (p.is_origin() && q.is_origin()) continue;
        BivarPoly F = build_F(p, q);
        CHECK(F.total_degree() <= 12);
        auto once = F.divide_exact_x(kOnePlusSq);
        REQUIRE(once.has_value());
        CHECK(once->divide_exact_y(kOnePlusSq).has_value());
    }
    BivarPoly G = reduced_curve_poly(kP, kQ);
    CHECK(BivarPoly::from_x(kOnePlusSq) * BivarPoly::from_y(kOnePlusSq) * G == build_F(kP, kQ));
}

TEST_CASE("incidence_count worked examples") {
    std::vector<CircleParam> params{{Rational(0)}, {Rational(1)}, {Rational(1, 2)}};
    auto pairs = ordered_pairs({kP, kQ});
    CHECK(incidence_count(params, pairs) == 4);

    std::vector<CircleParam> two{{Rational(0)}, {Rational(1)}};
    CHECK(incidence_count(two, pairs) == 0);
    CHECK(incidence_count(params, {}) == 0);

    CHECK_THROWS_AS(incidence_count(params, {{kP, kP}}), std::invalid_argument);
    std::vector<CircleParam> dup{{Rational(0)}, {Rational(0)}};
    CHECK_THROWS_AS(incidence_count(dup, pairs), std::invalid_argument);
}

TEST_CASE("incidences equal off-diagonal quadruples") {
    Rng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        auto sparams = gen_circle(1 + rng.uniform(0, 5), rng.next());
        auto P = gen_generic_plane(1 + rng.uniform(0, 4), rng.next());
        std::vector<Point2> S;
        for (const auto& t : sparams) S.push_back(phi(t));
        CHECK(incidence_count(sparams, ordered_pairs(P)) == quadruple_count_offdiag(S, P));
    }
}

TEST_CASE("common component check") {
    BivarPoly F = build_F(kP, kQ);
    CHECK(common_component_check(F, F));
    CHECK(common_component_check(F, BivarPoly::from_x(kOnePlusSq) * F));

    // scalar-multiple pair: no shared component once the real-point-free
    // factors are gone; with them, the full F's always share (1+x^2)(1+y^2)
    BivarPoly G1 = reduced_curve_poly(kP, kQ);
    BivarPoly G2 = reduced_curve_poly(kP.scaled(Rational(2)), kQ.scaled(Rational(2)));
    CHECK(!common_component_check(G1, G2));
    CHECK(common_component_check(build_F(kP, kQ),
                                 build_F(kP.scaled(Rational(2)), kQ.scaled(Rational(2)))));

    CHECK_THROWS_AS(common_component_check(BivarPoly(), F), std::invalid_argument);
}

TEST_CASE("random distinct pairs share no real component") {
    Rng rng(61);
    int done = 0;
    while (done < 20) {
        Point2 p{rng.rational(8), rng.rational(8)}, q{rng.rational(8), rng.rational(8)};
        Point2 p2{rng.rational(8), rng.rational(8)}, q2{rng.rational(8), rng.rational(8)};
        if (sq_norm(p) == sq_norm(q) || sq_norm(p2) == sq_norm(q2)) continue;
        if (p == p2 && q == q2) continue;
        if (p.is_origin() || q.is_origin() || p2.is_origin() || q2.is_origin()) continue;
        CHECK(!common_component_check(reduced_curve_poly(p, q), reduced_curve_poly(p2, q2)));
        ++done;
    }
}

TEST_CASE("curve family enumerates ordered pairs") {
    auto fam = build_curve_family({kP, kQ, {Rational(1), Rational(1)}});
    CHECK(fam.size() == 6);
    for (const auto& entry : fam) {
        CHECK(!(entry.p == entry.q));
        CHECK(entry.F == build_F(entry.p, entry.q));
    }
}
