#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddlab/generators.hpp"
#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

using namespace ddlab;

TEST_CASE("rational parsing and normal form") {
    CHECK(Rational::parse_or_throw("6/4") == Rational(3, 2));
    CHECK(Rational::parse_or_throw("-6/4").str() == "-3/2");
    CHECK(Rational::parse_or_throw("7").str() == "7");
    CHECK(Rational::parse_or_throw("+7/1").str() == "7");
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5).str() == "0");

    CHECK(!Rational::parse("3.5"));
    CHECK(!Rational::parse("1e3"));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse("1/ 2"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("-"));
    CHECK(!Rational::parse("2/-3"));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic stays canonical") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(), b = rng.rational();
        Rational s = a + b;
        CHECK(s - b == a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(mpz_class(gcd(s.num(), s.den())) == 1);
        CHECK(s.den() > 0);
    }
}

TEST_CASE("floor_sqrt and exact_sqrt") {
    CHECK(Rational(16).floor_sqrt() == 4);
    CHECK(Rational(17).floor_sqrt() == 4);
    CHECK(Rational(15, 4).floor_sqrt() == 1);  // sqrt(3.75) ~ 1.93
    CHECK(Rational(0).floor_sqrt() == 0);
    CHECK(Rational(9, 4).exact_sqrt().value() == Rational(3, 2));
    CHECK(!Rational(2).exact_sqrt());
    CHECK(!Rational(-1).exact_sqrt());
}

TEST_CASE("phi lands on the unit circle") {
    CHECK(phi(Rational(0)) == Point2{Rational(1), Rational(0)});
    CHECK(phi(Rational(1)) == Point2{Rational(0), Rational(1)});
    CHECK(phi(Rational(1, 2)) == Point2{Rational(3, 5), Rational(4, 5)});

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Rational t = rng.rational();
        Point2 u = phi(t);
        CHECK(sq_norm(u) == Rational(1));
        CHECK(!(u == Point2{Rational(-1), Rational(0)}));
        CHECK(phi_inverse(u) == t);
    }
}

TEST_CASE("phi_inverse validates its domain") {
    CHECK(phi_inverse({Rational(1), Rational(0)}) == Rational(0));
    CHECK(phi_inverse({Rational(3, 5), Rational(4, 5)}) == Rational(1, 2));
    CHECK_THROWS_AS(phi_inverse({Rational(-1), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse({Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("sq_dist examples and properties") {
    Point2 a{Rational(1), Rational(0)};
    CHECK(sq_dist(a, a) == Rational(0));
    CHECK(sq_dist(a, {Rational(2), Rational(0)}) == Rational(1));
    CHECK(sq_dist({Rational(0), Rational(1)}, {Rational(7, 5), Rational(1, 5)}) ==
          Rational(13, 5));

    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        Point2 x{rng.rational(), rng.rational()}, y{rng.rational(), rng.rational()};
        CHECK(sq_dist(x, y) == sq_dist(y, x));
        CHECK(sq_dist(x, y).is_zero() == (x == y));
        CHECK(sq_dist(x, y).sign() >= 0);
    }
}

TEST_CASE("annulus index classifies half-open annuli exactly") {
    CHECK(annulus_index({Rational(1), Rational(0)}) == 0);
    CHECK(annulus_index({Rational(2), Rational(0)}) == 1);  // boundary joins the upper annulus
    CHECK(annulus_index({Rational(3), Rational(0)}) == 1);
    CHECK(annulus_index({Rational(4), Rational(0)}) == 2);
    CHECK(annulus_index({Rational(5), Rational(0)}) == 2);
    CHECK(annulus_index({Rational(0), Rational(0)}) == 0);
    // just below the boundary stays in the lower annulus
    CHECK(annulus_index({Rational(199, 100), Rational(0)}) == 0);
}

TEST_CASE("norm gap predicate") {
    CHECK(norm_gap_is_two({Rational(3), Rational(0)}, {Rational(1), Rational(0)}));
    CHECK(norm_gap_is_two({Rational(1), Rational(0)}, {Rational(3), Rational(0)}));
    CHECK(norm_gap_is_two({Rational(0), Rational(5, 2)}, {Rational(1, 2), Rational(0)}));
    CHECK(!norm_gap_is_two({Rational(5), Rational(0)}, {Rational(1), Rational(0)}));
    CHECK(!norm_gap_is_two({Rational(1), Rational(0)}, {Rational(1), Rational(0)}));
}

TEST_CASE("annulus_filter keeps the larger color class") {
    std::vector<Point2> pts{{Rational(1), Rational(0)},
                            {Rational(3), Rational(0)},
                            {Rational(5), Rational(0)}};
    auto kept = annulus_filter(pts);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == pts[0]);
    CHECK(kept[1] == pts[2]);

    CHECK(annulus_filter({}).empty());
    CHECK(annulus_filter({{Rational(1), Rational(0)}}).size() == 1);
}

TEST_CASE("annulus_filter invariants on random input") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point2> pts;
        int n = 1 + static_cast<int>(rng.uniform(0, 19));
        for (int i = 0; i < n; ++i) pts.push_back({rng.rational(12), rng.rational(12)});
        auto kept = annulus_filter(pts);
        CHECK(2 * kept.size() >= pts.size());
        for (size_t i = 0; i < kept.size(); ++i)
            for (size_t j = i + 1; j < kept.size(); ++j)
                CHECK(!norm_gap_is_two(kept[i], kept[j]));
    }
}
