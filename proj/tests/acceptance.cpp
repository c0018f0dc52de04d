// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "ddlab/concentric.hpp"
#include "ddlab/curves.hpp"
#include "ddlab/distance.hpp"
#include "ddlab/experiment.hpp"
#include "ddlab/generators.hpp"
#include "ddlab/r4.hpp"
#include "ddlab/verify.hpp"

using namespace ddlab;

namespace {

struct Harness {
    int failures = 0;

    void run(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", index, ok ? "PASS" : "FAIL",
                    name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

// shared energy/diagonal check (criterion 9), accumulated across suites
struct EnergyAudit {
    std::uint64_t instances = 0;
    bool ok = true;

    void check(const std::vector<Point2>& S, const std::vector<Point2>& P, bool s_on_circle) {
        ++instances;
        std::uint64_t q = quadruple_count(S, P);
        Rational delta(static_cast<long>(distance_set(S, P).size()));
        Rational sp(static_cast<long>(S.size() * P.size()));
        if (delta * Rational(static_cast<long>(q)) < sp.squared()) ok = false;
        if (s_on_circle) {
            bool origin_free = true;
            for (const auto& p : P)
                if (p.is_origin()) origin_free = false;
            if (origin_free && diagonal_quadruples(S, P) > 2 * S.size() * P.size()) ok = false;
        }
    }
};

EnergyAudit g_energy;

bool criterion1(std::string& detail) {
    // 100 seeded instances, |S| <= 12, |P| <= 12: incidence identity and
    // brute-force oracle agreement, all exact
    Rng sizes(20250101);
    for (int i = 0; i < 100; ++i) {
        std::uint64_t seed = mix_seed(424242, i);
        std::size_t ns = 1 + sizes.uniform(0, 11);
        std::size_t np = 1 + sizes.uniform(0, 11);
        auto s_params = gen_circle(ns, mix_seed(seed, 1));
        auto P = gen_generic_plane(np, mix_seed(seed, 2));
        std::vector<Point2> S;
        for (const auto& t : s_params) S.push_back(phi(t));

        std::uint64_t inc = incidence_count(s_params, ordered_pairs(P));
        std::uint64_t offdiag = quadruple_count_offdiag(S, P);
        std::uint64_t q = quadruple_count(S, P);
        std::uint64_t brute = quadruple_count_bruteforce(S, P);
        if (inc != offdiag) {
            detail = "incidence != offdiag at instance " + std::to_string(i);
            return false;
        }
        if (q != brute) {
            detail = "histogram != brute force at instance " + std::to_string(i);
            return false;
        }
        g_energy.check(S, P, true);
    }
    return true;
}

bool criterion2(std::string& detail) {
    std::vector<Point2> S{phi(Rational(0)), phi(Rational(1)), phi(Rational(1, 2))};
    std::vector<Point2> P{{Rational(2), Rational(0)}, {Rational(7, 5), Rational(1, 5)}};
    std::vector<CircleParam> params{{Rational(0)}, {Rational(1)}, {Rational(1, 2)}};
    bool ok = distance_set(S, P).size() == 4 && quadruple_count(S, P) == 10 &&
              quadruple_count_bruteforce(S, P) == 10 && quadruple_count_offdiag(S, P) == 4 &&
              diagonal_quadruples(S, P) == 6 &&
              incidence_count(params, ordered_pairs(P)) == 4 &&
              energy_lower_bound(S, P) == Rational(18, 5) &&
              Rational(4) >= Rational(18, 5);
    if (!ok) detail = "micro-instance values drifted";
    g_energy.check(S, P, true);
    return ok;
}

bool criterion3(std::string& detail) {
    Rng rng(314159);
    int observed_max = -1;
    for (int i = 0; i < 1000; ++i) {
        Point2 p{rng.rational(), rng.rational()}, q{rng.rational(), rng.rational()};
        if (p.is_origin() && q.is_origin()) continue;
        int deg = build_F(p, q).total_degree();
        observed_max = std::max(observed_max, deg);
        if (deg > 12) {
            detail = "degree " + std::to_string(deg) + " exceeds 12";
            return false;
        }
    }
    int special = build_F({Rational(2), Rational(0)}, {Rational(7, 5), Rational(1, 5)})
                      .total_degree();
    detail = "max observed degree " + std::to_string(observed_max) + "; ((2,0),(7/5,1/5)) has degree " +
             std::to_string(special) + (special <= 8 ? " (<= 8, reported not asserted)" : "");
    return true;
}

bool criterion4(std::string& detail) {
    R4VerifySummary sum = r4_verify(500, 987654321);
    if (sum.flat_violations || sum.degenerate_results || sum.witness_violations) {
        detail = sum.str();
        return false;
    }
    // the hand-derived flat: count 2 with the two stated witnesses
    Point2 p{Rational(2), Rational(0)}, q{Rational(7, 5), Rational(1, 5)};
    Hyperplane4 u2_plane{{{Rational(0), Rational(1), Rational(0), Rational(0)}}, Rational(4, 5)};
    IntersectionResult res = intersect_with_2flat(p, q, TwoFlat(u2_plane, hyperplane_of(p, q)));
    if (res.degenerate || res.count != 2 || res.witnesses.size() != 2) {
        detail = "hand-derived flat example did not return count 2";
        return false;
    }
    double expect[2][4] = {{0.6, 0.8, 0.0, 1.0}, {0.6, 0.8, 0.28, -0.96}};
    for (auto& e : expect) {
        bool found = false;
        for (auto& w : res.witnesses) {
            double err = 0;
            for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(w[i] - e[i]));
            found |= err < 1e-9;
        }
        if (!found) {
            detail = "expected witness missing";
            return false;
        }
    }
    detail = "max flat count " + std::to_string(sum.max_flat_count);
    return true;
}

bool criterion5(std::string& detail) {
    // pair bound over 500 pairs, plus 100 scalar-multiple pairs returning 0
    Rng rng(555001);
    int max_count = 0;
    for (int i = 0; i < 500; ++i) {
        Point2 p{rng.rational(16), rng.rational(16)}, q{rng.rational(16), rng.rational(16)};
        if (sq_norm(p) == sq_norm(q)) {
            --i;
            continue;
        }
        Point2 p2{rng.rational(16), rng.rational(16)}, q2{rng.rational(16), rng.rational(16)};
        if ((p == p2 && q == q2) || (p2.is_origin() && q2.is_origin())) {
            --i;
            continue;
        }
        IntersectionResult res = curve_pair_intersection(p, q, p2, q2);
        if (res.degenerate || res.count > 4) {
            detail = "pair bound violated at instance " + std::to_string(i);
            return false;
        }
        max_count = std::max(max_count, res.count);
    }
    for (int i = 0; i < 100; ++i) {
        Point2 p{rng.rational(16), rng.rational(16)}, q{rng.rational(16), rng.rational(16)};
        if (sq_norm(p) == sq_norm(q)) {
            --i;
            continue;
        }
        Rational t;
        while (t.is_zero() || t == Rational(1)) t = rng.rational(16);
        IntersectionResult res = curve_pair_intersection(p, q, p.scaled(t), q.scaled(t));
        if (res.degenerate || res.count != 0) {
            detail = "scalar-multiple pair not empty at instance " + std::to_string(i);
            return false;
        }
    }
    detail = "max pair count " + std::to_string(max_count);
    return true;
}

bool criterion6(std::string& detail) {
    Rng rng(660660);
    int done = 0;
    while (done < 200) {
        Point2 p{rng.rational(12), rng.rational(12)}, q{rng.rational(12), rng.rational(12)};
        Point2 p2{rng.rational(12), rng.rational(12)}, q2{rng.rational(12), rng.rational(12)};
        if (sq_norm(p) == sq_norm(q) || sq_norm(p2) == sq_norm(q2)) continue;
        if (p == p2 && q == q2) continue;
        if (p.is_origin() || q.is_origin() || p2.is_origin() || q2.is_origin()) continue;
        if (common_component_check(reduced_curve_poly(p, q), reduced_curve_poly(p2, q2))) {
            detail = "shared component at instance " + std::to_string(done);
            return false;
        }
        ++done;
    }
    BivarPoly F = build_F({Rational(2), Rational(0)}, {Rational(7, 5), Rational(1, 5)});
    if (!common_component_check(F, F)) {
        detail = "gcd(F, F) reported constant";
        return false;
    }
    return true;
}

bool criterion7(std::string& detail) {
    Rng rng(777111);
    for (int i = 0; i < 50; ++i) {
        std::size_t ns = 1 + rng.uniform(0, 31);
        std::size_t np = 2 + rng.uniform(0, 30);
        ConcentricConfig cfg = gen_concentric(ns, np, mix_seed(777, i));
        ConcentricReport rep = concentric_report(cfg);
        if (!rep.chain_ok) {
            detail = "chain failed at instance " + std::to_string(i);
            return false;
        }
        SeparatedConfig sep = separating_line(cfg);
        g_energy.check(sep.S, sep.P, false);
    }
    Rng arng(777222);
    for (int i = 0; i < 200; ++i) {
        auto mk = [&] {
            std::set<AngleRep> s;
            int n = 1 + static_cast<int>(arng.uniform(0, 7));
            for (int k = 0; k < n; ++k) {
                Point2 u = phi(arng.rational());
                s.insert(AngleRep(u.x1, u.x2));
            }
            return s;
        };
        if (!ruzsa_check(mk(), mk(), mk())) {
            detail = "ruzsa inequality failed at triple " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool criterion8(std::string& detail) {
    auto [S64, P64] = even_spaced_counterexample(64, 3.0);
    std::size_t d64 = approx_distinct_sq_distances(S64, P64, 1e-9);
    if (d64 > 64) {
        detail = "n=64 gave " + std::to_string(d64) + " > 64 distances";
        return false;
    }
    auto [S4, P4] = even_spaced_counterexample(4, 2.0);
    std::size_t d4 = approx_distinct_sq_distances(S4, P4, 1e-9);
    if (d4 != 3) {
        detail = "n=4 gave " + std::to_string(d4) + " != 3 distances";
        return false;
    }
    detail = "n=64 scale=3 gives " + std::to_string(d64) + " distinct values";
    return true;
}

bool criterion9(std::string& detail) {
    detail = std::to_string(g_energy.instances) + " instances audited across suites";
    return g_energy.ok && g_energy.instances > 150;
}

bool criterion10(std::string& detail) {
    ExperimentConfig cfg;
    cfg.sizes = {8, 16, 32, 64};
    cfg.epsilon = 0.01;
    cfg.seed = 1;
    auto rows = bound_report(cfg);  // row-wise exact checks live inside
    if (rows.size() != 16) {
        detail = "expected 16 rows";
        return false;
    }
    std::string csv1 = bound_report_csv(rows);
    std::string csv2 = bound_report_csv(bound_report(cfg));
    if (csv1 != csv2) {
        detail = "sweep is not deterministic";
        return false;
    }
    double min_ratio = 1e300, max_ratio = 0;
    for (const auto& r : rows) {
        min_ratio = std::min(min_ratio, r.ratio);
        max_ratio = std::max(max_ratio, r.ratio);
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "ratio column spans [%.3f, %.3f]", min_ratio, max_ratio);
    detail = buf;
    return true;
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "Lemma 2.4 identity + brute-force oracle (100 instances)", criterion1);
    h.run(2, "worked micro-instance reproduces exactly", criterion2);
    h.run(3, "degree of F_{p,q} <= 12 on 1000 random pairs", criterion3);
    h.run(4, "Lemma 3.2: |curve /\\ 2-flat| <= 4 on 500 flats + hand example", criterion4);
    h.run(5, "Lemma 3.3: |curve /\\ curve| <= 4 on 500 pairs, scalar pairs empty", criterion5);
    h.run(6, "no common component on 200 reduced curve pairs", criterion6);
    h.run(7, "Theorem 1.2 chain on 50 configs + 200 Ruzsa triples", criterion7);
    h.run(8, "evenly spaced counterexample (n=64 scale=3, n=4 scale=2)", criterion8);
    h.run(9, "energy bound and diagonal bound on every audited instance", criterion9);
    h.run(10, "bound-ratio sweep over {8,16,32,64}^2, deterministic", criterion10);
    if (h.failures) {
        std::printf("%d criterion(s) FAILED\n", h.failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
