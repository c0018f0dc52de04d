// ddlab: exact-arithmetic experiments on distinct distances between a point
// set on a circle and a planar set.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddlab/concentric.hpp"
#include "ddlab/curves.hpp"
#include "ddlab/distance.hpp"
#include "ddlab/experiment.hpp"
#include "ddlab/generators.hpp"
#include "ddlab/io.hpp"
#include "ddlab/r4.hpp"
#include "ddlab/verify.hpp"

namespace {

using namespace ddlab;
using nlohmann::json;

constexpr int kExitInvariant = 2;  // a checked exact invariant failed

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) std::cout << content;
    else write_text_file(out, content);
}

json points_json(const std::vector<Point2>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x1.str(), p.x2.str()});
    return json{{"points", arr}};
}

json intersection_json(const IntersectionResult& res) {
    if (res.degenerate) return json{{"result", "DEGENERATE"}};
    json arr = json::array();
    for (const auto& w : res.witnesses) arr.push_back({w[0], w[1], w[2], w[3]});
    return json{{"result", "count"}, {"count", res.count}, {"witnesses", arr}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact distinct-distance laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string mode_str = "exact";
    std::string out;
    app.add_option("--seed", seed, "global random seed")->capture_default_str();
    app.add_option("--mode", mode_str, "exact | approx")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    app.add_option("--out", out, "output path (default stdout)");

    auto mode = [&] { return mode_str == "approx" ? Mode::Approx : Mode::Exact; };

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "seeded point-set generators");
    gen->require_subcommand(1);
    std::size_t gen_n = 8;
    long gen_bound = 64;
    auto* gen_circle_cmd = gen->add_subcommand("circle", "rational points on the unit circle");
    gen_circle_cmd->add_option("--n", gen_n, "number of points")->required();
    gen_circle_cmd->add_option("--bound", gen_bound, "numerator/denominator bound");
    auto* gen_plane_cmd =
        gen->add_subcommand("plane", "generic planar points (distinct norms, even annuli)");
    std::string gen_kind = "random";
    gen_plane_cmd->add_option("--n", gen_n, "number of points")->required();
    gen_plane_cmd->add_option("--bound", gen_bound, "numerator/denominator bound");
    gen_plane_cmd->add_option("--generator", gen_kind, "random | lattice | perturbed-lattice")
        ->check(CLI::IsMember({"random", "lattice", "perturbed-lattice"}));

    // ---- distances ----
    auto* distances = app.add_subcommand("distances", "squared-distance histogram");
    std::string s_path, p_path, format = "csv";
    distances->add_option("--s", s_path, "S point set")->required();
    distances->add_option("--p", p_path, "P point set")->required();
    distances->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ---- quadruples ----
    auto* quadruples = app.add_subcommand("quadruples", "quadruple counts and energy bound");
    bool check_oracle = false;
    quadruples->add_option("--s", s_path, "S point set")->required();
    quadruples->add_option("--p", p_path, "P point set")->required();
    quadruples->add_flag("--check-oracle", check_oracle,
                         "verify against brute force when |S|^2|P|^2 <= 10^6");

    // ---- incidence ----
    auto* incidence = app.add_subcommand("incidence", "parameter/curve incidence count");
    bool check_identity = false;
    incidence->add_option("--s", s_path, "S point set (unit-circle points)")->required();
    incidence->add_option("--p", p_path, "P point set")->required();
    incidence->add_flag("--check-identity", check_identity,
                        "fail unless incidences equal off-diagonal quadruples");

    // ---- curves ----
    auto* curves = app.add_subcommand("curves", "curve-family polynomials");
    curves->require_subcommand(1);
    auto* curves_build = curves->add_subcommand("build", "expand F_{p,q}");
    std::string p_arg, q_arg;
    bool reduced = false;
    curves_build->add_option("--p", p_arg, "p as \"a/b,c/d\"")->required();
    curves_build->add_option("--q", q_arg, "q as \"e/f,g/h\"")->required();
    curves_build->add_flag("--reduced", reduced,
                           "divide out the real-point-free factors (1+x^2)(1+y^2)");
    auto* curves_gcd = curves->add_subcommand("gcd", "common-component check");
    std::string f_path, g_path;
    curves_gcd->add_option("--f", f_path, "first curve json")->required();
    curves_gcd->add_option("--g", g_path, "second curve json")->required();

    // ---- r4 ----
    auto* r4 = app.add_subcommand("r4", "torus-curve intersections in R^4");
    r4->require_subcommand(1);
    std::string pq_arg, pq2_arg, flat_path;
    auto* r4_pair = r4->add_subcommand("pair-intersect", "|C_{p,q} /\\ C_{p',q'}|");
    r4_pair->add_option("--pq", pq_arg, "first pair \"p1,p2;q1,q2\"")->required();
    r4_pair->add_option("--pq2", pq2_arg, "second pair")->required();
    auto* r4_flat = r4->add_subcommand("flat-intersect", "|C_{p,q} /\\ K|");
    r4_flat->add_option("--pq", pq_arg, "pair \"p1,p2;q1,q2\"")->required();
    r4_flat->add_option("--flat", flat_path, "flat json (two hyperplanes)")->required();
    auto* r4_verify_cmd = r4->add_subcommand("verify", "randomized intersection-bound suites");
    std::size_t trials = 500;
    r4_verify_cmd->add_option("--trials", trials, "trials per suite")->capture_default_str();

    // ---- concentric ----
    auto* concentric = app.add_subcommand("concentric", "two concentric circles");
    concentric->require_subcommand(1);
    auto* conc_report = concentric->add_subcommand("report", "angle-set chain report");
    std::string cfg_path;
    conc_report->add_option("--cfg", cfg_path, "concentric config json")->required();
    auto* conc_counter = concentric->add_subcommand(
        "counterexample", "evenly spaced S and P = scale*S (approximate mode)");
    int ce_n = 64;
    double ce_scale = 3;
    conc_counter->add_option("--n", ce_n, "points per circle")->capture_default_str();
    conc_counter->add_option("--scale", ce_scale, "radius of P")->capture_default_str();

    // ---- experiment ----
    auto* experiment = app.add_subcommand("experiment", "bound-ratio sweep, CSV output");
    std::string config_path;
    std::vector<std::size_t> sizes;
    double epsilon = 0.01;
    std::string exp_generator = "random";
    experiment->add_option("--config", config_path, "experiment config json");
    experiment->add_option("--sizes", sizes, "sweep sizes (cross product)");
    experiment->add_option("--epsilon", epsilon, "epsilon in (0, 1/4)")->capture_default_str();
    experiment->add_option("--generator", exp_generator, "random | lattice | perturbed-lattice");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_circle_cmd->parsed()) {
            std::vector<Point2> pts;
            for (const auto& t : gen_circle(gen_n, seed, gen_bound)) pts.push_back(phi(t));
            emit(out, points_json(pts).dump(2) + "\n");
        } else if (gen_plane_cmd->parsed()) {
            std::vector<Point2> pts;
            if (gen_kind == "lattice") pts = gen_lattice(gen_n);
            else if (gen_kind == "perturbed-lattice") pts = gen_perturbed_lattice(gen_n, seed);
            else pts = gen_generic_plane(gen_n, seed, gen_bound);
            emit(out, points_json(pts).dump(2) + "\n");
        } else if (distances->parsed()) {
            auto S = read_point_set(s_path, mode());
            auto P = read_point_set(p_path, mode());
            DistanceHistogram h = distance_histogram(S, P);
            if (format == "csv") {
                std::ostringstream os;
                os << "sq_distance,multiplicity\n";
                for (const auto& [t, v] : h) os << t.str() << ',' << v << '\n';
                emit(out, os.str());
            } else {
                json arr = json::array();
                for (const auto& [t, v] : h) arr.push_back({t.str(), v});
                emit(out, json{{"histogram", arr}}.dump(2) + "\n");
            }
        } else if (quadruples->parsed()) {
            auto S = read_point_set(s_path, mode());
            auto P = read_point_set(p_path, mode());
            std::uint64_t q = quadruple_count(S, P);
            json j{{"q", q},
                   {"q_offdiag", quadruple_count_offdiag(S, P)},
                   {"energy_lower_bound", energy_lower_bound(S, P).str()},
                   {"delta", distance_set(S, P).size()}};
            bool ok = true;
            if (check_oracle) {
                std::size_t work = S.size() * S.size() * P.size() * P.size();
                if (work <= 1000000) {
                    std::uint64_t brute = quadruple_count_bruteforce(S, P);
                    j["oracle"] = brute;
                    ok = brute == q;
                    j["oracle_ok"] = ok;
                } else {
                    j["oracle"] = "skipped (|S|^2|P|^2 > 10^6)";
                }
            }
            emit(out, j.dump(2) + "\n");
            if (!ok) return kExitInvariant;
        } else if (incidence->parsed()) {
            auto S = read_point_set(s_path, mode());
            auto P = read_point_set(p_path, mode());
            std::vector<CircleParam> params;
            for (const auto& u : S) params.push_back({phi_inverse(u)});
            std::uint64_t inc = incidence_count(params, ordered_pairs(P));
            std::uint64_t offdiag = quadruple_count_offdiag(S, P);
            json j{{"incidences", inc}, {"q_offdiag", offdiag}};
            bool ok = true;
            if (check_identity) {
                ok = inc == offdiag;
                j["identity_ok"] = ok;
            }
            emit(out, j.dump(2) + "\n");
            if (!ok) return kExitInvariant;
        } else if (curves_build->parsed()) {
            Point2 p = parse_point_arg(p_arg), q = parse_point_arg(q_arg);
            BivarPoly F = reduced ? reduced_curve_poly(p, q) : build_F(p, q);
            if (out.empty()) {
                json arr = json::array();
                for (const auto& [k, c] : F.terms()) arr.push_back({k.first, k.second, c.str()});
                std::cout << json{{"coefficients", arr},
                                  {"total_degree", F.total_degree()}}.dump(2)
                          << "\n";
            } else {
                write_curve(out, F);
            }
        } else if (curves_gcd->parsed()) {
            BivarPoly g = bivar_gcd(read_curve(f_path), read_curve(g_path));
            json j{{"common_component", g.total_degree() > 0},
                   {"gcd_total_degree", g.total_degree()},
                   {"gcd", g.str()}};
            emit(out, j.dump(2) + "\n");
        } else if (r4_pair->parsed()) {
            auto [p, q] = parse_pair_arg(pq_arg);
            auto [p2, q2] = parse_pair_arg(pq2_arg);
            emit(out, intersection_json(curve_pair_intersection(p, q, p2, q2)).dump(2) + "\n");
        } else if (r4_flat->parsed()) {
            auto [p, q] = parse_pair_arg(pq_arg);
            TwoFlat K = read_flat(flat_path);
            emit(out, intersection_json(intersect_with_2flat(p, q, K)).dump(2) + "\n");
        } else if (r4_verify_cmd->parsed()) {
            R4VerifySummary sum = r4_verify(trials, seed);
            emit(out, sum.str() + "\n");
            if (!sum.ok()) return kExitInvariant;
        } else if (conc_report->parsed()) {
            ConcentricReport rep = concentric_report(read_concentric_config(cfg_path));
            json j{{"delta", rep.delta},
                   {"a_minus_b", rep.a_minus_b},
                   {"b_minus_b", rep.b_minus_b},
                   {"m", rep.m},
                   {"m_offdiag", rep.m_offdiag},
                   {"alpha_hat", rep.alpha_hat},
                   {"chain_bound", rep.chain_bound},
                   {"s_kept", rep.s_kept},
                   {"p_kept", rep.p_kept},
                   {"chain_ok", rep.chain_ok}};
            emit(out, j.dump(2) + "\n");
            if (!rep.chain_ok) return kExitInvariant;
        } else if (conc_counter->parsed()) {
            auto [S, P] = even_spaced_counterexample(ce_n, ce_scale);
            std::size_t delta = approx_distinct_sq_distances(S, P);
            json j{{"mode", "approx"},
                   {"n", ce_n},
                   {"scale", ce_scale},
                   {"delta", delta},
                   {"within_bound", delta <= static_cast<std::size_t>(ce_n)}};
            emit(out, j.dump(2) + "\n");
            if (delta > static_cast<std::size_t>(ce_n)) return kExitInvariant;
        } else if (experiment->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) {
                cfg = read_experiment_config(config_path);
            } else {
                cfg.sizes = sizes.empty() ? std::vector<std::size_t>{8, 16, 32, 64} : sizes;
                cfg.seed = seed;
                cfg.epsilon = epsilon;
                cfg.generator = exp_generator;
                cfg.mode = mode();
            }
            if (!out.empty()) cfg.out = out;
            emit(cfg.out, bound_report_csv(bound_report(cfg)));
        }
    } catch (const std::exception& e) {
        std::cerr << "ddlab: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
