#include "ddlab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ddlab/distance.hpp"
#include "ddlab/generators.hpp"

namespace ddlab {

void ExperimentConfig::validate() const {
    if (generator != "random" && generator != "lattice" && generator != "perturbed-lattice")
        throw std::invalid_argument("ExperimentConfig: unknown generator '" + generator + "'");
    for (std::size_t s : sizes)
        if (s == 0) throw std::invalid_argument("ExperimentConfig: sizes must be positive");
    if (!(epsilon > 0) || !(epsilon < 0.25))
        throw std::invalid_argument("ExperimentConfig: epsilon must lie in (0, 1/4)");
}

namespace {

std::vector<Point2> make_p_set(const ExperimentConfig& cfg, std::size_t n, std::uint64_t seed) {
    if (cfg.generator == "lattice") return gen_lattice(n);
    if (cfg.generator == "perturbed-lattice") return gen_perturbed_lattice(n, seed);
    return gen_generic_plane(n, seed);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::vector<BoundReportRow> bound_report(const ExperimentConfig& cfg) {
    cfg.validate();
    std::vector<BoundReportRow> rows;
    std::uint64_t row_index = 0;
    for (std::size_t m : cfg.sizes) {
        for (std::size_t n : cfg.sizes) {
            ++row_index;
            std::vector<Point2> S;
            for (const auto& t : gen_circle(m, mix_seed(cfg.seed, 2 * row_index)))
                S.push_back(phi(t));
            std::vector<Point2> P = make_p_set(cfg, n, mix_seed(cfg.seed, 2 * row_index + 1));

            BoundReportRow row;
            row.s_size = m;
            row.p_size = n;
            row.delta = distance_set(S, P).size();
            row.q = quadruple_count(S, P);
            row.q_offdiag = quadruple_count_offdiag(S, P);
            row.diagonal = diagonal_quadruples(S, P);
            row.energy = energy_lower_bound(S, P);

            double md = static_cast<double>(m), nd = static_cast<double>(n);
            row.bound = std::min(std::min(md * std::pow(nd, 0.25 - cfg.epsilon),
                                          std::pow(md * nd, 2.0 / 3.0)),
                                 std::min(md * md, nd * nd));
            row.ratio = static_cast<double>(row.delta) / row.bound;

            // exact invariants, never expected to fire
            Rational sp(static_cast<long>(m * n));
            if (Rational(static_cast<long>(row.delta)) * Rational(static_cast<long>(row.q)) <
                sp.squared())
                throw std::runtime_error("bound_report: energy inequality violated");
            if (row.diagonal > 2 * m * n)
                throw std::runtime_error("bound_report: diagonal quadruple bound violated");
            if (row.q != row.q_offdiag + row.diagonal)
                throw std::runtime_error("bound_report: quadruple partition violated");
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bound_report_csv(const std::vector<BoundReportRow>& rows) {
    std::ostringstream os;
    os << "s_size,p_size,delta,bound,ratio,energy_lower_bound,q,q_offdiag,diagonal\n";
    for (const auto& r : rows) {
        os << r.s_size << ',' << r.p_size << ',' << r.delta << ',' << format_double(r.bound)
           << ',' << format_double(r.ratio) << ',' << r.energy.str() << ',' << r.q << ','
           << r.q_offdiag << ',' << r.diagonal << '\n';
    }
    return os.str();
}

}  // namespace ddlab
