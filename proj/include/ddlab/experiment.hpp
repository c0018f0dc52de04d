#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

enum class Mode { Exact, Approx };

struct ExperimentConfig {
    std::string generator = "random";  // random | lattice | perturbed-lattice
    std::vector<std::size_t> sizes;    // |S| and |P| sweep over the cross product
    std::uint64_t seed = 1;
    Mode mode = Mode::Exact;
    std::string out;       // output path, empty for stdout
    double epsilon = 0.01; // the epsilon of the min() bound, in (0, 1/4)

    void validate() const;
};

struct BoundReportRow {
    std::size_t s_size = 0, p_size = 0;
    std::uint64_t delta = 0;
    double bound = 0;   // min(|S||P|^(1/4-eps), |S|^(2/3)|P|^(2/3), |S|^2, |P|^2)
    double ratio = 0;   // delta / bound, reported, never asserted
    Rational energy;    // |S|^2|P|^2 / Q, exact
    std::uint64_t q = 0, q_offdiag = 0, diagonal = 0;
};

// One row per (|S|, |P|) pair of the sweep, generated deterministically from
// the seed. The exact energy inequality |Delta| * Q >= (|S||P|)^2 and the
// diagonal bound <= 2|S||P| are verified on every row; a violation throws.
std::vector<BoundReportRow> bound_report(const ExperimentConfig& cfg);

std::string bound_report_csv(const std::vector<BoundReportRow>& rows);

}  // namespace ddlab
