#pragma once

#include <string>
#include <vector>

#include "ddlab/bivar.hpp"
#include "ddlab/concentric.hpp"
#include "ddlab/experiment.hpp"
#include "ddlab/point.hpp"
#include "ddlab/r4.hpp"

namespace ddlab {

// Point-set files: {"points": [["a/b", "c/d"], ...]}. Rationals are
// "num/den" strings (or bare integers). Exact mode rejects floating-point
// literals; approx mode converts them via their exact binary value.

std::vector<Point2> read_point_set(const std::string& path, Mode mode = Mode::Exact);
void write_point_set(const std::string& path, const std::vector<Point2>& points);

// Curve files: {"coefficients": [[i, j, "num/den"], ...]}.
BivarPoly read_curve(const std::string& path);
void write_curve(const std::string& path, const BivarPoly& F);

// Flat files: {"hyperplanes": [{"normal": [r,r,r,r], "offset": r}, ...]},
// exactly two entries.
TwoFlat read_flat(const std::string& path);

// Concentric configs: {"r1": "a/b", "r2": "c/d", "s_params": [...],
// "p_params": [...]}.
ConcentricConfig read_concentric_config(const std::string& path);

ExperimentConfig read_experiment_config(const std::string& path);

// "a/b,c/d" -> Point2; "a,b;c,d" -> (p, q) pair
Point2 parse_point_arg(const std::string& text);
std::pair<Point2, Point2> parse_pair_arg(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ddlab
