#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

// Multiplicity v(t) of each squared distance t between S and P.
// Sum of all multiplicities is |S|*|P|.
using DistanceHistogram = std::map<Rational, std::uint64_t>;

DistanceHistogram distance_histogram(const std::vector<Point2>& S, const std::vector<Point2>& P);

// The set of distinct squared distances Delta(S, P).
std::set<Rational> distance_set(const std::vector<Point2>& S, const std::vector<Point2>& P);

// |Q(S,P)| = #{(u,v,p,q) : |u-p| = |v-q|}, computed as sum of v(t)^2.
std::uint64_t quadruple_count(const std::vector<Point2>& S, const std::vector<Point2>& P);

// Quartic enumeration over all |S|^2 |P|^2 quadruples. Independent of the
// histogram path; used as an oracle by tests and `ddlab quadruples --check-oracle`.
std::uint64_t quadruple_count_bruteforce(const std::vector<Point2>& S,
                                         const std::vector<Point2>& P);

// Off-diagonal quadruples (p != q). P must have no repeated points.
std::uint64_t quadruple_count_offdiag(const std::vector<Point2>& S,
                                      const std::vector<Point2>& P);

// Quadruples with p == q. Requires S on the unit circle and (0,0) not in P,
// which guarantee |S||P| <= result <= 2|S||P|.
std::uint64_t diagonal_quadruples(const std::vector<Point2>& S, const std::vector<Point2>& P);

// |S|^2 |P|^2 / |Q(S,P)|, exact. Cauchy-Schwarz guarantees
// |distance_set(S,P)| >= this value.
Rational energy_lower_bound(const std::vector<Point2>& S, const std::vector<Point2>& P);

}  // namespace ddlab
