#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

// Exact rotation-group element stored as (cos, sin) with c^2 + s^2 = 1.
// Composition is angle addition; this is the abelian group the difference-set
// arguments run in.
class AngleRep {
public:
    AngleRep() : c_(1), s_(0) {}
    AngleRep(Rational c, Rational s);

    const Rational& c() const { return c_; }
    const Rational& s() const { return s_; }

    AngleRep compose(const AngleRep& o) const;
    AngleRep inverse() const { return AngleRep(c_, -s_, unchecked{}); }
    bool is_identity() const { return c_ == Rational(1); }

    friend bool operator==(const AngleRep&, const AngleRep&) = default;
    friend std::strong_ordering operator<=>(const AngleRep& a, const AngleRep& b) {
        if (auto r = a.c_ <=> b.c_; r != 0) return r;
        return a.s_ <=> b.s_;
    }

private:
    struct unchecked {};
    AngleRep(Rational c, Rational s, unchecked) : c_(std::move(c)), s_(std::move(s)) {}
    Rational c_, s_;
};

// Oriented angle taking direction p to direction q:
// c = <p,q>/(|p||q|), s = (p1 q2 - p2 q1)/(|p||q|). Requires both points
// nonzero and |p||q| rational (always true on rational-radius circles).
AngleRep angle_between(const Point2& p, const Point2& q);

// Two point sets on concentric circles about the origin, given by radii and
// circle parameters: S = r1 * phi(t), P = r2 * phi(t).
struct ConcentricConfig {
    Rational r1, r2;
    std::vector<CircleParam> s_params, p_params;

    std::vector<Point2> s_points() const;
    std::vector<Point2> p_points() const;
    void validate() const;  // positive radii, distinct parameters
};

// One closed side of a line through the origin, holding at least half of S
// and a quarter of P.
struct SeparatedConfig {
    Rational r1, r2;
    std::vector<Point2> S, P;  // the kept subsets, input order preserved
    Point2 ref;                // direction of the separating line
    int side = 1;              // +1 keeps cross(ref, x) >= 0, -1 keeps <= 0

    // Angle from the separating line to Ox, with sin >= 0 on the kept side.
    AngleRep angle_of(const Point2& x) const;
};

// The separating-line construction: restrict P to its majority semicircle,
// split that evenly by one of its points, take the line through that point
// and the origin, keep the closed side holding more of S.
SeparatedConfig separating_line(const ConcentricConfig& cfg);

// Angle sets A (from S) and B (from P) measured from the separating line.
std::pair<std::set<AngleRep>, std::set<AngleRep>> angle_sets(const SeparatedConfig& sep);

// {x - y : x in X, y in Y} in the rotation group, deduplicated.
std::set<AngleRep> difference_set(const std::set<AngleRep>& X, const std::set<AngleRep>& Y);

struct MultiplicityReport {
    std::uint64_t m = 0;          // max over all angles, diagonal pairs included
    std::uint64_t m_offdiag = 0;  // max over p != q pairs
    double alpha_hat = 0;         // log(m) / (2 log |P|), diagnostic only
};

// Largest number of ordered pairs (p, q) in P^2 subtending the same angle
// at the origin. Requires |P| >= 2.
MultiplicityReport max_angle_multiplicity(const std::vector<Point2>& P);

// Ruzsa triangle inequality |A||B-C| <= |A-B||A-C|, checked with exact
// cardinalities. Returns false only on an implementation bug.
bool ruzsa_check(const std::set<AngleRep>& A, const std::set<AngleRep>& B,
                 const std::set<AngleRep>& C);

struct ConcentricReport {
    std::uint64_t delta = 0;      // |Delta(S', P')| over squared distances
    std::uint64_t a_minus_b = 0;  // |A - B|
    std::uint64_t b_minus_b = 0;  // |B - B|
    std::uint64_t m = 0;          // multiplicity over the kept P'
    std::uint64_t m_offdiag = 0;
    std::size_t s_kept = 0, p_kept = 0;
    double alpha_hat = 0;
    double chain_bound = 0;  // (1/2) sqrt(|A| |B|^2 / m)
    bool chain_ok = false;   // 2|Delta| >= |A-B|, |A-B|^2 >= |A||B-B|, |B-B| m >= |B|^2
};

// Runs the whole chain on a separated configuration; every inequality is
// checked with exact integer arithmetic.
ConcentricReport concentric_report(const SeparatedConfig& sep);
inline ConcentricReport concentric_report(const ConcentricConfig& cfg) {
    return concentric_report(separating_line(cfg));
}

using ApproxPoint = std::array<double, 2>;

// n evenly spaced points on the unit circle and their scaling by `scale`.
// Approximate mode: the coordinates are irrational for most n.
std::pair<std::vector<ApproxPoint>, std::vector<ApproxPoint>> even_spaced_counterexample(
    int n, double scale);

// Number of distinct squared distances under relative-tolerance deduplication.
std::size_t approx_distinct_sq_distances(const std::vector<ApproxPoint>& S,
                                         const std::vector<ApproxPoint>& P,
                                         double rel_tol = 1e-9);

}  // namespace ddlab
