#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddlab/rational.hpp"

namespace ddlab {

// Univariate polynomial over Q, coefficients in ascending degree order.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<Rational> coeffs);
    static UnivarPoly constant(const Rational& c);
    // c0 + c1 x + c2 x^2 + ...
    static UnivarPoly of(std::initializer_list<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    const Rational& coeff(size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    UnivarPoly derivative() const;

    UnivarPoly operator-() const;
    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    UnivarPoly scaled(const Rational& s) const;
    friend bool operator==(const UnivarPoly&, const UnivarPoly&) = default;

    // Exact division with remainder; the divisor must be nonzero.
    static std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b);
    // Quotient when b divides a exactly, nullopt otherwise.
    static std::optional<UnivarPoly> divide_exact(const UnivarPoly& a, const UnivarPoly& b);

    // Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    static UnivarPoly gcd(const UnivarPoly& a, const UnivarPoly& b);
    UnivarPoly squarefree_part() const;
    UnivarPoly monic() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Exact real-root counting and isolation via Sturm sequences.
class SturmChain {
public:
    // Builds the chain of the squarefree part, so root counts are counts of
    // distinct real roots of the original polynomial.
    explicit SturmChain(const UnivarPoly& f);

    int count_all_roots() const;
    // Number of distinct real roots in the half-open interval (lo, hi].
    int count_roots_in(const Rational& lo, const Rational& hi) const;

    // Disjoint intervals, each containing exactly one distinct real root.
    // Point intervals (lo == hi) are exact rational roots.
    std::vector<std::pair<Rational, Rational>> isolate_roots() const;

    // Shrinks an isolating interval below the given width (or to an exact
    // point). The interval must contain exactly one root, located in (lo, hi].
    std::pair<Rational, Rational> refine(Rational lo, Rational hi, const Rational& width) const;

    const UnivarPoly& squarefree() const { return chain_.front(); }

private:
    std::vector<UnivarPoly> chain_;  // squarefree part, derivative, remainders
    int variations_at(const Rational& x) const;
    int variations_at_infinity(int dir) const;
};

// Strict upper bound on the absolute value of all real roots.
Rational cauchy_root_bound(const UnivarPoly& f);

}  // namespace ddlab
