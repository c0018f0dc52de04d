#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddlab/rational.hpp"
#include "ddlab/univar.hpp"

namespace ddlab {

// Bivariate polynomial over Q, sparse map from exponent pair (i, j) for
// x^i y^j to a nonzero coefficient.
class BivarPoly {
public:
    using Key = std::pair<int, int>;

    BivarPoly() = default;
    static BivarPoly constant(const Rational& c);
    static BivarPoly from_x(const UnivarPoly& p);
    static BivarPoly from_y(const UnivarPoly& p);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return total_degree() <= 0; }
    int total_degree() const;  // -1 for the zero polynomial
    int degree_x() const;
    int degree_y() const;

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& c);

    Rational eval(const Rational& x, const Rational& y) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly scaled(const Rational& s) const;
    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    // Coefficients as a polynomial in y over Q[x], ascending in y.
    std::vector<UnivarPoly> y_coefficients() const;
    static BivarPoly from_y_coefficients(const std::vector<UnivarPoly>& coeffs);

    // Substitutes x -> x + shear * y (unimodular, preserves zero counts).
    BivarPoly sheared_x(const Rational& shear) const;
    // Swaps the roles of x and y.
    BivarPoly swapped() const;

    // Quotient when g (a polynomial in x alone / y alone) divides exactly.
    std::optional<BivarPoly> divide_exact_x(const UnivarPoly& g) const;
    std::optional<BivarPoly> divide_exact_y(const UnivarPoly& g) const;

    std::string str() const;

private:
    std::map<Key, Rational> terms_;
    void add_term(int i, int j, const Rational& c);
};

// gcd over Q[x, y], defined up to a nonzero rational factor; computed by
// content/primitive-part reduction in Q[x][y] with a primitive
// pseudo-remainder sequence.
BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b);

}  // namespace ddlab
