#include "ddlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ddlab {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // strict grammar: [+-]digits[/digits]
    size_t i = 0, n = text.size();
    if (n == 0) return std::nullopt;
    if (text[i] == '+') {  // mpz_set_str dislikes an explicit plus
        text.remove_prefix(1);
        n = text.size();
        if (n == 0) return std::nullopt;
    } else if (text[i] == '-') {
        ++i;
    }
    size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    size_t den_begin = 0, den_end = 0;
    if (i < n) {
        if (text[i] != '/') return std::nullopt;
        den_begin = ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != n) return std::nullopt;
        den_end = i;
    }
    mpz_class num(std::string(text.substr(0, den_begin ? den_begin - 1 : n)), 10);
    mpz_class den(1);
    if (den_begin) {
        den = mpz_class(std::string(text.substr(den_begin, den_end - den_begin)), 10);
        if (den == 0) return std::nullopt;
    }
    return Rational(num, den);
}

Rational Rational::parse_or_throw(std::string_view text) {
    auto r = parse(text);
    if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return *r;
}

mpz_class Rational::floor_sqrt() const {
    if (sign() < 0) throw std::domain_error("Rational: floor_sqrt of negative value");
    mpz_class q = num() / den();  // floor, operands nonnegative
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    // adjust against the exact rational (at most one step either way)
    while ((root + 1) * (root + 1) * den() <= num()) ++root;
    while (root > 0 && root * root * den() > num()) --root;
    return root;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den().get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ddlab
