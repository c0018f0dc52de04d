#include "ddlab/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ddlab {

void BivarPoly::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
        terms_.emplace(Key{i, j}, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPoly BivarPoly::constant(const Rational& c) {
    BivarPoly p;
    p.add_term(0, 0, c);
    return p;
}

BivarPoly BivarPoly::from_x(const UnivarPoly& p) {
    BivarPoly out;
    for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
    return out;
}

BivarPoly BivarPoly::from_y(const UnivarPoly& p) {
    BivarPoly out;
    for (int j = 0; j <= p.degree(); ++j) out.add_term(0, j, p.coeff(j));
    return out;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int BivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivarPoly::degree_y() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Rational BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational() : it->second;
}

void BivarPoly::set_coeff(int i, int j, const Rational& c) {
    terms_.erase({i, j});
    if (!c.is_zero()) terms_.emplace(Key{i, j}, c);
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
    int dx = degree_x(), dy = degree_y();
    if (dx < 0) return Rational();
    std::vector<Rational> xp(dx + 1), yp(dy + 1);
    xp[0] = Rational(1);
    for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x;
    yp[0] = Rational(1);
    for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y;
    Rational acc;
    for (const auto& [k, c] : terms_) acc += c * xp[k.first] * yp[k.second];
    return acc;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
    return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
    return out;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivarPoly BivarPoly::scaled(const Rational& s) const {
    BivarPoly out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * s);
    return out;
}

std::vector<UnivarPoly> BivarPoly::y_coefficients() const {
    int dy = degree_y();
    std::vector<UnivarPoly> out;
    if (dy < 0) return out;
    std::vector<std::vector<Rational>> raw(dy + 1);
    for (const auto& [k, c] : terms_) {
        auto& row = raw[k.second];
        if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1);
        row[k.first] = c;
    }
    out.reserve(dy + 1);
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

BivarPoly BivarPoly::from_y_coefficients(const std::vector<UnivarPoly>& coeffs) {
    BivarPoly out;
    for (size_t j = 0; j < coeffs.size(); ++j)
        for (int i = 0; i <= coeffs[j].degree(); ++i)
            out.add_term(i, static_cast<int>(j), coeffs[j].coeff(i));
    return out;
}

BivarPoly BivarPoly::sheared_x(const Rational& shear) const {
    // x -> x + shear*y via binomial expansion of (x + shear*y)^i
    BivarPoly out;
    for (const auto& [k, c] : terms_) {
        int i = k.first, j = k.second;
        Rational binom(1);
        Rational pw(1);
        for (int m = 0; m <= i; ++m) {
            // term: C(i, m) * shear^m * x^(i-m) y^(j+m)
            out.add_term(i - m, j + m, c * binom * pw);
            binom = binom * Rational(static_cast<long>(i - m)) / Rational(static_cast<long>(m + 1));
            pw = pw * shear;
        }
    }
    return out;
}

BivarPoly BivarPoly::swapped() const {
    BivarPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.second, k.first}, c);
    return out;
}

std::optional<BivarPoly> BivarPoly::divide_exact_x(const UnivarPoly& g) const {
    if (g.is_zero()) throw std::domain_error("BivarPoly: division by zero");
    std::vector<UnivarPoly> quo;
    for (const UnivarPoly& slice : y_coefficients()) {
        auto q = UnivarPoly::divide_exact(slice, g);
        if (!q) return std::nullopt;
        quo.push_back(std::move(*q));
    }
    return from_y_coefficients(quo);
}

std::optional<BivarPoly> BivarPoly::divide_exact_y(const UnivarPoly& g) const {
    auto q = swapped().divide_exact_x(g);
    if (!q) return std::nullopt;
    return q->swapped();
}

std::string BivarPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first
    std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [k, c] : ts) {
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        bool unit = a == Rational(1) && (k.first || k.second);
        if (!unit) os << a.str();
        if (k.first) {
            if (!unit) os << "*";
            os << "x";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second) {
            if (k.first || !unit) os << "*";
            os << "y";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

namespace {

using YPoly = std::vector<UnivarPoly>;  // poly in y over Q[x], ascending

int ydeg(const YPoly& p) {
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
        if (!p[j].is_zero()) return j;
    return -1;
}

bool yzero(const YPoly& p) { return ydeg(p) < 0; }

UnivarPoly content(const YPoly& p) {
    UnivarPoly g;
    for (const auto& c : p) g = UnivarPoly::gcd(g, c);
    return g;
}

YPoly divide_content(const YPoly& p, const UnivarPoly& g) {
    YPoly out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.push_back(c.is_zero() ? c : UnivarPoly::divide_exact(c, g).value());
    return out;
}

YPoly primitive_part(const YPoly& p) {
    if (yzero(p)) return p;
    return divide_content(p, content(p));
}

// prem(a, b): lc(b)^(da-db+1) * a mod b, all arithmetic in Q[x][y]
YPoly pseudo_rem(YPoly a, const YPoly& b) {
    int db = ydeg(b);
    const UnivarPoly& lb = b[db];
    int da = ydeg(a);
    while (da >= db && da >= 0) {
        UnivarPoly la = a[da];
        YPoly next(std::max(a.size(), static_cast<size_t>(da)), UnivarPoly());
        // lb*a - la*y^(da-db)*b
        for (int j = 0; j < static_cast<int>(a.size()); ++j)
            if (!a[j].is_zero()) next[j] = lb * a[j];
        for (int j = 0; j <= db; ++j)
            if (!b[j].is_zero()) next[j + da - db] = next[j + da - db] - la * b[j];
        a = std::move(next);
        int nd = ydeg(a);
        if (nd >= da) throw std::logic_error("pseudo_rem: degree did not drop");
        da = nd;
    }
    return a;
}

// gcd of primitive polynomials in Q[x][y], primitive pseudo-remainder sequence
YPoly primitive_gcd(YPoly a, YPoly b) {
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    while (!yzero(b)) {
        YPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = yzero(r) ? r : primitive_part(r);
    }
    return a;
}

}  // namespace

BivarPoly bivar_gcd(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int da = a.degree_y(), db = b.degree_y();
    if (da == 0 && db == 0) {
        // both live in Q[x]
        UnivarPoly ua = a.y_coefficients()[0], ub = b.y_coefficients()[0];
        return BivarPoly::from_x(UnivarPoly::gcd(ua, ub));
    }
    YPoly ya = a.y_coefficients(), yb = b.y_coefficients();
    if (da == 0) return BivarPoly::from_x(UnivarPoly::gcd(ya[0], content(yb)));
    if (db == 0) return BivarPoly::from_x(UnivarPoly::gcd(yb[0], content(ya)));
    UnivarPoly ca = content(ya), cb = content(yb);
    UnivarPoly c = UnivarPoly::gcd(ca, cb);
    YPoly g = primitive_gcd(divide_content(ya, ca), divide_content(yb, cb));
    return BivarPoly::from_x(c) * BivarPoly::from_y_coefficients(g);
}

}  // namespace ddlab
