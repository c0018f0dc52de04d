#include "ddlab/univar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ddlab {

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UnivarPoly UnivarPoly::constant(const Rational& c) {
    return UnivarPoly(std::vector<Rational>{c});
}

UnivarPoly UnivarPoly::of(std::initializer_list<Rational> coeffs) {
    return UnivarPoly(std::vector<Rational>(coeffs));
}

void UnivarPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UnivarPoly::leading() const {
    if (is_zero()) throw std::domain_error("UnivarPoly: leading coefficient of 0");
    return c_.back();
}

const Rational& UnivarPoly::coeff(size_t i) const {
    static const Rational zero;
    return i < c_.size() ? c_[i] : zero;
}

Rational UnivarPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UnivarPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UnivarPoly UnivarPoly::derivative() const {
    if (c_.size() <= 1) return UnivarPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UnivarPoly(std::move(d));
}

UnivarPoly UnivarPoly::operator-() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return UnivarPoly(std::move(d));
}

UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
    return UnivarPoly(std::move(d));
}

UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) - b.coeff(i);
    return UnivarPoly(std::move(d));
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivarPoly();
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UnivarPoly(std::move(d));
}

UnivarPoly UnivarPoly::scaled(const Rational& s) const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * s;
    return UnivarPoly(std::move(d));
}

std::pair<UnivarPoly, UnivarPoly> UnivarPoly::divmod(const UnivarPoly& a, const UnivarPoly& b) {
    if (b.is_zero()) throw std::domain_error("UnivarPoly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UnivarPoly(), a};
    std::vector<Rational> quo(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational q = (static_cast<int>(rem.size()) > k + db ? rem[k + db] : Rational()) / b.leading();
        quo[k] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= q * b.c_[i];
    }
    return {UnivarPoly(std::move(quo)), UnivarPoly(std::move(rem))};
}

std::optional<UnivarPoly> UnivarPoly::divide_exact(const UnivarPoly& a, const UnivarPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UnivarPoly UnivarPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UnivarPoly UnivarPoly::gcd(const UnivarPoly& a, const UnivarPoly& b) {
    UnivarPoly x = a, y = b;
    while (!y.is_zero()) {
        UnivarPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();  // normalization keeps coefficients tame
    }
    return x.monic();
}

UnivarPoly UnivarPoly::squarefree_part() const {
    if (degree() <= 0) return *this;
    UnivarPoly g = gcd(*this, derivative());
    return divide_exact(*this, g).value();
}

std::string UnivarPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (i == 0 || !(a == Rational(1))) os << a.str();
        if (i > 0) {
            if (!(a == Rational(1))) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rational cauchy_root_bound(const UnivarPoly& f) {
    if (f.degree() <= 0) return Rational(1);
    Rational m;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = (f.coeff(i) / f.leading()).abs();
        if (r > m) m = r;
    }
    return Rational(1) + m;
}

SturmChain::SturmChain(const UnivarPoly& f) {
    UnivarPoly p0 = f.is_zero() ? f : f.squarefree_part();
    chain_.push_back(p0);
    if (p0.degree() < 1) return;
    chain_.push_back(p0.derivative());
    while (chain_.back().degree() >= 1) {
        UnivarPoly r = UnivarPoly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        // negate and rescale: positive scaling preserves the sign pattern
        chain_.push_back((-r).scaled(r.leading().abs().inverse()));
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        if (p.is_zero()) { signs.push_back(0); continue; }
        int s = p.leading().sign();
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::count_all_roots() const {
    if (chain_.front().degree() < 1) return 0;
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

int SturmChain::count_roots_in(const Rational& lo, const Rational& hi) const {
    if (chain_.front().degree() < 1) return 0;
    if (!(lo < hi)) return 0;
    return variations_at(lo) - variations_at(hi);
}

std::vector<std::pair<Rational, Rational>> SturmChain::isolate_roots() const {
    std::vector<std::pair<Rational, Rational>> out;
    const UnivarPoly& f = chain_.front();
    if (f.degree() < 1) return out;
    Rational bound = cauchy_root_bound(f);
    // depth-first bisection of (lo, hi] intervals
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        int n = count_roots_in(lo, hi);
        if (n == 0) continue;
        if (n == 1) {
            // snap to an exact rational root when the right endpoint is one
            if (f.eval(hi).is_zero()) out.emplace_back(hi, hi);
            else out.emplace_back(lo, hi);
            continue;
        }
        Rational mid = (lo + hi) / Rational(2);
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<Rational, Rational> SturmChain::refine(Rational lo, Rational hi,
                                                 const Rational& width) const {
    const UnivarPoly& f = chain_.front();
    if (lo == hi) return {lo, hi};
    if (f.eval(hi).is_zero()) return {hi, hi};
    // exactly one simple root in (lo, hi]: sign(f) right of the root matches
    // sign(f(hi)), left of it is the opposite
    int hi_sign = f.eval(hi).sign();
    while (hi - lo > width) {
        Rational mid = (lo + hi) / Rational(2);
        int s = f.eval(mid).sign();
        if (s == 0) return {mid, mid};
        if (s == hi_sign) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

}  // namespace ddlab
