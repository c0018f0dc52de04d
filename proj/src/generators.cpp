#include "ddlab/generators.hpp"

#include <set>
#include <stdexcept>

namespace ddlab {

namespace {
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : s_) s = splitmix64(x);
}

std::uint64_t Rng::next() {
    // xoshiro256**
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long bound) {
    return Rational(uniform(-bound, bound), uniform(1, bound));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL);
    return splitmix64(x);
}

std::vector<CircleParam> gen_circle(std::size_t n, std::uint64_t seed, long bound) {
    if (n < 1) throw std::invalid_argument("gen_circle: n >= 1 required");
    Rng rng(seed);
    std::set<Rational> seen;
    std::vector<CircleParam> out;
    std::size_t guard = 0;
    while (out.size() < n) {
        if (++guard > 1000 * n + 100000)
            throw std::runtime_error("gen_circle: bound too small for requested size");
        Rational t = rng.rational(bound);
        if (seen.insert(t).second) out.push_back({t});
    }
    return out;
}

std::vector<Point2> gen_generic_plane(std::size_t n, std::uint64_t seed, long bound) {
    if (n < 1) throw std::invalid_argument("gen_generic_plane: n >= 1 required");
    Rng rng(seed);
    std::set<Rational> norms;
    std::vector<Point2> out;
    std::size_t guard = 0;
    while (out.size() < n) {
        if (++guard > 1000 * n + 100000)
            throw std::runtime_error("gen_generic_plane: bound too small for requested size");
        Point2 p{rng.rational(bound), rng.rational(bound)};
        if (p.is_origin()) continue;
        if (annulus_index(p) % 2 != 0) continue;  // even color class only
        if (!norms.insert(sq_norm(p)).second) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<Point2> gen_lattice(std::size_t n) {
    std::vector<Point2> out;
    out.reserve(n);
    long side = 1;
    while (static_cast<std::size_t>(side) * side < n) ++side;
    for (long j = 1; j <= side && out.size() < n; ++j)
        for (long i = 1; i <= side && out.size() < n; ++i)
            out.push_back({Rational(i), Rational(j)});
    return out;
}

std::vector<Point2> gen_perturbed_lattice(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point2> out = gen_lattice(n);
    for (Point2& p : out) {
        p.x1 += Rational(rng.uniform(-100, 100), 1000);
        p.x2 += Rational(rng.uniform(-100, 100), 1000);
    }
    return out;
}

ConcentricConfig gen_concentric(std::size_t n_s, std::size_t n_p, std::uint64_t seed,
                                long bound) {
    Rng rng(seed);
    ConcentricConfig cfg;
    cfg.r1 = Rational(rng.uniform(1, bound), rng.uniform(1, bound));
    cfg.r2 = Rational(rng.uniform(1, bound), rng.uniform(1, bound));
    cfg.s_params = gen_circle(n_s, mix_seed(seed, 1), bound);
    cfg.p_params = gen_circle(n_p, mix_seed(seed, 2), bound);
    return cfg;
}

}  // namespace ddlab
