#pragma once

#include <cstdint>
#include <vector>

#include "ddlab/concentric.hpp"
#include "ddlab/point.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

// Deterministic seeded generator. Bounded draws are hand-rolled on top of
// mt19937_64 so the stream is reproducible across platforms and standard
// library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // uniformish integer in [lo, hi], inclusive
    long uniform(long lo, long hi);
    // a/b with a in [-bound, bound], b in [1, bound]
    Rational rational(long bound = 64);

private:
    std::uint64_t s_[4];
};

// Derives an independent stream for a sub-experiment.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// n distinct rational circle parameters, reproducible from the seed. Their
// images under phi are distinct unit-circle points, never (-1, 0).
std::vector<CircleParam> gen_circle(std::size_t n, std::uint64_t seed, long bound = 64);

// n rational points with pairwise distinct squared norms, origin excluded,
// all in even-parity annuli (so no pair is at norm difference exactly 2 and
// annulus_filter keeps the whole set).
std::vector<Point2> gen_generic_plane(std::size_t n, std::uint64_t seed, long bound = 64);

// Integer grid points (1,1), (2,1), ... in row-major order.
std::vector<Point2> gen_lattice(std::size_t n);

// Lattice with a small rational jitter; stays clear of the origin.
std::vector<Point2> gen_perturbed_lattice(std::size_t n, std::uint64_t seed);

// Random concentric configuration: rational radii in (0, bound], distinct
// parameters for both circles.
ConcentricConfig gen_concentric(std::size_t n_s, std::size_t n_p, std::uint64_t seed,
                                long bound = 64);

}  // namespace ddlab
