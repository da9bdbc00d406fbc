#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "finstoch/dominance.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/monad.hpp"

namespace finstoch {

/**
 * SplitMix64 (Steele, Lea, Flood 2014):
 *
 *     state += 0x9E3779B97F4A7C15
 *     z = state
 *     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *     return z ^ (z >> 31)
 *
 * Bounded draws are `next() % n`.
 */
class SplitMix64
{
    public:
        explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

        std::uint64_t next();
        /** Uniform in [0, n). */
        std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
        /** Uniform in [lo, hi]. */
        std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

        /** The generator for trial `trial` of a suite run with `seed`. */
        static SplitMix64 for_trial(std::uint64_t seed, std::size_t trial);

    private:
        std::uint64_t state_;
};

/** A base space `name` with atoms name0, name1, ... */
FinSpace make_space(const std::string& name, std::size_t size);
FinSpace random_space(SplitMix64& rng, const std::string& name, std::size_t min_size, std::size_t max_size);

/** Integer numerators uniform in [0, 8], redrawn while all zero, then normalized. */
VectorXr random_weights(SplitMix64& rng, std::size_t n);
Dist random_dist(SplitMix64& rng, const FinSpace& x);
/** Each column drawn by random_weights. */
Kernel random_kernel(SplitMix64& rng, const FinSpace& src, const FinSpace& dst);
DetMap random_map(SplitMix64& rng, const FinSpace& src, const FinSpace& dst);
/** Requires |src| >= |dst|. */
DetMap random_surjection(SplitMix64& rng, const FinSpace& src, const FinSpace& dst);

/**
 * A random decomposition of p into at most `max_atoms` distributions: each
 * p(x) is split among the atoms by random_weights.
 */
SuppDist random_decomposition(SplitMix64& rng, const Dist& p, std::size_t max_atoms);

/** Decomposes p separately inside each fiber of f, so every atom lives in one fiber. */
SuppDist random_fiber_decomposition(SplitMix64& rng, const Dist& p, const DetMap& f, std::size_t max_atoms);

/** A random coarse-graining of m into at most `max_atoms` atoms (m is then finer). */
PointMeasure random_coarsening(SplitMix64& rng, const PointMeasure& m, std::size_t max_atoms);
SuppDist random_coarsening(SplitMix64& rng, const SuppDist& m, std::size_t max_atoms);

/** Rows are random decompositions of the columns of s. */
MetaKernel random_lift(SplitMix64& rng, const Kernel& s, std::size_t max_atoms);

/**
 * A kernel q : A -> Y with g.q = s, spreading s(z|a) over the fiber of z
 * by random weights. Every charged z must have a nonempty fiber.
 */
Kernel random_coupled(SplitMix64& rng, const Kernel& s, const DetMap& g);

}   // namespace finstoch
