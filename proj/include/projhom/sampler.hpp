#pragma once

#include <cstdint>

#include "projhom/projcat.hpp"

namespace projhom {

/* SplitMix64, fixed here as *the* generator of the project: reports must be
 * reproducible bit-for-bit across platforms, so no standard-library engine
 * is used anywhere. */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // inclusive; bias-free enough for sampling, and documented as-is
    long in_range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// trial i draws from SplitMix64 seeded with first(seed) + i, so trials are
// independent of each other and of evaluation order
SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// multiplicities uniform in [0, max_mult], in vertex order
ProjObject sample_object(const AlgebraPtr& alg, SplitMix64& rng, long max_mult = 2);

// integer coordinates in [-bound, bound] against hom_basis(x, y)
ProjMorphism sample_morphism(const ProjObject& x, const ProjObject& y, SplitMix64& rng,
                             long bound = 3);

// samples source, target, then the morphism
ProjMorphism sample_morphism(const AlgebraPtr& alg, SplitMix64& rng);

/* Idempotent e = s p built from a split pair: X = C + D with the canonical
 * inclusion/projection, conjugated by a sampled automorphism of X. Satisfies
 * p s = 1 by construction. */
ProjMorphism sample_split_idempotent(const AlgebraPtr& alg, SplitMix64& rng);

} // namespace projhom
