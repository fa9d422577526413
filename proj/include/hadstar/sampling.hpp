#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "hadstar/product.hpp"
#include "hadstar/projective.hpp"

namespace hadstar {

/// Deterministic source of small integer fixtures.  All randomness in the
/// toolkit flows through this type from a single caller-supplied seed, so
/// every sampled computation can be replayed exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi] (raw 64-bit draw reduced by modulus,
    /// which keeps the stream identical across standard libraries).
    long integer(long lo, long hi);
    /// Nonzero integer in [-bound, bound].
    long nonzero(long bound);
    /// Fresh seed for a nested sampler.
    std::uint64_t fork();

private:
    std::mt19937_64 eng_;
};

/// Default retry budget for rejection sampling; exceeding it raises
/// LimitError rather than looping forever on a hostile request.
inline constexpr int kSampleRetryLimit = 256;

/// Point with entries in [-bound, bound], not all zero.
ProjPoint random_point(Rng& rng, long bound = 9);
/// Point with every coordinate nonzero (the dense torus orbit).
ProjPoint random_torus_point(Rng& rng, long bound = 9);

LineP3 random_line(Rng& rng, long bound = 9);
/// Line through a fixed point and a random second point.
LineP3 random_line_through(Rng& rng, const ProjPoint& base, long bound = 9);
/// Conic s^2 A + s t B + t^2 C through the fixed point A with random B, C
/// completing a plane-spanning frame.
ParamCurve random_conic_through(Rng& rng, const ProjPoint& base, long bound = 9);
/// Diagonal automorphism with nonzero weights.
DiagonalAuto random_diagonal(Rng& rng, long bound = 9);

/// A pair of lines suitable for the smooth-product statements, found by
/// rejection sampling.
struct GenericLinePair {
    LineP3 left, right;
    /// Draws discarded before this pair was accepted.
    int rejected = 0;
};

/// Rejects a draw unless: the lines are distinct, neither lies in a
/// coordinate plane, all six Pluecker coordinates of each are nonzero (the
/// lines avoid every coordinate line, which already forces the product
/// quadric's reconstruction system to full rank 9), the product map is a
/// morphism, and the pair is not of the form (L, p * L) (the biquadratic
/// membership forms do not all vanish).  Throws LimitError after
/// `retry_limit` rejections.
GenericLinePair random_generic_line_pair(Rng& rng, long bound = 9,
                                         int retry_limit = kSampleRetryLimit);

}  // namespace hadstar
