#pragma once

#include "omnilie/sections.hpp"

#include <cstdint>
#include <random>

namespace omnilie {

/// Deterministic generator of random polynomial data. Reports must be
/// byte-identical for a fixed seed, so integer draws avoid the
/// implementation-defined standard distributions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t next_int(std::int64_t lo, std::int64_t hi);
    Rational rational(int lo = -2, int hi = 2);

    /// Dense polynomial with integer coefficients in [lo, hi] on all
    /// monomials of total degree <= maxdeg.
    Poly poly(int nvars, int maxdeg, int lo = -2, int hi = 2);

    std::vector<Rational> point(int nvars, int lo = -3, int hi = 3);

    SectionE section(const Patch& p, int maxdeg);
    VectorField field(const Patch& p, int maxdeg);
    PolyMatrix matrix(int rows, int cols, int nvars, int maxdeg);
    DerivationDE derivation(const Patch& p, int maxdeg);
    JetSection jet(const Patch& p, int maxdeg);

private:
    std::mt19937_64 rng_;
};

}  // namespace omnilie
