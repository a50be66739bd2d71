/*
 * omni.hpp
 * --------
 * The direct sum DE + JE with its E-valued symmetric pairing and the
 * (non-skew) Dorfman bracket. The five-property suite checks, on
 * supplied samples, the identities that make this a Leibniz algebra
 * with anchor and pairing compatibilities. At a point base the bracket
 * degenerates to the classical structure on gl(V) + V.
 */
#pragma once

#include "omnilie/report.hpp"
#include "omnilie/sampler.hpp"
#include "omnilie/sections.hpp"

namespace omnilie {

struct OmniSection {
    DerivationDE de;
    JetSection jet;

    OmniSection() = default;
    OmniSection(DerivationDE d, JetSection j) : de(std::move(d)), jet(std::move(j)) {}

    OmniSection operator+(const OmniSection& o) const { return {de + o.de, jet + o.jet}; }
    OmniSection operator-(const OmniSection& o) const { return {de - o.de, jet - o.jet}; }
    OmniSection scaled(const Poly& f) const { return {de.scaled(f), jet.scaled(f)}; }
    bool operator==(const OmniSection& o) const = default;
    bool is_zero() const { return de.is_zero() && jet.is_zero(); }
};

SectionE sym_pairing(const OmniSection& x, const OmniSection& y);
OmniSection dorfman(const OmniSection& x, const OmniSection& y);

/// Skew-symmetrized bracket at a point base (dim_m == 0): the pair
/// ([xi1, xi2], (xi1 v2 - xi2 v1) / 2). Input patches must be point based.
OmniSection weinstein_bracket(const OmniSection& x, const OmniSection& y);

struct OmniSample {
    OmniSection x, y, z;
    Poly f;
};

std::vector<OmniSample> random_omni_samples(const Patch& p, int count, int maxdeg,
                                            std::uint64_t seed);

/// Evaluates the five defining identities on every sample; defects must
/// be identically zero polynomials. Tags: omni-prop-1 .. omni-prop-5.
Report check_omni_axioms(const Patch& p, const std::vector<OmniSample>& samples);

}  // namespace omnilie
