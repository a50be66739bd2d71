#include "omnilie/sampler.hpp"

namespace omnilie {

std::int64_t Sampler::next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng_() % span);
}

Rational Sampler::rational(int lo, int hi) { return Rational(next_int(lo, hi)); }

Poly Sampler::poly(int nvars, int maxdeg, int lo, int hi) {
    std::vector<Poly::Term> terms;
    for (Mono& m : all_monomials(nvars, maxdeg)) {
        std::int64_t c = next_int(lo, hi);
        if (c != 0) terms.push_back({std::move(m), Rational(c)});
    }
    return Poly::from_terms(nvars, std::move(terms));
}

std::vector<Rational> Sampler::point(int nvars, int lo, int hi) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
        std::int64_t num = next_int(lo, hi);
        std::int64_t den = next_int(1, 3);
        out.emplace_back(num, den);
    }
    return out;
}

SectionE Sampler::section(const Patch& p, int maxdeg) {
    SectionE out(p.rank_e, p.dim_m);
    for (Poly& c : out.c) c = poly(p.dim_m, maxdeg);
    return out;
}

VectorField Sampler::field(const Patch& p, int maxdeg) {
    VectorField out(p.dim_m, p.dim_m);
    for (Poly& c : out.c) c = poly(p.dim_m, maxdeg);
    return out;
}

PolyMatrix Sampler::matrix(int rows, int cols, int nvars, int maxdeg) {
    PolyMatrix out(rows, cols, nvars);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = poly(nvars, maxdeg);
    return out;
}

DerivationDE Sampler::derivation(const Patch& p, int maxdeg) {
    return {matrix(p.rank_e, p.rank_e, p.dim_m, maxdeg), field(p, maxdeg)};
}

JetSection Sampler::jet(const Patch& p, int maxdeg) {
    return {matrix(p.rank_e, p.dim_m, p.dim_m, maxdeg), section(p, maxdeg)};
}

}  // namespace omnilie
