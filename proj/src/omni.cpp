#include "omnilie/omni.hpp"

namespace omnilie {

namespace {

SectionE half(const SectionE& u) {
    SectionE out = u;
    for (Poly& p : out.c) p = p.scaled(Rational(1, 2));
    return out;
}

std::optional<Witness> omni_witness(const OmniSection& defect, const std::string& where) {
    if (auto w = first_nonzero(defect.de)) return Witness{where + ", DE part " + w->first, w->second.to_string()};
    if (auto w = first_nonzero(defect.jet)) return Witness{where + ", jet part " + w->first, w->second.to_string()};
    return std::nullopt;
}

}  // namespace

SectionE sym_pairing(const OmniSection& x, const OmniSection& y) {
    return half(pairing_e(y.jet, x.de) + pairing_e(x.jet, y.de));
}

OmniSection dorfman(const OmniSection& x, const OmniSection& y) {
    OmniSection out;
    out.de = bracket_de(x.de, y.de);
    out.jet = lie_derivative(x.de, y.jet) - lie_derivative(y.de, x.jet) +
              jet_lift(pairing_e(x.jet, y.de));
    return out;
}

OmniSection weinstein_bracket(const OmniSection& x, const OmniSection& y) {
    if (x.de.base.size() != 0)
        throw input_error("the skew bracket is exposed at a point base only");
    OmniSection fwd = dorfman(x, y);
    OmniSection bwd = dorfman(y, x);
    OmniSection out;
    out.de = fwd.de;
    out.jet = (fwd.jet - bwd.jet).scaled(Poly::constant(0, Rational(1, 2)));
    return out;
}

std::vector<OmniSample> random_omni_samples(const Patch& p, int count, int maxdeg,
                                            std::uint64_t seed) {
    Sampler s(seed);
    std::vector<OmniSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        OmniSample smp;
        smp.x = {s.derivation(p, maxdeg), s.jet(p, maxdeg)};
        smp.y = {s.derivation(p, maxdeg), s.jet(p, maxdeg)};
        smp.z = {s.derivation(p, maxdeg), s.jet(p, maxdeg)};
        smp.f = s.poly(p.dim_m, maxdeg);
        out.push_back(std::move(smp));
    }
    return out;
}

Report check_omni_axioms(const Patch& p, const std::vector<OmniSample>& samples) {
    if (samples.empty()) throw input_error("axiom check requires at least one sample");
    Report rep;

    bool pass[5] = {true, true, true, true, true};
    std::optional<Witness> wit[5];

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const OmniSample& s = samples[i];
        std::string where = "sample " + std::to_string(i + 1);

        // 1) Leibniz identity of the bracket
        if (pass[0]) {
            OmniSection defect = dorfman(s.x, dorfman(s.y, s.z)) -
                                 dorfman(dorfman(s.x, s.y), s.z) -
                                 dorfman(s.y, dorfman(s.x, s.z));
            if (!defect.is_zero()) {
                pass[0] = false;
                wit[0] = omni_witness(defect, where);
            }
        }

        // 2) the DE projection is a bracket morphism
        if (pass[1]) {
            DerivationDE defect = dorfman(s.x, s.y).de - bracket_de(s.x.de, s.y.de);
            if (!defect.is_zero()) {
                pass[1] = false;
                if (auto w = first_nonzero(defect))
                    wit[1] = Witness{where + ", " + w->first, w->second.to_string()};
            }
        }

        // 3) module rule in the second slot
        if (pass[2]) {
            Poly g = apply_field(anchor(s.x.de), s.f);
            OmniSection defect = dorfman(s.x, s.y.scaled(s.f)) -
                                 dorfman(s.x, s.y).scaled(s.f) - s.y.scaled(g);
            if (!defect.is_zero()) {
                pass[2] = false;
                wit[2] = omni_witness(defect, where);
            }
        }

        // 4) the squares land on lifted pairings
        if (pass[3]) {
            OmniSection sq = dorfman(s.x, s.x);
            OmniSection expect{zero_derivation(p), jet_lift(sym_pairing(s.x, s.x))};
            OmniSection defect = sq - expect;
            if (!defect.is_zero()) {
                pass[3] = false;
                wit[3] = omni_witness(defect, where);
            }
        }

        // 5) invariance of the pairing
        if (pass[4]) {
            SectionE lhs = apply_derivation(s.x.de, sym_pairing(s.y, s.z));
            SectionE rhs = sym_pairing(dorfman(s.x, s.y), s.z) +
                           sym_pairing(s.y, dorfman(s.x, s.z));
            SectionE defect = lhs - rhs;
            if (!defect.is_zero()) {
                pass[4] = false;
                if (auto w = first_nonzero(defect))
                    wit[4] = Witness{where + ", " + w->first, w->second.to_string()};
            }
        }
    }

    const char* names[5] = {
        "bracket satisfies the Leibniz identity",
        "projection to DE is a bracket morphism",
        "module rule with anchor correction",
        "square of a section lifts its self-pairing",
        "pairing is invariant under the bracket",
    };
    for (int i = 0; i < 5; ++i)
        rep.add(names[i], "omni-prop-" + std::to_string(i + 1), pass[i], wit[i]);
    return rep;
}

}  // namespace omnilie
