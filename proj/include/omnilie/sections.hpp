/*
 * sections.hpp
 * ------------
 * Sections of a trivialized bundle E, its gauge algebroid DE and first
 * jet bundle JE, together with the E-valued pairing, jet lift, Lie
 * derivative and the dual-operator isomorphism.
 *
 * Conventions (fixed throughout the kernel):
 *   - a derivation is a pair (Phi, x): it acts on a section u by
 *     Phi u + x(u), so gl(E) sits inside DE as (Phi, 0);
 *   - a jet is a pair (y, u) with y a k-by-n Hom(TM,E) block and u the
 *     value part; the lift of a section u is (Jacobian(u), u);
 *   - <(y,u), (Phi,x)>_E = Phi u + y x.
 */
#pragma once

#include "omnilie/matrix.hpp"
#include "omnilie/poly.hpp"

#include <optional>

namespace omnilie {

template <class Tag>
struct Coords {
    std::vector<Poly> c;

    Coords() = default;
    explicit Coords(std::vector<Poly> comps) : c(std::move(comps)) {}
    Coords(int count, int nvars) : c(static_cast<std::size_t>(count), Poly(nvars)) {}

    int size() const { return static_cast<int>(c.size()); }

    Coords operator+(const Coords& o) const {
        check(o);
        Coords out = *this;
        for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
        return out;
    }
    Coords operator-(const Coords& o) const {
        check(o);
        Coords out = *this;
        for (std::size_t i = 0; i < c.size(); ++i) out.c[i] -= o.c[i];
        return out;
    }
    Coords operator-() const {
        Coords out = *this;
        for (Poly& p : out.c) p = -p;
        return out;
    }
    Coords scaled(const Poly& f) const {
        Coords out = *this;
        for (Poly& p : out.c) p = p * f;
        return out;
    }
    bool operator==(const Coords& o) const { return c == o.c; }
    bool is_zero() const {
        for (const Poly& p : c)
            if (!p.is_zero()) return false;
        return true;
    }

private:
    void check(const Coords& o) const {
        if (c.size() != o.c.size()) throw input_error("section component count mismatch");
    }
};

/// Section of E (k components); the same carrier is reused for sections
/// of the dual bundle, which only differ in role.
using SectionE = Coords<struct SectionTag>;

/// Vector field on the base (n components).
using VectorField = Coords<struct VectorFieldTag>;

/// Section of the gauge algebroid DE on a trivialized patch.
struct DerivationDE {
    PolyMatrix endo;   // k x k
    VectorField base;  // n components

    DerivationDE() = default;
    DerivationDE(PolyMatrix e, VectorField b) : endo(std::move(e)), base(std::move(b)) {}

    DerivationDE operator+(const DerivationDE& o) const {
        return {endo + o.endo, base + o.base};
    }
    DerivationDE operator-(const DerivationDE& o) const {
        return {endo - o.endo, base - o.base};
    }
    DerivationDE operator-() const { return {-endo, -base}; }
    DerivationDE scaled(const Poly& f) const { return {endo.scaled(f), base.scaled(f)}; }
    bool operator==(const DerivationDE& o) const = default;
    bool is_zero() const { return endo.is_zero() && base.is_zero(); }
};

/// Section of the jet bundle JE on a trivialized patch.
struct JetSection {
    PolyMatrix hom;  // k x n
    SectionE val;    // k components

    JetSection() = default;
    JetSection(PolyMatrix h, SectionE v) : hom(std::move(h)), val(std::move(v)) {}

    JetSection operator+(const JetSection& o) const { return {hom + o.hom, val + o.val}; }
    JetSection operator-(const JetSection& o) const { return {hom - o.hom, val - o.val}; }
    JetSection operator-() const { return {-hom, -val}; }
    JetSection scaled(const Poly& f) const { return {hom.scaled(f), val.scaled(f)}; }
    bool operator==(const JetSection& o) const = default;
    bool is_zero() const { return hom.is_zero() && val.is_zero(); }
};

SectionE zero_section(const Patch& p);
VectorField zero_field(const Patch& p);
DerivationDE zero_derivation(const Patch& p);
JetSection zero_jet(const Patch& p);

/// Coordinate frame section e_a (1-based).
SectionE frame_section(const Patch& p, int a);

Poly apply_field(const VectorField& x, const Poly& f);
VectorField field_bracket(const VectorField& x, const VectorField& y);
Poly pair_sections(const SectionE& u, const SectionE& phi);

SectionE apply_derivation(const DerivationDE& d, const SectionE& u);
DerivationDE bracket_de(const DerivationDE& d1, const DerivationDE& d2);
VectorField anchor(const DerivationDE& d);

JetSection jet_lift(const SectionE& u);
SectionE pairing_e(const JetSection& mu, const DerivationDE& d);
JetSection lie_derivative(const DerivationDE& d, const JetSection& mu);

/// Transport of a derivation to the dual bundle: (Phi, x) -> (-Phi^T, x).
DerivationDE dual_operator(const DerivationDE& d);

/// T*M-valued pairing of a jet of E with a jet of E*; 1 x n covector.
PolyMatrix pairing_tstar(const JetSection& mu, const JetSection& sigma);

/// Standard frame of DE: all (E_ab, 0) then all (0, d/dx_j).
std::vector<DerivationDE> frame_derivations(const Patch& p);
/// Standard frame of JE: all (E^{a j}, 0) then all (0, e_a).
std::vector<JetSection> frame_jets(const Patch& p);

/// Rebuild a jet from its pairings against the standard frame of DE;
/// the constructive face of nondegeneracy.
JetSection jet_from_frame_pairings(const Patch& p,
                                   const std::vector<SectionE>& values);

std::optional<std::pair<std::string, Poly>> first_nonzero(const SectionE& u,
                                                          const std::string& prefix = "");
std::optional<std::pair<std::string, Poly>> first_nonzero(const VectorField& x,
                                                          const std::string& prefix = "");
std::optional<std::pair<std::string, Poly>> first_nonzero(const PolyMatrix& m,
                                                          const std::string& prefix = "");
std::optional<std::pair<std::string, Poly>> first_nonzero(const DerivationDE& d);
std::optional<std::pair<std::string, Poly>> first_nonzero(const JetSection& mu);

}  // namespace omnilie
