#include "omnilie/sections.hpp"

namespace omnilie {

SectionE zero_section(const Patch& p) { return SectionE(p.rank_e, p.dim_m); }
VectorField zero_field(const Patch& p) { return VectorField(p.dim_m, p.dim_m); }

DerivationDE zero_derivation(const Patch& p) {
    return {PolyMatrix(p.rank_e, p.rank_e, p.dim_m), zero_field(p)};
}

JetSection zero_jet(const Patch& p) {
    return {PolyMatrix(p.rank_e, p.dim_m, p.dim_m), zero_section(p)};
}

SectionE frame_section(const Patch& p, int a) {
    if (a < 1 || a > p.rank_e) throw input_error("frame index out of range");
    SectionE u(p.rank_e, p.dim_m);
    u.c[static_cast<std::size_t>(a - 1)] = Poly::constant(p.dim_m, 1);
    return u;
}

Poly apply_field(const VectorField& x, const Poly& f) {
    Poly out(f.nvars());
    for (int i = 0; i < x.size(); ++i)
        out += x.c[static_cast<std::size_t>(i)] * f.partial(i + 1);
    return out;
}

VectorField field_bracket(const VectorField& x, const VectorField& y) {
    if (x.size() != y.size()) throw input_error("vector field component count mismatch");
    VectorField out = x;
    for (int i = 0; i < x.size(); ++i)
        out.c[static_cast<std::size_t>(i)] =
            apply_field(x, y.c[static_cast<std::size_t>(i)]) -
            apply_field(y, x.c[static_cast<std::size_t>(i)]);
    return out;
}

Poly pair_sections(const SectionE& u, const SectionE& phi) {
    if (u.size() != phi.size()) throw input_error("section pairing rank mismatch");
    if (u.size() == 0) throw input_error("section pairing on empty sections");
    Poly out(u.c[0].nvars());
    for (std::size_t a = 0; a < u.c.size(); ++a) out += u.c[a] * phi.c[a];
    return out;
}

SectionE apply_derivation(const DerivationDE& d, const SectionE& u) {
    if (d.endo.cols() != u.size())
        throw input_error("derivation applied to section of wrong rank");
    SectionE out(d.endo.apply(u.c));
    for (std::size_t a = 0; a < out.c.size(); ++a)
        out.c[a] += apply_field(d.base, u.c[a]);
    return out;
}

DerivationDE bracket_de(const DerivationDE& d1, const DerivationDE& d2) {
    if (d1.endo.rows() != d2.endo.rows() || d1.base.size() != d2.base.size())
        throw input_error("derivation bracket shape mismatch");
    PolyMatrix endo = d1.endo * d2.endo - d2.endo * d1.endo;
    // x1(Phi2) - x2(Phi1), entrywise derivative of the gl parts
    for (int r = 0; r < endo.rows(); ++r)
        for (int c = 0; c < endo.cols(); ++c)
            endo.at(r, c) += apply_field(d1.base, d2.endo.at(r, c)) -
                             apply_field(d2.base, d1.endo.at(r, c));
    return {std::move(endo), field_bracket(d1.base, d2.base)};
}

VectorField anchor(const DerivationDE& d) { return d.base; }

JetSection jet_lift(const SectionE& u) {
    if (u.size() == 0) throw input_error("jet lift of empty section");
    int n = u.c[0].nvars();
    PolyMatrix jac(u.size(), n, n);
    for (int a = 0; a < u.size(); ++a)
        for (int j = 0; j < n; ++j)
            jac.at(a, j) = u.c[static_cast<std::size_t>(a)].partial(j + 1);
    return {std::move(jac), u};
}

SectionE pairing_e(const JetSection& mu, const DerivationDE& d) {
    if (mu.hom.rows() != d.endo.rows() || mu.hom.cols() != d.base.size())
        throw input_error("E-pairing shape mismatch");
    SectionE out(d.endo.apply(mu.val.c));
    std::vector<Poly> yx = mu.hom.apply(d.base.c);
    for (std::size_t a = 0; a < out.c.size(); ++a) out.c[a] += yx[a];
    return out;
}

JetSection lie_derivative(const DerivationDE& d, const JetSection& mu) {
    // Closed form of the Leibniz-rule definition; validated in the test
    // suite against pairings with the full frame of DE.
    int k = mu.hom.rows(), n = mu.hom.cols();
    if (d.endo.rows() != k || d.base.size() != n)
        throw input_error("Lie derivative shape mismatch");
    JetSection out = mu;
    out.val = apply_derivation(d, mu.val);
    for (int j = 0; j < n; ++j) {
        PolyMatrix dPhi = d.endo.partial(j + 1);
        for (int a = 0; a < k; ++a) {
            Poly acc(mu.hom.nvars());
            for (int b = 0; b < k; ++b) acc += d.endo.at(a, b) * mu.hom.at(b, j);
            acc += apply_field(d.base, mu.hom.at(a, j));
            for (int b = 0; b < k; ++b)
                acc += dPhi.at(a, b) * mu.val.c[static_cast<std::size_t>(b)];
            for (int i = 0; i < n; ++i)
                acc += d.base.c[static_cast<std::size_t>(i)].partial(j + 1) * mu.hom.at(a, i);
            out.hom.at(a, j) = std::move(acc);
        }
    }
    return out;
}

DerivationDE dual_operator(const DerivationDE& d) { return {-d.endo.transpose(), d.base}; }

PolyMatrix pairing_tstar(const JetSection& mu, const JetSection& sigma) {
    if (mu.hom.rows() != sigma.hom.rows() || mu.hom.cols() != sigma.hom.cols())
        throw input_error("T*M-pairing shape mismatch");
    int n = mu.hom.cols();
    PolyMatrix out(1, n, mu.hom.nvars());
    for (int j = 0; j < n; ++j) {
        Poly acc(mu.hom.nvars());
        for (int a = 0; a < mu.hom.rows(); ++a) {
            acc += mu.hom.at(a, j) * sigma.val.c[static_cast<std::size_t>(a)];
            acc += mu.val.c[static_cast<std::size_t>(a)] * sigma.hom.at(a, j);
        }
        out.at(0, j) = std::move(acc);
    }
    return out;
}

std::vector<DerivationDE> frame_derivations(const Patch& p) {
    std::vector<DerivationDE> out;
    for (int a = 0; a < p.rank_e; ++a)
        for (int b = 0; b < p.rank_e; ++b) {
            DerivationDE d = zero_derivation(p);
            d.endo.at(a, b) = Poly::constant(p.dim_m, 1);
            out.push_back(std::move(d));
        }
    for (int j = 0; j < p.dim_m; ++j) {
        DerivationDE d = zero_derivation(p);
        d.base.c[static_cast<std::size_t>(j)] = Poly::constant(p.dim_m, 1);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<JetSection> frame_jets(const Patch& p) {
    std::vector<JetSection> out;
    for (int a = 0; a < p.rank_e; ++a)
        for (int j = 0; j < p.dim_m; ++j) {
            JetSection mu = zero_jet(p);
            mu.hom.at(a, j) = Poly::constant(p.dim_m, 1);
            out.push_back(std::move(mu));
        }
    for (int a = 1; a <= p.rank_e; ++a)
        out.push_back(JetSection{PolyMatrix(p.rank_e, p.dim_m, p.dim_m), frame_section(p, a)});
    return out;
}

JetSection jet_from_frame_pairings(const Patch& p, const std::vector<SectionE>& values) {
    std::size_t expected = static_cast<std::size_t>(p.rank_e) * p.rank_e + p.dim_m;
    if (values.size() != expected)
        throw input_error("frame pairing value count mismatch");
    JetSection mu = zero_jet(p);
    // pairings with (E_ab, 0) see only the value part: <mu,(E_ab,0)> = E_ab u
    for (int b = 0; b < p.rank_e; ++b)
        mu.val.c[static_cast<std::size_t>(b)] =
            values[static_cast<std::size_t>(b)].c[0];
    // pairings with (0, d/dx_j) pick out the j-th hom column
    for (int j = 0; j < p.dim_m; ++j) {
        const SectionE& col = values[static_cast<std::size_t>(p.rank_e) * p.rank_e +
                                     static_cast<std::size_t>(j)];
        for (int a = 0; a < p.rank_e; ++a)
            mu.hom.at(a, j) = col.c[static_cast<std::size_t>(a)];
    }
    return mu;
}

std::optional<std::pair<std::string, Poly>> first_nonzero(const SectionE& u,
                                                          const std::string& prefix) {
    for (std::size_t a = 0; a < u.c.size(); ++a)
        if (!u.c[a].is_zero())
            return std::make_pair(prefix + "e" + std::to_string(a + 1), u.c[a]);
    return std::nullopt;
}

std::optional<std::pair<std::string, Poly>> first_nonzero(const VectorField& x,
                                                          const std::string& prefix) {
    for (std::size_t i = 0; i < x.c.size(); ++i)
        if (!x.c[i].is_zero())
            return std::make_pair(prefix + "d/dx" + std::to_string(i + 1), x.c[i]);
    return std::nullopt;
}

std::optional<std::pair<std::string, Poly>> first_nonzero(const PolyMatrix& m,
                                                          const std::string& prefix) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                return std::make_pair(prefix + "entry (" + std::to_string(r + 1) + "," +
                                          std::to_string(c + 1) + ")",
                                      m.at(r, c));
    return std::nullopt;
}

std::optional<std::pair<std::string, Poly>> first_nonzero(const DerivationDE& d) {
    if (auto w = first_nonzero(d.endo, "gl ")) return w;
    return first_nonzero(d.base, "vector ");
}

std::optional<std::pair<std::string, Poly>> first_nonzero(const JetSection& mu) {
    if (auto w = first_nonzero(mu.hom, "hom ")) return w;
    return first_nonzero(mu.val, "value ");
}

}  // namespace omnilie
