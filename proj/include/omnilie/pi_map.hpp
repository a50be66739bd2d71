/*
 * pi_map.hpp
 * ----------
 * Skew bundle maps pi: JE -> DE in three encodings.
 *
 *   TrivialForm (rank >= 2): a pair (theta, Omega) acting by
 *       pi(y, u) = (Omega(u) - y . theta, theta u).
 *   LineForm (rank 1): a pair (Lambda, Y) acting by
 *       pi(xi, u) = (-<xi, Y>, u Y + Lambda# xi),
 *     with (Lambda# xi)_j = sum_i xi_i Lambda_ij.
 *   FrameForm: the raw matrix from the JE frame to the DE frame; the
 *     frame orders match frame_jets / frame_derivations, so the domain
 *     index is a*n + j for hom units then k*n + a for value units, and
 *     the codomain index is p*k + q for gl units then k*k + i.
 *
 * Skewness of a frame matrix forces the canonical shape, so a skew
 * FrameForm decodes losslessly into one of the other two.
 */
#pragma once

#include "omnilie/report.hpp"
#include "omnilie/sections.hpp"

#include <tuple>
#include <variant>

namespace omnilie {

struct TrivialForm {
    PolyMatrix theta;  // n x k, E -> TM
    AltTensor3 omega;  // omega[c][a][b], antisymmetric in (a, b)
};

struct LineForm {
    PolyMatrix lambda;  // n x n, antisymmetric
    VectorField y;
};

struct FrameForm {
    PolyMatrix matrix;  // (k*k + n) x (k*n + k)
};

class PiMap {
public:
    PiMap(Patch patch, TrivialForm form);
    PiMap(Patch patch, LineForm form);
    PiMap(Patch patch, FrameForm form);

    static PiMap zero(const Patch& p);

    const Patch& patch() const { return patch_; }
    bool is_trivial_form() const { return std::holds_alternative<TrivialForm>(enc_); }
    bool is_line_form() const { return std::holds_alternative<LineForm>(enc_); }
    bool is_frame_form() const { return std::holds_alternative<FrameForm>(enc_); }
    const TrivialForm& trivial_form() const { return std::get<TrivialForm>(enc_); }
    const LineForm& line_form() const { return std::get<LineForm>(enc_); }
    const FrameForm& frame_form() const { return std::get<FrameForm>(enc_); }

private:
    Patch patch_;
    std::variant<TrivialForm, LineForm, FrameForm> enc_;
};

DerivationDE pi_apply(const PiMap& pi, const JetSection& mu);

/// Materialize any encoding as a frame matrix.
PiMap pi_to_frame(const PiMap& pi);

/// Rewrite a skew frame matrix in canonical shape: TrivialForm for
/// rank >= 2, LineForm for rank 1. Requires check_skew to have passed.
PiMap frame_decode(const PiMap& pi);

struct SkewResult {
    bool skew = false;
    std::optional<Witness> witness;
};

/// Skewness of the graph pairing, decided on all frame pairs (enough by
/// bilinearity over the function ring).
SkewResult check_skew(const PiMap& pi);

/// The induced bracket on jets:
///   L_{pi(mu)} nu - L_{pi(nu)} mu - jet_lift(<pi(mu), nu>_E).
JetSection pi_bracket(const PiMap& pi, const JetSection& mu, const JetSection& nu);

}  // namespace omnilie
