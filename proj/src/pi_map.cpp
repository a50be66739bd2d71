#include "omnilie/pi_map.hpp"

namespace omnilie {

PiMap::PiMap(Patch patch, TrivialForm form) : patch_(std::move(patch)), enc_(std::move(form)) {
    const TrivialForm& tf = std::get<TrivialForm>(enc_);
    if (patch_.rank_e < 2)
        throw input_error("the (theta, Omega) encoding requires rank at least 2");
    if (tf.theta.rows() != patch_.dim_m || tf.theta.cols() != patch_.rank_e)
        throw input_error("theta must be dim x rank");
    if (tf.omega.fiber_dim() != patch_.rank_e)
        throw input_error("Omega fiber dimension must equal the rank");
    if (!tf.omega.is_antisymmetric())
        throw input_error("Omega must be antisymmetric in its lower indices");
}

PiMap::PiMap(Patch patch, LineForm form) : patch_(std::move(patch)), enc_(std::move(form)) {
    const LineForm& lf = std::get<LineForm>(enc_);
    if (patch_.rank_e != 1)
        throw input_error("the (Lambda, Y) encoding requires rank 1");
    if (lf.lambda.rows() != patch_.dim_m || lf.lambda.cols() != patch_.dim_m)
        throw input_error("Lambda must be dim x dim");
    if (!lf.lambda.is_antisymmetric()) throw input_error("Lambda must be antisymmetric");
    if (lf.y.size() != patch_.dim_m)
        throw input_error("Y must have one component per base coordinate");
}

PiMap::PiMap(Patch patch, FrameForm form) : patch_(std::move(patch)), enc_(std::move(form)) {
    const FrameForm& ff = std::get<FrameForm>(enc_);
    int k = patch_.rank_e, n = patch_.dim_m;
    if (ff.matrix.rows() != k * k + n || ff.matrix.cols() != k * n + k)
        throw input_error("frame matrix must be (rank^2 + dim) x (rank*dim + rank)");
}

PiMap PiMap::zero(const Patch& p) {
    if (p.rank_e == 1)
        return PiMap(p, LineForm{PolyMatrix(p.dim_m, p.dim_m, p.dim_m), zero_field(p)});
    return PiMap(p, TrivialForm{PolyMatrix(p.dim_m, p.rank_e, p.dim_m),
                                AltTensor3(p.rank_e, p.dim_m)});
}

DerivationDE pi_apply(const PiMap& pi, const JetSection& mu) {
    const Patch& p = pi.patch();
    if (mu.hom.rows() != p.rank_e || mu.hom.cols() != p.dim_m)
        throw input_error("jet shape does not match the map's patch");

    if (pi.is_trivial_form()) {
        const TrivialForm& tf = pi.trivial_form();
        DerivationDE out;
        out.endo = tf.omega.apply_matrix(mu.val.c) - mu.hom * tf.theta;
        out.base = VectorField(tf.theta.apply(mu.val.c));
        return out;
    }
    if (pi.is_line_form()) {
        const LineForm& lf = pi.line_form();
        int n = p.dim_m;
        DerivationDE out = zero_derivation(p);
        Poly coupling(n);
        for (int j = 0; j < n; ++j)
            coupling += mu.hom.at(0, j) * lf.y.c[static_cast<std::size_t>(j)];
        out.endo.at(0, 0) = -coupling;
        for (int j = 0; j < n; ++j) {
            Poly comp = mu.val.c[0] * lf.y.c[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i) comp += mu.hom.at(0, i) * lf.lambda.at(i, j);
            out.base.c[static_cast<std::size_t>(j)] = std::move(comp);
        }
        return out;
    }

    const FrameForm& ff = pi.frame_form();
    int k = p.rank_e, n = p.dim_m;
    std::vector<Poly> coords;
    coords.reserve(static_cast<std::size_t>(k) * n + k);
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < n; ++j) coords.push_back(mu.hom.at(a, j));
    for (int a = 0; a < k; ++a) coords.push_back(mu.val.c[static_cast<std::size_t>(a)]);
    std::vector<Poly> image = ff.matrix.apply(coords);
    DerivationDE out = zero_derivation(p);
    for (int pq = 0; pq < k * k; ++pq)
        out.endo.at(pq / k, pq % k) = image[static_cast<std::size_t>(pq)];
    for (int i = 0; i < n; ++i)
        out.base.c[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(k * k + i)];
    return out;
}

PiMap pi_to_frame(const PiMap& pi) {
    const Patch& p = pi.patch();
    int k = p.rank_e, n = p.dim_m;
    PolyMatrix m(k * k + n, k * n + k, p.dim_m);
    std::vector<JetSection> frame = frame_jets(p);
    for (std::size_t col = 0; col < frame.size(); ++col) {
        DerivationDE img = pi_apply(pi, frame[col]);
        for (int pq = 0; pq < k * k; ++pq)
            m.at(pq, static_cast<int>(col)) = img.endo.at(pq / k, pq % k);
        for (int i = 0; i < n; ++i)
            m.at(k * k + i, static_cast<int>(col)) = img.base.c[static_cast<std::size_t>(i)];
    }
    return PiMap(p, FrameForm{std::move(m)});
}

PiMap frame_decode(const PiMap& pi) {
    if (!pi.is_frame_form()) return pi;
    const Patch& p = pi.patch();
    int k = p.rank_e, n = p.dim_m;
    std::vector<JetSection> frame = frame_jets(p);

    if (k == 1) {
        LineForm lf{PolyMatrix(n, n, n), zero_field(p)};
        // value unit column carries Y; hom unit columns carry Lambda rows
        DerivationDE val_img = pi_apply(pi, frame[static_cast<std::size_t>(n)]);
        lf.y = val_img.base;
        for (int j = 0; j < n; ++j) {
            DerivationDE img = pi_apply(pi, frame[static_cast<std::size_t>(j)]);
            for (int i = 0; i < n; ++i) lf.lambda.at(j, i) = img.base.c[static_cast<std::size_t>(i)];
        }
        if (!lf.lambda.is_antisymmetric())
            throw structure_error("frame matrix is not skew: Lambda block not antisymmetric");
        return PiMap(p, std::move(lf));
    }

    TrivialForm tf{PolyMatrix(n, k, p.dim_m), AltTensor3(k, p.dim_m)};
    for (int a = 0; a < k; ++a) {
        DerivationDE img = pi_apply(pi, frame[static_cast<std::size_t>(k * n + a)]);
        for (int i = 0; i < n; ++i) tf.theta.at(i, a) = img.base.c[static_cast<std::size_t>(i)];
        for (int c = 0; c < k; ++c)
            for (int b = 0; b < k; ++b) tf.omega.at(c, a, b) = img.endo.at(c, b);
    }
    if (!tf.omega.is_antisymmetric())
        throw structure_error("frame matrix is not skew: Omega block not antisymmetric");
    return PiMap(p, std::move(tf));
}

SkewResult check_skew(const PiMap& pi) {
    const Patch& p = pi.patch();
    std::vector<JetSection> frame = frame_jets(p);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        DerivationDE pi_i = pi_apply(pi, frame[i]);
        for (std::size_t j = i; j < frame.size(); ++j) {
            SectionE defect = pairing_e(frame[j], pi_i) + pairing_e(frame[i], pi_apply(pi, frame[j]));
            if (auto w = first_nonzero(defect)) {
                return {false, Witness{"frame pair (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + "), component " + w->first,
                                       w->second.to_string()}};
            }
        }
    }
    return {true, std::nullopt};
}

JetSection pi_bracket(const PiMap& pi, const JetSection& mu, const JetSection& nu) {
    DerivationDE pmu = pi_apply(pi, mu);
    DerivationDE pnu = pi_apply(pi, nu);
    return lie_derivative(pmu, nu) - lie_derivative(pnu, mu) - jet_lift(pairing_e(nu, pmu));
}

}  // namespace omnilie
