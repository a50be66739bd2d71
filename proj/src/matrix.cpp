#include "omnilie/matrix.hpp"

namespace omnilie {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Poly(nvars)) {
    if (rows < 0 || cols < 0) throw input_error("matrix shape must be nonnegative");
}

PolyMatrix PolyMatrix::identity(int dim, int nvars) {
    PolyMatrix m(dim, dim, nvars);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Poly::constant(nvars, 1);
    return m;
}

Poly& PolyMatrix::at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
}

const Poly& PolyMatrix::at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
}

void PolyMatrix::check_shape(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || nvars_ != o.nvars_)
        throw input_error("matrix shape mismatch: " + std::to_string(rows_) + "x" +
                          std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                          std::to_string(o.cols_));
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_shape(o);
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    check_shape(o);
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (Poly& p : out.data_) p = -p;
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || nvars_ != o.nvars_)
        throw input_error("matrix product shape mismatch");
    PolyMatrix out(rows_, o.cols_, nvars_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Poly acc(nvars_);
            for (int m = 0; m < cols_; ++m) acc += at(r, m) * o.at(m, c);
            out.at(r, c) = std::move(acc);
        }
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_, nvars_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

PolyMatrix PolyMatrix::scaled(const Poly& f) const {
    PolyMatrix out = *this;
    for (Poly& p : out.data_) p = p * f;
    return out;
}

PolyMatrix PolyMatrix::partial(int index) const {
    PolyMatrix out = *this;
    for (Poly& p : out.data_) p = p.partial(index);
    return out;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw input_error("matrix application: vector length " + std::to_string(v.size()) +
                          " does not match " + std::to_string(cols_) + " columns");
    std::vector<Poly> out(static_cast<std::size_t>(rows_), Poly(nvars_));
    for (int r = 0; r < rows_; ++r) {
        Poly acc(nvars_);
        for (int c = 0; c < cols_; ++c) acc += at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = std::move(acc);
    }
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const Poly& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c <= r; ++c)
            if (at(r, c) != -at(c, r)) return false;
    return true;
}

AltTensor3::AltTensor3(int fiber_dim, int nvars)
    : k_(fiber_dim), nvars_(nvars),
      data_(static_cast<std::size_t>(fiber_dim) * fiber_dim * fiber_dim, Poly(nvars)) {}

std::size_t AltTensor3::idx(int c, int a, int b) const {
    return (static_cast<std::size_t>(c) * k_ + a) * k_ + b;
}

AltTensor3 AltTensor3::from_pairs(
    int fiber_dim, int nvars,
    const std::vector<std::tuple<int, int, std::vector<Poly>>>& entries) {
    AltTensor3 t(fiber_dim, nvars);
    for (const auto& [a, b, comps] : entries) {
        if (a < 1 || b < 1 || a > fiber_dim || b > fiber_dim || a >= b)
            throw input_error("structure entry requires indices 1 <= a < b <= rank");
        if (static_cast<int>(comps.size()) != fiber_dim)
            throw input_error("structure entry for pair (" + std::to_string(a) + "," +
                              std::to_string(b) + ") has wrong component count");
        for (int c = 0; c < fiber_dim; ++c) {
            t.data_[t.idx(c, a - 1, b - 1)] = comps[static_cast<std::size_t>(c)];
            t.data_[t.idx(c, b - 1, a - 1)] = -comps[static_cast<std::size_t>(c)];
        }
    }
    return t;
}

Poly& AltTensor3::at(int c, int a, int b) { return data_[idx(c, a, b)]; }
const Poly& AltTensor3::at(int c, int a, int b) const { return data_[idx(c, a, b)]; }

bool AltTensor3::is_antisymmetric() const {
    for (int c = 0; c < k_; ++c)
        for (int a = 0; a < k_; ++a)
            for (int b = 0; b <= a; ++b)
                if (at(c, a, b) != -at(c, b, a)) return false;
    return true;
}

std::vector<Poly> AltTensor3::apply(const std::vector<Poly>& u,
                                    const std::vector<Poly>& v) const {
    if (static_cast<int>(u.size()) != k_ || static_cast<int>(v.size()) != k_)
        throw input_error("structure tensor applied to sections of wrong rank");
    std::vector<Poly> out(static_cast<std::size_t>(k_), Poly(nvars_));
    for (int c = 0; c < k_; ++c) {
        Poly acc(nvars_);
        for (int a = 0; a < k_; ++a)
            for (int b = 0; b < k_; ++b) {
                const Poly& t = at(c, a, b);
                if (t.is_zero()) continue;
                acc += t * u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
            }
        out[static_cast<std::size_t>(c)] = std::move(acc);
    }
    return out;
}

PolyMatrix AltTensor3::apply_matrix(const std::vector<Poly>& u) const {
    if (static_cast<int>(u.size()) != k_)
        throw input_error("structure tensor applied to section of wrong rank");
    PolyMatrix out(k_, k_, nvars_);
    for (int c = 0; c < k_; ++c)
        for (int b = 0; b < k_; ++b) {
            Poly acc(nvars_);
            for (int a = 0; a < k_; ++a) {
                const Poly& t = at(c, a, b);
                if (t.is_zero()) continue;
                acc += t * u[static_cast<std::size_t>(a)];
            }
            out.at(c, b) = std::move(acc);
        }
    return out;
}

bool AltTensor3::operator==(const AltTensor3& o) const {
    return k_ == o.k_ && data_ == o.data_;
}

bool AltTensor3::is_zero() const {
    for (const Poly& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace omnilie
