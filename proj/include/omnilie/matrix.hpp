#pragma once

#include "omnilie/poly.hpp"

#include <vector>

namespace omnilie {

/// Dense matrix of polynomials, row-major. Rows or columns may be zero
/// (point-base patches produce genuinely empty shapes).
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars);

    static PolyMatrix identity(int dim, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    Poly& at(int r, int c);
    const Poly& at(int r, int c) const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix transpose() const;
    PolyMatrix scaled(const Poly& f) const;
    /// Entrywise partial derivative.
    PolyMatrix partial(int index) const;

    std::vector<Poly> apply(const std::vector<Poly>& v) const;

    bool is_zero() const;
    bool is_antisymmetric() const;

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<Poly> data_;

    void check_shape(const PolyMatrix& o) const;
};

/// Rank-3 structure tensor t[c][a][b], antisymmetric in (a, b). Holds
/// Lie algebroid structure functions and the fiberwise bracket part of
/// a skew bundle map on a trivialized patch.
class AltTensor3 {
public:
    AltTensor3() = default;
    AltTensor3(int fiber_dim, int nvars);

    /// Build from entries given only for index pairs a < b (1-based);
    /// the a > b half is filled in by antisymmetry.
    static AltTensor3 from_pairs(
        int fiber_dim, int nvars,
        const std::vector<std::tuple<int, int, std::vector<Poly>>>& entries);

    int fiber_dim() const { return k_; }
    int nvars() const { return nvars_; }

    Poly& at(int c, int a, int b);
    const Poly& at(int c, int a, int b) const;

    /// Enforced at mutation points; re-checkable for raw data.
    bool is_antisymmetric() const;

    /// Componentwise bracket value: result_c = sum_ab t[c][a][b] u_a v_b.
    std::vector<Poly> apply(const std::vector<Poly>& u, const std::vector<Poly>& v) const;

    /// Matrix of the partial application: (result)_{cb} = sum_a t[c][a][b] u_a.
    PolyMatrix apply_matrix(const std::vector<Poly>& u) const;

    bool operator==(const AltTensor3& o) const;
    bool is_zero() const;

private:
    int k_ = 0, nvars_ = 0;
    std::vector<Poly> data_;

    std::size_t idx(int c, int a, int b) const;
};

}  // namespace omnilie
