/*
 * poly.hpp
 * --------
 * Exact multivariate polynomials over the rationals. These model the
 * smooth functions on a coordinate patch at desk scale: every identity
 * the kernel checks is decided by asking whether a defect polynomial is
 * identically zero, so coefficients are exact rationals and results are
 * kept in canonical form (no zero terms, fixed monomial order).
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace omnilie {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bad user input: shape mismatch, unknown variable, malformed document.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition failed (structure is not what the
/// operation requires), as opposed to malformed input.
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

/// Coordinate patch: a trivialized bundle of rank `rank_e` over an
/// n-dimensional chart with named coordinates. `dim_m == 0` is the
/// point base and is fully supported.
struct Patch {
    int dim_m = 0;
    int rank_e = 1;
    std::vector<std::string> var_names;

    Patch() = default;
    Patch(int dim, int rank, std::vector<std::string> names = {});

    bool operator==(const Patch&) const = default;
};

/// Exponent tuple of one monomial; length equals the patch dimension.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);

/// Graded-lexicographic order, higher degree first, then x1 > x2 > ...
/// Returns true when a comes strictly before b in the canonical order.
bool mono_before(const Mono& a, const Mono& b);

/// All exponent tuples in `nvars` variables of total degree <= maxdeg,
/// listed in canonical order (used by samplers and finite families).
std::vector<Mono> all_monomials(int nvars, int maxdeg);

class Poly {
public:
    struct Term {
        Mono mono;
        Rational coeff;
    };

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);   // 1-based index
    static Poly monomial(int nvars, Mono m, const Rational& c = 1);
    static Poly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    const std::vector<Term>& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rational& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to x_index (1-based).
    Poly partial(int index) const;

    /// Exact value at a rational point; the tuple length must equal nvars.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Canonical rendering; re-parses to an equal polynomial. Variable
    /// names default to x1..xn when none are supplied.
    std::string to_string(const std::vector<std::string>* names = nullptr) const;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;   // canonical: sorted, no zero coefficients

    void check_same_patch(const Poly& o) const;
};

std::string rational_to_string(const Rational& r);

}  // namespace omnilie
