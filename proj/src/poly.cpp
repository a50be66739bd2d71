#include "omnilie/poly.hpp"

#include <algorithm>
#include <sstream>

namespace omnilie {

Patch::Patch(int dim, int rank, std::vector<std::string> names)
    : dim_m(dim), rank_e(rank), var_names(std::move(names)) {
    if (dim < 0) throw input_error("patch dimension must be nonnegative");
    if (rank < 1) throw input_error("bundle rank must be at least 1");
    if (var_names.empty()) {
        for (int i = 1; i <= dim; ++i) var_names.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(var_names.size()) != dim)
        throw input_error("patch declares " + std::to_string(var_names.size()) +
                          " variable names for dimension " + std::to_string(dim));
    for (std::size_t i = 0; i < var_names.size(); ++i)
        for (std::size_t j = i + 1; j < var_names.size(); ++j)
            if (var_names[i] == var_names[j])
                throw input_error("duplicate variable name '" + var_names[i] + "'");
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool mono_before(const Mono& a, const Mono& b) {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::vector<Mono> all_monomials(int nvars, int maxdeg) {
    std::vector<Mono> out;
    Mono cur(static_cast<std::size_t>(nvars), 0);
    // enumerate recursively, then sort canonically
    std::vector<Mono> acc;
    struct Rec {
        int nvars, maxdeg;
        std::vector<Mono>* acc;
        void go(Mono& cur, int pos, int used) {
            if (pos == nvars) {
                acc->push_back(cur);
                return;
            }
            for (int e = 0; e + used <= maxdeg; ++e) {
                cur[pos] = e;
                go(cur, pos + 1, used + e);
            }
            cur[pos] = 0;
        }
    } rec{nvars, maxdeg, &acc};
    rec.go(cur, 0, 0);
    std::sort(acc.begin(), acc.end(), mono_before);
    return acc;
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({Mono(static_cast<std::size_t>(nvars), 0), c});
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 1 || index > nvars)
        throw input_error("variable index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(nvars));
    Mono m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(nvars, std::move(m), 1);
}

Poly Poly::monomial(int nvars, Mono m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars)
        throw input_error("monomial exponent tuple has wrong length");
    Poly p(nvars);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (static_cast<int>(t.mono.size()) != nvars)
            throw input_error("term exponent tuple has wrong length");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_before(a.mono, b.mono); });
    Poly p(nvars);
    for (Term& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.front().mono);
}

void Poly::check_same_patch(const Poly& o) const {
    if (nvars_ != o.nvars_)
        throw input_error("polynomials live on different patches (" + std::to_string(nvars_) +
                          " vs " + std::to_string(o.nvars_) + " variables)");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_patch(o);
    Poly out(nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (mono_before(terms_[i].mono, o.terms_[j].mono)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_patch(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Mono m(a.mono);
            for (std::size_t v = 0; v < m.size(); ++v) m[v] += b.mono[v];
            prod.push_back({std::move(m), a.coeff * b.coeff});
        }
    }
    return from_terms(nvars_, std::move(prod));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly(nvars_);
    Poly out(nvars_);
    out.terms_ = terms_;
    for (Term& t : out.terms_) t.coeff *= c;
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (nvars_ != o.nvars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::partial(int index) const {
    if (index < 1 || index > nvars_)
        throw input_error("partial derivative index " + std::to_string(index) +
                          " out of range 1.." + std::to_string(nvars_));
    std::size_t v = static_cast<std::size_t>(index - 1);
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.mono[v] == 0) continue;
        Term d;
        d.mono = t.mono;
        d.coeff = t.coeff * t.mono[v];
        d.mono[v] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, std::move(out));
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw input_error("evaluation point has " + std::to_string(point.size()) +
                          " coordinates, patch has " + std::to_string(nvars_));
    Rational total = 0;
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            for (int e = 0; e < t.mono[i]; ++e) v *= point[i];
        }
        total += v;
    }
    return total;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream ss;
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    ss << num;
    if (den != 1) ss << "/" << den;
    return ss.str();
}

std::string Poly::to_string(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        bool signed_literal = false;
        if (first) {
            // the grammar has no unary minus on variables, so a leading
            // negative term carries its sign inside the rational literal
            signed_literal = c < 0;
        } else {
            ss << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool constant_mono = mono_degree(t.mono) == 0;
        bool need_coeff = constant_mono || c != 1 || signed_literal;
        if (need_coeff) ss << rational_to_string(c);
        bool star_pending = need_coeff;
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (star_pending) ss << "*";
            if (names)
                ss << (*names)[v];
            else
                ss << "x" << (v + 1);
            if (t.mono[v] > 1) ss << "^" << t.mono[v];
            star_pending = true;
        }
        first = false;
    }
    return ss.str();
}

}  // namespace omnilie
