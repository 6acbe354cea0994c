#pragma once

#include "msym/multi_index.hpp"
#include "msym/polynomial.hpp"

#include <map>
#include <sstream>
#include <string>

namespace msym {

enum class Variance { Form, Vector };

inline const char* basis_symbol(Variance v) { return v == Variance::Form ? "dx" : "e"; }

// Homogeneous exterior tensor on an n-dimensional patch: a sparse map from
// strictly increasing multi-indices of fixed length to polynomial
// coefficients. Zero coefficients are never stored, so equality of
// normalized objects is structural. Immutable in spirit: every operation
// returns a fresh value.
template <Variance V>
class GradedTensor {
public:
    GradedTensor() : dim_(0), degree_(0) {}
    GradedTensor(int dim, int degree) : dim_(dim), degree_(degree)
    {
        if (degree < 0 || degree > dim) throw input_error("tensor degree out of range");
    }

    static GradedTensor from_polynomial(Polynomial p)
    {
        GradedTensor t(p.dim(), 0);
        if (!p.is_zero()) t.terms_.emplace(MultiIndex{}, std::move(p));
        return t;
    }

    // Unit basis term dx^w (or e_w), coefficient 1.
    static GradedTensor basis(int dim, const MultiIndex& w)
    {
        GradedTensor t(dim, w.size());
        if (!w.strictly_increasing() || (w.size() > 0 && (w[0] < 0 || w[w.size() - 1] >= dim)))
            throw input_error("bad multi-index for basis tensor");
        t.terms_.emplace(w, Polynomial::constant(dim, Rational(1)));
        return t;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Polynomial>& terms() const { return terms_; }

    Polynomial coefficient(const MultiIndex& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Polynomial(dim_) : it->second;
    }

    void add_term(const MultiIndex& w, const Polynomial& c)
    {
        if (c.is_zero()) return;
        if (w.size() != degree_) throw input_error("multi-index length does not match tensor degree");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedTensor& operator+=(const GradedTensor& o)
    {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    GradedTensor& operator-=(const GradedTensor& o)
    {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
    friend GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
    friend GradedTensor operator-(const GradedTensor& a)
    {
        GradedTensor r(a.dim_, a.degree_);
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend GradedTensor operator*(const GradedTensor& a, const Rational& s)
    {
        GradedTensor r(a.dim_, a.degree_);
        if (s == 0) return r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, c * s);
        return r;
    }
    friend GradedTensor operator*(const Rational& s, const GradedTensor& a) { return a * s; }

    friend GradedTensor operator*(const Polynomial& f, const GradedTensor& a)
    {
        GradedTensor r(a.dim_, a.degree_);
        for (const auto& [w, c] : a.terms_) r.add_term(w, f * c);
        return r;
    }

    bool operator==(const GradedTensor& o) const = default;

    std::string to_string() const;

private:
    void check_compatible(const GradedTensor& o) const
    {
        if (dim_ != o.dim_) throw input_error("tensor dimension mismatch");
        if (degree_ != o.degree_) throw input_error("tensor degree mismatch");
    }

    int dim_;
    int degree_;
    std::map<MultiIndex, Polynomial> terms_;
};

using KForm = GradedTensor<Variance::Form>;
using KVector = GradedTensor<Variance::Vector>;

template <Variance V>
std::string GradedTensor<V>::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Polynomial coeff = c;
        // pull a leading sign out of single-monomial coefficients
        bool negative = false;
        if (coeff.terms().size() == 1 && coeff.terms().begin()->second < 0) {
            negative = true;
            coeff = -coeff;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            os << coeff.to_string(true);
            continue;
        }
        bool coeff_is_one = coeff.is_constant() && !coeff.is_zero() && coeff.constant_value() == 1;
        if (!coeff_is_one) os << coeff.to_string(true) << "*";
        for (int t = 0; t < w.size(); ++t) {
            if (t > 0) os << "^";
            os << basis_symbol(V) << (w[t] + 1);
        }
    }
    return os.str();
}

// Pointwise value of a form or multivector: same shape with rational
// coefficients. Variance is runtime data here because constants flow
// through the linear-algebra layer and the CLI uniformly.
class ConstantTensor {
public:
    ConstantTensor() : dim_(0), degree_(0), variance_(Variance::Form) {}
    ConstantTensor(int dim, int degree, Variance variance)
        : dim_(dim), degree_(degree), variance_(variance)
    {
        if (degree < 0 || degree > dim) throw input_error("tensor degree out of range");
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    Variance variance() const { return variance_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    Rational coefficient(const MultiIndex& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& w, const Rational& c)
    {
        if (c == 0) return;
        if (w.size() != degree_) throw input_error("multi-index length does not match tensor degree");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const ConstantTensor& o) const = default;

    template <Variance V>
    GradedTensor<V> lift() const
    {
        if ((V == Variance::Form) != (variance_ == Variance::Form))
            throw input_error("variance mismatch lifting constant tensor");
        GradedTensor<V> t(dim_, degree_);
        for (const auto& [w, c] : terms_) t.add_term(w, Polynomial::constant(dim_, c));
        return t;
    }

    // Coordinates in the lex multi-index basis of the given enumeration.
    std::vector<Rational> coordinates(const std::vector<MultiIndex>& basis) const
    {
        std::vector<Rational> v;
        v.reserve(basis.size());
        for (const auto& w : basis) v.push_back(coefficient(w));
        return v;
    }

    static ConstantTensor from_coordinates(int dim, int degree, Variance variance,
                                           const std::vector<MultiIndex>& basis,
                                           const std::vector<Rational>& coords)
    {
        ConstantTensor t(dim, degree, variance);
        for (std::size_t i = 0; i < basis.size(); ++i) t.add_term(basis[i], coords[i]);
        return t;
    }

    std::string to_string() const
    {
        if (variance_ == Variance::Form) return lift<Variance::Form>().to_string();
        return lift<Variance::Vector>().to_string();
    }

private:
    int dim_;
    int degree_;
    Variance variance_;
    std::map<MultiIndex, Rational> terms_;
};

} // namespace msym
