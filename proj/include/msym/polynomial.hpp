#pragma once

#include "msym/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace msym {

// Exponent vector of a monomial; length always equals the polynomial dim.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m)
{
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in lexicographic exponent order and never store zeros,
// so equality is structural comparison.
class Polynomial {
public:
    Polynomial() : dim_(0) {}
    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial constant(int dim, Rational value)
    {
        Polynomial p(dim);
        if (value != 0) p.terms_[Monomial(static_cast<std::size_t>(dim), 0u)] = std::move(value);
        return p;
    }

    static Polynomial variable(int dim, int i, Rational coeff = Rational(1))
    {
        if (i < 0 || i >= dim) throw input_error("variable index out of range");
        Polynomial p(dim);
        if (coeff != 0) {
            Monomial m(static_cast<std::size_t>(dim), 0u);
            m[static_cast<std::size_t>(i)] = 1;
            p.terms_[std::move(m)] = std::move(coeff);
        }
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_constant() const
    {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }

    Rational constant_value() const
    {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw input_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a)
    {
        Polynomial r(a.dim_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check_dim(b);
        Polynomial r(a.dim_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(static_cast<std::size_t>(a.dim_));
                for (int i = 0; i < a.dim_; ++i)
                    m[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s)
    {
        Polynomial r(a.dim_);
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = c * s;
        return r;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    bool operator==(const Polynomial& o) const = default;

    Polynomial partial_derivative(int i) const
    {
        Polynomial r(dim_);
        for (const auto& [m, c] : terms_) {
            unsigned e = m[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial dm = m;
            dm[static_cast<std::size_t>(i)] = e - 1;
            r.add_term(dm, c * Rational(static_cast<long>(e)));
        }
        return r;
    }

    Rational evaluate(const Point& p) const
    {
        if (static_cast<int>(p.size()) != dim_) throw input_error("point dimension mismatch");
        Rational out(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (int i = 0; i < dim_; ++i) {
                for (unsigned e = 0; e < m[static_cast<std::size_t>(i)]; ++e) v *= p[static_cast<std::size_t>(i)];
            }
            out += v;
        }
        return out;
    }

    // Substitutes x_i -> s[i]; the workhorse of linear pullback.
    Polynomial substitute(const std::vector<Polynomial>& s) const
    {
        if (static_cast<int>(s.size()) != dim_) throw input_error("substitution arity mismatch");
        int out_dim = s.empty() ? dim_ : s.front().dim();
        Polynomial out(out_dim);
        for (const auto& [m, c] : terms_) {
            Polynomial term = Polynomial::constant(out_dim, c);
            for (int i = 0; i < dim_; ++i)
                for (unsigned e = 0; e < m[static_cast<std::size_t>(i)]; ++e) term = term * s[static_cast<std::size_t>(i)];
            out += term;
        }
        return out;
    }

    // Exact division: returns q with *this == q * divisor, or nullopt.
    // Lex-leading-term reduction; exactness makes failure unambiguous.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const
    {
        check_dim(divisor);
        if (divisor.is_zero()) return std::nullopt;
        Polynomial rem = *this;
        Polynomial quot(dim_);
        const auto& lead = *divisor.terms_.rbegin(); // lex-largest term
        while (!rem.is_zero()) {
            const auto& top = *rem.terms_.rbegin();
            Monomial q(static_cast<std::size_t>(dim_));
            for (int i = 0; i < dim_; ++i) {
                unsigned a = top.first[static_cast<std::size_t>(i)];
                unsigned b = lead.first[static_cast<std::size_t>(i)];
                if (a < b) return std::nullopt;
                q[static_cast<std::size_t>(i)] = a - b;
            }
            Rational coeff = top.second / lead.second;
            Polynomial step(dim_);
            step.terms_[q] = coeff;
            quot += step;
            rem -= step * divisor;
        }
        return quot;
    }

    std::string to_string(bool parenthesize_sums = false) const;

private:
    void check_dim(const Polynomial& o) const
    {
        if (dim_ != o.dim_) throw input_error("polynomial dimension mismatch");
    }

    int dim_;
    std::map<Monomial, Rational> terms_;
};

// Prints the deterministic normal form understood by the expression
// parser: terms in lex order, monomials as repeated "*x<i>" factors.
inline std::string Polynomial::to_string(bool parenthesize_sums) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool multi = terms_.size() > 1;
    if (multi && parenthesize_sums) os << "(";
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            if (a < 0) { os << " - "; a = -a; }
            else os << " + ";
        }
        first = false;
        bool printed = false;
        if (a != 1 || total_degree(m) == 0) {
            os << a.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (unsigned e = 0; e < m[i]; ++e) {
                if (printed) os << "*";
                os << "x" << (i + 1);
                printed = true;
            }
        }
    }
    if (multi && parenthesize_sums) os << ")";
    return os.str();
}

} // namespace msym
