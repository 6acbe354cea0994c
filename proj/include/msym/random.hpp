#pragma once

#include "msym/tensor.hpp"

#include <cstdint>
#include <random>

namespace msym {

// Seeded generator for property suites and reports. Draws come from raw
// mt19937_64 output (not std::uniform_int_distribution), so identical
// seeds give identical objects on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    long next_int(long lo, long hi)
    {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational next_rational(long max_abs_num = 4, long max_den = 3)
    {
        long num = next_int(-max_abs_num, max_abs_num);
        long den = next_int(1, max_den);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Rational next_nonzero_rational(long max_abs_num = 4, long max_den = 3)
    {
        while (true) {
            Rational r = next_rational(max_abs_num, max_den);
            if (r != 0) return r;
        }
    }

    Monomial next_monomial(int dim, unsigned max_total_degree)
    {
        Monomial m(static_cast<std::size_t>(dim), 0u);
        unsigned total = static_cast<unsigned>(next_int(0, static_cast<long>(max_total_degree)));
        for (unsigned t = 0; t < total; ++t) {
            if (dim == 0) break;
            m[static_cast<std::size_t>(next_int(0, dim - 1))] += 1;
        }
        return m;
    }

    Polynomial next_polynomial(int dim, unsigned max_total_degree, int max_terms = 2)
    {
        Polynomial p(dim);
        int terms = static_cast<int>(next_int(1, max_terms));
        for (int t = 0; t < terms; ++t) p.add_term(next_monomial(dim, max_total_degree), next_rational());
        return p;
    }

    MultiIndex next_multi_index(int dim, int degree)
    {
        std::vector<int> picked;
        while (static_cast<int>(picked.size()) < degree) {
            int i = static_cast<int>(next_int(0, dim - 1));
            bool dup = false;
            for (int v : picked) dup = dup || (v == i);
            if (!dup) picked.push_back(i);
        }
        std::sort(picked.begin(), picked.end());
        return MultiIndex(std::move(picked));
    }

    template <Variance V>
    GradedTensor<V> next_tensor(int dim, int degree, unsigned max_coeff_degree, int max_terms = 2)
    {
        GradedTensor<V> t(dim, degree);
        int terms = static_cast<int>(next_int(1, max_terms));
        for (int s = 0; s < terms; ++s)
            t.add_term(next_multi_index(dim, degree), next_polynomial(dim, max_coeff_degree));
        return t;
    }

    KForm next_form(int dim, int degree, unsigned max_coeff_degree, int max_terms = 2)
    {
        return next_tensor<Variance::Form>(dim, degree, max_coeff_degree, max_terms);
    }

    KVector next_multivector(int dim, int degree, unsigned max_coeff_degree, int max_terms = 2)
    {
        return next_tensor<Variance::Vector>(dim, degree, max_coeff_degree, max_terms);
    }

    ConstantTensor next_constant_tensor(int dim, int degree, Variance variance, int max_terms = 3)
    {
        ConstantTensor t(dim, degree, variance);
        int terms = static_cast<int>(next_int(1, max_terms));
        for (int s = 0; s < terms; ++s) t.add_term(next_multi_index(dim, degree), next_rational());
        return t;
    }

    Point next_point(int dim, long max_abs_num = 5, long max_den = 2)
    {
        Point p;
        p.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) p.push_back(next_rational(max_abs_num, max_den));
        return p;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace msym
