#pragma once

#include "msym/exterior.hpp"

namespace msym {

// Radial-contraction primitive on polynomial forms over R^n (star-shaped
// about the origin). For a monomial term f dx^{i_1..i_k} with deg f = d the
// t-integral collapses to the rational weight 1/(k+d):
//
//   K(f dx^I) = sum_t (-1)^(t-1) (x^{i_t} f)/(k+d) dx^{I \ i_t}
//
// and K satisfies d(K a) + K(d a) = a for every degree >= 1 form, so a
// closed form's primitive is K(a) itself.
inline KForm homotopy_operator(const KForm& a)
{
    if (a.degree() < 1) throw input_error("homotopy_operator: degree 0 input (evaluate at the origin instead)");
    const int n = a.dim();
    const int k = a.degree();
    KForm r(n, k - 1);
    for (const auto& [w, c] : a.terms()) {
        for (const auto& [mono, coeff] : c.terms()) {
            Rational weight = coeff / Rational(static_cast<long>(k + total_degree(mono)));
            for (int t = 0; t < k; ++t) {
                Monomial m = mono;
                m[static_cast<std::size_t>(w[t])] += 1;
                Polynomial piece(n);
                piece.add_term(m, (t % 2 == 0) ? weight : -weight);
                r.add_term(w.erased_at(t), piece);
            }
        }
    }
    return r;
}

// Exactness over the patch, decided constructively: a positive-degree form
// is exact iff d(K(a)) reproduces it. For 0-forms exactness means zero.
inline bool is_exact(const KForm& a)
{
    if (a.degree() == 0) return a.is_zero();
    return exterior_derivative(homotopy_operator(a)) == a;
}

} // namespace msym
