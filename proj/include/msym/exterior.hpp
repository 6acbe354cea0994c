#pragma once

#include "msym/matrix.hpp"
#include "msym/tensor.hpp"

namespace msym {

// wedge: bilinear, associative, graded-commutative. Signs come from the
// merge parity of the two increasing index tuples.
template <Variance V>
GradedTensor<V> wedge(const GradedTensor<V>& a, const GradedTensor<V>& b)
{
    if (a.dim() != b.dim()) throw input_error("wedge: dimension mismatch");
    if (a.degree() + b.degree() > a.dim())
        throw input_error("wedge: result degree exceeds dimension");
    GradedTensor<V> r(a.dim(), a.degree() + b.degree());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            MultiIndex merged;
            int sign = merge_sign(wa, wb, merged);
            if (sign == 0) continue;
            Polynomial c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(merged, c);
        }
    }
    return r;
}

// d(f dx^w) = sum_i (df/dx_i) dx^i ^ dx^w. Degree dim input is rejected at
// this boundary; internal callers that need "d of a top form is zero"
// branch before calling.
inline KForm exterior_derivative(const KForm& a)
{
    if (a.degree() >= a.dim())
        throw input_error("exterior_derivative: degree overflow (input already has top degree)");
    KForm r(a.dim(), a.degree() + 1);
    for (const auto& [w, c] : a.terms()) {
        for (int i = 0; i < a.dim(); ++i) {
            Polynomial dc = c.partial_derivative(i);
            if (dc.is_zero()) continue;
            MultiIndex out;
            int sign = insert_sign(i, w, out);
            if (sign == 0) continue;
            r.add_term(out, sign < 0 ? -dc : dc);
        }
    }
    return r;
}

// d with the top-degree branch folded in: top forms are closed.
inline bool is_closed(const KForm& a)
{
    if (a.degree() >= a.dim()) return true;
    return exterior_derivative(a).is_zero();
}

namespace detail {

// i(e_j) on a single basis form term; (-1)^(position of j in w).
inline int single_contraction_sign(int j, const MultiIndex& w, MultiIndex& out)
{
    if (!w.contains(j)) return 0;
    int pos = w.position_of(j);
    out = w.erased(j);
    return (pos % 2 == 0) ? 1 : -1;
}

// Iterated sign of i(e_{j_1}) ... i(e_{j_m}) applied to dx^w,
// with i(e_{j_m}) acting first.
inline int iterated_contraction_sign(const MultiIndex& J, const MultiIndex& w, MultiIndex& out)
{
    MultiIndex cur = w;
    int sign = 1;
    for (int t = J.size() - 1; t >= 0; --t) {
        MultiIndex next;
        int s = single_contraction_sign(J[t], cur, next);
        if (s == 0) return 0;
        sign *= s;
        cur = next;
    }
    out = cur;
    return sign;
}

} // namespace detail

// Interior product i(X)a for X of degree m <= deg a. On decomposables this
// is i(v_1) ... i(v_m) with i(v_m) applied first; degree-0 X multiplies.
// m > deg a is a degree error at this boundary.
inline KForm contract(const KVector& X, const KForm& a)
{
    if (X.dim() != a.dim()) throw input_error("contract: dimension mismatch");
    if (X.degree() > a.degree())
        throw input_error("contract: multivector degree exceeds form degree");
    KForm r(a.dim(), a.degree() - X.degree());
    for (const auto& [J, g] : X.terms()) {
        for (const auto& [w, f] : a.terms()) {
            MultiIndex out;
            int sign = detail::iterated_contraction_sign(J, w, out);
            if (sign == 0) continue;
            Polynomial c = g * f;
            if (sign < 0) c = -c;
            r.add_term(out, c);
        }
    }
    return r;
}

// L(X) = d i(X) - (-1)^m i(X) d. Result degree is |a| - m + 1; out-of-range
// pieces (contraction past degree 0, d of a top form) contribute zero, and
// a negative result degree yields the zero 0-form.
inline KForm lie_derivative(const KVector& X, const KForm& a)
{
    if (X.dim() != a.dim()) throw input_error("lie_derivative: dimension mismatch");
    const int m = X.degree();
    const int out_degree = a.degree() - m + 1;
    if (out_degree < 0 || out_degree > a.dim()) return KForm(a.dim(), 0);

    KForm r(a.dim(), out_degree);
    if (m <= a.degree()) {
        KForm ixa = contract(X, a);
        if (ixa.degree() < a.dim()) r += exterior_derivative(ixa);
    }
    if (a.degree() < a.dim()) {
        KForm da = exterior_derivative(a);
        if (m <= da.degree()) {
            KForm ixda = contract(X, da);
            if (m % 2 == 0) r -= ixda;
            else r += ixda;
        }
    }
    return r;
}

template <Variance V>
ConstantTensor evaluate(const GradedTensor<V>& a, const Point& p)
{
    if (static_cast<int>(p.size()) != a.dim()) throw input_error("evaluate: point dimension mismatch");
    ConstantTensor t(a.dim(), a.degree(), V);
    for (const auto& [w, c] : a.terms()) t.add_term(w, c.evaluate(p));
    return t;
}

// Pullback along the linear map x -> Ax: coefficients are composed with A
// and each dx^i becomes the row 1-form sum_j A_ij dx^j. Functorial as
// pullback(AB) = pullback(B) after pullback(A).
inline KForm pullback_linear(const LinearEndo& A, const KForm& a)
{
    if (A.dim() != a.dim()) throw input_error("pullback_linear: size mismatch");
    const int n = a.dim();
    std::vector<Polynomial> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rows.push_back(A.row_polynomial(i));

    std::vector<KForm> row_forms;
    row_forms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        KForm df(n, 1);
        for (int j = 0; j < n; ++j) {
            const Rational& c = A.matrix().at(i, j);
            if (c != 0) df.add_term(MultiIndex::single(j), Polynomial::constant(n, c));
        }
        row_forms.push_back(std::move(df));
    }

    KForm r(n, a.degree());
    for (const auto& [w, c] : a.terms()) {
        KForm piece = KForm::from_polynomial(c.substitute(rows));
        for (int t = 0; t < w.size(); ++t) {
            if (piece.is_zero()) break;
            piece = wedge(piece, row_forms[static_cast<std::size_t>(w[t])]);
        }
        if (piece.degree() == a.degree()) r += piece;
    }
    return r;
}

inline ConstantTensor pullback_linear(const LinearEndo& A, const ConstantTensor& omega)
{
    if (omega.variance() != Variance::Form)
        throw input_error("pullback_linear: constant tensor must be a form");
    return evaluate(pullback_linear(A, omega.lift<Variance::Form>()),
                    Point(static_cast<std::size_t>(omega.dim()), Rational(0)));
}

} // namespace msym
