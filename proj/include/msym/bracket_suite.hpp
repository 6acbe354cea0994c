#pragma once

#include "msym/structure.hpp"

#include <optional>
#include <vector>

namespace msym {

namespace detail {

// A form together with a multivector field satisfying i(X)Omega = d(form)
// globally; the currency of the bracket-theorem checks.
struct HamiltonianPair {
    KForm form;
    KVector field;
};

inline std::optional<HamiltonianPair> generate_pair(const MultisymplecticStructure& S, int field_degree,
                                                    Rng& rng)
{
    const int n = S.dim();
    const int k = S.degree();
    const int form_degree = k - field_degree - 1;
    if (form_degree < 0) return std::nullopt;
    KForm zeta = rng.next_form(n, form_degree, 2);
    auto X = hamiltonian_field_global(S, zeta, field_degree);
    if (!X) return std::nullopt;
    // sometimes shift by a constant kernel element: the pair stays valid
    Point origin(static_cast<std::size_t>(n), Rational(0));
    OmegaHatMatrix oh = omega_hat(S, field_degree, origin);
    if (!oh.kernel_basis.empty() && rng.next_int(0, 1) == 1) {
        std::size_t pick = static_cast<std::size_t>(rng.next_int(0, static_cast<long>(oh.kernel_basis.size()) - 1));
        *X += rng.next_nonzero_rational() * oh.kernel_basis[pick].lift<Variance::Vector>();
    }
    return HamiltonianPair{std::move(zeta), std::move(*X)};
}

// "Closed" for the quotient by closed forms: a 0-form is closed iff it is
// a constant; positive degrees are decided by the homotopy operator
// (equivalent to d = 0 on the star-shaped patch).
inline bool closed_representative(const KForm& a)
{
    if (a.is_zero()) return true;
    if (a.degree() == 0) return a.coefficient(MultiIndex{}).is_constant();
    return is_exact(a);
}

} // namespace detail

// Exact checks of the bracket theorems on a constant-coefficient
// structure:
//   prop1: for locally Hamiltonian X, Y: i([X,Y])Omega = d(i(X)i(Y)Omega)
//   prop2: i([X_xi, Y_zeta])Omega = d({zeta, xi})
//   antisymmetry of { , } modulo closed forms, with the shifted sign
//     {xi,zeta} + (-1)^((a+1)(b+1)) {zeta,xi}, a, b the field degrees
//   graded Jacobi of { , } modulo closed forms, with signs mirrored from
//     the Schouten Jacobi through the field correspondence
inline std::vector<GradedIdentityReport> verify_bracket_theorems(const MultisymplecticStructure& S,
                                                                 int cases, std::uint64_t seed)
{
    if (!S.is_constant_coefficient())
        throw input_error("verify_bracket_theorems: constant-coefficient structure required");
    const int n = S.dim();
    const int k = S.degree();
    Rng rng(seed);

    GradedIdentityReport prop1{"prop1_bracket_hamiltonian", cases, true, ""};
    GradedIdentityReport prop2{"prop2_poisson_field", cases, true, ""};
    GradedIdentityReport antisym{"poisson_antisymmetry", cases, true, ""};
    GradedIdentityReport jacobi{"poisson_jacobi", cases, true, ""};

    auto fail = [](GradedIdentityReport& rep, int c, const std::string& what) {
        rep.passed = false;
        rep.counterexample = "case " + std::to_string(c) + ": " + what;
    };

    for (int c = 0; c < cases; ++c) {
        // field degrees with p+q <= k+1 so every contraction below is
        // either in range or an honest zero
        int p = static_cast<int>(rng.next_int(1, k - 1));
        int q = static_cast<int>(rng.next_int(1, std::min<long>(k - 1, k + 1 - p)));

        auto px = detail::generate_pair(S, p, rng);
        auto py = detail::generate_pair(S, q, rng);
        if (!px || !py) continue;
        const KVector& X = px->field;
        const KVector& Y = py->field;

        // prop1 on the pair's fields (locally Hamiltonian by construction)
        if (prop1.passed) {
            KVector bracket = schouten_bracket(X, Y);
            detail::GradedSum<Variance::Form> lhs, rhs;
            if (!bracket.is_zero() && bracket.degree() <= k) lhs.add(contract(bracket, S.omega()));
            if (p + q <= k) {
                KForm primitive = contract(X, contract(Y, S.omega()));
                if (primitive.degree() < n) rhs.add(exterior_derivative(primitive));
            }
            if (!lhs.equals(rhs)) fail(prop1, c, "X = " + X.to_string() + ", Y = " + Y.to_string());
        }

        // prop2: i([X_xi, Y_zeta])Omega = d({zeta, xi})
        if (prop2.passed) {
            KForm pb = poisson_bracket(S, py->form, px->form, Y, X); // {zeta, xi} = i(X_xi) d zeta
            detail::GradedSum<Variance::Form> lhs, rhs;
            KVector bracket = schouten_bracket(X, Y);
            if (!bracket.is_zero() && bracket.degree() <= k) lhs.add(contract(bracket, S.omega()));
            if (!pb.is_zero() && pb.degree() < n) rhs.add(exterior_derivative(pb));
            if (!lhs.equals(rhs)) fail(prop2, c, "xi = " + px->form.to_string() + ", zeta = " + py->form.to_string());
        }

        // antisymmetry modulo closed forms
        if (antisym.passed) {
            KForm ab = poisson_bracket(S, px->form, py->form, X, Y);
            KForm ba = poisson_bracket(S, py->form, px->form, Y, X);
            detail::GradedSum<Variance::Form> sum;
            sum.add(ab);
            if (((p + 1) * (q + 1)) % 2 != 0) sum.sub(ba);
            else sum.add(ba);
            if (!sum.is_zero() && !detail::closed_representative(sum.value))
                fail(antisym, c, "xi = " + px->form.to_string() + ", zeta = " + py->form.to_string());
        }

        // Jacobi modulo closed forms; needs a third pair with all pairwise
        // field-degree sums at most k
        if (jacobi.passed) {
            long rmax = std::min<long>(k - 1, std::min<long>(k - p, k - q));
            if (rmax >= 1) {
                int r = static_cast<int>(rng.next_int(1, rmax));
                if (p + q <= k) {
                    auto pz = detail::generate_pair(S, r, rng);
                    if (pz) {
                        const KVector& Z = pz->field;
                        const KForm& xi = px->form;
                        const KForm& zeta = py->form;
                        const KForm& eta = pz->form;
                        // field of {A,B} is [F(B), F(A)]
                        auto nest = [&](const KForm& A, const KVector& FA, const KForm& B,
                                        const KVector& FB) {
                            KForm inner = poisson_bracket(S, A, B, FA, FB);
                            KVector field = schouten_bracket(FB, FA);
                            return detail::HamiltonianPair{inner, field};
                        };
                        detail::GradedSum<Variance::Form> sum;
                        auto signed_add = [&](int exponent, const KForm& v) {
                            if (exponent % 2 != 0) sum.sub(v);
                            else sum.add(v);
                        };
                        // {xi, {zeta, eta}} etc.; signs mirrored from the
                        // Schouten Jacobi through the correspondence
                        auto in1 = nest(zeta, Y, eta, Z);
                        auto in2 = nest(eta, Z, xi, X);
                        auto in3 = nest(xi, X, zeta, Y);
                        signed_add((p + r) * (q + 1), poisson_bracket(S, xi, in1.form, X, in1.field));
                        signed_add((p + q) * (r + 1), poisson_bracket(S, zeta, in2.form, Y, in2.field));
                        signed_add((q + r) * (p + 1), poisson_bracket(S, eta, in3.form, Z, in3.field));
                        if (!sum.is_zero() && !detail::closed_representative(sum.value))
                            fail(jacobi, c,
                                 "xi = " + xi.to_string() + ", zeta = " + zeta.to_string() +
                                     ", eta = " + eta.to_string());
                    }
                }
            }
        }
    }

    return {prop1, prop2, antisym, jacobi};
}

} // namespace msym
