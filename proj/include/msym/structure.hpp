#pragma once

#include "msym/homotopy.hpp"
#include "msym/matrix.hpp"
#include "msym/schouten.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msym {

// A degree-k form on the n-patch, 2 <= k <= n, closed by construction.
// Nondegeneracy is a separate, sampled analysis; it is never assumed here.
class MultisymplecticStructure {
public:
    explicit MultisymplecticStructure(KForm omega) : omega_(std::move(omega))
    {
        if (omega_.degree() < 2) throw input_error("structure degree must be at least 2");
        if (omega_.degree() > omega_.dim()) throw input_error("structure degree exceeds dimension");
        if (!msym::is_closed(omega_)) throw input_error("structure form is not closed");
        closed_ = true;
    }

    int dim() const { return omega_.dim(); }
    int degree() const { return omega_.degree(); }
    const KForm& omega() const { return omega_; }
    bool is_closed() const { return closed_; }

    bool is_constant_coefficient() const
    {
        for (const auto& [w, c] : omega_.terms())
            if (!c.is_constant()) return false;
        return true;
    }

private:
    KForm omega_;
    bool closed_ = false;
};

inline KVector euler_field(int n)
{
    KVector d(n, 1);
    for (int i = 0; i < n; ++i) d.add_term(MultiIndex::single(i), Polynomial::variable(n, i));
    return d;
}

inline std::vector<long> first_primes(int count)
{
    std::vector<long> out;
    long c = 2;
    while (static_cast<int>(out.size()) < count) {
        bool prime = true;
        for (long d = 2; d * d <= c; ++d)
            if (c % d == 0) { prime = false; break; }
        if (prime) out.push_back(c);
        ++c;
    }
    return out;
}

// Fixed deterministic points (origin, all-ones, distinct primes) plus
// seeded random rational points. Distinct-prime coordinates avoid
// accidental rank drops of polynomial-coefficient forms.
inline std::vector<Point> default_sample_points(int n, int extra_random = 2, std::uint64_t seed = 0)
{
    std::vector<Point> pts;
    pts.emplace_back(static_cast<std::size_t>(n), Rational(0));
    pts.emplace_back(static_cast<std::size_t>(n), Rational(1));
    Point primes;
    for (long p : first_primes(n)) primes.emplace_back(p);
    pts.push_back(std::move(primes));
    Rng rng(seed);
    for (int t = 0; t < extra_random; ++t) pts.push_back(rng.next_point(n));
    return pts;
}

// The pointwise contraction map v -> i(v) Omega_x from m-multivectors to
// (k-m)-forms, in lexicographic multi-index bases, with its exact rank and
// kernel.
struct OmegaHatMatrix {
    int m = 0;
    Point point;
    RatMatrix matrix; // C(n,k-m) rows by C(n,m) columns
    int rank = 0;
    std::vector<ConstantTensor> kernel_basis; // degree-m multivectors
};

inline OmegaHatMatrix omega_hat(const MultisymplecticStructure& S, int m, const Point& p)
{
    const int n = S.dim();
    const int k = S.degree();
    if (m < 1 || m > k - 1) throw input_error("omega_hat: m out of range 1..k-1");
    if (static_cast<int>(p.size()) != n) throw input_error("omega_hat: point dimension mismatch");

    const std::vector<MultiIndex> rows = lex_multi_indices(n, k - m);
    const std::vector<MultiIndex> cols = lex_multi_indices(n, m);

    OmegaHatMatrix out;
    out.m = m;
    out.point = p;
    out.matrix = RatMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        ConstantTensor col = evaluate(contract(KVector::basis(n, cols[j]), S.omega()), p);
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.matrix.at(static_cast<int>(i), static_cast<int>(j)) = col.coefficient(rows[i]);
    }
    out.rank = out.matrix.rank();
    for (const auto& v : out.matrix.nullspace())
        out.kernel_basis.push_back(
            ConstantTensor::from_coordinates(n, m, Variance::Vector, cols, v));
    return out;
}

struct NondegeneracyRow {
    int m = 0;
    long kernel_floor = 0;  // max(0, C(n,m) - C(n,k-m))
    long min_kernel_dim = 0;
    long max_kernel_dim = 0;
    bool nondegenerate = false; // kernel dimension equals the floor at every sample
};

struct NondegeneracyReport {
    std::vector<NondegeneracyRow> rows;
    bool closed = false;
    bool strongly_nondegenerate = false;
    bool multisymplectic = false;
    std::vector<Point> sample_points;
};

inline NondegeneracyReport nondegeneracy_report(const MultisymplecticStructure& S,
                                                const std::vector<Point>& samples)
{
    if (samples.empty()) throw input_error("nondegeneracy_report: empty sample set");
    const int n = S.dim();
    const int k = S.degree();
    NondegeneracyReport rep;
    rep.closed = S.is_closed();
    rep.sample_points = samples;
    rep.strongly_nondegenerate = true;
    for (int m = 1; m <= k - 1; ++m) {
        NondegeneracyRow row;
        row.m = m;
        row.kernel_floor = std::max(0L, binomial(n, m) - binomial(n, k - m));
        bool first = true;
        bool all_at_floor = true;
        for (const auto& p : samples) {
            OmegaHatMatrix oh = omega_hat(S, m, p);
            long kdim = binomial(n, m) - oh.rank;
            if (first || kdim < row.min_kernel_dim) row.min_kernel_dim = kdim;
            if (first || kdim > row.max_kernel_dim) row.max_kernel_dim = kdim;
            first = false;
            all_at_floor = all_at_floor && (kdim == row.kernel_floor);
        }
        row.nondegenerate = all_at_floor;
        rep.strongly_nondegenerate = rep.strongly_nondegenerate && row.nondegenerate;
        rep.rows.push_back(row);
    }
    // 1-nondegeneracy has floor 0 for every 2 <= k <= n, so the flag below
    // is "closed and ker^1 vanishes on all samples".
    rep.multisymplectic = rep.closed && !rep.rows.empty() && rep.rows.front().nondegenerate;
    return rep;
}

// Pointwise solution of i(X_x) Omega_x = (d zeta)_x.
struct HamiltonianSolution {
    bool solvable = false;
    Point point;
    ConstantTensor rhs;        // (d zeta)_p as a constant (k-m)-form
    ConstantTensor particular; // degree-m multivector, empty when unsolvable
    std::vector<ConstantTensor> kernel_basis;
};

inline HamiltonianSolution hamiltonian_solve(const MultisymplecticStructure& S, const KForm& zeta,
                                             int m, const Point& p)
{
    const int n = S.dim();
    const int k = S.degree();
    if (m < 1 || m > k - 1) throw input_error("hamiltonian_solve: m out of range 1..k-1");
    if (zeta.dim() != n) throw input_error("hamiltonian_solve: dimension mismatch");
    if (zeta.degree() != k - m - 1)
        throw input_error("hamiltonian_solve: zeta must have degree k-m-1 = " + std::to_string(k - m - 1));

    OmegaHatMatrix oh = omega_hat(S, m, p);
    const std::vector<MultiIndex> rows = lex_multi_indices(n, k - m);
    const std::vector<MultiIndex> cols = lex_multi_indices(n, m);

    HamiltonianSolution sol;
    sol.point = p;
    sol.rhs = evaluate(exterior_derivative(zeta), p);
    sol.kernel_basis = oh.kernel_basis;
    auto x = oh.matrix.solve(sol.rhs.coordinates(rows));
    if (!x) {
        sol.solvable = false;
        sol.particular = ConstantTensor(n, m, Variance::Vector);
        return sol;
    }
    sol.solvable = true;
    sol.particular = ConstantTensor::from_coordinates(n, m, Variance::Vector, cols, *x);
    return sol;
}

// Global polynomial solution of i(X) Omega = d zeta, available when Omega
// has constant coefficients: the system is one constant matrix applied
// monomial by monomial to the right-hand side.
inline std::optional<KVector> hamiltonian_field_global(const MultisymplecticStructure& S,
                                                       const KForm& zeta, int m)
{
    const int n = S.dim();
    const int k = S.degree();
    if (m < 1 || m > k - 1) throw input_error("hamiltonian_field_global: m out of range 1..k-1");
    if (!S.is_constant_coefficient())
        throw input_error("hamiltonian_field_global: constant-coefficient structure required");
    if (zeta.degree() != k - m - 1) throw input_error("hamiltonian_field_global: zeta degree mismatch");

    const std::vector<MultiIndex> rows = lex_multi_indices(n, k - m);
    const std::vector<MultiIndex> cols = lex_multi_indices(n, m);
    Point origin(static_cast<std::size_t>(n), Rational(0));
    RatMatrix M = omega_hat(S, m, origin).matrix;

    KForm rhs = exterior_derivative(zeta);

    // collect every monomial appearing in the rhs coefficients
    std::map<Monomial, std::vector<Rational>> stacked;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Polynomial c = rhs.coefficient(rows[i]);
        for (const auto& [mono, coeff] : c.terms()) {
            auto it = stacked.find(mono);
            if (it == stacked.end())
                it = stacked.emplace(mono, std::vector<Rational>(rows.size(), Rational(0))).first;
            it->second[i] = coeff;
        }
    }

    KVector X(n, m);
    for (const auto& [mono, vec] : stacked) {
        auto x = M.solve(vec);
        if (!x) return std::nullopt;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if ((*x)[j] == 0) continue;
            Polynomial piece(n);
            piece.add_term(mono, (*x)[j]);
            X.add_term(cols[j], piece);
        }
    }
    return X;
}

enum class HamiltonianClass { Hamiltonian, LocallyHamiltonian, Neither };

inline const char* to_string(HamiltonianClass c)
{
    switch (c) {
    case HamiltonianClass::Hamiltonian: return "hamiltonian";
    case HamiltonianClass::LocallyHamiltonian: return "locally_hamiltonian";
    default: return "neither";
    }
}

struct ClassifyResult {
    HamiltonianClass kind = HamiltonianClass::Neither;
    KForm contraction;                   // i(X) Omega
    std::optional<KForm> hamiltonian_form; // primitive from the homotopy operator
};

// Locally Hamiltonian iff d(i(X)Omega) = 0; Hamiltonian iff i(X)Omega is
// exact, decided constructively by the homotopy operator. Degrees beyond k
// contract to nothing, so such fields are Hamiltonian with zero form.
inline ClassifyResult classify_multivector(const MultisymplecticStructure& S, const KVector& X)
{
    const int k = S.degree();
    if (X.dim() != S.dim()) throw input_error("classify_multivector: dimension mismatch");
    if (X.degree() < 1) throw input_error("classify_multivector: degree >= 1 multivector expected");

    ClassifyResult res;
    if (X.degree() > k) {
        res.kind = HamiltonianClass::Hamiltonian;
        res.contraction = KForm(S.dim(), 0);
        return res;
    }
    res.contraction = contract(X, S.omega());
    if (res.contraction.degree() == 0) {
        Polynomial f = res.contraction.coefficient(MultiIndex{});
        if (f.is_zero()) {
            res.kind = HamiltonianClass::Hamiltonian;
        } else if (f.is_constant()) {
            res.kind = HamiltonianClass::LocallyHamiltonian;
        } else {
            res.kind = HamiltonianClass::Neither;
        }
        return res;
    }
    if (!msym::is_closed(res.contraction)) {
        res.kind = HamiltonianClass::Neither;
        return res;
    }
    if (res.contraction.is_zero()) {
        res.kind = HamiltonianClass::Hamiltonian;
        res.hamiltonian_form = KForm(S.dim(), std::max(0, res.contraction.degree() - 1));
        return res;
    }
    KForm primitive = homotopy_operator(res.contraction);
    if (exterior_derivative(primitive) == res.contraction) {
        res.kind = HamiltonianClass::Hamiltonian;
        res.hamiltonian_form = primitive;
    } else {
        res.kind = HamiltonianClass::LocallyHamiltonian;
    }
    return res;
}

// Graded Poisson bracket of two Hamiltonian forms with caller-supplied
// Hamiltonian multivector fields: {xi, zeta} = i(Y_zeta) i(X_xi) Omega =
// i(Y_zeta) d xi. The pair contracts i(X_xi)Omega = d xi and
// i(Y_zeta)Omega = d zeta are checked exactly; the remaining equalities of
// the defining expressions are asserted internally.
inline KForm poisson_bracket(const MultisymplecticStructure& S, const KForm& xi, const KForm& zeta,
                             const KVector& X_xi, const KVector& Y_zeta)
{
    const int n = S.dim();
    const int k = S.degree();
    if (xi.dim() != n || zeta.dim() != n || X_xi.dim() != n || Y_zeta.dim() != n)
        throw input_error("poisson_bracket: dimension mismatch");
    const int p = xi.degree();
    const int q = zeta.degree();
    if (p > k - 2 || q > k - 2)
        throw input_error("poisson_bracket: Hamiltonian forms have degree at most k-2");
    if (X_xi.degree() != k - p - 1 || Y_zeta.degree() != k - q - 1)
        throw input_error("poisson_bracket: field degree must be k - form degree - 1");

    if (contract(X_xi, S.omega()) != exterior_derivative(xi))
        throw contract_violation("poisson_bracket: i(X_xi)Omega != d xi");
    if (contract(Y_zeta, S.omega()) != exterior_derivative(zeta))
        throw contract_violation("poisson_bracket: i(Y_zeta)Omega != d zeta");

    const int out_degree = p + q - k + 2;
    if (out_degree < 0) return KForm(n, 0);

    KForm dxi = exterior_derivative(xi);
    KForm result = contract(Y_zeta, dxi);

    // the defining expressions must agree; a mismatch is an internal bug
    KForm via_omega = contract(Y_zeta, contract(X_xi, S.omega()));
    if (via_omega != result) throw std::logic_error("poisson_bracket: expression mismatch (omega route)");
    // out_degree >= 0 guarantees both contractions below are in range
    const int a = k - p - 1;
    const int b = k - q - 1;
    KForm via_swap = contract(X_xi, exterior_derivative(zeta));
    if ((a * b) % 2 != 0) via_swap = -via_swap;
    if (via_swap != result) throw std::logic_error("poisson_bracket: expression mismatch (swap route)");
    return result;
}

// Span of the pointwise values of a family of constant tensors, as the
// rank of their coordinate matrix.
inline long span_dimension(const std::vector<ConstantTensor>& family,
                           const std::vector<MultiIndex>& basis)
{
    if (family.empty()) return 0;
    RatMatrix m(static_cast<int>(family.size()), static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<Rational> row = family[i].coordinates(basis);
        for (std::size_t j = 0; j < basis.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = row[j];
    }
    return m.rank();
}

struct SpanCheckReport {
    std::vector<Point> sample_points;
    long vector_expected = 0;            // n
    std::vector<long> vector_dims;       // per sample point
    long multivector_expected = 0;       // C(n, k-1)
    std::vector<long> multivector_dims;  // per sample point
    bool passed = false;
};

// Pointwise span of values of locally Hamiltonian vector fields
// (respectively (k-1)-multivector fields) on a constant-coefficient
// structure: constant fields qualify, and a few globally solved
// polynomial fields are mixed in.
inline SpanCheckReport span_check(const MultisymplecticStructure& S, const std::vector<Point>& samples)
{
    if (!S.is_constant_coefficient())
        throw input_error("span_check: constant-coefficient structure required");
    const int n = S.dim();
    const int k = S.degree();
    SpanCheckReport rep;
    rep.sample_points = samples;
    rep.vector_expected = n;
    rep.multivector_expected = binomial(n, k - 1);

    for (int which = 0; which < 2; ++which) {
        const int d = (which == 0) ? 1 : k - 1;
        std::vector<KVector> family;
        for (const auto& w : lex_multi_indices(n, d)) family.push_back(KVector::basis(n, w));
        // a few polynomial Hamiltonian fields for good measure
        if (k - d - 1 >= 0 && d <= k - 1) {
            std::vector<MultiIndex> zbasis = lex_multi_indices(n, k - d - 1);
            for (int i = 0; i < std::min(n, 3); ++i) {
                KForm zeta(n, k - d - 1);
                zeta.add_term(zbasis.front(), Polynomial::variable(n, i));
                if (auto X = hamiltonian_field_global(S, zeta, d)) family.push_back(*X);
            }
        }
        // every member must be locally Hamiltonian
        for (const auto& X : family) {
            if (!msym::is_closed(contract(X, S.omega())))
                throw std::logic_error("span_check: generated field is not locally Hamiltonian");
        }
        const std::vector<MultiIndex> basis = lex_multi_indices(n, d);
        for (const auto& p : samples) {
            std::vector<ConstantTensor> values;
            values.reserve(family.size());
            for (const auto& X : family) values.push_back(evaluate(X, p));
            long dim = span_dimension(values, basis);
            if (which == 0) rep.vector_dims.push_back(dim);
            else rep.multivector_dims.push_back(dim);
        }
    }
    rep.passed = true;
    for (long d : rep.vector_dims) rep.passed = rep.passed && (d == rep.vector_expected);
    for (long d : rep.multivector_dims) rep.passed = rep.passed && (d == rep.multivector_expected);
    return rep;
}

// L(Delta)Omega = c Omega for the global Euler field Delta = x^i d_i,
// as an exact polynomial identity.
inline std::optional<Rational> euler_homogeneity(const MultisymplecticStructure& S)
{
    if (S.omega().is_zero()) return std::nullopt;
    KForm lhs = lie_derivative(euler_field(S.dim()), S.omega());
    // candidate constant from the first monomial of the first term
    const auto& [w0, c0] = *S.omega().terms().begin();
    const auto& [mono0, r0] = *c0.terms().begin();
    Rational c = Rational(0);
    if (!lhs.is_zero()) {
        Polynomial lc = lhs.coefficient(w0);
        auto it = lc.terms().find(mono0);
        if (it == lc.terms().end()) return std::nullopt;
        c = it->second / r0;
    }
    if (lhs == c * S.omega()) return c;
    return std::nullopt;
}

// L(X)Omega = sigma Omega for a polynomial sigma, decided by exact
// polynomial division. sigma need not be constant; callers flag that.
inline std::optional<Polynomial> conformal_check(const MultisymplecticStructure& S, const KVector& X)
{
    if (X.degree() != 1) throw input_error("conformal_check: vector field expected");
    if (X.dim() != S.dim()) throw input_error("conformal_check: dimension mismatch");
    if (S.omega().is_zero()) return std::nullopt;
    KForm lhs = lie_derivative(X, S.omega());
    const auto& [w0, c0] = *S.omega().terms().begin();
    Polynomial sigma(S.dim());
    if (!lhs.is_zero()) {
        auto q = lhs.coefficient(w0).divide_exact(c0);
        if (!q) return std::nullopt;
        sigma = *q;
    }
    KForm expect(S.dim(), S.degree());
    for (const auto& [w, c] : S.omega().terms()) expect.add_term(w, sigma * c);
    if (lhs == expect) return sigma;
    return std::nullopt;
}

} // namespace msym
