#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dunkl/partitions.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/poly_text.hpp"

namespace dunkl {

// ---- first-order operators of M -------------------------------------------

// Cauchy-Riemann operator of M: d/dx0 + sum_i v_i d/dx_i.
inline Polynomial cauchy_riemann(const Polynomial& f) {
    Polynomial r = derivative(f, 0);
    for (int i = 1; i <= f.n(); ++i)
        r += left_mul_const(f.basis()->unit(i), derivative(f, i));
    return r;
}

// Conjugated Cauchy-Riemann operator: d/dx0 - sum_i v_i d/dx_i.
inline Polynomial conj_cauchy_riemann(const Polynomial& f) {
    Polynomial r = derivative(f, 0);
    for (int i = 1; i <= f.n(); ++i)
        r -= left_mul_const(f.basis()->unit(i), derivative(f, i));
    return r;
}

inline Polynomial laplacian(const Polynomial& f) {
    Polynomial r(f.basis());
    for (int i = 0; i <= f.n(); ++i) r += derivative(derivative(f, i), i);
    return r;
}

inline Polynomial laplacian_power(Polynomial f, int k) {
    for (int t = 0; t < k; ++t) f = laplacian(f);
    return f;
}

// ---- difference operators ---------------------------------------------------

// delta1^i f = (f - r_i f)/x_i. On a term with x_i-exponent e this is
// 2 x_i^{e-1} for odd e and 0 for even e, so the operator is total.
inline Polynomial delta1(const Polynomial& f, int i) {
    if (i < 1 || i > f.n()) throw ValidationError("delta1 index outside 1..n");
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t e = m.exponents[static_cast<std::size_t>(i)];
        if (e % 2 == 0) continue;
        Monomial mm = m;
        mm.exponents[static_cast<std::size_t>(i)] = e - 1;
        r.add_term(mm, Rational(2) * a);
    }
    return r;
}

// delta2^i f = [(f - r_i f) - 2 x_i df/dx_i] / x_i^2; termwise the numerator
// coefficient is 2[e odd] - 2e, which vanishes for e = 0, 1.
inline Polynomial delta2(const Polynomial& f, int i) {
    if (i < 1 || i > f.n()) throw ValidationError("delta2 index outside 1..n");
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t e = m.exponents[static_cast<std::size_t>(i)];
        long long c = (e % 2 == 1 ? 2 : 0) - 2ll * e;
        if (c == 0) continue;
        Monomial mm = m;
        mm.exponents[static_cast<std::size_t>(i)] = e - 2;
        r.add_term(mm, Rational(c) * a);
    }
    return r;
}

// Dunkl operator T_i = d/dx_i + k_i delta1^i.
inline Polynomial dunkl_T(const Polynomial& f, int i, const Rational& ki) {
    Polynomial r = derivative(f, i);
    if (ki != 0) r += ki * delta1(f, i);
    return r;
}

// ---- Dunkl-Dirac family ------------------------------------------------------

inline void check_multiplicities(const Polynomial& f, const MultiplicitySeq& k) {
    if (k.n() != f.n())
        throw ValidationError("multiplicity sequence has length " + std::to_string(k.n()) +
                              ", expected " + std::to_string(f.n()));
}

// Block admissibility on A: k_i <= 0 on A, sum 2k_i = 1 - |A|, at most one zero.
inline bool is_block_admissible(const IndexSet& A, const MultiplicitySeq& k) {
    Rational sum(0);
    int zeros = 0;
    for (int i : A) {
        if (k.k(i) > 0) return false;
        sum += k.k(i);
        if (k.k(i) == 0) ++zeros;
    }
    return 2 * sum == Rational(1 - static_cast<int>(A.size())) && zeros <= 1;
}

// Multiplicities for a standalone block A: 0 at alpha = min(A), -1/2 on the
// rest of A, zero off A (unused there).
inline MultiplicitySeq block_canonical_multiplicities(const IndexSet& A, int n) {
    MultiplicitySeq k{std::vector<Rational>(static_cast<std::size_t>(n))};
    for (int i : A) k.values[static_cast<std::size_t>(i) - 1] = Rational(-1, 2);
    k.values[static_cast<std::size_t>(A.front()) - 1] = 0;
    return k;
}

// D_A = sum_{i in A} v_i T_i.
inline Polynomial dirac_A(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    check_index_set(A, f.n());
    check_multiplicities(f, k);
    Polynomial r(f.basis());
    for (int i : A) r += left_mul_const(f.basis()->unit(i), dunkl_T(f, i, k.k(i)));
    return r;
}

inline Polynomial dunkl_dirac(const Polynomial& f, const MultiplicitySeq& k) {
    return dirac_A(f, full_index_set(f.n()), k);
}

inline void check_admissible(const Polynomial& f, const SetPartition& P, const MultiplicitySeq& k) {
    if (P.n() != f.n())
        throw ValidationError("partition is over 1.." + std::to_string(P.n()) + ", basis has n = " +
                              std::to_string(f.n()));
    if (!is_admissible(P, k))
        throw ValidationError("multiplicities are not admissible for " + P.to_string());
}

// Dunkl-Cauchy-Riemann operator D_P = d/dx0 + sum_j D_{A_j}.
inline Polynomial dunkl_CR(const Polynomial& f, const SetPartition& P, const MultiplicitySeq& k) {
    check_admissible(f, P, k);
    Polynomial r = derivative(f, 0);
    for (int j = 1; j <= P.block_count(); ++j) r += dirac_A(f, P.block(j), k);
    return r;
}

// D^c_P = d/dx0 - D_P's Dirac part.
inline Polynomial conj_dunkl_CR(const Polynomial& f, const SetPartition& P,
                                const MultiplicitySeq& k) {
    check_admissible(f, P, k);
    Polynomial r = derivative(f, 0);
    for (int j = 1; j <= P.block_count(); ++j) r -= dirac_A(f, P.block(j), k);
    return r;
}

// Dunkl Laplacian of M: Delta_M - sum_i k_i delta2^i. The factorization
// D_P D^c_P = D^c_P D_P = Delta_{D,M} is exercised by the property tests.
inline Polynomial dunkl_laplacian(const Polynomial& f, const SetPartition& P,
                                  const MultiplicitySeq& k) {
    check_admissible(f, P, k);
    Polynomial r = laplacian(f);
    for (int i = 1; i <= f.n(); ++i)
        if (k.k(i) != 0) r -= k.k(i) * delta2(f, i);
    return r;
}

// ---- Casimir-type operators -------------------------------------------------

// S_A = x_A D_A + E_A, the Casimir operator in the form valid for
// block-admissible multiplicities.
inline Polynomial casimir_S(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    check_index_set(A, f.n());
    check_multiplicities(f, k);
    if (!is_block_admissible(A, k))
        throw ValidationError("multiplicities are not admissible on the given index set");
    return left_mul_imaginary(A, dirac_A(f, A, k)) + euler(f, A);
}

// S~_A = sum_{i in A} x_i T_i - E_A.
inline Polynomial S_tilde(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    check_index_set(A, f.n());
    check_multiplicities(f, k);
    Polynomial r(f.basis());
    for (int i : A) r += mul_monomial(dunkl_T(f, i, k.k(i)), i);
    return r - euler(f, A);
}

// S'_A = 1/2 S~_A (1 + r_A).
inline Polynomial S_prime(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    return Rational(1, 2) * S_tilde(f + reflect_set(f, A), A, k);
}

// S''_A = S'_A composed with left multiplication by x_A.
inline Polynomial S_dprime(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    return S_prime(left_mul_imaginary(A, f), A, k);
}

// ---- spherical operators ------------------------------------------------------

// Gamma = -sum_{i<j} v_i (v_j L_ij f) with L_ij = x_i d_j - x_j d_i.
inline Polynomial spherical_dirac(const Polynomial& f) {
    Polynomial r(f.basis());
    for (int i = 1; i <= f.n(); ++i) {
        for (int j = i + 1; j <= f.n(); ++j) {
            Polynomial lij = mul_monomial(derivative(f, j), i) - mul_monomial(derivative(f, i), j);
            r -= left_mul_const(f.basis()->unit(i), left_mul_const(f.basis()->unit(j), lij));
        }
    }
    return r;
}

// Gamma~ = S_B r, with r = r_1 ... r_n applied first.
inline Polynomial spherical_dunkl_dirac(const Polynomial& f, const MultiplicitySeq& k) {
    IndexSet all = full_index_set(f.n());
    return casimir_S(reflect_set(f, all), all, k);
}

// f^o_{s,A} = (f + r_A f)/2. Total.
inline Polynomial spherical_value(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    return Rational(1, 2) * (f + reflect_set(f, A));
}

// Membership in ker S_A = ker(S_A, S'_A, S''_A), with the block-canonical
// multiplicities (membership does not depend on the admissible choice).
inline bool in_kernel_SA(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    MultiplicitySeq k = block_canonical_multiplicities(A, f.n());
    return casimir_S(f, A, k).is_zero() && S_prime(f, A, k).is_zero() &&
           S_dprime(f, A, k).is_zero();
}

// A-spherical derivative f'_{s,A} = -1/2 v_i delta1^i f, i in A. Requires
// f in ker S_A, which makes the result independent of i; computed with
// i = min(A) and cross-checked against a second index when |A| > 1.
inline Polynomial spherical_derivative(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    if (A.empty()) throw ValidationError("spherical derivative needs a nonempty index set");
    if (!in_kernel_SA(f, A)) {
        std::string label;
        for (int i : A) label += (label.empty() ? "" : ",") + std::to_string(i);
        throw NotASliceInputError("spherical derivative: input is not in ker S_{" + label + "}");
    }
    auto deriv_at = [&](int i) {
        return Rational(-1, 2) * left_mul_const(f.basis()->unit(i), delta1(f, i));
    };
    Polynomial g = deriv_at(A.front());
    if (A.size() > 1 && !(g == deriv_at(A[1])))
        throw NotASliceInputError("spherical derivative: choices of i disagree");
    return g;
}

// ---- operator context ----------------------------------------------------------

// Read-only bundle of basis, optional partition and multiplicities, as used by
// the command-line front end.
struct OperatorContext {
    BasisPtr basis;
    std::optional<SetPartition> partition;
    std::optional<MultiplicitySeq> multiplicities;

    OperatorContext(BasisPtr b, std::optional<SetPartition> p = {},
                    std::optional<MultiplicitySeq> k = {})
        : basis(std::move(b)), partition(std::move(p)), multiplicities(std::move(k)) {
        if (partition && partition->n() != basis->n())
            throw ValidationError("partition is over 1.." + std::to_string(partition->n()) +
                                  " but the basis has n = " + std::to_string(basis->n()));
        if (partition && multiplicities && !is_admissible(*partition, *multiplicities))
            throw ValidationError("multiplicities are not admissible for " + partition->to_string());
    }
};

}  // namespace dunkl
