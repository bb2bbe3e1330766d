#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/operators.hpp"

namespace dunkl {

// Outcome of a kernel membership test. On failure, `failed` names the
// operator whose image did not vanish and `witness` is that image.
struct MembershipResult {
    bool ok = true;
    std::string failed;
    std::optional<Polynomial> witness;

    explicit operator bool() const { return ok; }
};

namespace detail {

inline std::string set_label(const IndexSet& A) {
    std::string s;
    for (int i : A) s += (s.empty() ? "" : ",") + std::to_string(i);
    return "{" + s + "}";
}

inline MembershipResult kernel_SP(const Polynomial& f, const SetPartition& P,
                                  const MultiplicitySeq& k) {
    for (int j = 1; j <= P.block_count(); ++j) {
        const IndexSet& A = P.block(j);
        struct Op {
            const char* name;
            Polynomial image;
        };
        Op ops[] = {{"S_", casimir_S(f, A, k)},
                    {"S'_", S_prime(f, A, k)},
                    {"S''_", S_dprime(f, A, k)}};
        for (auto& op : ops) {
            if (!op.image.is_zero())
                return MembershipResult{false, op.name + set_label(A), std::move(op.image)};
        }
    }
    return {};
}

}  // namespace detail

// P-sliceness: f in ker S_P = cap_j ker(S_{A_j}, S'_{A_j}, S''_{A_j}), with
// canonical multiplicities. Strict mode re-checks with the uniform choice and
// requires agreement.
inline MembershipResult is_P_slice(const Polynomial& f, const SetPartition& P, bool strict = false) {
    if (P.n() != f.n()) throw ValidationError("partition size does not match the basis");
    MembershipResult res = detail::kernel_SP(f, P, canonical_multiplicities(P));
    if (strict) {
        MembershipResult uni = detail::kernel_SP(f, P, uniform_multiplicities(P));
        if (uni.ok != res.ok)
            throw Error("P-sliceness verdicts disagree between canonical and uniform multiplicities");
    }
    return res;
}

inline bool is_dunkl_monogenic(const Polynomial& f, const SetPartition& P,
                               const MultiplicitySeq& k) {
    return dunkl_CR(f, P, k).is_zero();
}

// Membership in F_P = ker D_P /\ ker S_P, canonical multiplicities.
inline MembershipResult is_member_FP(const Polynomial& f, const SetPartition& P) {
    if (P.n() != f.n()) throw ValidationError("partition size does not match the basis");
    MultiplicitySeq k = canonical_multiplicities(P);
    Polynomial dp = dunkl_CR(f, P, k);
    if (!dp.is_zero()) return MembershipResult{false, "D_P", std::move(dp)};
    return detail::kernel_SP(f, P, k);
}

// CK[g] = sum_k (-x0)^k / k! D_P^k g for g independent of x0 and P-slice.
// D_P lowers the degree, so the sum stops after deg(g)+1 terms.
inline Polynomial ck_extension(const Polynomial& g, const SetPartition& P,
                               const MultiplicitySeq& k) {
    check_admissible(g, P, k);
    if (depends_on(g, 0)) throw InputDependsOnX0Error("CK extension input must not involve x0");
    if (MembershipResult slice = is_P_slice(g, P); !slice.ok)
        throw InputNotPSliceError("CK extension input is not P-slice: " + slice.failed +
                                  " image has leading term " +
                                  to_string(slice.witness->terms().rbegin()->first));
    Polynomial result(g.basis());
    Polynomial dk = g;
    Rational factorial(1);
    for (int t = 0; !dk.is_zero(); ++t) {
        if (t > 0) factorial *= t;
        Polynomial term = Rational(1) / factorial * dk;
        // (-x0)^t
        Polynomial x0t = Polynomial::constant(g.basis(), Rational(t % 2 == 0 ? 1 : -1));
        x0t = mul_monomial(x0t, 0, static_cast<std::uint32_t>(t));
        result += mul_real_scalar(x0t, term);
        Polynomial next(g.basis());
        for (int j = 1; j <= P.block_count(); ++j) next += dirac_A(dk, P.block(j), k);
        dk = std::move(next);
    }
    return result;
}

// The ordered product [x_P^d, a] = x_{A_1}^{d_1}( ... (x_{A_l}^{d_l} a) ... ).
inline Polynomial ordered_imaginary_product(const BasisPtr& basis, const SetPartition& P,
                                            const std::vector<int>& d, const AlgebraElement& a) {
    if (static_cast<int>(d.size()) != P.block_count())
        throw ValidationError("exponent vector needs one entry per block");
    Polynomial r = Polynomial::constant(basis, a);
    for (int j = P.block_count(); j >= 1; --j) {
        int e = d[static_cast<std::size_t>(j) - 1];
        if (e < 0) throw ValidationError("negative exponent in ordered product");
        r = left_mul_pow_imaginary(P.block(j), static_cast<std::uint32_t>(e), r);
    }
    return r;
}

// P_{d,a} = CK[[x_P^d, a]], a P-Dunkl-regular homogeneous polynomial of
// degree d_1 + ... + d_l.
inline Polynomial basis_polynomial(const BasisPtr& basis, const SetPartition& P,
                                   const std::vector<int>& d, const AlgebraElement& a) {
    return ck_extension(ordered_imaginary_product(basis, P, d, a), P,
                        canonical_multiplicities(P));
}

// All weak compositions of total into `parts` parts, lexicographic.
inline std::vector<std::vector<int>> weak_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == parts - 1) {
            cur[static_cast<std::size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (parts >= 1) rec(rec, 0, total);
    return out;
}

// Exact rank over Q of the coefficient matrix of a family of polynomials,
// rows indexed by polynomials and columns by (monomial, algebra coordinate).
// Sparse row-echelon insertion: each row is reduced against the stored pivot
// rows and, if anything survives, becomes a new pivot.
inline std::size_t rank_over_Q(const std::vector<Polynomial>& polys) {
    using SparseRow = std::map<std::pair<Monomial, std::size_t>, Rational>;
    std::map<std::pair<Monomial, std::size_t>, SparseRow> pivots;
    std::size_t rank = 0;
    for (const auto& f : polys) {
        SparseRow row;
        for (const auto& [m, a] : f.terms())
            for (std::size_t p = 0; p < a.coords().size(); ++p)
                if (a[p] != 0) row.emplace(std::make_pair(m, p), a[p]);
        while (!row.empty()) {
            auto lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            Rational factor = row.begin()->second / it->second.at(lead);
            for (const auto& [col, val] : it->second) {
                auto [slot, inserted] = row.try_emplace(col, Rational(0));
                slot->second -= factor * val;
                if (slot->second == 0) row.erase(slot);
            }
        }
    }
    return rank;
}

// Basis {P_{d,v} : sum d_j = d, v in the algebra basis} of the homogeneous
// degree-d part of F_P(M). Membership and linear independence are verified.
inline std::vector<Polynomial> homogeneous_FP_basis(const BasisPtr& basis, const SetPartition& P,
                                                    int d) {
    std::vector<Polynomial> out;
    const std::size_t dim = basis->spec()->dimension();
    for (const auto& comp : weak_compositions(d, P.block_count())) {
        for (std::size_t p = 0; p < dim; ++p) {
            Polynomial f =
                basis_polynomial(basis, P, comp, AlgebraElement::unit(basis->spec(), p));
            if (!is_member_FP(f, P))
                throw Error("basis polynomial fails F_P membership");
            out.push_back(std::move(f));
        }
    }
    if (rank_over_Q(out) != out.size())
        throw Error("homogeneous F_P basis is not linearly independent");
    return out;
}

// Seeded random rational combination of basis polynomials P_{d,v} of degrees
// <= maxdeg. Deterministic in the seed.
inline Polynomial random_FP_element(const BasisPtr& basis, const SetPartition& P, int maxdeg,
                                    std::uint64_t seed, int terms = 6) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::uint64_t range) { return static_cast<int>(rng() % range); };
    Polynomial f(basis);
    for (int t = 0; t < terms; ++t) {
        int dtot = pick(static_cast<std::uint64_t>(maxdeg) + 1);
        std::vector<int> comp(static_cast<std::size_t>(P.block_count()), 0);
        for (int u = 0; u < dtot; ++u)
            comp[static_cast<std::size_t>(pick(static_cast<std::uint64_t>(P.block_count())))]++;
        AlgebraElement v = AlgebraElement::unit(
            basis->spec(), static_cast<std::size_t>(pick(basis->spec()->dimension())));
        Rational c(pick(19) - 9, pick(3) + 1);
        if (c == 0) continue;
        f += c * basis_polynomial(basis, P, comp, v);
    }
    return f;
}

// Decomposition f = sum_i x_A^i g_i with every g_i independent of the
// variables in A, computed per A-homogeneous component by exact division by
// powers of q_A. Requires f independent of x0; failure of a division is a
// constructive certificate that f is not in ker S_A.
inline std::vector<Polynomial> slice_decompose(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    if (depends_on(f, 0)) throw InputDependsOnX0Error("slice decomposition input must not involve x0");
    int dmax = -1;
    for (const auto& [m, a] : f.terms()) {
        int deg = 0;
        for (int i : A) deg += static_cast<int>(m.exponents[static_cast<std::size_t>(i)]);
        dmax = std::max(dmax, deg);
    }
    std::vector<Polynomial> out;
    if (dmax < 0) return out;  // zero polynomial
    Polynomial q = q_poly(f.basis(), A);
    for (int m = 0; m <= dmax; ++m) {
        Polynomial fm = homogeneous_component_in(f, A, m);
        Polynomial num = (m % 2 == 0) ? fm : left_mul_imaginary(A, fm);
        int half = (m + 1) / 2;
        Polynomial gm(f.basis());
        try {
            gm = num;
            for (int t = 0; t < half; ++t) gm = divide_exact_real(gm, q);
            if (half % 2 == 1) gm = -gm;  // divided by q^h, wanted (-q)^h
        } catch (const NotDivisibleError& e) {
            throw NotInKernelSAError("slice decomposition fails in A-degree " + std::to_string(m) +
                                     ": " + e.what());
        }
        for (int i : A)
            if (depends_on(gm, i))
                throw NotInKernelSAError("slice decomposition: quotient in A-degree " +
                                         std::to_string(m) + " still involves x" + std::to_string(i));
        out.push_back(std::move(gm));
    }
    return out;
}

}  // namespace dunkl
