#pragma once

#include <random>
#include <vector>

#include "dunkl/operators.hpp"
#include "dunkl/poly.hpp"

namespace dunkl::testing {

inline BasisPtr clifford_paravector(int n) {
    return HypercomplexBasis::standard(AlgebraSpec::clifford(n));
}

inline BasisPtr octonion_basis() { return HypercomplexBasis::standard(AlgebraSpec::octonion()); }

// M = <1, e1..e6, e123456> in clifford(6), the eight-dimensional subspace.
inline BasisPtr clifford6_m8() {
    return HypercomplexBasis::parse(AlgebraSpec::clifford(6), "1,e1,e2,e3,e4,e5,e6,e123456");
}

// Quaternions as the full algebra clifford(2) with basis (1, e1, e2, e12).
inline BasisPtr quaternion_basis() {
    return HypercomplexBasis::parse(AlgebraSpec::clifford(2), "1,e1,e2,e12");
}

inline Polynomial random_poly(const BasisPtr& basis, std::mt19937_64& rng, int maxdeg = 4,
                              int terms = 5) {
    Polynomial f(basis);
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(basis->n()) + 1, 0)};
        int deg = static_cast<int>(rng() % (static_cast<unsigned>(maxdeg) + 1));
        for (int d = 0; d < deg; ++d) m.exponents[rng() % m.exponents.size()]++;
        std::size_t p = rng() % basis->spec()->dimension();
        Rational c(static_cast<int>(rng() % 19) - 9, static_cast<int>(rng() % 3) + 1);
        f.add_term(m, AlgebraElement::unit(basis->spec(), p, c));
    }
    return f;
}

inline SetPartition random_partition(int n, std::mt19937_64& rng) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) {
        std::size_t choice = rng() % (blocks.size() + 1);
        if (choice == blocks.size())
            blocks.push_back({i});
        else
            blocks[choice].push_back(i);
    }
    return SetPartition(n, std::move(blocks));
}

// The ordered product [x_P^d, a], built with the poly-layer primitives only.
inline Polynomial ordered_block_product(const BasisPtr& basis, const SetPartition& P,
                                        const std::vector<int>& d, const AlgebraElement& a) {
    Polynomial r = Polynomial::constant(basis, a);
    for (int j = P.block_count(); j >= 1; --j)
        r = left_mul_pow_imaginary(P.block(j), static_cast<std::uint32_t>(d[j - 1]), r);
    return r;
}

// Random P-slice polynomial: sum of x0^e [x_P^d, a] with random data.
inline Polynomial random_pslice(const BasisPtr& basis, const SetPartition& P, std::mt19937_64& rng,
                                int maxdeg = 4, int terms = 4) {
    Polynomial f(basis);
    for (int t = 0; t < terms; ++t) {
        int e = static_cast<int>(rng() % 3);
        std::vector<int> d(static_cast<std::size_t>(P.block_count()), 0);
        int rest = static_cast<int>(rng() % (static_cast<unsigned>(maxdeg) + 1));
        for (int u = 0; u < rest; ++u) d[rng() % d.size()]++;
        AlgebraElement a = AlgebraElement::unit(basis->spec(), rng() % basis->spec()->dimension(),
                                                Rational(static_cast<int>(rng() % 9) - 4));
        if (a.is_zero()) continue;
        Polynomial term = ordered_block_product(basis, P, d, a);
        f += mul_real_scalar(mul_monomial(Polynomial::constant(basis, Rational(1)), 0,
                                          static_cast<std::uint32_t>(e)),
                             term);
    }
    return f;
}

}  // namespace dunkl::testing
