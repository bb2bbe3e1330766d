#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dunkl/operators.hpp"
#include "helpers.hpp"

using namespace dunkl;
using namespace dunkl::testing;

namespace {

// Independent route for the spherical Dirac operator, from the global
// operator identity: Gamma f = -x_(sum_i v_i d_i f) - E f.
Polynomial spherical_dirac_oracle(const Polynomial& f) {
    IndexSet all = full_index_set(f.n());
    Polynomial imag_part(f.basis());
    for (int i = 1; i <= f.n(); ++i)
        imag_part += left_mul_const(f.basis()->unit(i), derivative(f, i));
    return -left_mul_imaginary(all, imag_part) - euler(f, all);
}

// Casimir operator by its defining commutator, 1/2([x_A, D_A] - 1).
Polynomial casimir_commutator(const Polynomial& f, const IndexSet& A, const MultiplicitySeq& k) {
    Polynomial lhs = left_mul_imaginary(A, dirac_A(f, A, k));
    Polynomial rhs = dirac_A(left_mul_imaginary(A, f), A, k);
    return Rational(1, 2) * (lhs - rhs - f);
}

Polynomial dirac_P(const Polynomial& f, const SetPartition& P, const MultiplicitySeq& k) {
    Polynomial r(f.basis());
    for (int j = 1; j <= P.block_count(); ++j) r += dirac_A(f, P.block(j), k);
    return r;
}

}  // namespace

TEST_CASE("Cauchy-Riemann operators on x and x^c") {
    for (auto basis : {clifford_paravector(3), clifford_paravector(5), octonion_basis(),
                       clifford6_m8()}) {
        const int n = basis->n();
        auto x = x_poly(basis);
        auto xc = x_conj_poly(basis);
        REQUIRE(cauchy_riemann(x) == Polynomial::constant(basis, Rational(1 - n)));
        REQUIRE(cauchy_riemann(xc) == Polynomial::constant(basis, Rational(1 + n)));
        REQUIRE(conj_cauchy_riemann(x) == Polynomial::constant(basis, Rational(1 + n)));
        REQUIRE(conj_cauchy_riemann(Polynomial::constant(basis, Rational(7))).is_zero());
        REQUIRE(conj_cauchy_riemann(Polynomial::variable(basis, 0)) ==
                Polynomial::constant(basis, Rational(1)));
        REQUIRE(laplacian(x_power(basis, 2)) == Polynomial::constant(basis, Rational(2 * (1 - n))));
    }
    SECTION("complex slice: d-bar of x0 + x1 v1 vanishes on a 2d basis") {
        auto basis = HypercomplexBasis::parse(AlgebraSpec::clifford(2), "1,e1");
        auto f = Polynomial::variable(basis, 0) +
                 left_mul_const(basis->unit(1), Polynomial::variable(basis, 1));
        REQUIRE(cauchy_riemann(f).is_zero());
    }
}

TEST_CASE("laplacian worked examples") {
    SECTION("Delta(x^4) on R^5 in clifford(4)") {
        auto basis = clifford_paravector(4);
        IndexSet all = full_index_set(4);
        auto q = q_poly(basis, all);
        auto x0sq = Polynomial::variable(basis, 0, 2);
        auto x0im = mul_monomial(imaginary_poly(basis, all), 0);
        auto want = Rational(-12) * (Rational(3) * x0sq - q + Rational(2) * x0im);
        REQUIRE(laplacian(x_power(basis, 4)) == want);
        REQUIRE(laplacian(want) == Polynomial::constant(basis, Rational(24)));
    }
    SECTION("Delta(x^3) on the octonions") {
        auto basis = octonion_basis();
        auto x0 = Polynomial::variable(basis, 0);
        auto want = Rational(-12) * (Rational(3) * x0 + imaginary_poly(basis, full_index_set(7)));
        REQUIRE(laplacian(x_power(basis, 3)) == want);
    }
}

TEST_CASE("difference operators") {
    auto basis = clifford_paravector(2);
    auto x1 = [&](std::uint32_t p) { return Polynomial::variable(basis, 1, p); };
    SECTION("delta1 extracts the odd part") {
        REQUIRE(delta1(x1(3), 1) == Rational(2) * x1(2));
        REQUIRE(delta1(x1(2), 1).is_zero());
        REQUIRE(delta1(Polynomial::constant(basis, Rational(5)), 1).is_zero());
    }
    SECTION("delta2 frozen values") {
        REQUIRE(delta2(x1(2), 1) == Polynomial::constant(basis, Rational(-4)));
        REQUIRE(delta2(x1(3), 1) == Rational(-4) * x1(1));
        REQUIRE(delta2(x1(1), 1).is_zero());
        REQUIRE(delta2(Polynomial::constant(basis, Rational(3)), 1).is_zero());
    }
    SECTION("dunkl_T with k = -1/2") {
        Rational k(-1, 2);
        REQUIRE(dunkl_T(x1(1), 1, k).is_zero());
        REQUIRE(dunkl_T(x1(2), 1, k) == Rational(2) * x1(1));
        REQUIRE(dunkl_T(x1(3), 1, k) == Rational(2) * x1(2));
    }
    SECTION("identities of the delta calculus") {
        std::mt19937_64 rng(21);
        for (auto b : {clifford_paravector(3), octonion_basis()}) {
            for (int iter = 0; iter < 40; ++iter) {
                auto f = random_poly(b, rng);
                for (int i : {1, 2}) {
                    // x_i delta2^i f = delta1^i f - 2 d_i f
                    REQUIRE(mul_monomial(delta2(f, i), i) ==
                            delta1(f, i) - Rational(2) * derivative(f, i));
                    // delta2 delta1 + [d_i, delta2] = 0
                    auto lhs = delta2(delta1(f, i), i) + derivative(delta2(f, i), i) -
                               delta2(derivative(f, i), i);
                    REQUIRE(lhs.is_zero());
                    // delta1 via the literal difference quotient
                    REQUIRE(delta1(f, i) == divide_exact(f - reflect(f, i), i, 1));
                }
            }
        }
    }
}

TEST_CASE("Dunkl-Dirac operators") {
    SECTION("D(x_) = -1 under admissible multiplicities") {
        for (auto basis : {clifford_paravector(3), clifford_paravector(5), octonion_basis()}) {
            const int n = basis->n();
            auto P = SetPartition::whole(n);
            for (auto k : {canonical_multiplicities(P), uniform_multiplicities(P)}) {
                auto im = imaginary_poly(basis, full_index_set(n));
                REQUIRE(dunkl_dirac(im, k) == Polynomial::constant(basis, Rational(-1)));
                REQUIRE(dunkl_dirac(Polynomial::constant(basis, Rational(2)), k).is_zero());
            }
        }
    }
    SECTION("power law D_P^s(x_Aj^m) = (-1)^s m!/(m-s)! x_Aj^{m-s}") {
        auto basis = clifford_paravector(5);
        auto P = SetPartition::parse("{1,2}|{3,4,5}");
        auto k = canonical_multiplicities(P);
        for (int j = 1; j <= 2; ++j) {
            for (int m = 0; m <= 5; ++m) {
                Polynomial f = pow_imaginary(basis, P.block(j), static_cast<std::uint32_t>(m));
                Rational coeff(1);
                for (int step = 1; step <= m; ++step) {
                    f = dirac_P(f, P, k);
                    coeff *= -Rational(m - step + 1);
                    REQUIRE(f == coeff * pow_imaginary(basis, P.block(j),
                                                       static_cast<std::uint32_t>(m - step)));
                }
                REQUIRE(dirac_P(f, P, k).is_zero());
            }
        }
    }
    SECTION("D_P examples") {
        auto basis = clifford_paravector(4);
        auto P = SetPartition::whole(4);
        auto k = canonical_multiplicities(P);
        REQUIRE(dunkl_CR(x_conj_poly(basis), P, k) == Polynomial::constant(basis, Rational(2)));
        // P_{m e_j} = (x0 + x_Aj)^m is Dunkl monogenic
        auto P2 = SetPartition::parse("{1,2}|{3}|{4}");
        auto k2 = canonical_multiplicities(P2);
        Polynomial pw = Polynomial::constant(basis, Rational(1));
        for (int m = 1; m <= 4; ++m) {
            pw = mul_monomial(pw, 0) + left_mul_imaginary(P2.block(1), pw);  // left-nested power
            REQUIRE(dunkl_CR(pw, P2, k2).is_zero());
        }
        REQUIRE_THROWS_AS(dunkl_CR(pw, P2, canonical_multiplicities(P)), ValidationError);
    }
}

TEST_CASE("Casimir-type operators") {
    SECTION("kernel examples for the single-block partition") {
        for (auto basis : {clifford_paravector(3), octonion_basis()}) {
            const int n = basis->n();
            IndexSet all = full_index_set(n);
            auto k = block_canonical_multiplicities(all, n);
            for (std::uint32_t m = 0; m <= 4; ++m)
                REQUIRE(casimir_S(x_power(basis, m), all, k).is_zero());
            REQUIRE(casimir_S(x_conj_poly(basis), all, k).is_zero());
            auto f = left_mul_const(basis->unit(2), Polynomial::variable(basis, 1));
            REQUIRE_FALSE(casimir_S(f, all, k).is_zero());
        }
    }
    SECTION("S operators vanish identically on singleton sets") {
        auto basis = clifford_paravector(3);
        std::mt19937_64 rng(22);
        for (int iter = 0; iter < 30; ++iter) {
            auto f = random_poly(basis, rng);
            for (int i = 1; i <= 3; ++i) {
                IndexSet A = {i};
                auto k = block_canonical_multiplicities(A, 3);
                REQUIRE(casimir_S(f, A, k).is_zero());
                REQUIRE(S_prime(f, A, k).is_zero());
                REQUIRE(S_dprime(f, A, k).is_zero());
            }
        }
    }
    SECTION("S'_A(x_A) = S''_A(1) = 0") {
        auto basis = clifford_paravector(4);
        IndexSet A = {2, 3};
        auto k = block_canonical_multiplicities(A, 4);
        auto xa = imaginary_poly(basis, A);
        REQUIRE(S_prime(xa, A, k).is_zero());
        REQUIRE(S_dprime(Polynomial::constant(basis, Rational(1)), A, k).is_zero());
    }
    SECTION("Casimir form agrees with the defining commutator") {
        std::mt19937_64 rng(23);
        for (auto basis : {clifford_paravector(4), octonion_basis()}) {
            for (int iter = 0; iter < 30; ++iter) {
                auto f = random_poly(basis, rng);
                auto P = random_partition(basis->n(), rng);
                auto k = canonical_multiplicities(P);
                for (int j = 1; j <= P.block_count(); ++j) {
                    const auto& A = P.block(j);
                    REQUIRE(casimir_S(f, A, k) == casimir_commutator(f, A, k));
                }
            }
        }
    }
    SECTION("admissibility is enforced") {
        auto basis = clifford_paravector(3);
        IndexSet all = full_index_set(3);
        MultiplicitySeq bad{std::vector<Rational>{0, 0, 0}};
        REQUIRE_THROWS_AS(casimir_S(x_poly(basis), all, bad), ValidationError);
    }
}

TEST_CASE("spherical Dirac operator") {
    SECTION("frozen examples, cross-checked against the global-identity route") {
        for (auto basis : {clifford_paravector(3), clifford_paravector(4), octonion_basis()}) {
            const int n = basis->n();
            REQUIRE(spherical_dirac(Polynomial::variable(basis, 0, 3)).is_zero());
            auto f = left_mul_const(basis->unit(1), Polynomial::variable(basis, 1));
            Polynomial want(basis);
            for (int j = 2; j <= n; ++j)
                want += left_mul_const(basis->unit(j), Polynomial::variable(basis, j));
            REQUIRE(spherical_dirac(f) == want);
            REQUIRE(spherical_dirac_oracle(f) == want);
            REQUIRE(spherical_dirac(x_poly(basis)) ==
                    Rational(n - 1) * imaginary_poly(basis, full_index_set(n)));
        }
    }
    SECTION("global operator identity x_(sum v_i d_i f) + E f + Gamma f = 0") {
        std::mt19937_64 rng(24);
        for (auto basis : {clifford_paravector(3), clifford_paravector(6), octonion_basis(),
                           clifford6_m8()}) {
            for (int iter = 0; iter < 40; ++iter) {
                auto f = random_poly(basis, rng);
                REQUIRE(spherical_dirac(f) == spherical_dirac_oracle(f));
            }
        }
    }
}

TEST_CASE("spherical Dunkl-Dirac operator") {
    auto basis = clifford_paravector(3);
    IndexSet all = full_index_set(3);
    auto k = block_canonical_multiplicities(all, 3);
    SECTION("annihilates slice polynomials") {
        auto a = AlgebraElement::from_name(basis->spec(), "e12");
        REQUIRE(spherical_dunkl_dirac(slice_poly_term(basis, 2, 0, a), k).is_zero());
        REQUIRE(spherical_dunkl_dirac(Polynomial::constant(basis, a), k).is_zero());
        REQUIRE(spherical_dunkl_dirac(slice_poly_term(basis, 2, 1, a), k).is_zero());
    }
    SECTION("nonzero away from slice functions") {
        auto f = left_mul_const(basis->unit(2), Polynomial::variable(basis, 1));
        REQUIRE_FALSE(spherical_dunkl_dirac(f, k).is_zero());
    }
}

TEST_CASE("kernel characterization on generated slice polynomials") {
    std::mt19937_64 rng(25);
    for (auto basis : {clifford_paravector(3), clifford_paravector(5), octonion_basis()}) {
        IndexSet all = full_index_set(basis->n());
        auto k = block_canonical_multiplicities(all, basis->n());
        auto ku = uniform_multiplicities(SetPartition::whole(basis->n()));
        for (int iter = 0; iter < 25; ++iter) {
            // random sum of x^alpha (x^c)^beta a
            Polynomial f(basis);
            for (int t = 0; t < 3; ++t) {
                auto a = AlgebraElement::unit(basis->spec(), rng() % basis->spec()->dimension(),
                                              Rational(static_cast<int>(rng() % 9) - 4));
                f += slice_poly_term(basis, rng() % 3, rng() % 3, a);
            }
            REQUIRE(casimir_S(f, all, k).is_zero());
            REQUIRE(casimir_S(f, all, ku).is_zero());
            REQUIRE(spherical_dunkl_dirac(f, k).is_zero());
            // slice-regular: sum x^j a has D = 0 as well
            Polynomial g(basis);
            for (int t = 0; t < 3; ++t) {
                auto a = AlgebraElement::unit(basis->spec(), rng() % basis->spec()->dimension(),
                                              Rational(static_cast<int>(rng() % 9) - 4));
                g += right_mul_const(x_power(basis, rng() % 4), a);
            }
            REQUIRE(casimir_S(g, all, k).is_zero());
            auto P = SetPartition::whole(basis->n());
            REQUIRE(dunkl_CR(g, P, canonical_multiplicities(P)).is_zero());
        }
    }
}

TEST_CASE("spherical value and derivative") {
    SECTION("f = x1 v1 on A = {1}") {
        auto basis = clifford_paravector(3);
        auto f = left_mul_const(basis->unit(1), Polynomial::variable(basis, 1));
        REQUIRE(spherical_value(f, {1}).is_zero());
        REQUIRE(spherical_derivative(f, {1}) == Polynomial::constant(basis, Rational(1)));
    }
    SECTION("f = x^2 over the full set") {
        auto basis = clifford_paravector(4);
        auto f = x_power(basis, 2);
        REQUIRE(spherical_derivative(f, full_index_set(4)) ==
                Rational(2) * Polynomial::variable(basis, 0));
        REQUIRE(spherical_value(f, full_index_set(4)) ==
                Polynomial::variable(basis, 0, 2) - q_poly(basis, full_index_set(4)));
    }
    SECTION("non-slice input is rejected") {
        auto basis = clifford_paravector(3);
        auto f = left_mul_const(basis->unit(2), Polynomial::variable(basis, 1));
        REQUIRE_THROWS_AS(spherical_derivative(f, {1, 2}), NotASliceInputError);
    }
    SECTION("f = f_value + x_A f_derivative on ker S_A") {
        std::mt19937_64 rng(26);
        for (auto basis : {clifford_paravector(4), octonion_basis()}) {
            for (int iter = 0; iter < 25; ++iter) {
                auto P = random_partition(basis->n(), rng);
                auto f = random_pslice(basis, P, rng);
                for (int j = 1; j <= P.block_count(); ++j) {
                    const auto& A = P.block(j);
                    REQUIRE(in_kernel_SA(f, A));
                    auto fv = spherical_value(f, A);
                    auto fd = spherical_derivative(f, A);
                    REQUIRE(f == fv + left_mul_imaginary(A, fd));
                }
            }
        }
    }
}

TEST_CASE("commutation relations") {
    std::mt19937_64 rng(27);
    for (auto basis : {clifford_paravector(3), clifford_paravector(6), octonion_basis(),
                       clifford6_m8()}) {
        const int n = basis->n();
        IndexSet all = full_index_set(n);
        auto P = SetPartition::whole(n);
        for (auto k : {canonical_multiplicities(P), uniform_multiplicities(P)}) {
            for (int iter = 0; iter < 10; ++iter) {
                auto f = random_poly(basis, rng);
                auto S = [&](const Polynomial& g) { return casimir_S(g, all, k); };
                auto D = [&](const Polynomial& g) { return dunkl_dirac(g, k); };
                auto X = [&](const Polynomial& g) { return left_mul_imaginary(all, g); };
                auto G = [&](const Polynomial& g) { return spherical_dunkl_dirac(g, k); };
                auto R = [&](const Polynomial& g) { return reflect_set(g, all); };
                REQUIRE((S(D(f)) + D(S(f))).is_zero());
                REQUIRE((S(X(f)) + X(S(f))).is_zero());
                REQUIRE((G(D(f)) - D(G(f))).is_zero());
                REQUIRE((G(X(f)) - X(G(f))).is_zero());
                REQUIRE((D(R(f)) + R(D(f))).is_zero());
                // S is even under the total reflection (both x_ and D_ are
                // odd), so it is the commutator [S, r] that vanishes.
                REQUIRE((S(R(f)) - R(S(f))).is_zero());
                REQUIRE((X(R(f)) + R(X(f))).is_zero());
                REQUIRE((euler(R(f), all) - R(euler(f, all))).is_zero());
            }
        }
    }
}

TEST_CASE("factorizations of the Laplacians") {
    std::mt19937_64 rng(28);
    for (auto basis : {clifford_paravector(4), octonion_basis()}) {
        for (int iter = 0; iter < 25; ++iter) {
            auto f = random_poly(basis, rng);
            REQUIRE(laplacian(f) == cauchy_riemann(conj_cauchy_riemann(f)));
            REQUIRE(laplacian(f) == conj_cauchy_riemann(cauchy_riemann(f)));
            auto P = random_partition(basis->n(), rng);
            auto k = canonical_multiplicities(P);
            auto dd = dunkl_laplacian(f, P, k);
            REQUIRE(dd == dunkl_CR(conj_dunkl_CR(f, P, k), P, k));
            REQUIRE(dd == conj_dunkl_CR(dunkl_CR(f, P, k), P, k));
            // definitional identity, both sides computed independently
            Polynomial rhs = laplacian(f);
            for (int i = 1; i <= basis->n(); ++i) rhs -= k.k(i) * delta2(f, i);
            REQUIRE(dd == rhs);
        }
    }
}

TEST_CASE("identities on P-slice functions") {
    std::mt19937_64 rng(29);
    for (auto basis : {clifford_paravector(4), clifford_paravector(5), octonion_basis()}) {
        for (int iter = 0; iter < 15; ++iter) {
            auto P = random_partition(basis->n(), rng);
            auto k = canonical_multiplicities(P);
            auto f = random_pslice(basis, P, rng);
            // D_P f = d-bar f + sum_j (|A_j| - 1) f'_{s,A_j}
            Polynomial rhs = cauchy_riemann(f);
            for (int j = 1; j <= P.block_count(); ++j) {
                const auto& A = P.block(j);
                if (A.size() > 1)
                    rhs += Rational(static_cast<int>(A.size()) - 1) * spherical_derivative(f, A);
            }
            REQUIRE(dunkl_CR(f, P, k) == rhs);
            // Dunkl Laplacian of a P-slice function via delta2 on one index per block
            Polynomial rhs2 = laplacian(f);
            for (int j = 1; j <= P.block_count(); ++j) {
                const auto& A = P.block(j);
                int pick = A[rng() % A.size()];
                rhs2 += Rational(static_cast<int>(A.size()) - 1, 2) * delta2(f, pick);
            }
            REQUIRE(dunkl_laplacian(f, P, k) == rhs2);
            // closure of ker S_P under d-bar, d and Delta
            for (const Polynomial& img :
                 {cauchy_riemann(f), conj_cauchy_riemann(f), laplacian(f)}) {
                for (int j = 1; j <= P.block_count(); ++j) REQUIRE(in_kernel_SA(img, P.block(j)));
            }
        }
    }
}

TEST_CASE("operator context validation") {
    auto basis = clifford_paravector(3);
    auto P = SetPartition::whole(3);
    REQUIRE_NOTHROW(OperatorContext(basis, P, canonical_multiplicities(P)));
    REQUIRE_THROWS_AS(OperatorContext(basis, SetPartition::whole(2)), ValidationError);
    MultiplicitySeq bad{std::vector<Rational>{0, 0, 0}};
    REQUIRE_THROWS_AS(OperatorContext(basis, P, bad), ValidationError);
}
