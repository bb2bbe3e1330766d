#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/algebra.hpp"

namespace dunkl {

// Exponent vector for x0..xn.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    int degree() const {
        return static_cast<int>(std::accumulate(exponents.begin(), exponents.end(), 0u));
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (m.exponents[i] > 1) s += "^" + std::to_string(m.exponents[i]);
    }
    return s.empty() ? "1" : s;
}

// A set of coordinate indices in {1..n}, kept sorted and unique.
using IndexSet = std::vector<int>;

// Evaluation site x = sum_i x_i v_i, given by the coordinates x0..xn.
struct Point {
    std::vector<Rational> coords;
};

// Sparse polynomial in x0..xn with left algebra coefficients: a term
// (monomial m, coefficient a) denotes the function x -> m(x) * a. No zero
// coefficients are stored; iteration order over terms is lexicographic in the
// exponent vector, which fixes all printed output.
class Polynomial {
public:
    explicit Polynomial(BasisPtr basis) : basis_(std::move(basis)) {}

    static Polynomial zero(BasisPtr basis) { return Polynomial(std::move(basis)); }

    static Polynomial constant(BasisPtr basis, AlgebraElement a) {
        Polynomial f(std::move(basis));
        f.add_term(Monomial{std::vector<std::uint32_t>(f.nvars(), 0)}, std::move(a));
        return f;
    }
    static Polynomial constant(BasisPtr basis, const Rational& r) {
        auto a = AlgebraElement::unit(basis->spec(), 0, r);
        return constant(std::move(basis), std::move(a));
    }

    // x_i^power with coefficient 1.
    static Polynomial variable(BasisPtr basis, int i, std::uint32_t power = 1) {
        Polynomial f(basis);
        f.check_var(i);
        Monomial m{std::vector<std::uint32_t>(f.nvars(), 0)};
        m.exponents[static_cast<std::size_t>(i)] = power;
        f.add_term(m, AlgebraElement::one(basis->spec()));
        return f;
    }

    const BasisPtr& basis() const { return basis_; }
    int n() const { return basis_->n(); }
    std::size_t nvars() const { return static_cast<std::size_t>(basis_->n()) + 1; }
    const std::map<Monomial, AlgebraElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const AlgebraElement& a) {
        if (a.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, a);
        if (!inserted) {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_basis(o);
        for (const auto& [m, a] : o.terms_) add_term(m, a);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_basis(o);
        for (const auto& [m, a] : o.terms_) add_term(m, -a);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, a] : terms_) a *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.basis_->same_as(*b.basis_) && a.terms_ == b.terms_;
    }

    void check_same_basis(const Polynomial& o) const {
        if (!basis_->same_as(*o.basis_))
            throw SpecMismatchError("polynomials over different hypercomplex bases");
    }
    void check_var(int i) const {
        if (i < 0 || i > basis_->n())
            throw ValidationError("variable index x" + std::to_string(i) + " out of range 0.." +
                                  std::to_string(basis_->n()));
    }

private:
    BasisPtr basis_;
    std::map<Monomial, AlgebraElement> terms_;
};

inline Polynomial scale(const Polynomial& f, const Rational& c) {
    Polynomial r = f;
    r *= c;
    return r;
}

inline int degree(const Polynomial& f) {
    int d = -1;
    for (const auto& [m, a] : f.terms()) d = std::max(d, m.degree());
    return d;
}

// Coefficientwise a -> v*a.
inline Polynomial left_mul_const(const AlgebraElement& v, const Polynomial& f) {
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) r.add_term(m, mul(v, a));
    return r;
}

// Coefficientwise a -> a*c (used to attach right coefficients, e.g. x^j a).
inline Polynomial right_mul_const(const Polynomial& f, const AlgebraElement& c) {
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) r.add_term(m, mul(a, c));
    return r;
}

inline void check_index_set(const IndexSet& A, int n) {
    int prev = 0;
    for (int i : A) {
        if (i < 1 || i > n)
            throw ValidationError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        if (i <= prev) throw ValidationError("index set must be strictly increasing");
        prev = i;
    }
}

inline IndexSet full_index_set(int n) {
    IndexSet A(static_cast<std::size_t>(n));
    std::iota(A.begin(), A.end(), 1);
    return A;
}

// Multiplication by x_i^p on the monomial part.
inline Polynomial mul_monomial(const Polynomial& f, int i, std::uint32_t p = 1) {
    f.check_var(i);
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        Monomial mm = m;
        mm.exponents[static_cast<std::size_t>(i)] += p;
        r.add_term(mm, a);
    }
    return r;
}

// x_A * f = sum_{i in A} x_i * (v_i * f).
inline Polynomial left_mul_imaginary(const IndexSet& A, const Polynomial& f) {
    check_index_set(A, f.n());
    Polynomial r(f.basis());
    for (int i : A) r += mul_monomial(left_mul_const(f.basis()->unit(i), f), i);
    return r;
}

// The linear polynomial x_A = sum_{i in A} x_i v_i.
inline Polynomial imaginary_poly(const BasisPtr& basis, const IndexSet& A) {
    return left_mul_imaginary(A, Polynomial::constant(basis, Rational(1)));
}

// q_A = sum_{i in A} x_i^2, as a real scalar polynomial.
inline Polynomial q_poly(const BasisPtr& basis, const IndexSet& A) {
    check_index_set(A, basis->n());
    Polynomial r(basis);
    for (int i : A) r += Polynomial::variable(basis, i, 2);
    return r;
}

inline bool is_real_scalar_poly(const Polynomial& f) {
    for (const auto& [m, a] : f.terms())
        if (!is_real(a)) return false;
    return true;
}

// s * f for a real scalar polynomial s; real scalars are central, so this is
// well-defined even over the octonions.
inline Polynomial mul_real_scalar(const Polynomial& s, const Polynomial& f) {
    s.check_same_basis(f);
    if (!is_real_scalar_poly(s))
        throw ValidationError("mul_real_scalar: multiplier has non-real coefficients");
    Polynomial r(f.basis());
    for (const auto& [ms, cs] : s.terms()) {
        const Rational& c = cs[0];
        for (const auto& [mf, cf] : f.terms()) {
            Monomial m = ms;
            for (std::size_t v = 0; v < m.exponents.size(); ++v)
                m.exponents[v] += mf.exponents[v];
            r.add_term(m, c * cf);
        }
    }
    return r;
}

// x_A^m * f. Even powers of x_A are the real scalar (-q_A)^{m/2}.
inline Polynomial left_mul_pow_imaginary(const IndexSet& A, std::uint32_t m, const Polynomial& f) {
    Polynomial g = (m % 2 == 0) ? f : left_mul_imaginary(A, f);
    const std::uint32_t half = m / 2;
    if (half == 0) return g;
    Polynomial q = q_poly(f.basis(), A);
    Polynomial s = Polynomial::constant(f.basis(), Rational(half % 2 == 0 ? 1 : -1));
    for (std::uint32_t k = 0; k < half; ++k) s = mul_real_scalar(q, s);
    return mul_real_scalar(s, g);
}

// x_A^m as a polynomial.
inline Polynomial pow_imaginary(const BasisPtr& basis, const IndexSet& A, std::uint32_t m) {
    return left_mul_pow_imaginary(A, m, Polynomial::constant(basis, Rational(1)));
}

inline Polynomial derivative(const Polynomial& f, int i) {
    f.check_var(i);
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t e = m.exponents[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        Monomial mm = m;
        mm.exponents[static_cast<std::size_t>(i)] = e - 1;
        r.add_term(mm, Rational(e) * a);
    }
    return r;
}

// r_i: x_i -> -x_i; coefficients untouched. Defined for i in 1..n.
inline Polynomial reflect(const Polynomial& f, int i) {
    if (i < 1 || i > f.n()) throw ValidationError("reflection index outside 1..n");
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        bool odd = m.exponents[static_cast<std::size_t>(i)] % 2 == 1;
        r.add_term(m, odd ? -a : a);
    }
    return r;
}

inline Polynomial reflect_set(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t s = 0;
        for (int i : A) s += m.exponents[static_cast<std::size_t>(i)];
        r.add_term(m, s % 2 == 1 ? -a : a);
    }
    return r;
}

// E_A = sum_{i in A} x_i d/dx_i, acting termwise by the A-degree.
inline Polynomial euler(const Polynomial& f, const IndexSet& A) {
    check_index_set(A, f.n());
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t d = 0;
        for (int i : A) d += m.exponents[static_cast<std::size_t>(i)];
        if (d != 0) r.add_term(m, Rational(d) * a);
    }
    return r;
}

inline Polynomial divide_exact(const Polynomial& f, int i, std::uint32_t power) {
    f.check_var(i);
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        std::uint32_t e = m.exponents[static_cast<std::size_t>(i)];
        if (e < power)
            throw NotDivisibleError(i, to_string(m),
                                    "monomial " + to_string(m) + " is not divisible by x" +
                                        std::to_string(i) + "^" + std::to_string(power));
        Monomial mm = m;
        mm.exponents[static_cast<std::size_t>(i)] = e - power;
        r.add_term(mm, a);
    }
    return r;
}

// Exact division by a real scalar polynomial g. Reduction of the leading
// (lexicographically greatest) monomial either makes progress or certifies
// that f is not a multiple of g.
inline Polynomial divide_exact_real(const Polynomial& f, const Polynomial& g) {
    f.check_same_basis(g);
    if (g.is_zero()) throw ValidationError("division by the zero polynomial");
    if (!is_real_scalar_poly(g))
        throw ValidationError("divide_exact_real: divisor has non-real coefficients");
    const auto& glead = *g.terms().rbegin();
    const Rational glc = glead.second[0];
    Polynomial rem = f;
    Polynomial quot(f.basis());
    while (!rem.is_zero()) {
        const auto& [mf, cf] = *rem.terms().rbegin();
        Monomial mq = mf;
        for (std::size_t v = 0; v < mq.exponents.size(); ++v) {
            if (mq.exponents[v] < glead.first.exponents[v])
                throw NotDivisibleError(-1, to_string(mf),
                                        "leading monomial " + to_string(mf) +
                                            " is not divisible by " + to_string(glead.first));
            mq.exponents[v] -= glead.first.exponents[v];
        }
        AlgebraElement cq = Rational(1) / glc * cf;
        quot.add_term(mq, cq);
        for (const auto& [mg, cg] : g.terms()) {
            Monomial m = mq;
            for (std::size_t v = 0; v < m.exponents.size(); ++v) m.exponents[v] += mg.exponents[v];
            rem.add_term(m, -(cg[0] * cq));
        }
    }
    return quot;
}

inline AlgebraElement evaluate(const Polynomial& f, const Point& p) {
    if (p.coords.size() != f.nvars())
        throw ValidationError("point has " + std::to_string(p.coords.size()) +
                              " coordinates, expected " + std::to_string(f.nvars()));
    AlgebraElement r(f.basis()->spec());
    for (const auto& [m, a] : f.terms()) {
        Rational v(1);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (std::uint32_t k = 0; k < m.exponents[i]; ++k) v *= p.coords[i];
        r += v * a;
    }
    return r;
}

inline Polynomial restrict_x0(const Polynomial& f) {
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms())
        if (m.exponents[0] == 0) r.add_term(m, a);
    return r;
}

inline Polynomial homogeneous_component(const Polynomial& f, int d) {
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms())
        if (m.degree() == d) r.add_term(m, a);
    return r;
}

// Component of f that is homogeneous of degree d in the variables {x_i : i in A}.
inline Polynomial homogeneous_component_in(const Polynomial& f, const IndexSet& A, int d) {
    check_index_set(A, f.n());
    Polynomial r(f.basis());
    for (const auto& [m, a] : f.terms()) {
        int deg = 0;
        for (int i : A) deg += static_cast<int>(m.exponents[static_cast<std::size_t>(i)]);
        if (deg == d) r.add_term(m, a);
    }
    return r;
}

inline bool depends_on(const Polynomial& f, int i) {
    f.check_var(i);
    for (const auto& [m, a] : f.terms())
        if (m.exponents[static_cast<std::size_t>(i)] != 0) return true;
    return false;
}

// The polynomial x = x0 + x_[n] and its conjugate x0 - x_[n].
inline Polynomial x_poly(const BasisPtr& basis) {
    return Polynomial::variable(basis, 0) + imaginary_poly(basis, full_index_set(basis->n()));
}
inline Polynomial x_conj_poly(const BasisPtr& basis) {
    return Polynomial::variable(basis, 0) - imaginary_poly(basis, full_index_set(basis->n()));
}

// (x0 +- x_[n]) * f, the left-nested product used to build powers of x.
inline Polynomial left_mul_x(const Polynomial& f, bool conj = false) {
    Polynomial r = mul_monomial(f, 0);
    Polynomial im = left_mul_imaginary(full_index_set(f.n()), f);
    return conj ? r - im : r + im;
}

// x^m (or (x^c)^m). Powers of a single element of an alternative algebra are
// association-independent, so the left-nested expansion is the value.
inline Polynomial x_power(const BasisPtr& basis, std::uint32_t m, bool conj = false) {
    Polynomial r = Polynomial::constant(basis, Rational(1));
    for (std::uint32_t k = 0; k < m; ++k) r = left_mul_x(r, conj);
    return r;
}

// x^alpha (x^c)^beta a. Uses x x^c = x0^2 + q, a real scalar, so only powers
// of a single factor remain; valid pointwise in any alternative *-algebra.
inline Polynomial slice_poly_term(const BasisPtr& basis, std::uint32_t alpha, std::uint32_t beta,
                                  const AlgebraElement& a) {
    const std::uint32_t common = std::min(alpha, beta);
    Polynomial pow = x_power(basis, alpha >= beta ? alpha - beta : beta - alpha, beta > alpha);
    Polynomial r = right_mul_const(pow, a);
    if (common > 0) {
        Polynomial nx = mul_monomial(Polynomial::constant(basis, Rational(1)), 0, 2) +
                        q_poly(basis, full_index_set(basis->n()));
        Polynomial s = Polynomial::constant(basis, Rational(1));
        for (std::uint32_t k = 0; k < common; ++k) s = mul_real_scalar(nx, s);
        r = mul_real_scalar(s, r);
    }
    return r;
}

}  // namespace dunkl
