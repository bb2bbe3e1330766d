#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

enum class AlgebraKind { clifford, octonion };

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

// A finite-dimensional real alternative *-algebra described by a basis, a
// structure table and the signs of the *-involution on basis elements.
// Supported families: the Clifford algebras of signature (0,n) and the
// octonions. In both, the product of two basis elements is a signed basis
// element, so the table stores (sign, index) pairs.
class AlgebraSpec {
public:
    struct TableEntry {
        std::int8_t sign;
        std::uint16_t index;
    };

    static SpecPtr clifford(int n) {
        if (n < 1 || n > 8) throw ValidationError("clifford:N supports 1 <= N <= 8");
        static std::mutex mu;
        static std::map<int, SpecPtr> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(make_clifford(n)));
        cache.emplace(n, spec);
        return spec;
    }

    static SpecPtr octonion() {
        static SpecPtr cached = std::shared_ptr<AlgebraSpec>(new AlgebraSpec(make_octonion()));
        return cached;
    }

    // Spec string syntax: "clifford:N" (1 <= N <= 8) or "octonion".
    static SpecPtr parse(const std::string& s) {
        if (s == "octonion") return octonion();
        if (s.rfind("clifford:", 0) == 0) {
            const std::string tail = s.substr(9);
            if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("invalid algebra spec '" + s + "'");
            long n = std::stol(tail);
            if (n < 1 || n > 8) throw ValidationError("clifford:N supports 1 <= N <= 8");
            return clifford(static_cast<int>(n));
        }
        throw ParseError("invalid algebra spec '" + s + "' (expected clifford:N or octonion)");
    }

    AlgebraKind kind() const { return kind_; }
    std::size_t dimension() const { return names_.size(); }
    int generators() const { return gen_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::string& basis_name(std::size_t p) const { return names_[p]; }

    int basis_index(const std::string& name) const {
        auto it = name_to_index_.find(name);
        return it == name_to_index_.end() ? -1 : static_cast<int>(it->second);
    }

    TableEntry basis_product(std::size_t p, std::size_t q) const {
        return table_[p * dimension() + q];
    }

    int conjugation_sign(std::size_t p) const { return conj_signs_[p]; }

    bool same_as(const AlgebraSpec& other) const {
        return this == &other || (kind_ == other.kind_ && gen_ == other.gen_);
    }

    std::string to_string() const {
        return kind_ == AlgebraKind::octonion ? "octonion" : "clifford:" + std::to_string(gen_);
    }

private:
    AlgebraSpec() = default;

    static AlgebraSpec make_clifford(int n) {
        AlgebraSpec a;
        a.kind_ = AlgebraKind::clifford;
        a.gen_ = n;
        const std::size_t dim = std::size_t{1} << n;

        // Blades indexed by bitsets of {1..n}; basis ordered by
        // (grade, lexicographic on the ascending index sequence).
        std::vector<unsigned> masks(dim);
        for (std::size_t m = 0; m < dim; ++m) masks[m] = static_cast<unsigned>(m);
        std::sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
            int px = std::popcount(x), py = std::popcount(y);
            if (px != py) return px < py;
            if (x == y) return false;
            unsigned low = (x ^ y) & (0u - (x ^ y));
            return (x & low) != 0;
        });

        std::vector<std::uint16_t> mask_to_index(dim);
        a.names_.resize(dim);
        a.conj_signs_.resize(dim);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            unsigned m = masks[idx];
            mask_to_index[m] = static_cast<std::uint16_t>(idx);
            std::string name;
            if (m == 0) {
                name = "1";
            } else {
                name = "e";
                for (int b = 0; b < n; ++b)
                    if (m & (1u << b)) name += std::to_string(b + 1);
            }
            a.names_[idx] = name;
            a.name_to_index_.emplace(name, idx);
            int k = std::popcount(m);
            a.conj_signs_[idx] = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
        }

        a.table_.resize(dim * dim);
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = 0; q < dim; ++q) {
                unsigned x = masks[p], y = masks[q];
                // Transposition count: pairs (i in x, j in y) with i > j.
                int t = 0;
                for (unsigned s = x >> 1; s != 0; s >>= 1) t += std::popcount(s & y);
                int sq = std::popcount(x & y);  // e_i^2 = -1 per shared generator
                std::int8_t sign = ((t + sq) % 2 == 0) ? 1 : -1;
                a.table_[p * dim + q] = TableEntry{sign, mask_to_index[x ^ y]};
            }
        }
        return a;
    }

    // Octonions by Cayley-Dickson doubling of the quaternions:
    // (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)), conj(a,b) = (conj(a), -b),
    // l = (0,1). The basis names li, lj, lk denote the products l*i, l*j, l*k.
    static AlgebraSpec make_octonion() {
        using Quat = std::array<int, 4>;
        // Quaternion basis products: row p times column q -> (sign, index).
        static constexpr std::int8_t qsign[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        static constexpr std::uint8_t qindex[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        auto qmul = [](const Quat& u, const Quat& v) {
            Quat r{0, 0, 0, 0};
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    r[qindex[p][q]] += qsign[p][q] * u[p] * v[q];
            return r;
        };
        auto qconj = [](Quat u) {
            for (int p = 1; p < 4; ++p) u[p] = -u[p];
            return u;
        };
        auto qneg = [](Quat u) {
            for (auto& c : u) c = -c;
            return u;
        };
        auto qadd = [](Quat u, const Quat& v) {
            for (int p = 0; p < 4; ++p) u[p] += v[p];
            return u;
        };

        struct Pair {
            Quat a, b;
        };
        const Quat zero{0, 0, 0, 0};
        auto unit = [&](int p) {
            Quat u = zero;
            u[p] = 1;
            return u;
        };
        // 1, i, j, k, l, li = (0,-i), lj = (0,-j), lk = (0,-k).
        const std::array<Pair, 8> basis = {
            Pair{unit(0), zero}, Pair{unit(1), zero}, Pair{unit(2), zero}, Pair{unit(3), zero},
            Pair{zero, unit(0)}, Pair{zero, qneg(unit(1))}, Pair{zero, qneg(unit(2))},
            Pair{zero, qneg(unit(3))}};

        AlgebraSpec a;
        a.kind_ = AlgebraKind::octonion;
        a.gen_ = 7;
        a.names_ = {"1", "i", "j", "k", "l", "li", "lj", "lk"};
        for (std::size_t idx = 0; idx < 8; ++idx) a.name_to_index_.emplace(a.names_[idx], idx);
        a.conj_signs_.assign(8, -1);
        a.conj_signs_[0] = 1;

        a.table_.resize(64);
        for (std::size_t p = 0; p < 8; ++p) {
            for (std::size_t q = 0; q < 8; ++q) {
                const Pair &u = basis[p], &v = basis[q];
                Pair r{qadd(qmul(u.a, v.a), qneg(qmul(qconj(v.b), u.b))),
                       qadd(qmul(v.b, u.a), qmul(u.b, qconj(v.a)))};
                int found = -1, sign = 0;
                for (int idx = 0; idx < 8; ++idx) {
                    for (int s : {1, -1}) {
                        Pair cand = basis[idx];
                        if (s < 0) cand = Pair{qneg(cand.a), qneg(cand.b)};
                        if (cand.a == r.a && cand.b == r.b) {
                            found = idx;
                            sign = s;
                        }
                    }
                }
                if (found < 0) throw Error("octonion table construction failed");
                a.table_[p * 8 + q] =
                    TableEntry{static_cast<std::int8_t>(sign), static_cast<std::uint16_t>(found)};
            }
        }
        return a;
    }

    AlgebraKind kind_ = AlgebraKind::clifford;
    int gen_ = 0;
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> name_to_index_;
    std::vector<std::int8_t> conj_signs_;
    std::vector<TableEntry> table_;
};

// An element of the algebra: a dense vector of exact rational coordinates
// over the algebra basis. Immutable use is intended; all operations are pure.
class AlgebraElement {
public:
    explicit AlgebraElement(SpecPtr spec)
        : spec_(std::move(spec)), coords_(spec_->dimension()) {}

    static AlgebraElement zero(SpecPtr spec) { return AlgebraElement(std::move(spec)); }

    static AlgebraElement one(SpecPtr spec) { return unit(std::move(spec), 0); }

    static AlgebraElement unit(SpecPtr spec, std::size_t index, Rational c = Rational(1)) {
        AlgebraElement a(std::move(spec));
        a.coords_[index] = std::move(c);
        return a;
    }

    static AlgebraElement from_name(SpecPtr spec, const std::string& name) {
        int idx = spec->basis_index(name);
        if (idx < 0) throw ParseError("unknown basis element '" + name + "' in " + spec->to_string());
        return unit(std::move(spec), static_cast<std::size_t>(idx));
    }

    const SpecPtr& spec() const { return spec_; }
    const std::vector<Rational>& coords() const { return coords_; }
    Rational& operator[](std::size_t p) { return coords_[p]; }
    const Rational& operator[](std::size_t p) const { return coords_[p]; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_same_spec(o);
        for (std::size_t p = 0; p < coords_.size(); ++p) coords_[p] += o.coords_[p];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_same_spec(o);
        for (std::size_t p = 0; p < coords_.size(); ++p) coords_[p] -= o.coords_[p];
        return *this;
    }
    AlgebraElement& operator*=(const Rational& c) {
        for (auto& x : coords_) x *= c;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) {
        for (auto& x : a.coords_) x = -x;
        return a;
    }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.spec_->same_as(*b.spec_) && a.coords_ == b.coords_;
    }

    void check_same_spec(const AlgebraElement& o) const {
        if (!spec_->same_as(*o.spec_))
            throw SpecMismatchError("operands from different algebras: " + spec_->to_string() +
                                    " vs " + o.spec_->to_string());
    }

private:
    SpecPtr spec_;
    std::vector<Rational> coords_;
};

inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same_spec(b);
    AlgebraElement r(a.spec());
    const std::size_t dim = a.spec()->dimension();
    for (std::size_t p = 0; p < dim; ++p) {
        if (a[p] == 0) continue;
        for (std::size_t q = 0; q < dim; ++q) {
            if (b[q] == 0) continue;
            auto e = a.spec()->basis_product(p, q);
            Rational c = a[p] * b[q];
            if (e.sign < 0) c = -c;
            r[e.index] += c;
        }
    }
    return r;
}

inline AlgebraElement conjugate(const AlgebraElement& a) {
    AlgebraElement r = a;
    for (std::size_t p = 0; p < a.spec()->dimension(); ++p)
        if (a.spec()->conjugation_sign(p) < 0) r[p] = -r[p];
    return r;
}

// t(x) = x + x^c and n(x) = x x^c.
inline AlgebraElement trace(const AlgebraElement& a) { return a + conjugate(a); }
inline AlgebraElement norm_form(const AlgebraElement& a) { return mul(a, conjugate(a)); }

inline bool is_real(const AlgebraElement& a) {
    for (std::size_t p = 1; p < a.spec()->dimension(); ++p)
        if (a[p] != 0) return false;
    return true;
}

inline bool is_imaginary_unit(const AlgebraElement& a) {
    return trace(a).is_zero() && norm_form(a) == AlgebraElement::one(a.spec());
}

// [u, a] = u1(u2(...(uL a)...)), the literal right-nested product.
inline AlgebraElement ordered_product(const std::vector<AlgebraElement>& units, AlgebraElement a) {
    for (auto it = units.rbegin(); it != units.rend(); ++it) a = mul(*it, a);
    return a;
}

inline std::string to_string(const AlgebraElement& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t p = 0; p < a.spec()->dimension(); ++p) {
        const Rational& c = a[p];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::string& name = a.spec()->basis_name(p);
        if (p == 0) {
            os << mag.str();
        } else if (mag == 1) {
            os << name;
        } else {
            os << mag.str() << "*" << name;
        }
    }
    if (first) os << "0";
    return os.str();
}

class HypercomplexBasis;
using BasisPtr = std::shared_ptr<const HypercomplexBasis>;

// A validated hypercomplex basis (1, v1, ..., vn) of a subspace M: each vi is
// an imaginary unit and vi(vj a) = -vj(vi a) for i != j and every basis
// element a of the algebra.
class HypercomplexBasis {
public:
    const SpecPtr& spec() const { return spec_; }
    int n() const { return static_cast<int>(units_.size()) - 1; }
    const AlgebraElement& unit(int i) const { return units_[static_cast<std::size_t>(i)]; }
    const std::vector<AlgebraElement>& units() const { return units_; }

    bool same_as(const HypercomplexBasis& o) const {
        if (this == &o) return true;
        return spec_->same_as(*o.spec_) && units_ == o.units_;
    }

    static BasisPtr validate(SpecPtr spec, std::vector<AlgebraElement> elements) {
        if (elements.size() < 2)
            throw ValidationError("hypercomplex basis needs at least (1, v1)");
        if (!(elements[0] == AlgebraElement::one(spec)))
            throw ValidationError("hypercomplex basis must start with 1");
        const int n = static_cast<int>(elements.size()) - 1;
        for (int i = 1; i <= n; ++i) {
            elements[i].check_same_spec(elements[0]);
            if (!is_imaginary_unit(elements[i]))
                throw ValidationError("basis element v" + std::to_string(i) + " = " +
                                      to_string(elements[i]) +
                                      " is not an imaginary unit (t(v)=0, n(v)=1 required)");
        }
        const std::size_t dim = spec->dimension();
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                for (std::size_t p = 0; p < dim; ++p) {
                    AlgebraElement a = AlgebraElement::unit(spec, p);
                    AlgebraElement lhs = mul(elements[i], mul(elements[j], a));
                    AlgebraElement rhs = mul(elements[j], mul(elements[i], a));
                    if (!(lhs + rhs).is_zero())
                        throw ValidationError(
                            "anticommutation v" + std::to_string(i) + "(v" + std::to_string(j) +
                            " a) = -v" + std::to_string(j) + "(v" + std::to_string(i) +
                            " a) fails at a = " + spec->basis_name(p));
                }
            }
        }
        return std::make_shared<const HypercomplexBasis>(HypercomplexBasis(std::move(spec), std::move(elements)));
    }

    // The standard choice: paravectors (1, e1, ..., en) for clifford:n, the
    // full basis (1, i, j, k, l, li, lj, lk) for the octonions.
    static BasisPtr standard(const SpecPtr& spec) {
        std::vector<AlgebraElement> elems;
        elems.push_back(AlgebraElement::one(spec));
        if (spec->kind() == AlgebraKind::clifford) {
            for (int i = 1; i <= spec->generators(); ++i)
                elems.push_back(AlgebraElement::from_name(spec, "e" + std::to_string(i)));
        } else {
            for (std::size_t p = 1; p < spec->dimension(); ++p)
                elems.push_back(AlgebraElement::unit(spec, p));
        }
        return validate(spec, std::move(elems));
    }

    // Comma-separated basis element names, e.g. "1,e1,e2,e12".
    static BasisPtr parse(const SpecPtr& spec, const std::string& csv) {
        std::vector<AlgebraElement> elems;
        std::string token;
        std::istringstream is(csv);
        while (std::getline(is, token, ',')) {
            token.erase(std::remove_if(token.begin(), token.end(),
                                       [](unsigned char c) { return std::isspace(c); }),
                        token.end());
            if (token.empty()) throw ParseError("empty basis element name in '" + csv + "'");
            elems.push_back(AlgebraElement::from_name(spec, token));
        }
        return validate(spec, std::move(elems));
    }

private:
    HypercomplexBasis(SpecPtr spec, std::vector<AlgebraElement> units)
        : spec_(std::move(spec)), units_(std::move(units)) {}

    SpecPtr spec_;
    std::vector<AlgebraElement> units_;
};

inline BasisPtr validate_hypercomplex_basis(SpecPtr spec, std::vector<AlgebraElement> elements) {
    return HypercomplexBasis::validate(std::move(spec), std::move(elements));
}

}  // namespace dunkl
