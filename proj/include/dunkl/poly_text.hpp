#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

// Text form of a polynomial:
//   poly  := ['-'] term (('+'|'-') term)*
//   term  := [rat '*'] (var ['^' int] '*')* [basis]
//   var   := 'x' int        (0 <= int <= n)
//   basis := an algebra basis element name (last factor if present)
//   rat   := int | int '/' int
// Whitespace is insignificant. A term with no basis name has coefficient 1;
// printing emits one term per (monomial, basis element) pair in canonical
// (lexicographic) monomial order.

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& spec = *f.basis()->spec();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, a] = *it;
        for (std::size_t p = 0; p < spec.dimension(); ++p) {
            const Rational& c = a[p];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::vector<std::string> factors;
            if (mag != 1) factors.push_back(mag.str());
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                if (m.exponents[i] == 0) continue;
                std::string v = "x" + std::to_string(i);
                if (m.exponents[i] > 1) v += "^" + std::to_string(m.exponents[i]);
                factors.push_back(v);
            }
            if (p != 0) factors.push_back(spec.basis_name(p));
            if (factors.empty()) factors.push_back("1");
            for (std::size_t k = 0; k < factors.size(); ++k) {
                if (k) os << "*";
                os << factors[k];
            }
        }
    }
    return os.str();
}

namespace detail {

inline void parse_term(Polynomial& acc, const BasisPtr& basis, std::string_view term, bool negative) {
    // Split on '*'; classify factors.
    std::vector<std::string> factors;
    std::size_t start = 0;
    while (start <= term.size()) {
        std::size_t star = term.find('*', start);
        if (star == std::string_view::npos) star = term.size();
        std::string_view piece = term.substr(start, star - start);
        if (piece.empty()) throw ParseError("empty factor in term '" + std::string(term) + "'");
        factors.emplace_back(piece);
        start = star + 1;
        if (star == term.size()) break;
    }
    Rational coeff(1);
    Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(basis->n()) + 1, 0)};
    int basis_idx = 0;
    bool saw_var = false, saw_basis = false, saw_rat = false;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const std::string& fct = factors[k];
        if (saw_basis) throw ParseError("basis name must be the last factor in '" + std::string(term) + "'");
        const bool digit_lead = std::isdigit(static_cast<unsigned char>(fct[0]));
        if (digit_lead && (basis->spec()->basis_index(fct) < 0 || (k == 0 && factors.size() > 1))) {
            if (k != 0 || saw_rat)
                throw ParseError("rational must be the first factor in '" + std::string(term) + "'");
            coeff = parse_rational(fct);
            saw_rat = true;
        } else if (fct[0] == 'x' && fct.size() > 1 &&
                   std::isdigit(static_cast<unsigned char>(fct[1]))) {
            std::size_t caret = fct.find('^');
            std::string idx_s = fct.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
            if (idx_s.empty() || idx_s.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad variable '" + fct + "'");
            long i = std::stol(idx_s);
            if (i < 0 || i > basis->n())
                throw ParseError("variable x" + std::to_string(i) + " outside 0.." +
                                 std::to_string(basis->n()));
            std::uint32_t e = 1;
            if (caret != std::string::npos) {
                std::string pow_s = fct.substr(caret + 1);
                if (pow_s.empty() || pow_s.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("bad exponent in '" + fct + "'");
                e = static_cast<std::uint32_t>(std::stoul(pow_s));
            }
            m.exponents[static_cast<std::size_t>(i)] += e;
            saw_var = true;
        } else {
            int idx = basis->spec()->basis_index(fct);
            if (idx < 0) throw ParseError("unknown factor '" + fct + "' in term");
            if (k + 1 != factors.size())
                throw ParseError("basis name must be the last factor in '" + std::string(term) + "'");
            basis_idx = idx;
            saw_basis = true;
        }
    }
    (void)saw_var;
    if (negative) coeff = -coeff;
    acc.add_term(m, AlgebraElement::unit(basis->spec(), static_cast<std::size_t>(basis_idx), coeff));
}

}  // namespace detail

inline Polynomial parse_polynomial(const BasisPtr& basis, std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty polynomial");
    Polynomial acc(basis);
    if (s == "0") return acc;
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }
    while (pos < s.size()) {
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        if (end == pos) throw ParseError("empty term in '" + std::string(text) + "'");
        detail::parse_term(acc, basis, std::string_view(s).substr(pos, end - pos), negative);
        if (end == s.size()) break;
        negative = s[end] == '-';
        pos = end + 1;
    }
    return acc;
}

}  // namespace dunkl
