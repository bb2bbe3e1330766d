#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

// A partition P = {A_1, ..., A_l} of {1..n}. Blocks are stored sorted by
// minimum element, each block ascending; block indices in the API are 1-based.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        if (n_ < 1) throw ValidationError("set partition needs n >= 1");
        std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
        for (auto& b : blocks_) {
            if (b.empty()) throw ValidationError("empty block in set partition");
            std::sort(b.begin(), b.end());
            for (int i : b) {
                if (i < 1 || i > n_)
                    throw ValidationError("element " + std::to_string(i) + " outside 1.." +
                                          std::to_string(n_));
                if (seen[static_cast<std::size_t>(i)]++)
                    throw ValidationError("element " + std::to_string(i) + " appears twice");
            }
        }
        for (int i = 1; i <= n_; ++i)
            if (!seen[static_cast<std::size_t>(i)])
                throw ValidationError("partition does not cover element " + std::to_string(i));
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
    }

    static SetPartition singletons(int n) {
        std::vector<std::vector<int>> blocks;
        for (int i = 1; i <= n; ++i) blocks.push_back({i});
        return SetPartition(n, std::move(blocks));
    }

    static SetPartition whole(int n) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) all[static_cast<std::size_t>(i) - 1] = i;
        return SetPartition(n, {all});
    }

    // Syntax: "{1}|{2,3,4}|{5,6,7}". If n < 0, n is taken as the largest element.
    static SetPartition parse(const std::string& s, int n = -1) {
        std::vector<std::vector<int>> blocks;
        int max_elem = 0;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        };
        while (true) {
            skip_ws();
            if (pos >= s.size() || s[pos] != '{') throw ParseError("expected '{' in partition '" + s + "'");
            ++pos;
            std::vector<int> block;
            while (true) {
                skip_ws();
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) throw ParseError("expected element in partition '" + s + "'");
                int v = std::stoi(s.substr(start, pos - start));
                block.push_back(v);
                max_elem = std::max(max_elem, v);
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (pos >= s.size() || s[pos] != '}') throw ParseError("expected '}' in partition '" + s + "'");
            ++pos;
            blocks.push_back(std::move(block));
            skip_ws();
            if (pos < s.size() && s[pos] == '|') {
                ++pos;
                continue;
            }
            break;
        }
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing characters in partition '" + s + "'");
        return SetPartition(n < 0 ? max_elem : n, std::move(blocks));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t j = 0; j < blocks_.size(); ++j) {
            if (j) os << "|";
            os << "{";
            for (std::size_t t = 0; t < blocks_[j].size(); ++t) {
                if (t) os << ",";
                os << blocks_[j][t];
            }
            os << "}";
        }
        return os.str();
    }

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    const std::vector<int>& block(int j) const {  // 1-based
        if (j < 1 || j > block_count())
            throw ValidationError("block index " + std::to_string(j) + " outside 1.." +
                                  std::to_string(block_count()));
        return blocks_[static_cast<std::size_t>(j) - 1];
    }

    int block_of(int element) const {  // 1-based block index containing element
        for (int j = 1; j <= block_count(); ++j) {
            const auto& b = block(j);
            if (std::binary_search(b.begin(), b.end(), element)) return j;
        }
        throw ValidationError("element " + std::to_string(element) + " not in partition");
    }

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Dunkl multiplicities k_1..k_n attached to the coordinates.
struct MultiplicitySeq {
    std::vector<Rational> values;  // values[i-1] = k_i

    const Rational& k(int i) const { return values[static_cast<std::size_t>(i) - 1]; }
    int n() const { return static_cast<int>(values.size()); }
};

// P-admissible: every k_i <= 0, per block 2 sum k_i = 1 - |A_j|, and at most
// one vanishing multiplicity per block.
inline bool is_admissible(const SetPartition& P, const MultiplicitySeq& k) {
    if (k.n() != P.n()) return false;
    for (const auto& v : k.values)
        if (v > 0) return false;
    for (int j = 1; j <= P.block_count(); ++j) {
        const auto& block = P.block(j);
        Rational sum(0);
        int zeros = 0;
        for (int i : block) {
            sum += k.k(i);
            if (k.k(i) == 0) ++zeros;
        }
        if (2 * sum != Rational(1 - static_cast<int>(block.size()))) return false;
        if (zeros > 1) return false;
    }
    return true;
}

// k_{alpha_j} = 0, all other k_i = -1/2; default alpha_j = min(A_j).
inline MultiplicitySeq canonical_multiplicities(const SetPartition& P,
                                                std::optional<std::vector<int>> alphas = {}) {
    std::vector<int> alpha;
    if (alphas) {
        alpha = *alphas;
        if (static_cast<int>(alpha.size()) != P.block_count())
            throw ValidationError("need one alpha per block");
        for (int j = 1; j <= P.block_count(); ++j) {
            const auto& b = P.block(j);
            if (!std::binary_search(b.begin(), b.end(), alpha[static_cast<std::size_t>(j) - 1]))
                throw ValidationError("alpha " + std::to_string(alpha[static_cast<std::size_t>(j) - 1]) +
                                      " is not in block " + std::to_string(j));
        }
    } else {
        for (int j = 1; j <= P.block_count(); ++j) alpha.push_back(P.block(j).front());
    }
    MultiplicitySeq k{std::vector<Rational>(static_cast<std::size_t>(P.n()), Rational(-1, 2))};
    for (int a : alpha) k.values[static_cast<std::size_t>(a) - 1] = 0;
    return k;
}

// k_i = -1/2 + 1/(2|A_j|) for i in A_j.
inline MultiplicitySeq uniform_multiplicities(const SetPartition& P) {
    MultiplicitySeq k{std::vector<Rational>(static_cast<std::size_t>(P.n()))};
    for (int j = 1; j <= P.block_count(); ++j) {
        const auto& b = P.block(j);
        Rational v = Rational(-1, 2) + Rational(1, 2 * static_cast<int>(b.size()));
        for (int i : b) k.values[static_cast<std::size_t>(i) - 1] = v;
    }
    return k;
}

// kappa = sum_j (1 - |A_j|)/2 = (l - n)/2.
inline Rational dunkl_weight(const SetPartition& P) {
    return Rational(P.block_count() - P.n(), 2);
}

inline bool is_odd_partition(const SetPartition& P) {
    for (const auto& b : P.blocks())
        if (b.size() % 2 == 0) return false;
    return true;
}

// P_j = (P \ A_j) u {{i1},{i2}, A_j \ {i1,i2}}.
inline SetPartition refine(const SetPartition& P, int j, int i1, int i2) {
    const auto& block = P.block(j);
    if (block.size() <= 2)
        throw ValidationError("refine requires a block of size > 2");
    if (i1 == i2) throw ValidationError("refine needs two distinct elements");
    for (int i : {i1, i2})
        if (!std::binary_search(block.begin(), block.end(), i))
            throw ValidationError("element " + std::to_string(i) + " is not in block " +
                                  std::to_string(j));
    std::vector<std::vector<int>> blocks;
    for (int t = 1; t <= P.block_count(); ++t) {
        if (t != j) {
            blocks.push_back(P.block(t));
            continue;
        }
        std::vector<int> rest;
        for (int i : block)
            if (i != i1 && i != i2) rest.push_back(i);
        blocks.push_back({i1});
        blocks.push_back({i2});
        blocks.push_back(std::move(rest));
    }
    return SetPartition(P.n(), std::move(blocks));
}

// Multiset of block sizes, ascending: the induced partition of the integer n.
inline std::vector<int> shape(const SetPartition& P) {
    std::vector<int> s;
    for (const auto& b : P.blocks()) s.push_back(static_cast<int>(b.size()));
    std::sort(s.begin(), s.end());
    return s;
}

inline bool equivalent(const SetPartition& P, const SetPartition& Q) {
    return P.n() == Q.n() && shape(P) == shape(Q);
}

// Bell numbers by the Bell triangle.
inline BigInt bell(int n) {
    if (n < 0) throw ValidationError("bell(n) needs n >= 0");
    std::vector<BigInt> row{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<BigInt> next;
        next.reserve(static_cast<std::size_t>(r) + 1);
        next.push_back(row.back());
        for (const BigInt& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

// p(n) by the pentagonal-number recurrence.
inline BigInt partition_count(int n) {
    if (n < 0) throw ValidationError("partition_count(n) needs n >= 0");
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt total = 0;
        for (int g = 1;; ++g) {
            long long pent1 = static_cast<long long>(g) * (3 * g - 1) / 2;
            long long pent2 = static_cast<long long>(g) * (3 * g + 1) / 2;
            if (pent1 > m && pent2 > m) break;
            BigInt term = 0;
            if (pent1 <= m) term += p[static_cast<std::size_t>(m - pent1)];
            if (pent2 <= m) term += p[static_cast<std::size_t>(m - pent2)];
            if (g % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

// q(n): number of partitions of n into odd parts.
inline BigInt odd_partition_count(int n) {
    if (n < 0) throw ValidationError("odd_partition_count(n) needs n >= 0");
    std::vector<BigInt> q(static_cast<std::size_t>(n) + 1);
    q[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int m = part; m <= n; ++m)
            q[static_cast<std::size_t>(m)] += q[static_cast<std::size_t>(m - part)];
    return q[static_cast<std::size_t>(n)];
}

// All integer partitions of n into odd parts, each sorted descending.
inline std::vector<std::vector<int>> odd_partition_shapes(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        int start = std::min(rest, max_part);
        if (start % 2 == 0) --start;
        for (int part = start; part >= 1; part -= 2) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All set partitions of {1..n} via restricted growth strings, in lexicographic
// order of the growth string.
inline std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&] {
        int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
        out.emplace_back(n, std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int maxseen) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int b = 0; b <= maxseen + 1; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(maxseen, b));
        }
    };
    if (n >= 1) rec(rec, 1, 0);  // rgs[0] = 0 always
    return out;
}

}  // namespace dunkl
