#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/spaces.hpp"

namespace dunkl {

// tau_j(f) = ((1 - |A_j|)/2) delta2^{alpha_j} f for f in F_P, mapping into
// F_{P_j}. The result does not depend on alpha_j in A_j; all choices are
// computed and compared. Identically zero on singleton blocks.
inline Polynomial tau(const Polynomial& f, const SetPartition& P, int j,
                      std::optional<int> alpha = {}) {
    const IndexSet& block = P.block(j);
    if (block.size() == 2) throw BlockSizeTwoError("tau is undefined on a block of size two");
    if (alpha && !std::binary_search(block.begin(), block.end(), *alpha))
        throw ValidationError("alpha " + std::to_string(*alpha) + " is not in block " +
                              std::to_string(j));
    if (MembershipResult m = is_member_FP(f, P); !m.ok)
        throw NotInFPError("tau input is not in F_P: " + m.failed + " image is nonzero");
    const Rational factor(1 - static_cast<int>(block.size()), 2);
    if (block.size() == 1) return Polynomial::zero(f.basis());
    Polynomial result = factor * delta2(f, alpha.value_or(block.front()));
    for (int a : block) {
        if (!(factor * delta2(f, a) == result))
            throw Error("tau: result depends on the choice of alpha");
    }
    if (!is_P_slice(result, P).ok) throw Error("tau: image is not P-slice");
    SetPartition refined = refine(P, j, block[0], block[1]);
    if (MembershipResult m = is_member_FP(result, refined); !m.ok)
        throw Error("tau: image is not in the refined space (" + m.failed + ")");
    return result;
}

// Delta_M f = sum_{|A_j| > 2} g_j with g_j = tau_j(f) in F_{P_j}. Requires
// f in F_P and no block of size two; the sum identity and the membership of
// every part are verified exactly.
inline std::vector<std::pair<int, Polynomial>> laplacian_decomposition(const Polynomial& f,
                                                                       const SetPartition& P) {
    for (int j = 1; j <= P.block_count(); ++j)
        if (P.block(j).size() == 2)
            throw BlockSizeTwoError("laplacian decomposition requires all blocks of size != 2");
    if (MembershipResult m = is_member_FP(f, P); !m.ok)
        throw NotInFPError("laplacian decomposition input is not in F_P: " + m.failed);
    std::vector<std::pair<int, Polynomial>> parts;
    Polynomial sum(f.basis());
    for (int j = 1; j <= P.block_count(); ++j) {
        if (P.block(j).size() <= 2) continue;
        Polynomial g = tau(f, P, j);  // membership in the refined space checked inside
        sum += g;
        parts.emplace_back(j, std::move(g));
    }
    if (!(sum == laplacian(f)))
        throw Error("laplacian decomposition: sum of tau_j(f) differs from Delta f");
    return parts;
}

// A human-readable list of named checks; passed() iff all hold.
struct VerifyReport {
    std::string name;
    struct Check {
        std::string label;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    void expect(std::string label, bool ok, std::string detail = "") {
        checks.push_back({std::move(label), ok, std::move(detail)});
    }
    // Exact polynomial comparison; on mismatch the detail names the first
    // monomial where the two sides differ.
    void expect_eq(std::string label, const Polynomial& got, const Polynomial& want) {
        if (got == want) {
            checks.push_back({std::move(label), true, ""});
            return;
        }
        Polynomial diff = got - want;
        checks.push_back({std::move(label), false,
                          "first offending monomial: " +
                              dunkl::to_string(diff.terms().begin()->first)});
    }
    std::string to_string() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.ok ? "  ok   " : "  FAIL ") << c.label;
            if (!c.ok && !c.detail.empty()) os << " [" << c.detail << "]";
            os << "\n";
        }
        return os.str();
    }
};

// For odd P and f in F_P of weight kappa < 0: Delta^{|kappa|} f is monogenic
// and P-slice, with every intermediate iterate P-slice.
inline VerifyReport verify_general_fueter(const Polynomial& f, const SetPartition& P) {
    if (!is_odd_partition(P)) throw NotOddPartitionError("partition has a block of even size");
    if (MembershipResult m = is_member_FP(f, P); !m.ok)
        throw NotInFPError("input is not in F_P: " + m.failed);
    VerifyReport rep;
    rep.name = "general Fueter";
    const int steps = (P.n() - P.block_count()) / 2;
    Polynomial h = f;
    for (int s = 1; s <= steps; ++s) {
        h = laplacian(h);
        rep.expect("Delta^" + std::to_string(s) + " f is P-slice", is_P_slice(h, P).ok);
    }
    rep.expect_eq("Delta^" + std::to_string(steps) + " f is monogenic", cauchy_riemann(h),
                  Polynomial::zero(f.basis()));
    return rep;
}

// Polyharmonicity of order |kappa|+1: Delta^{|kappa|+1} f = 0.
inline VerifyReport verify_polyharmonic(const Polynomial& f, const SetPartition& P) {
    if (!is_odd_partition(P)) throw NotOddPartitionError("partition has a block of even size");
    if (MembershipResult m = is_member_FP(f, P); !m.ok)
        throw NotInFPError("input is not in F_P: " + m.failed);
    VerifyReport rep;
    rep.name = "polyharmonic";
    const int order = (P.n() - P.block_count()) / 2 + 1;
    rep.expect_eq("Delta^" + std::to_string(order) + " f = 0", laplacian_power(f, order),
                  Polynomial::zero(f.basis()));
    return rep;
}

// Even-dimensional descent: for n even and slice-regular f, the iterate
// Delta^{(n-2)/2} f lies in F_{{1},{2},...,{n-1,n}}.
inline VerifyReport even_case_descent(const Polynomial& f) {
    const int n = f.n();
    if (n % 2 != 0) throw ValidationError("even-case descent needs n even");
    SetPartition whole = SetPartition::whole(n);
    if (MembershipResult m = is_member_FP(f, whole); !m.ok)
        throw NotInFPError("input is not slice-regular: " + m.failed);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n - 2; ++i) blocks.push_back({i});
    blocks.push_back({n - 1, n});
    SetPartition target(n, std::move(blocks));
    VerifyReport rep;
    rep.name = "even case";
    Polynomial h = laplacian_power(f, (n - 2) / 2);
    MembershipResult m = is_member_FP(h, target);
    rep.expect("Delta^" + std::to_string((n - 2) / 2) + " f is in F_" + target.to_string(), m.ok,
               m.ok ? "" : m.failed + " image is nonzero");
    return rep;
}

// Policy choosing the two elements split off a block; the default takes the
// two smallest.
using PairPolicy = std::function<std::pair<int, int>(const std::vector<int>&)>;

inline std::pair<int, int> smallest_pair_policy(const std::vector<int>& block) {
    return {block[0], block[1]};
}

// The tree of spaces reached from F_P by the tau_j operators. Nodes are
// partitions (merged by equality); every leaf is the all-singletons
// partition, and each edge records the refined block and the split pair.
struct FueterTree {
    struct Edge {
        std::size_t parent, child;
        int block_j;
        std::pair<int, int> split;
    };
    std::vector<SetPartition> nodes;  // nodes[0] is the root
    std::vector<Edge> edges;
    int height = 0;
};

inline FueterTree build_fueter_tree(const SetPartition& P, PairPolicy policy = {}) {
    if (!is_odd_partition(P)) throw NotOddPartitionError("Fueter tree needs an odd partition");
    if (!policy) policy = smallest_pair_policy;
    FueterTree tree;
    tree.height = (P.n() - P.block_count()) / 2;
    tree.nodes.push_back(P);
    for (std::size_t open = 0; open < tree.nodes.size(); ++open) {
        SetPartition node = tree.nodes[open];
        for (int j = 1; j <= node.block_count(); ++j) {
            if (node.block(j).size() <= 2) continue;
            auto [i1, i2] = policy(node.block(j));
            SetPartition child = refine(node, j, i1, i2);
            std::size_t idx = 0;
            for (; idx < tree.nodes.size(); ++idx)
                if (tree.nodes[idx] == child) break;
            if (idx == tree.nodes.size()) tree.nodes.push_back(child);
            tree.edges.push_back({open, idx, j, {i1, i2}});
        }
    }
    return tree;
}

inline BigInt count_fueter_trees(int n) { return odd_partition_count(n) - 1; }

// DOT rendering. Node labels are partition strings ("M" for all-singletons);
// edge labels are "tau j, alpha=i" with the default alpha of the refined
// block. With merged = false, each leaf box is drawn once per incoming edge.
inline std::string export_dot(const FueterTree& tree, bool merged = true) {
    auto is_leaf_partition = [](const SetPartition& p) {
        return p.block_count() == p.n();
    };
    std::ostringstream os;
    os << "digraph fueter_tree {\n";
    os << "  graph [height=" << tree.height << ", kappa=\""
       << dunkl_weight(tree.nodes.front()).str() << "\"];\n";
    std::size_t extra = 0;
    std::vector<std::string> leaf_lines, edge_lines;
    for (const auto& e : tree.edges) {
        const SetPartition& child = tree.nodes[e.child];
        std::string child_id = "n" + std::to_string(e.child);
        if (!merged && is_leaf_partition(child)) {
            child_id = "leaf" + std::to_string(extra++);
            leaf_lines.push_back("  " + child_id + " [label=\"M\"];\n");
        }
        std::ostringstream line;
        line << "  n" << e.parent << " -> " << child_id << " [label=\"tau " << e.block_j
             << ", alpha=" << e.split.first << "\"];\n";
        edge_lines.push_back(line.str());
    }
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        if (!merged && i > 0 && is_leaf_partition(tree.nodes[i])) continue;
        os << "  n" << i << " [label=\""
           << (is_leaf_partition(tree.nodes[i]) ? std::string("M") : tree.nodes[i].to_string())
           << "\"];\n";
    }
    for (const auto& line : leaf_lines) os << line;
    for (const auto& line : edge_lines) os << line;
    os << "}\n";
    return os.str();
}

}  // namespace dunkl
