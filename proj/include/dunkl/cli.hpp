#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/verify.hpp"

// Command-line front end. Exit codes: 0 on success or verified, 1 when a
// mathematical verification fails (membership verdict "no", a kernel
// certificate, a failed suite), 2 on parse or validation errors.

namespace dunkl::cli {

struct Options {
    std::string algebra;
    std::string basis_csv;
    std::string partition;
    std::string multiplicities = "canonical";
    std::string alphas;
    std::string format = "text";
    std::string op;
    std::string poly;
    std::string suite = "all";
    int power = -1;
    int index = 0;
    int block = 0;
    int degree = 0;
    bool unmerged = false;
};

struct Config {
    BasisPtr basis;
    std::optional<SetPartition> partition;
    std::optional<MultiplicitySeq> k;
};

inline Config make_config(const Options& o, bool need_partition) {
    Config cfg;
    if (o.algebra.empty()) throw ValidationError("--algebra is required");
    if (o.basis_csv.empty()) throw ValidationError("--basis is required");
    auto spec = AlgebraSpec::parse(o.algebra);
    cfg.basis = HypercomplexBasis::parse(spec, o.basis_csv);
    if (!o.partition.empty()) {
        cfg.partition = SetPartition::parse(o.partition, cfg.basis->n());
        if (o.multiplicities == "canonical") {
            std::optional<std::vector<int>> alphas;
            if (!o.alphas.empty()) {
                std::vector<int> a;
                std::istringstream is(o.alphas);
                std::string tok;
                while (std::getline(is, tok, ',')) a.push_back(std::stoi(tok));
                alphas = std::move(a);
            }
            cfg.k = canonical_multiplicities(*cfg.partition, alphas);
        } else if (o.multiplicities == "uniform") {
            cfg.k = uniform_multiplicities(*cfg.partition);
        } else {
            throw ValidationError("--multiplicities must be canonical or uniform");
        }
        OperatorContext validated(cfg.basis, cfg.partition, cfg.k);
        (void)validated;
    } else if (need_partition) {
        throw ValidationError("--partition is required for this command");
    }
    return cfg;
}

inline Polynomial input_poly(const Config& cfg, const Options& o) {
    if (o.power >= 0) {
        if (!o.poly.empty())
            throw ValidationError("give either a polynomial or --power, not both");
        return x_power(cfg.basis, static_cast<std::uint32_t>(o.power));
    }
    if (o.poly.empty()) throw ValidationError("missing polynomial argument (or --power m)");
    return parse_polynomial(cfg.basis, o.poly);
}

inline IndexSet op_index_set(const Config& cfg, const Options& o) {
    if (o.block > 0) {
        if (!cfg.partition) throw ValidationError("--block requires --partition");
        return cfg.partition->block(o.block);
    }
    if (o.op == "spherical_dunkl_dirac") return full_index_set(cfg.basis->n());
    throw ValidationError("operator '" + o.op + "' needs --set i,j,... or --block j");
}

inline void emit(const Options& o, std::ostream& out, const std::string& cmd,
                 const std::string& input, const std::string& output,
                 const std::string& extra_key = "", const std::string& extra_val = "") {
    if (o.format == "jsonl") {
        nlohmann::json j{{"cmd", cmd},           {"algebra", o.algebra},
                         {"basis", o.basis_csv}, {"partition", o.partition},
                         {"multiplicities", o.multiplicities}, {"input", input},
                         {"output", output}};
        if (!o.op.empty()) j["op"] = o.op;
        if (!extra_key.empty()) j[extra_key] = extra_val;
        out << j.dump() << "\n";
    } else {
        out << output << "\n";
    }
}

inline int run_ops(Options& o, std::ostream& out) {
    // operators that need a coordinate index
    const bool needs_partition =
        o.op == "dunkl_cr" || o.op == "conj_dunkl_cr" || o.op == "dunkl_laplacian" ||
        o.op == "tau" || o.op == "dunkl_t";
    Config cfg = make_config(o, needs_partition);
    Polynomial f = input_poly(cfg, o);
    auto block_multiplicities = [&](const IndexSet& A) {
        if (o.multiplicities == "uniform") {
            MultiplicitySeq k{std::vector<Rational>(static_cast<std::size_t>(cfg.basis->n()))};
            Rational v = Rational(-1, 2) + Rational(1, 2 * static_cast<int>(A.size()));
            for (int i : A) k.values[static_cast<std::size_t>(i) - 1] = v;
            return k;
        }
        return block_canonical_multiplicities(A, cfg.basis->n());
    };

    Polynomial result(cfg.basis);
    if (o.op == "cauchy_riemann") {
        result = cauchy_riemann(f);
    } else if (o.op == "conj_cauchy_riemann") {
        result = conj_cauchy_riemann(f);
    } else if (o.op == "laplacian") {
        result = laplacian(f);
    } else if (o.op == "spherical_dirac") {
        result = spherical_dirac(f);
    } else if (o.op == "euler") {
        result = euler(f, op_index_set(cfg, o));
    } else if (o.op == "delta1" || o.op == "delta2" || o.op == "derivative" ||
               o.op == "reflect") {
        if (o.index < 0) throw ValidationError("--index is required for " + o.op);
        if (o.op == "delta1") result = delta1(f, o.index);
        if (o.op == "delta2") result = delta2(f, o.index);
        if (o.op == "derivative") result = derivative(f, o.index);
        if (o.op == "reflect") result = reflect(f, o.index);
    } else if (o.op == "dunkl_t") {
        if (o.index < 1) throw ValidationError("--index is required for dunkl_t");
        result = dunkl_T(f, o.index, cfg.k->k(o.index));
    } else if (o.op == "dunkl_cr") {
        result = dunkl_CR(f, *cfg.partition, *cfg.k);
    } else if (o.op == "conj_dunkl_cr") {
        result = conj_dunkl_CR(f, *cfg.partition, *cfg.k);
    } else if (o.op == "dunkl_laplacian") {
        result = dunkl_laplacian(f, *cfg.partition, *cfg.k);
    } else if (o.op == "casimir" || o.op == "s_prime" || o.op == "s_dprime" ||
               o.op == "spherical_dunkl_dirac") {
        IndexSet A = op_index_set(cfg, o);
        auto k = block_multiplicities(A);
        if (o.op == "casimir") result = casimir_S(f, A, k);
        if (o.op == "s_prime") result = S_prime(f, A, k);
        if (o.op == "s_dprime") result = S_dprime(f, A, k);
        if (o.op == "spherical_dunkl_dirac") result = spherical_dunkl_dirac(f, k);
    } else if (o.op == "spherical_value") {
        result = spherical_value(f, op_index_set(cfg, o));
    } else if (o.op == "spherical_derivative") {
        result = spherical_derivative(f, op_index_set(cfg, o));
    } else if (o.op == "tau") {
        if (o.block < 1) throw ValidationError("--block is required for tau");
        std::optional<int> alpha;
        if (o.index > 0) alpha = o.index;
        result = tau(f, *cfg.partition, o.block, alpha);
    } else if (o.op == "slice_decompose") {
        IndexSet A = op_index_set(cfg, o);
        auto parts = slice_decompose(f, A);
        for (std::size_t i = 0; i < parts.size(); ++i)
            emit(o, out, "ops", to_string(f), to_string(parts[i]), "component",
                 std::to_string(i));
        return 0;
    } else {
        throw ValidationError("unknown operator '" + o.op + "'");
    }
    emit(o, out, "ops", to_string(f), to_string(result));
    return 0;
}

inline int run_ck(Options& o, std::ostream& out) {
    Config cfg = make_config(o, true);
    Polynomial g = input_poly(cfg, o);
    Polynomial f = ck_extension(g, *cfg.partition, *cfg.k);
    emit(o, out, "ck", to_string(g), to_string(f));
    return 0;
}

inline int run_member(Options& o, std::ostream& out) {
    Config cfg = make_config(o, true);
    Polynomial f = input_poly(cfg, o);
    auto slice = is_P_slice(f, *cfg.partition);
    bool monogenic = is_dunkl_monogenic(f, *cfg.partition, *cfg.k);
    auto member = is_member_FP(f, *cfg.partition);
    if (o.format == "jsonl") {
        nlohmann::json j{{"cmd", "member"},
                         {"algebra", o.algebra},
                         {"basis", o.basis_csv},
                         {"partition", o.partition},
                         {"multiplicities", o.multiplicities},
                         {"input", to_string(f)},
                         {"p_slice", slice.ok},
                         {"dunkl_monogenic", monogenic},
                         {"member", member.ok}};
        if (!member.ok) j["witness"] = member.failed;
        out << j.dump() << "\n";
    } else {
        out << "P-slice: " << (slice.ok ? "yes" : "no") << "\n";
        out << "Dunkl-monogenic: " << (monogenic ? "yes" : "no") << "\n";
        out << "member of F_P: " << (member.ok ? "yes" : "no") << "\n";
        if (!member.ok)
            out << "witness: " << member.failed << " image "
                << to_string(*member.witness) << "\n";
    }
    return member.ok ? 0 : 1;
}

inline int run_basis(Options& o, std::ostream& out) {
    Config cfg = make_config(o, true);
    auto fam = homogeneous_FP_basis(cfg.basis, *cfg.partition, o.degree);
    for (const auto& f : fam) emit(o, out, "basis", std::to_string(o.degree), to_string(f));
    return 0;
}

inline int run_tree(Options& o, std::ostream& out) {
    Config cfg = make_config(o, true);
    auto tree = build_fueter_tree(*cfg.partition);
    std::string dot = export_dot(tree, !o.unmerged);
    if (o.format == "jsonl") {
        nlohmann::json j{{"cmd", "tree"},
                         {"algebra", o.algebra},
                         {"basis", o.basis_csv},
                         {"partition", o.partition},
                         {"height", tree.height},
                         {"nodes", tree.nodes.size()},
                         {"edges", tree.edges.size()},
                         {"dot", dot}};
        out << j.dump() << "\n";
    } else {
        out << dot;
    }
    return 0;
}

inline int run_count(const std::vector<int>& ns, const Options& o, std::ostream& out) {
    for (int n : ns) {
        if (n < 1) throw ValidationError("count needs n >= 1");
        auto p = partition_count(n);
        auto q = odd_partition_count(n);
        auto b = bell(n);
        auto trees = count_fueter_trees(n);
        if (o.format == "jsonl") {
            nlohmann::json j{{"cmd", "count"},
                             {"n", n},
                             {"p", p.str()},
                             {"q", q.str()},
                             {"bell", b.str()},
                             {"fueter_trees", trees.str()}};
            out << j.dump() << "\n";
        } else {
            out << n << " | " << p.str() << " | " << q.str() << " | " << b.str() << " | "
                << trees.str() << "\n";
        }
    }
    return 0;
}

inline int run_verify(const Options& o, std::ostream& out) {
    bool found = false;
    bool all_ok = true;
    for (const auto& suite : verify::all_suites()) {
        if (o.suite != "all" && o.suite != suite.name) continue;
        found = true;
        auto rep = suite.run();
        bool ok = rep.passed();
        all_ok = all_ok && ok;
        if (o.format == "jsonl") {
            nlohmann::json j{{"cmd", "verify"}, {"suite", suite.name}, {"passed", ok}};
            out << j.dump() << "\n";
        } else {
            out << (ok ? "[PASS] " : "[FAIL] ") << suite.title << "\n";
            if (!ok) out << rep.to_string();
        }
    }
    if (!found) {
        std::string names = "all";
        for (const auto& suite : verify::all_suites()) names += ", " + suite.name;
        throw ValidationError("unknown suite '" + o.suite + "' (available: " + names + ")");
    }
    return all_ok ? 0 : 1;
}

}  // namespace dunkl::cli

namespace dunkl {

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    cli::Options o;
    std::vector<int> count_ns;

    CLI::App app{"exact symbolic computation for Dunkl operators, Cauchy-Kovalevskaya "
                 "extensions and Fueter-type Laplacian decompositions on hypercomplex "
                 "subspaces",
                 "dunkl"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool with_partition) {
        sub->add_option("--algebra", o.algebra, "algebra spec: clifford:N or octonion");
        sub->add_option("--basis", o.basis_csv, "comma-separated basis element names, e.g. 1,e1,e2");
        if (with_partition) {
            sub->add_option("--partition", o.partition, "partition string, e.g. {1}|{2,3}");
            sub->add_option("--multiplicities", o.multiplicities, "canonical | uniform");
            sub->add_option("--alpha", o.alphas, "per-block alpha overrides, comma-separated");
        }
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "dot", "jsonl"}));
    };

    int rc = 0;
    auto* ops = app.add_subcommand("ops", "apply an operator to a polynomial");
    add_common(ops, true);
    ops->add_option("--op", o.op, "operator name")->required();
    ops->add_option("--index", o.index, "coordinate index (delta1/delta2/dunkl_t/tau alpha)");
    ops->add_option("--block", o.block, "1-based block of --partition used as the index set");
    std::string set_csv;
    ops->add_option("--set", set_csv, "explicit index set, e.g. 2,3,4");
    ops->add_option("--power", o.power, "use f = x^m as the input polynomial");
    ops->add_option("poly", o.poly, "polynomial in the documented grammar");
    ops->callback([&] {
        if (!set_csv.empty()) {
            // translate an explicit --set into a one-off partition block
            IndexSet A;
            std::istringstream is(set_csv);
            std::string tok;
            while (std::getline(is, tok, ',')) A.push_back(std::stoi(tok));
            std::sort(A.begin(), A.end());
            cli::Config probe = cli::make_config(o, false);
            check_index_set(A, probe.basis->n());
            // pack the set as one block of a partition and point --block at it
            std::vector<std::vector<int>> blocks{A};
            for (int i = 1; i <= probe.basis->n(); ++i)
                if (!std::binary_search(A.begin(), A.end(), i)) blocks.push_back({i});
            SetPartition packed(probe.basis->n(), blocks);
            o.partition = packed.to_string();
            o.block = packed.block_of(A.front());
        }
        rc = cli::run_ops(o, out);
    });

    auto* ck = app.add_subcommand("ck", "Cauchy-Kovalevskaya extension of x0-free P-slice data");
    add_common(ck, true);
    ck->add_option("poly", o.poly, "polynomial g in x1..xn")->required();
    ck->callback([&] { rc = cli::run_ck(o, out); });

    auto* member = app.add_subcommand("member", "P-slice / Dunkl-monogenic / F_P membership");
    add_common(member, true);
    member->add_option("--power", o.power, "use f = x^m as the input polynomial");
    member->add_option("poly", o.poly, "polynomial to test");
    member->callback([&] { rc = cli::run_member(o, out); });

    auto* basis_cmd = app.add_subcommand("basis", "homogeneous basis of F_P in a given degree");
    add_common(basis_cmd, true);
    basis_cmd->add_option("--degree", o.degree, "homogeneity degree")->required();
    basis_cmd->callback([&] { rc = cli::run_basis(o, out); });

    auto* tree = app.add_subcommand("tree", "Fueter tree of F_P as a DOT graph");
    add_common(tree, true);
    tree->add_flag("--unmerged", o.unmerged, "draw one leaf box per branch");
    tree->callback([&] { rc = cli::run_tree(o, out); });

    auto* count = app.add_subcommand("count", "table row: n | p(n) | q(n) | B_n | q(n)-1");
    count->add_option("--format", o.format)->check(CLI::IsMember({"text", "jsonl"}));
    count->add_option("n", count_ns, "one or more values of n")->required();
    count->callback([&] { rc = cli::run_count(count_ns, o, out); });

    auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification suites");
    verify_cmd->add_option("suite", o.suite, "suite name or 'all'");
    verify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "jsonl"}));
    verify_cmd->callback([&] { rc = cli::run_verify(o, out); });

    try {
        std::vector<const char*> argv;
        argv.push_back("dunkl");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const KernelError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace dunkl
