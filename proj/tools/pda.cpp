#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pda/bounds.hpp"
#include "pda/constructions.hpp"
#include "pda/format.hpp"
#include "pda/grid.hpp"
#include "pda/sim.hpp"
#include "pda/solver.hpp"
#include "pda/tables.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;

const char* optimality_name(pda::Optimality o) {
    switch (o) {
        case pda::Optimality::ExactProven: return "exact";
        case pda::Optimality::LowerBoundMatched: return "lower-bound-matched";
        default: return "unknown";
    }
}

// "--budget nodes=N,ms=N,threads=N"
pda::SearchBudget parse_budget(const std::string& text) {
    pda::SearchBudget b;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--budget", "expected key=value");
        const std::string key = item.substr(0, eq);
        const long long value = std::stoll(item.substr(eq + 1));
        if (key == "nodes")
            b.node_limit = value;
        else if (key == "ms")
            b.time_limit = std::chrono::milliseconds(value);
        else if (key == "threads")
            b.thread_hint = static_cast<int>(value);
        else
            throw CLI::ValidationError("--budget", "unknown key '" + key + "'");
    }
    return b;
}

pda::PdaGrid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pda::ParseError(0, 0, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return pda::read_pda(buf.str());
}

int cmd_construct(int F, int K, int Z, const std::string& method) {
    if (F < 1 || K < 1 || Z < 0 || Z > F) {
        std::cerr << "error: need F >= 1, K >= 1, 0 <= Z <= F\n";
        return kUsageError;
    }
    std::optional<pda::Construction> built;
    if (method.rfind("fixed:", 0) == 0) {
        const std::string id = method.substr(6);
        pda::PdaGrid g = pda::fixed_catalog(id);
        auto p = pda::catalog_params(id);
        if (p.F != F || p.K != K || p.Z != Z) {
            std::cerr << "error: catalog entry '" << id << "' has parameters (" << p.F << ','
                      << p.K << ',' << p.Z << ")\n";
            return kSemanticFailure;
        }
        built = pda::Construction{std::move(g),
                                  {"fixed:" + id, p, p.s, pda::Optimality::None}};
        if (auto known = pda::best_known_s(F, K, Z); known && known->exact() && known->lo == p.s)
            built->provenance.optimality = pda::Optimality::ExactProven;
    } else if (method.empty() || method == "auto") {
        built = pda::family_builder(F, K, Z);
    } else {
        std::cerr << "error: unknown method '" << method << "'\n";
        return kUsageError;
    }
    if (!built) {
        std::cerr << "error: no applicable construction for (" << F << ',' << K << ',' << Z
                  << ")\n";
        return kSemanticFailure;
    }
    std::cout << "# method=" << built->provenance.name << " s=" << built->provenance.claimed_s
              << " optimality=" << optimality_name(built->provenance.optimality) << '\n'
              << pda::write_pda(built->grid);
    return kOk;
}

int cmd_verify(const std::string& path) {
    pda::PdaGrid g = load_grid(path);
    auto report = pda::verify(g);
    std::cout << report.summary() << '\n';
    return report.valid ? kOk : kSemanticFailure;
}

int cmd_bound(int F, int K, int Z) {
    std::cout << "basic " << pda::lower_bound_basic(F, K, Z).value << '\n';
    if (Z < F) {
        std::cout << "nested " << pda::lower_bound_nested(F, K, Z).value << '\n';
        auto freq = pda::lower_bound_frequency(F, K, Z);
        std::cout << "frequency " << freq.value << " (" << freq.assumption << ")\n";
    }
    auto feas = pda::rpda_feasibility(F, K, Z);
    std::cout << "rpda " << (feas.feasible ? "possible" : "ruled-out");
    if (!feas.reason.empty()) std::cout << " (" << feas.reason << ')';
    std::cout << '\n';
    if (auto known = pda::best_known_s(F, K, Z)) {
        std::cout << "known ";
        if (known->exact())
            std::cout << known->lo;
        else
            std::cout << known->lo << ".." << known->hi;
        std::cout << " [" << known->provenance << ']';
        if (!known->conflict_note.empty()) std::cout << " note: " << known->conflict_note;
        std::cout << '\n';
    } else {
        std::cout << "known none\n";
    }
    return kOk;
}

int cmd_solve(int F, int K, int Z, const pda::SearchBudget& budget, bool adjudicate_mode) {
    if (adjudicate_mode) {
        auto rep = pda::adjudicate(F, K, Z, budget);
        std::cout << rep.rendered();
        return rep.conclusive ? kOk : kSemanticFailure;
    }
    auto res = pda::min_s_exact(F, K, Z, budget);
    switch (res.status) {
        case pda::SolveStatus::Exact:
            std::cout << "exact s_min=" << res.s_min << " nodes=" << res.nodes_explored << '\n';
            if (res.witness) std::cout << pda::write_pda(*res.witness);
            return kOk;
        case pda::SolveStatus::LowerBoundOnly:
            std::cout << "lower-bound s_min>" << res.refuted_up_to
                      << " nodes=" << res.nodes_explored << '\n';
            return kSemanticFailure;
        default:
            std::cout << "timeout nodes=" << res.nodes_explored << '\n';
            return kSemanticFailure;
    }
}

int cmd_simulate(const std::string& path, int num_files, std::vector<int> demands,
                 std::uint64_t seed) {
    pda::PdaGrid g = load_grid(path);
    auto report = pda::verify(g);
    if (!report.valid) {
        std::cerr << "error: input is not a valid array\n" << report.summary();
        return kSemanticFailure;
    }
    if (demands.empty()) {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < g.cols(); ++k)
            demands.push_back(static_cast<int>(rng() % num_files));
    }
    if (static_cast<int>(demands.size()) != g.cols()) {
        std::cerr << "error: expected " << g.cols() << " demands\n";
        return kUsageError;
    }
    auto run = pda::run_scheme(g, num_files, pda::DemandVector{std::move(demands)}, seed);
    std::cout << run.manifest;
    return run.all_decoded ? kOk : kSemanticFailure;
}

int cmd_table(const std::string& family) {
    if (family.empty())
        std::cout << pda::render_all_tables();
    else
        std::cout << pda::render_table(family);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"placement delivery array toolkit"};
    app.require_subcommand(1);

    int F = 0, K = 0, Z = 0;
    std::string method, path, family, budget_text;
    int num_files = 0;
    std::vector<int> demands;
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("PDA_SEED")) seed = std::strtoull(env, nullptr, 10);
    bool adjudicate_mode = false;

    auto* construct = app.add_subcommand("construct", "emit a PDA for (F,K,Z)");
    construct->add_option("F", F)->required();
    construct->add_option("K", K)->required();
    construct->add_option("Z", Z)->required();
    construct->add_option("--method", method, "auto (default) or fixed:<id>");

    auto* verify = app.add_subcommand("verify", "check a PDA file");
    verify->add_option("path", path)->required();

    auto* bound = app.add_subcommand("bound", "print bounds and known values");
    bound->add_option("F", F)->required();
    bound->add_option("K", K)->required();
    bound->add_option("Z", Z)->required();

    auto* solve = app.add_subcommand("solve", "exact minimal symbol count");
    solve->add_option("F", F)->required();
    solve->add_option("K", K)->required();
    solve->add_option("Z", Z)->required();
    solve->add_option("--budget", budget_text, "nodes=N,ms=N,threads=N");
    solve->add_flag("--adjudicate", adjudicate_mode, "compare solver against other sources");

    auto* simulate = app.add_subcommand("simulate", "run the caching scheme");
    simulate->add_option("path", path)->required();
    simulate->add_option("N", num_files, "number of files")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--demands", demands, "per-node file indices (0-based)");
    simulate->add_option("--seed", seed);

    auto* table = app.add_subcommand("table", "known s(F,K,Z) tables");
    table->add_option("family", family, "one of f4k3 s66 s77 s4k2 s5k3 s5k2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kUsageError : kOk;
    }

    try {
        if (construct->parsed()) return cmd_construct(F, K, Z, method);
        if (verify->parsed()) return cmd_verify(path);
        if (bound->parsed()) return cmd_bound(F, K, Z);
        if (solve->parsed())
            return cmd_solve(F, K, Z, budget_text.empty() ? pda::SearchBudget{} : parse_budget(budget_text),
                             adjudicate_mode);
        if (simulate->parsed()) return cmd_simulate(path, num_files, demands, seed);
        if (table->parsed()) return cmd_table(family);
    } catch (const pda::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSemanticFailure;
    }
    return kUsageError;
}
