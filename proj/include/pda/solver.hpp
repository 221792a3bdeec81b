#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pda/grid.hpp"

namespace pda {

struct SearchBudget {
    std::int64_t node_limit = 50'000'000;
    std::chrono::milliseconds time_limit{60'000};
    int thread_hint = 1;
};

enum class SolveStatus { Exact, LowerBoundOnly, Timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::Timeout;
    int s_min = -1;                    // when exact
    int refuted_up_to = -1;            // largest s proven infeasible
    std::optional<PdaGrid> witness;    // canonical witness when exact
    std::int64_t nodes_explored = 0;
    std::vector<std::string> certificate;  // one cut per line: name, count
};

struct ExistsResult {
    enum class Outcome { Found, Refuted, Timeout } outcome;
    std::optional<PdaGrid> witness;
    std::int64_t nodes = 0;
    std::vector<std::string> cuts;
};

// Search for a PDA(F,K,Z) on at most s symbols, column by column in regular
// form with symmetry breaking. Never reports a wrong answer: budget
// exhaustion yields Timeout.
ExistsResult exists_pda(int F, int K, int Z, int s, const SearchBudget& budget = {});

// Iterates s upward from the basic lower bound; first feasible s is s_min.
SolveResult min_s_exact(int F, int K, int Z, const SearchBudget& budget = {});

struct AdjudicationClaim {
    long long value = 0;
    std::string source;
    bool agrees = false;  // meaningful when conclusive
};

struct AdjudicationReport {
    bool conclusive = false;
    int s_min = -1;  // when conclusive
    std::vector<AdjudicationClaim> claims;
    std::string rendered() const;
};

AdjudicationReport adjudicate(int F, int K, int Z, const SearchBudget& budget = {});

}  // namespace pda
