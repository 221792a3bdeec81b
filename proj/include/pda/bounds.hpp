#pragma once

#include <optional>
#include <string>

#include "pda/grid.hpp"

namespace pda {

enum class BoundSource { Basic, Nested, FrequencyConditional, KnownExact };

struct BoundResult {
    long long value = 0;
    BoundSource source = BoundSource::Basic;
    std::string assumption;  // empty for unconditional bounds
};

struct KnownValue {
    int F = 0, K = 0, Z = 0;
    long long lo = 0, hi = 0;
    std::string provenance;
    std::string conflict_note;

    bool exact() const { return lo == hi; }
};

struct RpdaFeasibility {
    bool feasible = false;
    std::string reason;  // set when ruled out
};

// ceil(K(F-Z)/(Z+1))
BoundResult lower_bound_basic(int F, int K, int Z);

// Nested-ceiling sum with F-Z terms, evaluated innermost-first in exact
// integer arithmetic. Always >= lower_bound_basic. Requires Z < F.
BoundResult lower_bound_nested(int F, int K, int Z);

// (F-Z-1)(Z+1)+1, valid when some symbol attains multiplicity Z+1.
BoundResult lower_bound_frequency(int F, int K, int Z);

RpdaFeasibility rpda_feasibility(int F, int K, int Z);

// Exact value (or documented range) for every family determined in the
// catalogued results; absent otherwise.
std::optional<KnownValue> best_known_s(int F, int K, int Z);

}  // namespace pda
