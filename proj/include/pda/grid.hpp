#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pda {

// A cell is either empty or a symbol id >= 1.
using Cell = int;
inline constexpr Cell kEmpty = 0;

struct PdaParams {
    int F = 0;  // packets per file (rows)
    int K = 0;  // users (columns)
    int Z = 0;  // empty cells per column (cached packets per file)
    int s = 0;  // distinct symbols (coded broadcasts)
};

class PdaGrid {
public:
    PdaGrid(int rows, int cols);
    PdaGrid(int rows, int cols, std::vector<Cell> cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cell at(int r, int c) const { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    Cell& at(int r, int c) { return cells_[static_cast<size_t>(r) * cols_ + c]; }
    bool is_empty(int r, int c) const { return at(r, c) == kEmpty; }

    // Number of distinct symbol ids present.
    int symbol_count() const;
    // Largest symbol id present (0 if none).
    int max_symbol() const;
    int empty_in_column(int c) const;
    int empty_in_row(int r) const;

    const std::vector<Cell>& cells() const { return cells_; }

    bool operator==(const PdaGrid&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Cell> cells_;  // row-major
};

struct ConditionFailure {
    int condition = 0;  // 1..4, or 0 for a parameter mismatch against expected
    std::vector<std::pair<int, int>> cells;  // involved coordinates, 0-based (row, col)
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    std::vector<ConditionFailure> failures;
    int derived_F = 0;
    int derived_K = 0;
    // Distinct per-column empty counts, sorted. Size one for a valid grid.
    std::vector<int> derived_Z;
    int derived_s = 0;

    PdaParams params() const {
        return {derived_F, derived_K, derived_Z.empty() ? 0 : derived_Z.front(), derived_s};
    }
    std::string summary() const;
};

struct FrequencyCensus {
    // multiplicity -> number of symbols with that multiplicity (1..Z+1)
    std::map<int, int> a;
    // symbols appearing more than Z+1 times (never populated for a valid PDA)
    std::vector<int> overflow;
};

VerificationReport verify(const PdaGrid& grid,
                          std::optional<PdaParams> expected = std::nullopt);

// Throws std::invalid_argument when the grid is not a valid PDA.
void require_valid(const PdaGrid& grid, const char* who);

// Deterministic, idempotent normal form: column 1 regular, remaining columns
// sorted, symbols densely renumbered.
PdaGrid canonicalize(const PdaGrid& grid);

bool canonical_equal(const PdaGrid& a, const PdaGrid& b);

FrequencyCensus frequency_census(const PdaGrid& grid);

}  // namespace pda
