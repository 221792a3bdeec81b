#include "pda/grid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pda {

PdaGrid::PdaGrid(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("PdaGrid: dimensions must be positive");
    cells_.assign(static_cast<size_t>(rows) * cols, kEmpty);
}

PdaGrid::PdaGrid(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("PdaGrid: dimensions must be positive");
    if (cells_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("PdaGrid: cell count does not match dimensions");
}

int PdaGrid::symbol_count() const {
    std::set<Cell> seen;
    for (Cell c : cells_)
        if (c != kEmpty) seen.insert(c);
    return static_cast<int>(seen.size());
}

int PdaGrid::max_symbol() const {
    Cell m = 0;
    for (Cell c : cells_) m = std::max(m, c);
    return m;
}

int PdaGrid::empty_in_column(int c) const {
    int n = 0;
    for (int r = 0; r < rows_; ++r)
        if (is_empty(r, c)) ++n;
    return n;
}

int PdaGrid::empty_in_row(int r) const {
    int n = 0;
    for (int c = 0; c < cols_; ++c)
        if (is_empty(r, c)) ++n;
    return n;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << " F=" << derived_F << " K=" << derived_K
       << " Z=";
    if (derived_Z.empty()) {
        os << "?";
    } else {
        for (size_t i = 0; i < derived_Z.size(); ++i)
            os << (i ? "," : "") << derived_Z[i];
    }
    os << " s=" << derived_s;
    for (const auto& f : failures) {
        os << "\ncondition " << f.condition << ": " << f.detail;
        for (auto [r, c] : f.cells) os << " (" << (r + 1) << "," << (c + 1) << ")";
    }
    return os.str();
}

VerificationReport verify(const PdaGrid& grid, std::optional<PdaParams> expected) {
    if (grid.rows() < 1 || grid.cols() < 1)
        throw std::invalid_argument("verify: dimensions must be positive");

    const int F = grid.rows(), K = grid.cols();
    VerificationReport rep;
    rep.derived_F = F;
    rep.derived_K = K;
    rep.derived_s = grid.symbol_count();

    // Condition 1: cell domain.
    {
        ConditionFailure f{1, {}, "cell outside symbol domain"};
        for (int r = 0; r < F; ++r)
            for (int c = 0; c < K; ++c)
                if (grid.at(r, c) < 0) f.cells.emplace_back(r, c);
        if (!f.cells.empty()) rep.failures.push_back(std::move(f));
    }

    // Condition 2: equal empty count Z per column.
    std::vector<int> empties(K);
    for (int c = 0; c < K; ++c) empties[c] = grid.empty_in_column(c);
    std::set<int> distinct(empties.begin(), empties.end());
    rep.derived_Z.assign(distinct.begin(), distinct.end());
    const int Z = expected ? expected->Z : empties[0];
    {
        ConditionFailure f{2, {}, "column empty count differs from Z=" + std::to_string(Z)};
        for (int c = 0; c < K; ++c)
            if (empties[c] != Z) f.cells.emplace_back(0, c);
        if (!f.cells.empty()) rep.failures.push_back(std::move(f));
    }

    // Condition 3: no symbol twice in a row or column.
    {
        ConditionFailure f{3, {}, "symbol repeated within a row or column"};
        for (int r = 0; r < F; ++r) {
            std::unordered_map<Cell, int> seen;
            for (int c = 0; c < K; ++c) {
                Cell t = grid.at(r, c);
                if (t == kEmpty) continue;
                auto [it, fresh] = seen.emplace(t, c);
                if (!fresh) {
                    f.cells.emplace_back(r, it->second);
                    f.cells.emplace_back(r, c);
                }
            }
        }
        for (int c = 0; c < K; ++c) {
            std::unordered_map<Cell, int> seen;
            for (int r = 0; r < F; ++r) {
                Cell t = grid.at(r, c);
                if (t == kEmpty) continue;
                auto [it, fresh] = seen.emplace(t, r);
                if (!fresh) {
                    f.cells.emplace_back(it->second, c);
                    f.cells.emplace_back(r, c);
                }
            }
        }
        if (!f.cells.empty()) rep.failures.push_back(std::move(f));
    }

    // Condition 4: equal cells imply empty crossing cells.
    {
        ConditionFailure f{4, {}, "equal symbols with nonempty crossing cell"};
        std::unordered_map<Cell, std::vector<std::pair<int, int>>> occ;
        for (int r = 0; r < F; ++r)
            for (int c = 0; c < K; ++c)
                if (Cell t = grid.at(r, c); t != kEmpty) occ[t].emplace_back(r, c);
        for (const auto& [t, cells] : occ) {
            for (size_t i = 0; i < cells.size(); ++i) {
                for (size_t j = i + 1; j < cells.size(); ++j) {
                    auto [r1, c1] = cells[i];
                    auto [r2, c2] = cells[j];
                    if (r1 == r2 || c1 == c2) continue;  // condition 3 already flags
                    if (!grid.is_empty(r1, c2) || !grid.is_empty(r2, c1)) {
                        f.cells.emplace_back(r1, c1);
                        f.cells.emplace_back(r2, c2);
                    }
                }
            }
        }
        if (!f.cells.empty()) rep.failures.push_back(std::move(f));
    }

    if (expected) {
        ConditionFailure f{0, {}, ""};
        std::ostringstream os;
        if (expected->F != F) os << " F=" << F << " expected " << expected->F << ";";
        if (expected->K != K) os << " K=" << K << " expected " << expected->K << ";";
        if (expected->s != rep.derived_s)
            os << " s=" << rep.derived_s << " expected " << expected->s << ";";
        f.detail = os.str();
        if (!f.detail.empty()) {
            f.detail = "parameter mismatch:" + f.detail;
            rep.failures.push_back(std::move(f));
        }
    }

    rep.valid = rep.failures.empty();
    return rep;
}

void require_valid(const PdaGrid& grid, const char* who) {
    auto rep = verify(grid);
    if (!rep.valid)
        throw std::invalid_argument(std::string(who) + ": grid is not a valid PDA (" +
                                    rep.summary() + ")");
}

PdaGrid canonicalize(const PdaGrid& grid) {
    require_valid(grid, "canonicalize");
    const int F = grid.rows(), K = grid.cols();

    // Rows: nonempty column-1 cells on top, stable.
    std::vector<int> order;
    for (int r = 0; r < F; ++r)
        if (!grid.is_empty(r, 0)) order.push_back(r);
    for (int r = 0; r < F; ++r)
        if (grid.is_empty(r, 0)) order.push_back(r);
    PdaGrid g(F, K);
    for (int r = 0; r < F; ++r)
        for (int c = 0; c < K; ++c) g.at(r, c) = grid.at(order[r], c);

    // Column 1 becomes [1..F-Z, Empty..]; its symbols are named first.
    std::unordered_map<Cell, Cell> name;
    Cell next = 1;
    for (int r = 0; r < F; ++r)
        if (Cell t = g.at(r, 0); t != kEmpty) name.emplace(t, next++);

    // Greedily emit the remaining columns in ascending key order, committing
    // names as columns are chosen. A column's key uses committed names where
    // available; symbols not yet named get provisional names in top-down
    // first-occurrence order, so the key is independent of both the input
    // symbol names and the input column order.
    auto key = [&](int c) {
        std::vector<std::pair<int, Cell>> k(F);
        std::unordered_map<Cell, Cell> fresh;
        Cell provisional = next;
        for (int r = 0; r < F; ++r) {
            Cell t = g.at(r, c);
            if (t == kEmpty) {
                k[r] = {1, 0};
            } else if (auto it = name.find(t); it != name.end()) {
                k[r] = {0, it->second};
            } else {
                auto [jt, fresh_new] = fresh.emplace(t, provisional);
                if (fresh_new) ++provisional;
                k[r] = {0, jt->second};
            }
        }
        return k;
    };

    std::vector<int> remaining(static_cast<size_t>(K) - 1);
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> chosen{0};
    while (!remaining.empty()) {
        size_t best = 0;
        auto best_key = key(remaining[0]);
        for (size_t i = 1; i < remaining.size(); ++i)
            if (auto k = key(remaining[i]); k < best_key) {
                best_key = std::move(k);
                best = i;
            }
        const int c = remaining[best];
        for (int r = 0; r < F; ++r)
            if (Cell t = g.at(r, c); t != kEmpty)
                if (name.emplace(t, next).second) ++next;
        chosen.push_back(c);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }

    PdaGrid out(F, K);
    for (int r = 0; r < F; ++r)
        for (int c = 0; c < K; ++c)
            if (Cell t = g.at(r, chosen[c]); t != kEmpty) out.at(r, c) = name[t];
    return out;
}

bool canonical_equal(const PdaGrid& a, const PdaGrid& b) {
    return canonicalize(a) == canonicalize(b);
}

FrequencyCensus frequency_census(const PdaGrid& grid) {
    require_valid(grid, "frequency_census");
    const int Z = grid.empty_in_column(0);
    std::map<Cell, int> mult;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (Cell t = grid.at(r, c); t != kEmpty) ++mult[t];
    FrequencyCensus census;
    for (const auto& [t, m] : mult) {
        if (m > Z + 1)
            census.overflow.push_back(t);
        else
            ++census.a[m];
    }
    return census;
}

}  // namespace pda
