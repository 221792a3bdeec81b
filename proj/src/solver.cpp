#include "pda/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "pda/bounds.hpp"
#include "pda/constructions.hpp"

namespace pda {

namespace {

using Clock = std::chrono::steady_clock;

struct CutStats {
    std::int64_t row_conflict = 0;
    std::int64_t cross_empty = 0;
    std::int64_t multiplicity = 0;
    std::int64_t share_budget = 0;
    std::int64_t capacity = 0;
};

// Depth-first search for a PDA(F,K,Z) on at most s symbols. Works on the
// regular form: column 0 is 1..F-Z over empty cells, the empty-row sets of
// columns 2..K-1 are nondecreasing as bitmasks, and symbols are numbered by
// first use in column-major order. Every valid array can be brought to this
// form by row/column permutation and renaming, so the restriction loses no
// solutions.
class Search {
public:
    Search(int F, int K, int Z, int s, const SearchBudget& budget)
        : F_(F), K_(K), Z_(Z), s_(s), budget_(budget), deadline_(Clock::now() + budget.time_limit) {
        grid_.assign(static_cast<size_t>(F_) * K_, kEmpty);
        row_empty_cols_.assign(F_, 0);
        rows_mask_.assign(s_ + 1, 0);
        cols_mask_.assign(s_ + 1, 0);
        mult_.assign(s_ + 1, 0);
        col_empty_.assign(K_, 0);
        // a symbol used Z+1 times forces s >= (F-Z-1)(Z+1)+1
        cap_ = (static_cast<long long>(F_ - Z_ - 1) * (Z_ + 1) + 1 <= s_) ? Z_ + 1 : Z_;
        share_limit_ = static_cast<long long>(K_) * Z_ * std::min<long long>(F_ - Z_, K_ - 1);
    }

    ExistsResult run() {
        ExistsResult res{ExistsResult::Outcome::Refuted, std::nullopt, 0, {}};
        {
            // column 0 in regular form
            const std::uint64_t e0 = ((Z_ ? ~0ULL >> (64 - Z_) : 0ULL)) << (F_ - Z_);
            col_empty_[0] = e0;
            for (int r = F_ - Z_; r < F_; ++r) row_empty_cols_[r] |= 1ULL;
            for (int r = 0; r < F_ - Z_; ++r) place(r, 0, r + 1);
            used_ = F_ - Z_;
            bool ok = false;
            try {
                ok = next_column(1, 0);
            } catch (const TimeoutSignal&) {
                res.outcome = ExistsResult::Outcome::Timeout;
            }
            if (ok) {
                res.outcome = ExistsResult::Outcome::Found;
                res.witness = canonicalize(PdaGrid(F_, K_, grid_));
            }
        }
        res.nodes = nodes_;
        res.cuts.push_back((std::ostringstream{} << "row-conflict " << cuts_.row_conflict).str());
        res.cuts.push_back((std::ostringstream{} << "cross-empty " << cuts_.cross_empty).str());
        res.cuts.push_back((std::ostringstream{} << "multiplicity " << cuts_.multiplicity).str());
        res.cuts.push_back((std::ostringstream{} << "share-budget " << cuts_.share_budget).str());
        res.cuts.push_back((std::ostringstream{} << "capacity " << cuts_.capacity).str());
        return res;
    }

private:
    struct TimeoutSignal {};

    Cell& cell(int r, int c) { return grid_[static_cast<size_t>(r) * K_ + c]; }

    void place(int r, int c, int t) {
        cell(r, c) = t;
        rows_mask_[t] |= 1ULL << r;
        cols_mask_[t] |= 1ULL << c;
        share_total_ += 2LL * mult_[t];
        ++mult_[t];
    }

    void unplace(int r, int c, int t) {
        cell(r, c) = kEmpty;
        rows_mask_[t] &= ~(1ULL << r);
        cols_mask_[t] &= ~(1ULL << c);
        --mult_[t];
        share_total_ -= 2LL * mult_[t];
    }

    void tick() {
        if (++nodes_ >= budget_.node_limit) throw TimeoutSignal{};
        if ((nodes_ & 0xfff) == 0 && Clock::now() >= deadline_) throw TimeoutSignal{};
    }

    // Feasibility of symbol counts for the cells not yet filled.
    bool capacity_ok(long long remaining) {
        long long room = static_cast<long long>(s_ - used_) * cap_;
        for (int t = 1; t <= used_; ++t) room += cap_ - mult_[t];
        if (room < remaining) {
            ++cuts_.capacity;
            return false;
        }
        return true;
    }

    bool next_column(int c, std::uint64_t prev_e) {
        if (c == K_) return true;
        const std::uint64_t full = (F_ == 64) ? ~0ULL : (1ULL << F_) - 1;
        // smallest Z-bit mask >= the previous column's (column 1 is free)
        std::uint64_t e = Z_ ? (~0ULL >> (64 - Z_)) : 0ULL;
        if (c >= 2 && e < prev_e) e = prev_e;
        for (; e <= full; e = next_same_popcount(e)) {
            if (std::popcount(e) != Z_) break;  // only when Z == 0: single mask
            tick();
            col_empty_[c] = e;
            for (int r = 0; r < F_; ++r)
                if (e >> r & 1) row_empty_cols_[r] |= 1ULL << c;
            const long long remaining =
                static_cast<long long>(K_ - c) * (F_ - Z_);
            if (capacity_ok(remaining) && fill(c, 0, e)) return true;
            for (int r = 0; r < F_; ++r)
                if (e >> r & 1) row_empty_cols_[r] &= ~(1ULL << c);
            if (Z_ == 0) break;
        }
        return false;
    }

    static std::uint64_t next_same_popcount(std::uint64_t v) {
        // Gosper's hack; wraps to a larger-than-range value at the end
        if (v == 0) return ~0ULL;
        std::uint64_t c = v & -v, r = v + c;
        if (r == 0) return ~0ULL;
        return (((r ^ v) >> 2) / c) | r;
    }

    // Fill the non-empty cells of column c from row `from` downward; once the
    // column is complete, continue straight into the next column so that
    // backtracking revisits this column's symbol choices.
    bool fill(int c, int from, std::uint64_t e) {
        int r = from;
        while (r < F_ && (e >> r & 1)) ++r;
        if (r == F_) return next_column(c + 1, e);
        const int top = std::min(used_ + 1, s_);
        for (int t = 1; t <= top; ++t) {
            tick();
            if (rows_mask_[t] >> r & 1) {
                ++cuts_.row_conflict;
                continue;
            }
            if (mult_[t] >= cap_) {
                ++cuts_.multiplicity;
                continue;
            }
            // every earlier occurrence of t must see empty crossing cells
            if ((rows_mask_[t] & ~e) != 0 || (cols_mask_[t] & ~row_empty_cols_[r]) != 0) {
                ++cuts_.cross_empty;
                continue;
            }
            if (share_total_ + 2LL * mult_[t] > share_limit_) {
                ++cuts_.share_budget;
                continue;
            }
            const bool fresh = t > used_;
            if (fresh) ++used_;
            place(r, c, t);
            if (fill(c, r + 1, e)) return true;
            unplace(r, c, t);
            if (fresh) --used_;
        }
        return false;
    }

    int F_, K_, Z_, s_;
    SearchBudget budget_;
    Clock::time_point deadline_;
    std::vector<Cell> grid_;
    std::vector<std::uint64_t> row_empty_cols_;  // per row: columns empty there
    std::vector<std::uint64_t> rows_mask_;       // per symbol: rows it occupies
    std::vector<std::uint64_t> cols_mask_;       // per symbol: columns it occupies
    std::vector<std::uint64_t> col_empty_;
    std::vector<int> mult_;
    int used_ = 0;
    int cap_ = 0;
    long long share_total_ = 0;
    long long share_limit_ = 0;
    std::int64_t nodes_ = 0;
    CutStats cuts_;
};

}  // namespace

ExistsResult exists_pda(int F, int K, int Z, int s, const SearchBudget& budget) {
    if (F < 1 || K < 1 || Z < 0 || Z > F || s < 0)
        throw std::invalid_argument("exists_pda: bad parameters");
    if (F > 64 || K > 64)
        throw std::invalid_argument("exists_pda: dimensions above 64 unsupported");
    if (Z == F) {
        // all-empty array, no symbols needed
        ExistsResult r{ExistsResult::Outcome::Found, canonicalize(PdaGrid(F, K)), 0, {}};
        return r;
    }
    if (s < F - Z) return {ExistsResult::Outcome::Refuted, std::nullopt, 0, {"column-needs F-Z symbols"}};
    return Search(F, K, Z, s, budget).run();
}

SolveResult min_s_exact(int F, int K, int Z, const SearchBudget& budget) {
    SolveResult res;
    const long long lb = lower_bound_basic(F, K, Z).value;
    const long long ub = static_cast<long long>(K) * (F - Z);  // all-distinct array
    const auto start = Clock::now();
    for (long long s = std::max(lb, static_cast<long long>(F - Z)); s <= ub; ++s) {
        SearchBudget slice = budget;
        slice.node_limit = budget.node_limit - res.nodes_explored;
        const auto spent =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        if (slice.node_limit <= 0 || spent >= budget.time_limit) break;
        slice.time_limit = budget.time_limit - spent;
        auto r = exists_pda(F, K, Z, static_cast<int>(s), slice);
        res.nodes_explored += r.nodes;
        res.certificate.push_back("s=" + std::to_string(s) + " outcome=" +
                                  (r.outcome == ExistsResult::Outcome::Found     ? "found"
                                   : r.outcome == ExistsResult::Outcome::Refuted ? "refuted"
                                                                                 : "timeout") +
                                  " nodes=" + std::to_string(r.nodes));
        for (const auto& cut : r.cuts) res.certificate.push_back("  " + cut);
        if (r.outcome == ExistsResult::Outcome::Found) {
            res.status = SolveStatus::Exact;
            res.s_min = static_cast<int>(s);
            res.witness = std::move(r.witness);
            return res;
        }
        if (r.outcome == ExistsResult::Outcome::Timeout) break;
        res.refuted_up_to = static_cast<int>(s);
    }
    res.status = res.refuted_up_to >= lb ? SolveStatus::LowerBoundOnly : SolveStatus::Timeout;
    return res;
}

std::string AdjudicationReport::rendered() const {
    std::ostringstream out;
    out << (conclusive ? "conclusive s_min=" + std::to_string(s_min) : std::string("inconclusive"))
        << '\n';
    for (const auto& c : claims) {
        out << "  " << c.source << " -> " << c.value;
        if (conclusive) out << (c.agrees ? "  agrees" : "  DISAGREES");
        out << '\n';
    }
    return out.str();
}

AdjudicationReport adjudicate(int F, int K, int Z, const SearchBudget& budget) {
    AdjudicationReport rep;
    std::vector<AdjudicationClaim> claims;
    claims.push_back({lower_bound_basic(F, K, Z).value, "lower-bound:basic", false});
    if (Z < F) claims.push_back({lower_bound_nested(F, K, Z).value, "lower-bound:nested", false});
    if (auto known = best_known_s(F, K, Z); known && known->exact())
        claims.push_back({known->lo, "known:" + known->provenance, false});
    if (auto built = family_builder(F, K, Z))
        claims.push_back({built->provenance.claimed_s,
                          "construction:" + built->provenance.name, false});

    auto solved = min_s_exact(F, K, Z, budget);
    if (solved.status == SolveStatus::Exact) {
        rep.conclusive = true;
        rep.s_min = solved.s_min;
        for (auto& c : claims) {
            const bool lower = c.source.rfind("lower-bound:", 0) == 0;
            c.agrees = lower ? c.value <= rep.s_min : c.value == rep.s_min;
        }
    }
    rep.claims = std::move(claims);
    return rep;
}

}  // namespace pda
