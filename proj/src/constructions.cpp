#include "pda/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pda/bounds.hpp"
#include "pda/combinatorics.hpp"
#include "pda/format.hpp"

namespace pda {

PdaGrid simple_family(int F, int K, int Z, int tcase) {
    if (F < 1 || K < 1) throw std::invalid_argument("simple_family: bad dimensions");
    switch (tcase) {
        case 1: {  // Z = 0: every cell its own symbol
            if (Z != 0) throw std::invalid_argument("simple_family case 1: Z must be 0");
            PdaGrid g(F, K);
            int next = 1;
            for (int r = 0; r < F; ++r)
                for (int c = 0; c < K; ++c) g.at(r, c) = next++;
            return g;
        }
        case 2: {  // Z = F: all empty
            if (Z != F) throw std::invalid_argument("simple_family case 2: Z must be F");
            return PdaGrid(F, K);
        }
        case 3: {  // Z = F-1: one symbol per F-column diagonal block
            if (Z != F - 1)
                throw std::invalid_argument("simple_family case 3: Z must be F-1");
            PdaGrid g(F, K);
            for (int c = 0; c < K; ++c) g.at(c % F, c) = c / F + 1;
            return g;
        }
        case 4: {  // Z = F-t with F >= tK: column k holds 1..t at rows t*k..t*k+t-1
            const int t = F - Z;
            if (t < 1 || static_cast<long long>(F) < static_cast<long long>(t) * K)
                throw std::invalid_argument("simple_family case 4: need F >= tK");
            PdaGrid g(F, K);
            for (int c = 0; c < K; ++c)
                for (int i = 0; i < t; ++i) g.at(t * c + i, c) = i + 1;
            return g;
        }
        default:
            throw std::invalid_argument("simple_family: case must be 1..4");
    }
}

PdaGrid k2(int F, int Z) {
    if (Z < 0 || Z > F) throw std::invalid_argument("k2: need 0 <= Z <= F");
    if (Z == F) return PdaGrid(F, 2);
    PdaGrid g(F, 2);
    const int u = F - Z;
    for (int r = 0; r < u; ++r) g.at(r, 0) = r + 1;
    if (F >= 2 * Z) {
        // column 2: rows Z..F-Z-1 fresh, bottom Z rows reuse 1..Z
        int next = u + 1;
        for (int r = Z; r < u; ++r) g.at(r, 1) = next++;
        for (int i = 0; i < Z; ++i) g.at(u + i, 1) = i + 1;
    } else {
        // F < 2Z: all F-Z second-column symbols reused from column 1,
        // placed directly below the first block
        for (int i = 0; i < u; ++i) g.at(u + i, 1) = i + 1;
    }
    return g;
}

PdaGrid rpda_recursive(int F, int Z) {
    if (Z < 1 || F < Z + 1)
        throw std::invalid_argument("rpda_recursive: need F >= Z+1 >= 2");
    const long long K = binomial(F, Z);
    const long long s = binomial(F, Z + 1);
    PdaGrid g(F, static_cast<int>(K));
    for (long long c = 1; c <= K; ++c) {
        auto empty_rows = tb_unrank(c, F, Z);
        std::vector<char> is_empty(F + 1, 0);
        for (int r : empty_rows) is_empty[r] = 1;
        for (int r = 1; r <= F; ++r) {
            if (is_empty[r]) continue;
            std::vector<int> rowset = empty_rows;
            rowset.insert(std::upper_bound(rowset.begin(), rowset.end(), r), r);
            g.at(r - 1, static_cast<int>(c - 1)) =
                static_cast<Cell>(s + 1 - tb_rank(rowset, F));
        }
    }
    return g;
}

PdaGrid z1_square(int F) {
    if (F < 2) throw std::invalid_argument("z1_square: need F >= 2");
    return rpda_recursive(F, 1);
}

PdaGrid concat_disjoint(const PdaGrid& a, const PdaGrid& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("concat_disjoint: row counts differ");
    const int offset = a.max_symbol();
    PdaGrid g(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) g.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c)
            g.at(r, a.cols() + c) = b.is_empty(r, c) ? kEmpty : b.at(r, c) + offset;
    }
    return g;
}

PdaGrid concat_copies(const PdaGrid& grid, int l) {
    if (l < 1) throw std::invalid_argument("concat_copies: need l >= 1");
    PdaGrid out = grid;
    for (int i = 1; i < l; ++i) out = concat_disjoint(out, grid);
    return out;
}

PdaGrid drop_columns(const PdaGrid& grid, int x) {
    if (x < 0 || x >= grid.cols())
        throw std::invalid_argument("drop_columns: need 0 <= x < K");
    PdaGrid g(grid.rows(), grid.cols() - x);
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) g.at(r, c) = grid.at(r, c);
    // renumber away symbols that only lived in the dropped columns
    std::map<Cell, Cell> rename;
    for (Cell t : g.cells())
        if (t != kEmpty) rename.emplace(t, 0);
    Cell next = 1;
    for (auto& [t, name] : rename) name = next++;
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c)
            if (!g.is_empty(r, c)) g.at(r, c) = rename[g.at(r, c)];
    return g;
}

PdaGrid transpose_rpda(const PdaGrid& grid) {
    const int e0 = grid.empty_in_row(0);
    for (int r = 1; r < grid.rows(); ++r)
        if (grid.empty_in_row(r) != e0)
            throw std::invalid_argument("transpose_rpda: rows have unequal empty counts");
    PdaGrid g(grid.cols(), grid.rows());
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c) g.at(c, r) = grid.at(r, c);
    return g;
}

PdaGrid blow_up(const PdaGrid& grid, int t) {
    if (t < 1) throw std::invalid_argument("blow_up: need t >= 1");
    PdaGrid g(grid.rows() * t, grid.cols() * t);
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (Cell v = grid.at(r, c); v != kEmpty)
                for (int i = 0; i < t; ++i) g.at(r * t + i, c * t + i) = v;
    return g;
}

PdaGrid ff2_recursive(int F) {
    if (F < 3) throw std::invalid_argument("ff2_recursive: need F >= 3");
    if (F == 3) return fixed_catalog("fig-ff2-f3");
    if (F == 4) return fixed_catalog("fig-ff2-f4");
    if (F == 5) return fixed_catalog("fig-ff2-f5");

    PdaGrid g(F, F);
    // top-left 3x3 block: one tripled symbol, diagonal empty
    g.at(0, 2) = 1;
    g.at(1, 0) = 1;
    g.at(2, 1) = 1;
    // A: rows 4..F x cols 1..3, fresh symbols; B = A transposed
    Cell next = 2;
    for (int r = 3; r < F; ++r)
        for (int c = 0; c < 3; ++c) {
            g.at(r, c) = next;
            g.at(c, r) = next;
            ++next;
        }
    // C: a fresh-symbol copy of the (F-3)-size grid
    PdaGrid inner = ff2_recursive(F - 3);
    const Cell offset = next - 1;
    for (int r = 0; r < F - 3; ++r)
        for (int c = 0; c < F - 3; ++c)
            if (!inner.is_empty(r, c)) g.at(r + 3, c + 3) = inner.at(r, c) + offset;
    return g;
}

namespace {

struct CatalogEntry {
    const char* id;
    int F, K, Z, s;
    const char* rows;  // ';'-separated rows in the text format
};

// Fixed reference arrays, addressable by catalog id.
constexpr CatalogEntry kCatalog[] = {
    {"e.demo", 2, 2, 1, 1, "- 1;1 -"},
    {"e.2", 4, 6, 2, 4,
     "- - - 4 3 2;- 4 3 - - 1;4 - 2 - 1 -;3 2 - 1 - -"},
    {"e.2-3-a", 4, 10, 3, 3,
     "1 - - - 2 - - - 3 -;- 1 - - - 2 - - - 3;- - 1 - - - 2 - - -;- - - 1 - - - 2 - -"},
    {"e.2-3-b", 8, 4, 6, 2,
     "1 - - -;2 - - -;- 1 - -;- 2 - -;- - 1 -;- - 2 -;- - - 1;- - - 2"},
    {"e.1", 5, 5, 1, 10,
     "- 10 9 8 7;10 - 6 5 4;9 6 - 3 2;8 5 3 - 1;7 4 2 1 -"},
    {"e.5-10-2", 5, 10, 2, 10,
     "- - - - 10 9 8 7 6 5;"
     "- 10 9 8 - - - 4 3 2;"
     "10 - 7 6 - 4 3 - - 1;"
     "9 7 - 5 4 - 2 - 1 -;"
     "8 6 5 - 3 2 - 1 - -"},
    {"fig-z3", 6, 20, 3, 15,
     "- - - - - - - - - - 15 14 13 12 11 10 9 8 7 6;"
     "- - - - 15 14 13 12 11 10 - - - - - - 5 4 3 2;"
     "- 15 14 13 - - - 9 8 7 - - - 5 4 3 - - - 1;"
     "15 - 12 11 - 9 8 - - 6 - 5 4 - - 2 - - 1 -;"
     "14 12 - 10 9 - 7 - 6 - 5 - 3 - 2 - - 1 - -;"
     "13 11 10 - 8 7 - 6 - - 4 3 - 2 - - 1 - - -"},
    {"e.553-a", 5, 5, 3, 4,
     "1 3 - - -;2 - 3 - -;- 2 1 - -;- - - 1 3;- - - 2 4"},
    {"e.553-b", 6, 4, 3, 4,
     "- - 1 4;- 1 - 3;1 - - 2;- 4 3 -;4 - 2 -;3 2 - -"},
    {"fig-small-k2", 4, 2, 2, 2, "1 -;2 -;- 1;- 2"},
    {"fig-small-k3", 4, 3, 2, 3, "1 - 3;2 - -;- 3 -;- 1 2"},
    {"fig-small-k4", 4, 4, 2, 4, "1 - 3 -;2 - 4 -;- 1 - 3;- 2 - 4"},
    {"fig-small5-3-k2", 5, 2, 3, 2, "1 -;2 -;- 1;- 2;- -"},
    {"fig-small5-3-k3", 5, 3, 3, 3, "1 - -;2 - 3;- 1 -;- 2 -;- - 1"},
    {"fig-small5-3-k4", 5, 4, 3, 3, "1 - - -;2 - 3 -;- 1 - 3;- 2 - -;- - 1 2"},
    {"fig-small5-3-k6", 5, 6, 3, 4,
     "1 - - 3 4 -;- 1 - 2 - 4;- - 1 - 2 3;2 3 - - - -;- - 4 - - -"},
    {"fig-5k2-k3", 5, 3, 2, 5, "1 - 5;2 - 4;3 4 -;- 1 3;- 2 -"},
    {"fig-5k2-k4", 5, 4, 2, 6, "1 - 4 5;2 4 - 6;3 5 6 -;- 1 - 3;- - 2 -"},
    {"fig-5k2-k6", 5, 6, 2, 8,
     "- - 1 3 7 6;1 - - 4 5 8;- 1 - - 2 -;3 4 5 - - 2;6 7 8 2 - -"},
    {"fig-5k2-k7", 5, 7, 2, 10,
     "- - 1 2 9 - 5;1 - - 4 6 3 7;- 1 - 8 - 10 -;2 3 4 - 8 - 10;5 6 7 - - 9 -"},
    {"fig-largeF-F5", 5, 4, 3, 3,
     "1 - - 2;- 1 - 3;- - 1 -;- 2 - -;3 - 2 -"},
    {"fig-largeF-F6", 6, 4, 3, 4,
     "2 1 - -;3 - 1 -;4 - - 1;- 3 2 -;- 4 - 2;- - 4 3"},
    {"fig-largeF-F7", 7, 4, 3, 8,
     "1 - - 3;- 1 - 2;- - 1 4;2 3 - -;4 - 3 -;- 4 2 -;5 6 7 8"},
    {"fig-largeF-F8", 8, 4, 3, 10,
     "1 - - 5;- 1 - 6;- - 1 7;3 2 - 8;4 - 2 9;- 4 3 -;7 5 6 -;10 9 8 -"},
    {"fig-largeF-F9", 9, 4, 3, 12,
     "1 2 3 -;- 4 5 1;4 - 6 2;5 6 - 3;7 8 9 -;- 10 11 7;11 12 - 9;10 - 12 8;- - - -"},
    // the same array read without its all-empty bottom row
    {"fig-largeF-F9-842", 8, 4, 2, 12,
     "1 2 3 -;- 4 5 1;4 - 6 2;5 6 - 3;7 8 9 -;- 10 11 7;11 12 - 9;10 - 12 8"},
    {"fig-largeF2-F10", 10, 4, 3, 14,
     "1 - 2 4;- 1 3 5;3 2 - 6;5 4 6 -;8 7 - 12;9 - 7 10;- 9 8 11;11 10 12 -;"
     "- 14 - 13;14 - 13 -"},
    {"fig-largeF2-F11", 11, 4, 3, 17,
     "1 - 2 4;- 1 3 5;3 2 - 6;5 4 6 -;8 7 - 12;9 - 7 10;- 9 8 11;11 10 12 -;"
     "13 14 - 16;15 - 14 17;- 15 13 -"},
    {"fig-largeF2-F12", 12, 4, 3, 18,
     "1 - 2 4;- 1 3 5;3 2 - 6;5 4 6 -;8 7 - 12;9 - 7 10;- 9 8 11;11 10 12 -;"
     "13 14 16 -;17 15 - 16;18 - 15 14;- 18 17 13"},
    {"fig-fk-662", 6, 6, 2, 11,
     "- - 1 2 5 8;1 - - 3 6 9;- 1 - 4 7 10;2 3 4 - 11 -;5 6 7 - - 11;8 9 10 11 - -"},
    {"fig-fk-663", 6, 6, 3, 6,
     "1 - - 2 3 -;- 1 - 4 - 3;- - 1 - 4 6;6 - 2 - 5 -;4 2 - - - 5;- 6 3 5 - -"},
    {"fig-fk7-z3", 7, 7, 3, 10,
     "1 - - 2 6 7 -;- 1 - 3 5 - 7;- - 1 4 - 5 6;3 2 - - 9 10 -;4 - 2 - 8 - 10;"
     "- 4 3 - - 8 9;5 6 7 8 - - -"},
    {"fig-fk7-z4", 7, 7, 4, 6,
     "1 - - - 2 - 4;- 1 - - - 2 6;- - 1 - - 5 3;- - - 1 6 4 -;5 3 2 - - - -;"
     "6 4 - 2 - - -;- - 4 3 5 - -"},
    {"fig-fk7-z5", 7, 7, 5, 4,
     "1 - - - - - 3;- 1 - - - 3 -;- - 1 - - - 2;- - - 1 - 2 -;- - - - 1 - -;"
     "2 - 4 3 - - -;- 2 - - 3 - -"},
    {"fig-more-775", 7, 7, 5, 4,
     "1 - - - - - 2;- 1 - - - 2 -;- - 1 - 2 - -;- - - 1 3 - -;- - 3 2 - - -;"
     "- 3 - - - 4 -;3 - - - - - 4"},
    {"fig-ff2-f3", 3, 3, 2, 1, "- - 1;1 - -;- 1 -"},
    {"fig-ff2-f4", 4, 4, 2, 4, "- - 1 2;1 - - 3;- 1 - -;2 3 4 -"},
    {"fig-ff2-f5", 5, 5, 2, 7,
     "- - 1 2 5;1 - - 3 6;- 1 - 4 7;2 3 4 - -;5 6 7 - -"},
    {"pda-331", 3, 3, 1, 3, "- 3 2;3 - 1;2 1 -"},
    {"rem-441", 4, 4, 1, 6, "1 2 4 -;5 3 - 4;6 - 3 2;- 6 5 1"},
    {"rem-664", 6, 6, 4, 3,
     "- - 3 - 2 -;- - - 3 - 2;3 - - - 1 -;- 3 - - - 1;2 - 1 - - -;- 2 - 1 - -"},
    {"rem-885", 8, 8, 5, 6,
     "1 - 2 - 4 - - -;- 1 - 2 - 4 - -;5 - 3 - - - 4 -;- 5 - 3 - - - 4;"
     "6 - - - 3 - 2 -;- 6 - - - 3 - 2;- - 6 - 5 - 1 -;- - - 6 - 5 - 1"},
};

const std::map<std::string, const CatalogEntry*>& catalog_index() {
    static const auto* index = [] {
        auto* m = new std::map<std::string, const CatalogEntry*>;
        for (const auto& e : kCatalog) (*m)[e.id] = &e;
        return m;
    }();
    return *index;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
    static const auto* ids = [] {
        auto* v = new std::vector<std::string>;
        for (const auto& e : kCatalog) v->push_back(e.id);
        return v;
    }();
    return *ids;
}

PdaGrid fixed_catalog(const std::string& id) {
    auto it = catalog_index().find(id);
    if (it == catalog_index().end())
        throw std::invalid_argument("fixed_catalog: unknown id '" + id + "'");
    const auto& e = *it->second;
    std::string text = "PDA " + std::to_string(e.F) + ' ' + std::to_string(e.K) + ' ' +
                       std::to_string(e.Z) + ' ' + std::to_string(e.s) + '\n';
    for (const char* p = e.rows; *p; ++p) text += (*p == ';') ? '\n' : *p;
    text += '\n';
    return read_pda(text);
}

PdaParams catalog_params(const std::string& id) {
    auto it = catalog_index().find(id);
    if (it == catalog_index().end())
        throw std::invalid_argument("catalog_params: unknown id '" + id + "'");
    const auto& e = *it->second;
    return {e.F, e.K, e.Z, e.s};
}

PdaGrid z1_general(int F, int K) {
    if (F < 2 || K < 1) throw std::invalid_argument("z1_general: need F >= 2, K >= 1");
    const int l = K / F, i = K % F;
    std::optional<PdaGrid> out;
    if (l >= 1) {
        out = concat_copies(z1_square(F), l);
    }
    if (i > 0) {
        // tail: an i x i square block atop F-i rows of fresh symbols
        PdaGrid tail(F, i);
        Cell next = 1;
        if (i >= 2) {
            PdaGrid block = z1_square(i);
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c) tail.at(r, c) = block.at(r, c);
            next = block.max_symbol() + 1;
        }
        for (int r = i; r < F; ++r)
            for (int c = 0; c < i; ++c) tail.at(r, c) = next++;
        out = out ? concat_disjoint(*out, tail) : tail;
    }
    return *out;
}

namespace {

PdaGrid stack_fresh_rows(const PdaGrid& grid, int extra_rows) {
    PdaGrid g(grid.rows() + extra_rows, grid.cols());
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c) g.at(r, c) = grid.at(r, c);
    Cell next = grid.max_symbol() + 1;
    for (int r = grid.rows(); r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) g.at(r, c) = next++;
    return g;
}

// Single-column PDA(F,1,Z).
PdaGrid one_column(int F, int Z) {
    PdaGrid g(F, 1);
    for (int r = 0; r < F - Z; ++r) g.at(r, 0) = r + 1;
    return g;
}

std::optional<PdaGrid> build_recipe(int F, int K, int Z, std::string& name) {
    if (Z == F) { name = "simple:all-cached"; return simple_family(F, K, Z, 2); }
    if (Z == 0) { name = "simple:no-cache"; return simple_family(F, K, Z, 1); }
    if (Z == F - 1) { name = "simple:diagonal-blocks"; return simple_family(F, K, Z, 3); }
    if (static_cast<long long>(F) >= static_cast<long long>(F - Z) * K) {
        name = "simple:stacked-blocks";
        return simple_family(F, K, Z, 4);
    }
    if (K == 2) { name = "k2"; return k2(F, Z); }
    if (Z == 1) { name = "z1"; return z1_general(F, K); }

    {
        const long long cfz = binomial(F, Z);
        const long long xmax = ceil_div(Z + 1, F - Z) - 1;
        for (long long x = 0; x <= xmax; ++x) {
            if ((K + x) % cfz == 0 && (K + x) / cfz >= 1) {
                name = "rpda";
                auto g = concat_copies(rpda_recursive(F, Z), static_cast<int>((K + x) / cfz));
                return x ? drop_columns(g, static_cast<int>(x)) : g;
            }
        }
    }

    for (int t = 2; t < K; ++t)
        if (binomial(K, t) == F && binomial(K - 1, t - 1) == Z) {
            name = "transpose-rpda";
            return transpose_rpda(rpda_recursive(K, t));
        }

    if (F == 4 && Z == 2) {
        name = "f4z2";
        const int l = K / 6, i = K % 6;
        if (i == 5) return drop_columns(concat_copies(fixed_catalog("e.2"), l + 1), 1);
        std::optional<PdaGrid> g;
        if (l >= 1) g = concat_copies(fixed_catalog("e.2"), l);
        if (i > 0) {
            PdaGrid tail = (i == 1) ? one_column(4, 2)
                                    : fixed_catalog("fig-small-k" + std::to_string(i));
            g = g ? concat_disjoint(*g, tail) : tail;
        }
        return g;
    }

    if (F == 5 && Z == 3) {
        name = "f5z3";
        const int l = K / 10, i = K % 10;
        if (i == 9 || i == 8 || i == 7)
            return drop_columns(concat_copies(rpda_recursive(5, 3), l + 1), 10 - i);
        std::optional<PdaGrid> g;
        if (l >= 1) g = concat_copies(rpda_recursive(5, 3), l);
        if (i > 0) {
            PdaGrid tail = (i == 1)   ? one_column(5, 3)
                           : (i == 5) ? fixed_catalog("e.553-a")
                                      : fixed_catalog("fig-small5-3-k" + std::to_string(i));
            g = g ? concat_disjoint(*g, tail) : tail;
        }
        return g;
    }

    if (F == 5 && Z == 2) {
        name = "f5z2";
        const int l = K / 10, i = K % 10;
        if (i >= 7)
            // dropping the last three columns also drops one symbol
            return drop_columns(concat_copies(rpda_recursive(5, 2), l + 1), 10 - i);
        std::optional<PdaGrid> g;
        if (l >= 1) g = concat_copies(rpda_recursive(5, 2), l);
        if (i > 0) {
            PdaGrid tail = (i == 1)   ? one_column(5, 2)
                           : (i == 2) ? k2(5, 2)
                           : (i == 5) ? fixed_catalog("fig-ff2-f5")
                                      : fixed_catalog("fig-5k2-k" + std::to_string(i));
            g = g ? concat_disjoint(*g, tail) : tail;
        }
        return g;
    }

    if (F == K && Z == 2) { name = "ff2"; return ff2_recursive(F); }

    if (K == 4 && Z == 3) {
        name = "f4k3";
        if (F >= 5 && F <= 9) return fixed_catalog("fig-largeF-F" + std::to_string(F));
        if (F >= 10 && F <= 12)
            return fixed_catalog("fig-largeF2-F" + std::to_string(F));
        if (F > 12)
            return stack_fresh_rows(fixed_catalog("fig-largeF2-F12"), F - 12);
    }

    if (F == K && F % 3 == 0 && Z == F - 2) {
        name = "blowup-3t";
        return blow_up(fixed_catalog("pda-331"), F / 3);
    }
    if (F == K && F % 4 == 0 && Z == F - 3) {
        name = "blowup-4t";
        return blow_up(fixed_catalog("rem-441"), F / 4);
    }
    if (F == 8 && K == 12 && Z == 6) {
        name = "blowup";
        return blow_up(fixed_catalog("e.2"), 2);
    }
    if (F == 10 && K == 20 && Z == 8) {
        name = "blowup";
        return blow_up(rpda_recursive(5, 3), 2);
    }

    if (F == 6 && K == 6 && Z == 3) { name = "fixed:fig-fk-663"; return fixed_catalog("fig-fk-663"); }
    if (F == 7 && K == 7 && Z >= 3 && Z <= 5) {
        name = "fixed:fig-fk7-z" + std::to_string(Z);
        return fixed_catalog("fig-fk7-z" + std::to_string(Z));
    }

    // last resort: any catalog entry with matching parameters
    for (const auto& id : catalog_ids()) {
        auto p = catalog_params(id);
        if (p.F == F && p.K == K && p.Z == Z) {
            name = "fixed:" + id;
            return fixed_catalog(id);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Construction> family_builder(int F, int K, int Z) {
    if (F < 1 || K < 1 || Z < 0 || Z > F) return std::nullopt;
    std::string name;
    auto grid = build_recipe(F, K, Z, name);
    if (!grid) return std::nullopt;

    const long long s = grid->symbol_count();
    Optimality opt = Optimality::None;
    if (auto known = best_known_s(F, K, Z); known && known->exact() && known->lo == s)
        opt = Optimality::ExactProven;
    else if (Z < F && lower_bound_basic(F, K, Z).value == s)
        opt = Optimality::LowerBoundMatched;
    ConstructionProvenance prov{name, PdaParams{F, K, Z, static_cast<int>(s)}, s, opt};
    return Construction{std::move(*grid), std::move(prov)};
}

}  // namespace pda
