#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pda/grid.hpp"

namespace pda {

enum class Optimality { ExactProven, LowerBoundMatched, None };

struct ConstructionProvenance {
    std::string name;
    PdaParams params;
    long long claimed_s = 0;
    Optimality optimality = Optimality::None;
};

struct Construction {
    PdaGrid grid;
    ConstructionProvenance provenance;
};

// Closed-form families for special Z. Cases: 1: Z=0 (all distinct), 2: Z=F
// (all empty), 3: Z=F-1 (diagonal blocks), 4: Z=F-t with F >= tK (stacked
// t-blocks).
PdaGrid simple_family(int F, int K, int Z, int tcase);

// Optimal two-column PDA: s = 2F-3Z when F >= 2Z, else F-Z.
PdaGrid k2(int F, int Z);

// F x F grid with empty diagonal, each symbol twice; s = F(F-1)/2.
PdaGrid z1_square(int F);

// Optimal PDA(F,K,1) for K = lF + i: l disjoint squares plus an i-column tail.
PdaGrid z1_general(int F, int K);

// The recursive F x C(F,Z) array with s = C(F,Z+1): column c's empty rows are
// the c-th Z-subset in TB order and symbol t occupies the t-th (Z+1)-subset in
// BT order.
PdaGrid rpda_recursive(int F, int Z);

// Side-by-side copies on disjoint symbols.
PdaGrid concat_copies(const PdaGrid& grid, int l);
// Side-by-side concatenation of two grids with equal F and Z, symbols of b
// shifted past those of a.
PdaGrid concat_disjoint(const PdaGrid& a, const PdaGrid& b);
// Remove the last x columns, renumbering vanished symbols away.
PdaGrid drop_columns(const PdaGrid& grid, int x);
// Transpose of a row-regular grid (every row the same number of empty cells).
PdaGrid transpose_rpda(const PdaGrid& grid);
// Substitute each cell by a t x t block: symbols on the diagonal, empties
// everywhere else. PDA(tF, tK, tF - (F-Z)).
PdaGrid blow_up(const PdaGrid& grid, int t);

// F x F, Z=2, empty main diagonal; s follows s(F) = 3F-8 + s(F-3).
PdaGrid ff2_recursive(int F);

const std::vector<std::string>& catalog_ids();
PdaGrid fixed_catalog(const std::string& id);
PdaParams catalog_params(const std::string& id);

// Dispatches the best applicable recipe for (F,K,Z); absent when none applies.
std::optional<Construction> family_builder(int F, int K, int Z);

}  // namespace pda
