#pragma once

#include <string>
#include <vector>

namespace pda {

// Tab-separated tables of determined s(F,K,Z) values with provenance.
// Families: f4k3, s66, s77, s4k2, s5k3, s5k2.
const std::vector<std::string>& table_families();
std::string render_table(const std::string& family);
std::string render_all_tables();

}  // namespace pda
