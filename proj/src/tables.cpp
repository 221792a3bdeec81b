#include "pda/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "pda/bounds.hpp"

namespace pda {

namespace {

struct Row {
    int F, K, Z;
};

std::vector<Row> family_rows(const std::string& family) {
    std::vector<Row> rows;
    if (family == "f4k3") {
        for (int F = 4; F <= 20; ++F) rows.push_back({F, 4, 3});
    } else if (family == "s66") {
        for (int Z = 0; Z <= 6; ++Z) rows.push_back({6, 6, Z});
    } else if (family == "s77") {
        for (int Z = 0; Z <= 7; ++Z) rows.push_back({7, 7, Z});
    } else if (family == "s4k2") {
        for (int K = 1; K <= 24; ++K) rows.push_back({4, K, 2});
    } else if (family == "s5k3") {
        for (int K = 1; K <= 20; ++K) rows.push_back({5, K, 3});
    } else if (family == "s5k2") {
        for (int K = 1; K <= 20; ++K) rows.push_back({5, K, 2});
    } else {
        throw std::invalid_argument("render_table: unknown family '" + family + "'");
    }
    return rows;
}

}  // namespace

const std::vector<std::string>& table_families() {
    static const std::vector<std::string> families = {"f4k3", "s66",  "s77",
                                                      "s4k2", "s5k3", "s5k2"};
    return families;
}

std::string render_table(const std::string& family) {
    std::ostringstream out;
    out << "# family " << family << '\n';
    out << "F\tK\tZ\ts\tprovenance\n";
    for (const auto& [F, K, Z] : family_rows(family)) {
        auto known = best_known_s(F, K, Z);
        out << F << '\t' << K << '\t' << Z << '\t';
        if (!known) {
            out << "?\t-\n";
            continue;
        }
        if (known->exact())
            out << known->lo;
        else
            out << known->lo << ".." << known->hi;
        out << '\t' << known->provenance;
        if (!known->conflict_note.empty()) out << '\t' << known->conflict_note;
        out << '\n';
    }
    return out.str();
}

std::string render_all_tables() {
    std::string all;
    for (const auto& family : table_families()) {
        if (!all.empty()) all += '\n';
        all += render_table(family);
    }
    return all;
}

}  // namespace pda
