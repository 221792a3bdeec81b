#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pda/grid.hpp"

namespace pda {

using Packet = std::vector<std::uint8_t>;

struct ServerDb {
    int num_files = 0;
    int packets_per_file = 0;
    int packet_len = 0;
    // packets[file][row]
    std::vector<std::vector<Packet>> packets;

    const Packet& packet(int file, int row) const { return packets[file][row]; }
};

// Deterministic pseudorandom database.
ServerDb make_db(int num_files, int packets_per_file, int packet_len,
                 std::uint64_t seed);

struct CachePlacement {
    // cached_rows[k]: rows j with cell (j,k) empty, ascending
    std::vector<std::vector<int>> cached_rows;
    // cache[k][file][i] = packet cached_rows[k][i] of that file
    std::vector<std::vector<std::vector<Packet>>> cache;

    bool node_has_row(int node, int row) const;
    const Packet& cached_packet(int node, int file, int row) const;
};

struct DemandVector {
    std::vector<int> d;  // file index per node, 0-based
};

struct CodedPacket {
    int symbol = 0;
    Packet payload;
    std::vector<std::pair<int, int>> contributors;  // (row, node)
};

struct BroadcastSet {
    std::vector<CodedPacket> coded;  // one per symbol, ascending symbol id
};

CachePlacement place(const PdaGrid& grid, const ServerDb& db);
BroadcastSet deliver(const PdaGrid& grid, const ServerDb& db,
                     const DemandVector& demands);
// Reconstructs file demands.d[node] from cache plus broadcasts. Throws
// std::logic_error on a protocol violation (unreachable for verified grids).
std::vector<std::uint8_t> decode(int node, const CachePlacement& placement,
                                 const BroadcastSet& broadcasts,
                                 const DemandVector& demands,
                                 const PdaGrid& grid);

struct Metrics {
    int broadcasts = 0;       // == s
    int rate_num = 0;         // rate = s/F as an exact fraction
    int rate_den = 1;
    int cache_num = 0;        // Z/F
    int cache_den = 1;
    std::int64_t bytes_on_wire = 0;
};

Metrics measure(const PdaGrid& grid, int packet_len);

struct SchemeRun {
    PdaParams params;
    std::uint64_t seed = 0;
    DemandVector demands;
    bool all_decoded = false;
    std::vector<bool> node_ok;
    Metrics metrics;
    std::string manifest;  // line-oriented run record
};

SchemeRun run_scheme(const PdaGrid& grid, int num_files,
                     const DemandVector& demands, std::uint64_t seed,
                     int packet_len = 64);

}  // namespace pda
