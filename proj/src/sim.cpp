#include "pda/sim.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pda {

ServerDb make_db(int num_files, int packets_per_file, int packet_len, std::uint64_t seed) {
    if (num_files < 1 || packets_per_file < 1 || packet_len < 1)
        throw std::invalid_argument("make_db: bad dimensions");
    ServerDb db{num_files, packets_per_file, packet_len, {}};
    std::mt19937_64 rng(seed);
    db.packets.resize(num_files);
    for (auto& file : db.packets) {
        file.resize(packets_per_file);
        for (auto& pkt : file) {
            pkt.resize(packet_len);
            for (auto& byte : pkt) byte = static_cast<std::uint8_t>(rng());
        }
    }
    return db;
}

bool CachePlacement::node_has_row(int node, int row) const {
    const auto& rows = cached_rows[node];
    return std::binary_search(rows.begin(), rows.end(), row);
}

const Packet& CachePlacement::cached_packet(int node, int file, int row) const {
    const auto& rows = cached_rows[node];
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    if (it == rows.end() || *it != row)
        throw std::logic_error("cached_packet: row not cached at node");
    return cache[node][file][it - rows.begin()];
}

CachePlacement place(const PdaGrid& grid, const ServerDb& db) {
    if (db.packets_per_file != grid.rows())
        throw std::invalid_argument("place: database granularity mismatch");
    CachePlacement p;
    p.cached_rows.resize(grid.cols());
    p.cache.resize(grid.cols());
    for (int k = 0; k < grid.cols(); ++k) {
        for (int j = 0; j < grid.rows(); ++j)
            if (grid.is_empty(j, k)) p.cached_rows[k].push_back(j);
        p.cache[k].resize(db.num_files);
        for (int n = 0; n < db.num_files; ++n)
            for (int j : p.cached_rows[k]) p.cache[k][n].push_back(db.packet(n, j));
    }
    return p;
}

namespace {

void xor_into(Packet& acc, const Packet& src) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] ^= src[i];
}

}  // namespace

BroadcastSet deliver(const PdaGrid& grid, const ServerDb& db, const DemandVector& demands) {
    if (static_cast<int>(demands.d.size()) != grid.cols())
        throw std::invalid_argument("deliver: one demand per node required");
    for (int d : demands.d)
        if (d < 0 || d >= db.num_files)
            throw std::invalid_argument("deliver: demand out of range");
    BroadcastSet bs;
    const int s = grid.max_symbol();
    for (int t = 1; t <= s; ++t) {
        CodedPacket cp;
        cp.symbol = t;
        cp.payload.assign(db.packet_len, 0);
        for (int j = 0; j < grid.rows(); ++j)
            for (int k = 0; k < grid.cols(); ++k)
                if (grid.at(j, k) == t) {
                    xor_into(cp.payload, db.packet(demands.d[k], j));
                    cp.contributors.emplace_back(j, k);
                }
        bs.coded.push_back(std::move(cp));
    }
    return bs;
}

std::vector<std::uint8_t> decode(int node, const CachePlacement& placement,
                                 const BroadcastSet& broadcasts, const DemandVector& demands,
                                 const PdaGrid& grid) {
    const int want = demands.d[node];
    std::vector<std::uint8_t> file;
    for (int j = 0; j < grid.rows(); ++j) {
        if (placement.node_has_row(node, j)) {
            const auto& pkt = placement.cached_packet(node, want, j);
            file.insert(file.end(), pkt.begin(), pkt.end());
            continue;
        }
        const Cell t = grid.at(j, node);
        if (t == kEmpty || t > static_cast<int>(broadcasts.coded.size()))
            throw std::logic_error("decode: missing broadcast for uncached packet");
        const auto& cp = broadcasts.coded[t - 1];
        Packet pkt = cp.payload;
        for (auto [row, other] : cp.contributors) {
            if (other == node) continue;
            // every other contribution sits in this node's cache
            xor_into(pkt, placement.cached_packet(node, demands.d[other], row));
        }
        file.insert(file.end(), pkt.begin(), pkt.end());
    }
    return file;
}

Metrics measure(const PdaGrid& grid, int packet_len) {
    Metrics m;
    m.broadcasts = grid.symbol_count();
    const int F = grid.rows();
    int g1 = std::gcd(m.broadcasts, F);
    m.rate_num = g1 ? m.broadcasts / g1 : 0;
    m.rate_den = g1 ? F / g1 : 1;
    const int Z = grid.empty_in_column(0);
    int g2 = std::gcd(Z, F);
    m.cache_num = g2 ? Z / g2 : 0;
    m.cache_den = g2 ? F / g2 : 1;
    m.bytes_on_wire = static_cast<std::int64_t>(m.broadcasts) * packet_len;
    return m;
}

SchemeRun run_scheme(const PdaGrid& grid, int num_files, const DemandVector& demands,
                     std::uint64_t seed, int packet_len) {
    require_valid(grid, "run_scheme");
    SchemeRun run;
    run.params = verify(grid).params();
    run.seed = seed;
    run.demands = demands;

    ServerDb db = make_db(num_files, grid.rows(), packet_len, seed);
    CachePlacement placement = place(grid, db);
    BroadcastSet bs = deliver(grid, db, demands);

    run.node_ok.resize(grid.cols());
    run.all_decoded = true;
    for (int k = 0; k < grid.cols(); ++k) {
        auto got = decode(k, placement, bs, demands, grid);
        std::vector<std::uint8_t> want;
        for (int j = 0; j < grid.rows(); ++j) {
            const auto& pkt = db.packet(demands.d[k], j);
            want.insert(want.end(), pkt.begin(), pkt.end());
        }
        run.node_ok[k] = (got == want);
        run.all_decoded = run.all_decoded && run.node_ok[k];
    }
    run.metrics = measure(grid, packet_len);

    std::ostringstream man;
    man << "scheme F=" << run.params.F << " K=" << run.params.K << " Z=" << run.params.Z
        << " s=" << run.params.s << '\n'
        << "seed " << seed << '\n'
        << "files " << num_files << " packet_len " << packet_len << '\n';
    man << "demands";
    for (int d : demands.d) man << ' ' << d;
    man << '\n';
    man << "broadcasts " << run.metrics.broadcasts << " bytes " << run.metrics.bytes_on_wire
        << '\n'
        << "rate " << run.metrics.rate_num << '/' << run.metrics.rate_den << " cache "
        << run.metrics.cache_num << '/' << run.metrics.cache_den << '\n'
        << "decoded " << (run.all_decoded ? "all" : "FAILED") << '\n';
    run.manifest = man.str();
    return run;
}

}  // namespace pda
