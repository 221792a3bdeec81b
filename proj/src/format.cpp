#include "pda/format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace pda {

ParseError::ParseError(int line_, int column_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) +
                         (column_ > 0 ? ", column " + std::to_string(column_) : "") +
                         ": " + message),
      line(line_),
      column(column_) {}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, int column) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, column, "expected integer, got '" + tok + "'");
    return value;
}

}  // namespace

PdaGrid read_pda(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line[0] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError(1, 0, "missing header");
    auto head = split_tokens(header);
    if (head.size() != 5 || head[0] != "PDA")
        throw ParseError(lineno, 0, "malformed header, expected 'PDA <F> <K> <Z> <s>'");
    const int F = parse_int(head[1], lineno, 2);
    const int K = parse_int(head[2], lineno, 3);
    const int Z = parse_int(head[3], lineno, 4);
    const int s = parse_int(head[4], lineno, 5);
    if (F < 1 || K < 1 || Z < 0 || Z > F || s < 0)
        throw ParseError(lineno, 0, "header parameters out of range");

    PdaGrid grid(F, K);
    for (int r = 0; r < F; ++r) {
        std::string row;
        if (!next_line(row))
            throw ParseError(lineno + 1, 0, "missing row " + std::to_string(r + 1));
        auto toks = split_tokens(row);
        if (static_cast<int>(toks.size()) != K)
            throw ParseError(lineno, 0,
                             "row " + std::to_string(r + 1) + " has " +
                                 std::to_string(toks.size()) + " tokens, expected " +
                                 std::to_string(K));
        for (int c = 0; c < K; ++c) {
            if (toks[c] == "-") continue;
            int v = parse_int(toks[c], lineno, c + 1);
            if (v < 1 || v > s)
                throw ParseError(lineno, c + 1,
                                 "symbol " + std::to_string(v) + " outside 1.." +
                                     std::to_string(s));
            grid.at(r, c) = v;
        }
    }
    std::string extra;
    if (next_line(extra) && !split_tokens(extra).empty())
        throw ParseError(lineno, 0, "unexpected content after last row");
    return grid;
}

std::string write_pda(const PdaGrid& grid) {
    std::ostringstream os;
    const int Z = grid.empty_in_column(0);
    os << "PDA " << grid.rows() << ' ' << grid.cols() << ' ' << Z << ' '
       << grid.max_symbol() << '\n';
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            if (c) os << ' ';
            if (grid.is_empty(r, c))
                os << '-';
            else
                os << grid.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace pda
