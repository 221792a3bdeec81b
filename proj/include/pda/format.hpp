#pragma once

#include <stdexcept>
#include <string>

#include "pda/grid.hpp"

namespace pda {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& message);
    int line;    // 1-based
    int column;  // 1-based, 0 when the whole line is at fault
};

// Text format: `PDA <F> <K> <Z> <s>` header, then F rows of K single-space
// separated tokens, `-` for empty. Lines starting with `#` are ignored.
PdaGrid read_pda(const std::string& text);
std::string write_pda(const PdaGrid& grid);

}  // namespace pda
