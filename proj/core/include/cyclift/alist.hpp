#pragma once

#include <string>
#include <string_view>

#include "cyclift/parity_check.hpp"

namespace cyclift {

// alist interchange format:
//   line 1: "n m"
//   line 2: "max_col_deg max_row_deg"
//   line 3: the n column degrees
//   line 4: the m row degrees
//   n lines of column neighbor lists (1-based check indices, 0-padding allowed)
//   m lines of row neighbor lists
//
// parse_alist throws parse_error with the offending 1-based line number on
// malformed headers, out-of-range indices, or row/column list inconsistency.
ParityCheckMatrix parse_alist(std::string_view text);

// Canonical form: neighbor lists ascending, no zero padding. Round-trips
// through parse_alist to an equal matrix.
std::string emit_alist(const ParityCheckMatrix& H);

ParityCheckMatrix read_alist_file(const std::string& path);
void write_alist_file(const std::string& path, const ParityCheckMatrix& H);

}  // namespace cyclift
