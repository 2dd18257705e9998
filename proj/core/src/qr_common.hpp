#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cvs::qr_detail {

/// Module grid marking function-pattern positions (finders, separators,
/// timing, alignment, dark module, format and version areas). Data goes
/// everywhere else.
std::vector<std::uint8_t> function_module_map(int version);

/// The placement order of data bits: standard two-column zigzag from the
/// right edge, skipping the vertical timing column and function modules.
std::vector<std::pair<int, int>> data_module_order(int version);

/// Mask predicate for mask pattern 0-7 at (x, y); true means invert.
bool mask_bit(int mask, int x, int y);

} // namespace cvs::qr_detail
