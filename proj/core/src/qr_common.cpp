#include "qr_common.hpp"

#include "qr_tables.hpp"

namespace cvs::qr_detail {

std::vector<std::uint8_t> function_module_map(int version) {
    const int size = matrix_size(version);
    std::vector<std::uint8_t> map(std::size_t(size) * size, 0);
    auto mark = [&](int x, int y) {
        if (x >= 0 && y >= 0 && x < size && y < size) {
            map[std::size_t(y) * size + x] = 1;
        }
    };

    // Finders with separators plus the adjoining format areas: 9x9 at the
    // top-left, 8 cols x 9 rows at the top-right, 9 cols x 8 rows at the
    // bottom-left.
    for (int dy = 0; dy <= 8; ++dy) {
        for (int dx = 0; dx <= 8; ++dx) {
            mark(dx, dy);
            if (dx <= 7) mark(size - 1 - dx, dy);
            if (dy <= 7) mark(dx, size - 1 - dy);
        }
    }
    // Timing patterns.
    for (int i = 0; i < size; ++i) {
        mark(i, 6);
        mark(6, i);
    }
    // Alignment patterns.
    const std::vector<int> align = alignment_positions(version);
    for (int cy : align) {
        for (int cx : align) {
            const bool in_finder = (cx <= 8 && cy <= 8) ||
                                   (cx >= size - 9 && cy <= 8) ||
                                   (cx <= 8 && cy >= size - 9);
            if (in_finder) continue;
            for (int dy = -2; dy <= 2; ++dy) {
                for (int dx = -2; dx <= 2; ++dx) {
                    mark(cx + dx, cy + dy);
                }
            }
        }
    }
    // Version information blocks.
    if (version >= 7) {
        for (int i = 0; i < 18; ++i) {
            const int a = i / 3;
            const int b = size - 11 + i % 3;
            mark(a, b);
            mark(b, a);
        }
    }
    return map;
}

std::vector<std::pair<int, int>> data_module_order(int version) {
    const int size = matrix_size(version);
    const std::vector<std::uint8_t> function = function_module_map(version);

    std::vector<std::pair<int, int>> order;
    order.reserve(std::size_t(size) * size);
    for (int right = size - 1; right >= 1; right -= 2) {
        if (right == 6) right = 5; // the vertical timing column is skipped whole
        for (int vert = 0; vert < size; ++vert) {
            for (int j = 0; j < 2; ++j) {
                const int x = right - j;
                const bool upward = ((right + 1) & 2) == 0;
                const int y = upward ? size - 1 - vert : vert;
                if (!function[std::size_t(y) * size + x]) {
                    order.emplace_back(x, y);
                }
            }
        }
    }
    return order;
}

bool mask_bit(int mask, int x, int y) {
    switch (mask) {
        case 0: return (x + y) % 2 == 0;
        case 1: return y % 2 == 0;
        case 2: return x % 3 == 0;
        case 3: return (x + y) % 3 == 0;
        case 4: return (y / 2 + x / 3) % 2 == 0;
        case 5: return x * y % 2 + x * y % 3 == 0;
        case 6: return (x * y % 2 + x * y % 3) % 2 == 0;
        case 7: return ((x + y) % 2 + x * y % 3) % 2 == 0;
        default: return false;
    }
}

} // namespace cvs::qr_detail
