#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfsemi/errors.hpp"

namespace rfsemi {

/// Zero/positive pattern of the off-diagonal of a square matrix.
/// Bits are indexed row-major over off-diagonal cells (i,j), i != j,
/// skipping the diagonal; a set bit means the entry is zero.
struct ZeroConfig {
    int order = 0;
    std::uint64_t mask = 0;

    bool operator==(const ZeroConfig&) const = default;
    bool operator<(const ZeroConfig& o) const {
        return order != o.order ? order < o.order : mask < o.mask;
    }
};

/// Number of off-diagonal cells, i.e. the width of the mask.
inline int config_bits(int order) { return order * (order - 1); }

/// Bit index of off-diagonal cell (i,j), row-major, diagonal skipped.
inline int config_bit_index(int order, int i, int j) {
    return i * (order - 1) + (j < i ? j : j - 1);
}

/// Hexadecimal ID of a configuration, fixed width for its order.
std::string config_hex_id(const ZeroConfig& cfg);

/// Renders the configuration as an order x order grid of '-' (diagonal),
/// '0' (zero entry) and '+' (positive entry), one row per line.
std::string config_grid(const ZeroConfig& cfg);

/// True when every row and every column has exactly two unset (positive)
/// bits among its off-diagonal positions.
bool config_admissible(const ZeroConfig& cfg);

/// All admissible configurations at the given order, ascending mask order.
/// Throws OrderOutOfRange unless 3 <= n <= 8.
std::vector<ZeroConfig> enumerate_configs(int n);

std::size_t count_configs(int n);

} // namespace rfsemi
