#include "rfsemi/configenum.hpp"

#include <algorithm>
#include <array>

namespace rfsemi {

namespace {

int bit_index(int order, int i, int j) { return config_bit_index(order, i, j); }

} // namespace

std::string config_hex_id(const ZeroConfig& cfg) {
    int digits = (config_bits(cfg.order) + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    static const char* hex = "0123456789abcdef";
    std::uint64_t m = cfg.mask;
    for (int d = digits - 1; d >= 0; --d) {
        out[static_cast<std::size_t>(d)] = hex[m & 0xf];
        m >>= 4;
    }
    return out;
}

std::string config_grid(const ZeroConfig& cfg) {
    std::string out;
    for (int i = 0; i < cfg.order; ++i) {
        for (int j = 0; j < cfg.order; ++j) {
            if (j) out += ' ';
            if (i == j)
                out += '-';
            else
                out += (cfg.mask >> bit_index(cfg.order, i, j)) & 1 ? '0' : '+';
        }
        out += '\n';
    }
    return out;
}

bool config_admissible(const ZeroConfig& cfg) {
    const int n = cfg.order;
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        int row_pos = 0, col_pos = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (!((cfg.mask >> bit_index(n, i, j)) & 1)) ++row_pos;
            if (!((cfg.mask >> bit_index(n, j, i)) & 1)) ++col_pos;
        }
        if (row_pos != 2 || col_pos != 2) return false;
    }
    return true;
}

std::vector<ZeroConfig> enumerate_configs(int n) {
    if (n < 3 || n > 8) throw OrderOutOfRange("order must be in [3, 8]");

    // Row patterns: choose the two positive (unset) columns of each row.
    std::vector<ZeroConfig> out;
    std::array<int, 8> col_pos{};
    std::uint64_t mask = 0;

    auto recurse = [&](auto&& self, int row) -> void {
        if (row == n) {
            for (int j = 0; j < n; ++j)
                if (col_pos[static_cast<std::size_t>(j)] != 2) return;
            out.push_back({n, mask});
            return;
        }
        for (int a = 0; a < n; ++a) {
            if (a == row || col_pos[static_cast<std::size_t>(a)] >= 2) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == row || col_pos[static_cast<std::size_t>(b)] >= 2) continue;
                // Columns other than a, b still reachable from later rows?
                bool feasible = true;
                for (int j = 0; j < n && feasible; ++j) {
                    int have = col_pos[static_cast<std::size_t>(j)] +
                               (j == a || j == b ? 1 : 0);
                    int avail = 0;
                    for (int r = row + 1; r < n; ++r)
                        if (r != j) ++avail;
                    if (have + avail < 2) feasible = false;
                }
                if (!feasible) continue;
                std::uint64_t row_zeros = 0;
                for (int j = 0; j < n; ++j)
                    if (j != row && j != a && j != b)
                        row_zeros |= std::uint64_t{1} << bit_index(n, row, j);
                mask |= row_zeros;
                ++col_pos[static_cast<std::size_t>(a)];
                ++col_pos[static_cast<std::size_t>(b)];
                self(self, row + 1);
                --col_pos[static_cast<std::size_t>(a)];
                --col_pos[static_cast<std::size_t>(b)];
                mask &= ~row_zeros;
            }
        }
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_configs(int n) { return enumerate_configs(n).size(); }

} // namespace rfsemi
