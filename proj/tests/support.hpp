#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hlg/hlg.hpp"

namespace hlg {
inline void PrintTo(const QPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const RootVec& v, std::ostream* os) { *os << v.str(); }
}  // namespace hlg

namespace hlg::testing {

inline RootSystem make(const std::string& name) { return RootSystem(RootSystemSpec::parse(name)); }

inline const std::vector<std::string>& small_systems() {
    static const std::vector<std::string> s{"A1", "A2", "A3", "B2", "C2", "B3", "C3"};
    return s;
}

/// Dominant λ = Σ a_i ω_i with Σ a_i ≤ bound.
inline std::vector<std::vector<std::int64_t>> lambdas_up_to(int rank, int bound) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> a(static_cast<std::size_t>(rank), 0);
    auto rec = [&](auto&& self, std::size_t i, int used) -> void {
        if (i == a.size()) {
            out.push_back(a);
            return;
        }
        for (int k = 0; used + k <= bound; ++k) {
            a[i] = k;
            self(self, i + 1, used + k);
        }
        a[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Brute-force semistandard fillings of a partition with entries 1..m, counted by content.
inline std::int64_t count_ssyt(const std::vector<std::int64_t>& shape, const std::vector<std::int64_t>& content) {
    const int m = static_cast<int>(content.size());
    std::vector<std::vector<int>> t;
    for (auto len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::int64_t> used(content.size(), 0);
    std::int64_t count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            if (used == content) ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= m; ++v) {
            if (c > 0 && t[r][c - 1] > v) continue;
            if (r > 0 && t[r - 1][c] >= v) continue;
            if (used[static_cast<std::size_t>(v - 1)] == content[static_cast<std::size_t>(v - 1)]) continue;
            t[r][c] = v;
            ++used[static_cast<std::size_t>(v - 1)];
            self(self, k + 1);
            --used[static_cast<std::size_t>(v - 1)];
        }
        t[r][c] = 0;
    };
    rec(rec, 0);
    return count;
}

}  // namespace hlg::testing
