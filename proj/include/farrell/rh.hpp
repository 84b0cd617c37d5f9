#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "farrell/common.hpp"

namespace farrell::rh {

// Branched-cover solution of 2g - 2 = p(2h - 2) + t(p - 1) with h >= 0 and
// t >= 1 fixed points.
struct Solution {
    int h = 0;
    int t = 0;
    auto operator<=>(const Solution&) const = default;
};

// Solution of 2g - 2 = p^2(2h - 2) + s*p(p - 1) + t(p^2 - 1), s, t >= 0;
// witnesses a Z/p^2 action with s points of stabilizer order p and t of
// order p^2.
struct GenSolution {
    int h = 0;
    int s = 0;
    int t = 0;
    auto operator<=>(const GenSolution&) const = default;
};

inline void require_genus_prime(int g, long p) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

inline std::vector<Solution> solve_rh(int g, long p) {
    require_genus_prime(g, p);
    std::vector<Solution> out;
    for (int h = 0; h <= g; ++h) {
        const long rhs = 2L * g - 2 - p * (2L * h - 2);
        if (rhs < p - 1) continue;
        if (rhs % (p - 1) != 0) continue;
        out.push_back({h, static_cast<int>(rhs / (p - 1))});
    }
    return out;
}

// Fixed point counts realizable by a Z/p action on a genus-g surface fixing
// the i punctures: t = 1 never occurs and at least i points must be fixed.
inline std::vector<Solution> admissible_solutions(int g, int i, long p) {
    if (i < 1) throw std::invalid_argument("puncture count must be >= 1");
    std::vector<Solution> out;
    for (const Solution& s : solve_rh(g, p))
        if (s.t != 1 && s.t >= i) out.push_back(s);
    return out;
}

// Primes p with p-torsion in the Farrell cohomology of the genus-g pure
// mapping class group on i punctures. p <= 2g + 1 always, and for i > 2 the
// admissibility filter enforces the sharper bound p <= 2g/(i - 2) + 1.
inline std::vector<long> torsion_primes(int g, int i) {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (i < 1) throw std::invalid_argument("puncture count must be >= 1");
    std::vector<long> out;
    for (long p = 2; p <= 2L * g + 1; ++p)
        if (is_prime(p) && !admissible_solutions(g, i, p).empty()) out.push_back(p);
    return out;
}

inline std::vector<GenSolution> solve_generalized_rh(int g, long p) {
    require_genus_prime(g, p);
    std::vector<GenSolution> out;
    const long pp = p * p;
    for (int h = 0;; ++h) {
        const long rhs0 = 2L * g - 2 - pp * (2L * h - 2);
        if (rhs0 < 0) break;
        for (int s = 0; s * p * (p - 1) <= rhs0; ++s) {
            const long rhs = rhs0 - s * p * (p - 1);
            if (rhs % (pp - 1) != 0) continue;
            out.push_back({h, s, static_cast<int>(rhs / (pp - 1))});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Admissibility table for low genus: one row per group of puncture counts
// sharing identical cells, columns over the primes below.
inline constexpr std::array<long, 4> kRemarkPrimes{2, 3, 5, 7};

struct RemarkRow {
    int g = 0;
    int i_lo = 0;
    int i_hi = 0;
    std::array<std::vector<Solution>, kRemarkPrimes.size()> cells;
};

inline std::vector<RemarkRow> remark_table() {
    constexpr std::array<std::array<int, 3>, 12> groups{{
        {2, 1, 2}, {2, 3, 3}, {2, 4, 4}, {2, 5, 6},
        {3, 1, 2}, {3, 3, 3}, {3, 4, 4}, {3, 5, 5}, {3, 6, 8},
        {1, 1, 2}, {1, 3, 3}, {1, 4, 4},
    }};
    std::vector<RemarkRow> rows;
    for (const auto& [g, lo, hi] : groups) {
        RemarkRow row{g, lo, hi, {}};
        for (std::size_t k = 0; k < kRemarkPrimes.size(); ++k)
            row.cells[k] = admissible_solutions(g, lo, kRemarkPrimes[k]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace farrell::rh
