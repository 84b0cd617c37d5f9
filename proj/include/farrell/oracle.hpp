#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "farrell/common.hpp"
#include "farrell/rh.hpp"

// Brute-force reference implementations, kept deliberately independent of
// the closed-form code paths they check.
namespace farrell::oracle {

// Scan the full rectangle for solutions of 2g-2 = p(2h-2) + t(p-1), t >= 1.
inline std::vector<rh::Solution> brute_rh(int g, long p) {
    std::vector<rh::Solution> out;
    for (int h = 0; h <= g; ++h)
        for (int t = 1; t <= 2 * g + 2 * static_cast<int>(p); ++t)
            if (2L * g - 2 == p * (2L * h - 2) + static_cast<long>(t) * (p - 1))
                out.push_back({h, t});
    return out;
}

inline std::vector<rh::GenSolution> brute_generalized_rh(int g, long p) {
    std::vector<rh::GenSolution> out;
    const long pp = p * p;
    const int bound = 2 * g + 2 * static_cast<int>(pp);
    for (int h = 0; h <= g + 1; ++h)
        for (int s = 0; s <= bound; ++s)
            for (int t = 0; t <= bound; ++t)
                if (2L * g - 2 == pp * (2L * h - 2) + s * p * (p - 1) + t * (pp - 1))
                    out.push_back({h, s, t});
    std::sort(out.begin(), out.end());
    return out;
}

// Count conjugacy classes by orbit counting: enumerate every tuple
// (ordered prefix of length i, suffix multiset) over [1, p-1] with entry sum
// 0 mod p and t total entries, then identify orbits of the unit-scaling
// action. No canonical-form shortcut.
inline std::size_t orbit_class_count(int g, int i, long p) {
    using Shape = std::pair<std::vector<int>, std::vector<int>>;
    std::set<Shape> seen;
    std::size_t orbits = 0;
    for (const rh::Solution& sol : brute_rh(g, p)) {
        if (sol.t == 1 || sol.t < i) continue;
        const int t = sol.t;
        std::vector<int> entries(static_cast<std::size_t>(t), 1);
        while (true) {
            long sum = 0;
            for (int b : entries) sum += b;
            if (sum % p == 0) {
                std::vector<int> prefix(entries.begin(), entries.begin() + i);
                std::vector<int> suffix(entries.begin() + i, entries.end());
                std::sort(suffix.begin(), suffix.end());
                if (std::is_sorted(entries.begin() + i, entries.end())) {
                    Shape shape{prefix, suffix};
                    if (!seen.count(shape)) {
                        ++orbits;
                        for (long m = 1; m < p; ++m) {
                            Shape img;
                            for (int b : prefix)
                                img.first.push_back(static_cast<int>(mod_reduce(m * b, p)));
                            for (int b : suffix)
                                img.second.push_back(static_cast<int>(mod_reduce(m * b, p)));
                            std::sort(img.second.begin(), img.second.end());
                            seen.insert(std::move(img));
                        }
                    }
                }
            }
            int k = t - 1;
            while (k >= 0 && entries[k] == p - 1) entries[k--] = 1;
            if (k < 0) break;
            ++entries[k];
        }
    }
    return orbits;
}

} // namespace farrell::oracle
