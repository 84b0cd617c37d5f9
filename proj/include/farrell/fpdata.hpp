#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "farrell/common.hpp"
#include "farrell/rh.hpp"

namespace farrell::fpdata {

// Fixed point data delta = (b_1,...,b_i | b_{i+1},...,b_t) of a Z/p action:
// rotation numbers in [1, p-1], one per fixed point. The first i entries sit
// at the labelled punctures and are ordered; the rest form a multiset,
// stored ascending. The entries sum to 0 mod p. Complete conjugacy invariant
// once normalized to b_1 = 1.
struct FixedPointData {
    long p = 0;
    std::vector<int> ordered;
    std::vector<int> suffix;

    FixedPointData() = default;
    FixedPointData(long prime, std::vector<int> ordered_part, std::vector<int> suffix_part)
        : p(prime), ordered(std::move(ordered_part)), suffix(std::move(suffix_part)) {
        if (!is_prime(p)) throw std::invalid_argument("FixedPointData: p must be prime");
        if (ordered.empty())
            throw std::invalid_argument("FixedPointData: needs at least one ordered entry");
        std::sort(suffix.begin(), suffix.end());
        long sum = 0;
        for (int b : all_entries()) {
            if (b < 1 || b >= p)
                throw std::invalid_argument("FixedPointData: entries must lie in [1, p-1]");
            sum += b;
        }
        if (sum % p != 0)
            throw std::invalid_argument("FixedPointData: entries must sum to 0 mod p");
    }

    int i() const { return static_cast<int>(ordered.size()); }
    int t() const { return static_cast<int>(ordered.size() + suffix.size()); }

    std::vector<int> all_entries() const {
        std::vector<int> all = ordered;
        all.insert(all.end(), suffix.begin(), suffix.end());
        return all;
    }

    auto operator<=>(const FixedPointData&) const = default;

    std::string render() const {
        auto join = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k) s += ",";
                s += std::to_string(v[k]);
            }
            return s;
        };
        return "(" + join(ordered) + "|" + join(suffix) + ")";
    }
};

// Symmetry of the unordered part: one symmetric factor per repeated suffix
// value. Multiplicities sorted descending; empty means trivial.
struct SymPart {
    std::vector<int> multiplicities;

    bool trivial() const { return multiplicities.empty(); }

    // Number of permuted points.
    int l() const {
        int s = 0;
        for (int m : multiplicities) s += m;
        return s;
    }

    long order() const {
        long o = 1;
        for (int m : multiplicities) o *= factorial(m);
        return o;
    }

    auto operator<=>(const SymPart&) const = default;
};

inline SymPart sym_part(const FixedPointData& d) {
    std::map<int, int> mult;
    for (int b : d.suffix) ++mult[b];
    SymPart s;
    for (const auto& [value, m] : mult)
        if (m >= 2) s.multiplicities.push_back(m);
    std::sort(s.multiplicities.rbegin(), s.multiplicities.rend());
    return s;
}

// Data of the m-th power of the underlying automorphism: rotation numbers
// scale by m^{-1} mod p.
inline FixedPointData power_data(const FixedPointData& d, long m) {
    m = mod_reduce(m, d.p);
    if (m == 0) throw std::invalid_argument("power_data: m must be a unit mod p");
    const long inv = mod_inverse(m, d.p);
    auto scale = [&](std::vector<int> v) {
        for (int& b : v) b = static_cast<int>(mod_reduce(inv * b, d.p));
        return v;
    };
    return FixedPointData(d.p, scale(d.ordered), scale(d.suffix));
}

// Unique conjugacy representative: scale so the first ordered entry is 1.
inline FixedPointData canonicalize(const FixedPointData& d) {
    return power_data(d, d.ordered[0]);
}

inline bool is_conjugate(const FixedPointData& a, const FixedPointData& b) {
    if (a.p != b.p || a.i() != b.i() || a.t() != b.t()) return false;
    return canonicalize(a) == canonicalize(b);
}

// One conjugacy class of Z/p subgroups: canonical data plus the quotient
// genus / fixed point count realizing it.
struct ClassEntry {
    FixedPointData data;
    rh::Solution cover;
};

namespace detail {

// Ascending multisets of given size over [1, p-1] with fixed sum mod p, in
// lexicographic order.
inline void suffix_multisets(long p, int size, long residue, int min_value,
                             std::vector<int>& current, long partial_sum,
                             std::vector<std::vector<int>>& out) {
    if (size == 0) {
        if (mod_reduce(partial_sum, p) == residue) out.push_back(current);
        return;
    }
    for (int b = min_value; b < p; ++b) {
        current.push_back(b);
        suffix_multisets(p, size - 1, residue, b, current, partial_sum + b, out);
        current.pop_back();
    }
}

} // namespace detail

// All conjugacy classes of Z/p subgroups with fixed data for the genus-g
// surface with i punctures, each in canonical form, ordered by ascending
// quotient genus, then ordered part, then suffix.
inline std::vector<ClassEntry> enumerate_classes(int g, int i, long p) {
    std::vector<ClassEntry> out;
    for (const rh::Solution& sol : rh::admissible_solutions(g, i, p)) {
        const int suffix_size = sol.t - i;
        std::vector<int> prefix(static_cast<std::size_t>(i), 1);
        while (true) {
            long prefix_sum = 0;
            for (int b : prefix) prefix_sum += b;
            const long residue = mod_reduce(-prefix_sum, p);
            std::vector<std::vector<int>> suffixes;
            std::vector<int> scratch;
            detail::suffix_multisets(p, suffix_size, residue, 1, scratch, 0, suffixes);
            for (auto& suf : suffixes)
                out.push_back({FixedPointData(p, prefix, std::move(suf)), sol});
            // next prefix in lexicographic order, first entry pinned to 1
            int k = i - 1;
            while (k >= 1 && prefix[k] == p - 1) prefix[k--] = 1;
            if (k < 1) break;
            ++prefix[k];
        }
    }
    return out;
}

} // namespace farrell::fpdata
