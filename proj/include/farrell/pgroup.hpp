#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "farrell/common.hpp"

namespace farrell {

// Finite abelian p-group, stored as the sorted multiset of exponents e of its
// cyclic summands Z/p^e. The empty multiset is the zero group.
struct PGroup {
    long p = 0;
    std::vector<int> exps;

    PGroup() = default;
    PGroup(long prime, std::vector<int> exponents) : p(prime), exps(std::move(exponents)) {
        for (int e : exps)
            if (e < 1) throw std::invalid_argument("PGroup: exponents must be >= 1");
        std::sort(this->exps.begin(), this->exps.end());
    }

    static PGroup zero(long prime) { return PGroup(prime, {}); }

    // k copies of Z/p^e.
    static PGroup elementary(long prime, int count, int e = 1) {
        return PGroup(prime, std::vector<int>(static_cast<std::size_t>(count), e));
    }

    bool is_zero() const { return exps.empty(); }

    // log_p of the group order.
    int order_exponent() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }

    int count_exponent(int e) const {
        return static_cast<int>(std::count(exps.begin(), exps.end(), e));
    }

    PGroup direct_sum(const PGroup& other) const {
        if (!is_zero() && !other.is_zero() && p != other.p)
            throw std::invalid_argument("PGroup::direct_sum: mismatched primes");
        PGroup r;
        r.p = is_zero() ? other.p : p;
        r.exps = exps;
        r.exps.insert(r.exps.end(), other.exps.begin(), other.exps.end());
        std::sort(r.exps.begin(), r.exps.end());
        return r;
    }

    // Replace two Z/p summands by one Z/p^2; requires at least two of them.
    PGroup merge_pair() const {
        if (count_exponent(1) < 2)
            throw std::invalid_argument("PGroup::merge_pair: needs two Z/p summands");
        PGroup r = *this;
        r.exps.erase(r.exps.begin(), r.exps.begin() + 2);
        r.exps.push_back(2);
        std::sort(r.exps.begin(), r.exps.end());
        return r;
    }

    friend bool operator==(const PGroup& a, const PGroup& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.p == b.p && a.exps == b.exps;
    }

    std::string render() const {
        if (is_zero()) return "0";
        std::string out;
        std::size_t k = 0;
        while (k < exps.size()) {
            std::size_t j = k;
            while (j < exps.size() && exps[j] == exps[k]) ++j;
            const auto count = j - k;
            if (!out.empty()) out += " \xE2\x8A\x95 "; // direct-sum sign
            if (count > 1) out += std::to_string(count);
            out += "Z/" + std::to_string(ipow(p, exps[k]));
            k = j;
        }
        return out;
    }
};

// A set of group-isomorphism alternatives for one cohomology value; more than
// one entry records an unresolved extension ambiguity. All alternatives share
// the same total order. Sorted by the number of exponent >= 2 summands, then
// lexicographically, deduplicated.
struct AltSet {
    std::vector<PGroup> alts;

    AltSet() = default;
    explicit AltSet(PGroup single) : alts{std::move(single)} {}
    explicit AltSet(std::vector<PGroup> groups) : alts(std::move(groups)) { normalize(); }

    static AltSet zero(long prime) { return AltSet(PGroup::zero(prime)); }

    bool is_zero() const { return alts.size() == 1 && alts[0].is_zero(); }

    void normalize() {
        if (alts.empty()) throw std::invalid_argument("AltSet: must hold at least one alternative");
        auto key = [](const PGroup& g) {
            int high = 0;
            for (int e : g.exps)
                if (e >= 2) ++high;
            return std::pair<int, std::vector<int>>(high, g.exps);
        };
        std::sort(alts.begin(), alts.end(),
                  [&](const PGroup& a, const PGroup& b) { return key(a) < key(b); });
        alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
        const int order = alts[0].order_exponent();
        for (const PGroup& g : alts)
            if (g.order_exponent() != order)
                throw std::invalid_argument("AltSet: alternatives of unequal total order");
    }

    // Direct sum over every pair of alternatives, deduplicated.
    AltSet combine(const AltSet& other) const {
        std::vector<PGroup> out;
        for (const PGroup& a : alts)
            for (const PGroup& b : other.alts) out.push_back(a.direct_sum(b));
        return AltSet(std::move(out));
    }

    friend bool operator==(const AltSet& a, const AltSet& b) {
        if (a.alts.size() != b.alts.size()) return false;
        for (std::size_t k = 0; k < a.alts.size(); ++k)
            if (!(a.alts[k] == b.alts[k])) return false;
        return true;
    }

    std::string render() const {
        std::string out;
        for (std::size_t k = 0; k < alts.size(); ++k) {
            if (k) out += " or ";
            out += alts[k].render();
        }
        return out;
    }
};

// One period of 2-periodic cohomology.
struct PeriodicCohomology {
    AltSet even;
    AltSet odd;

    static PeriodicCohomology zero(long prime) {
        return {AltSet::zero(prime), AltSet::zero(prime)};
    }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    PeriodicCohomology combine(const PeriodicCohomology& other) const {
        return {even.combine(other.even), odd.combine(other.odd)};
    }

    friend bool operator==(const PeriodicCohomology& a, const PeriodicCohomology& b) {
        return a.even == b.even && a.odd == b.odd;
    }
};

} // namespace farrell
