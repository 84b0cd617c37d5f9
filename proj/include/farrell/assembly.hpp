#pragma once

#include <optional>
#include <string>
#include <vector>

#include "farrell/cohen.hpp"
#include "farrell/common.hpp"
#include "farrell/fpdata.hpp"
#include "farrell/pgroup.hpp"
#include "farrell/rh.hpp"

namespace farrell::assembly {

// Which curated computation settles the normalizer of a class:
//   R1: h=0, t in {4,5}, trivial symmetry, p odd: central extension of the
//       full K_t cohomology, collapse with one optional Z/p^2 merge.
//   R2: h=0, t=4, S2, p=3: curated value 2Z/3 even, Z/3 odd.
//   R3: h=0, t=5, S2, p=3: collapse of the S2-quotient dims (1,3,3).
//   R4: h=0, t=5, S3 or S4, p=3: stable-element value Z/3+Z/9 even, Z/3 odd.
//   R5: h=0, t=3, symmetry order coprime to p: Z/p even, 0 odd.
//   R6: h=1, t=2: Z/p even, 0 odd.
//   R7: p=2 (so g=1, h=0, t=4): Z/2 / 2Z/2 when trivial; Z/4 / Z/2 under S2,
//       the Z/4 witnessed by the generalized branching solution (h,s,t)=(0,1,2).
enum class Rule { R1, R2, R3, R4, R5, R6, R7 };

inline std::string rule_name(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4: return "R4";
        case Rule::R5: return "R5";
        case Rule::R6: return "R6";
        case Rule::R7: return "R7";
    }
    return "?";
}

struct ClassReport {
    fpdata::FixedPointData data;
    rh::Solution cover;
    fpdata::SymPart sym;
    Rule rule{};
    PeriodicCohomology normalizer;

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

inline int genus_from_cover(long p, const rh::Solution& cover) {
    const long two_g = p * (2L * cover.h - 2) + cover.t * (p - 1) + 2;
    if (two_g < 2 || two_g % 2 != 0)
        throw std::invalid_argument("cover does not solve the branching equation for any genus >= 1");
    return static_cast<int>(two_g / 2);
}

// Collapse of the central Z/p extension over a quotient with mod-p dims
// (1, d1, d2, 0, ...): one period is (1 + d2)Z/p even and d1 odd, with an
// unresolved extension alternative merging a pair into Z/p^2 whenever the
// degree-2 part is nonzero.
inline PeriodicCohomology periodic_fold(long p, const cohen::GradedDims& dims) {
    if (!dims.eventually_zero() || dims.head.size() > 3)
        throw unsupported_case("periodic_fold: quotient dims must vanish above degree 2");
    if (dims.at(0) != 1)
        throw std::invalid_argument("periodic_fold: quotient must be connected");
    const int d1 = dims.at(1);
    const int d2 = dims.at(2);
    const PGroup base = PGroup::elementary(p, 1 + d2);
    std::vector<PGroup> evens{base};
    if (d2 > 0) evens.push_back(base.merge_pair());
    return {AltSet(std::move(evens)), AltSet(PGroup::elementary(p, d1))};
}

// Farrell cohomology of the normalizer of the Z/p class with the given fixed
// point data, one period. Raises unsupported_case when the class falls
// outside the curated rules.
inline ClassReport normalizer_cohomology(const fpdata::FixedPointData& data,
                                         const rh::Solution& cover,
                                         const cohen::Tables& tables = cohen::builtin()) {
    const long p = data.p;
    if (data.t() != cover.t)
        throw std::invalid_argument("normalizer_cohomology: cover fixed point count mismatch");
    const int g = genus_from_cover(p, cover);
    const int h = cover.h;
    const int t = cover.t;
    const fpdata::SymPart sym = fpdata::sym_part(data);
    const auto unsupported = [&](const std::string& why) {
        return unsupported_case("class " + data.render() + ": " + why);
    };

    ClassReport report{data, cover, sym, Rule::R1, PeriodicCohomology::zero(p)};
    if (sym.multiplicities.size() > 1)
        throw unsupported("two repeated-value symmetric factors are not curated");

    if (p == 2) {
        if (g != 1) throw unsupported("2-primary contributions beyond genus 1 are not curated");
        report.rule = Rule::R7;
        if (sym.trivial()) {
            report.normalizer = periodic_fold(2, {cohen::betti(t), 0});
        } else if (sym.multiplicities == std::vector<int>{2}) {
            report.normalizer = {AltSet(PGroup(2, {2})), AltSet(PGroup(2, {1}))};
        } else {
            throw unsupported("symmetry beyond S2 at p=2 is not curated");
        }
        return report;
    }

    if (h == 1 && t == 2) {
        report.rule = Rule::R6;
        report.normalizer = periodic_fold(p, {{1, 0, 0}, 0});
        return report;
    }
    if (h == 0 && t == 3) {
        if (sym.order() % p == 0) throw unsupported("symmetry order divisible by p at t=3");
        report.rule = Rule::R5;
        report.normalizer = periodic_fold(p, cohen::quotient_cohomology(3, p, sym, tables));
        return report;
    }
    if (h == 0 && (t == 4 || t == 5)) {
        if (sym.trivial()) {
            report.rule = Rule::R1;
            report.normalizer = periodic_fold(p, {cohen::betti(t), 0});
            return report;
        }
        if (sym.multiplicities == std::vector<int>{2}) {
            if (p != 3) throw unsupported("S2 symmetry curated at p=3 only");
            if (t == 4) {
                report.rule = Rule::R2;
                report.normalizer = {AltSet(PGroup::elementary(3, 2)),
                                     AltSet(PGroup::elementary(3, 1))};
            } else {
                report.rule = Rule::R3;
                report.normalizer =
                    periodic_fold(p, cohen::quotient_cohomology(5, p, sym, tables));
            }
            return report;
        }
        if (t == 5 && (sym.multiplicities == std::vector<int>{3} ||
                       sym.multiplicities == std::vector<int>{4})) {
            if (p != 3) throw unsupported("S3/S4 symmetry curated at p=3 only");
            report.rule = Rule::R4;
            report.normalizer = {AltSet(PGroup(3, {1, 2})), AltSet(PGroup::elementary(3, 1))};
            return report;
        }
        throw unsupported("no curated rule for this symmetry");
    }
    throw unsupported("no curated rule for quotient genus " + std::to_string(h) +
                      " with " + std::to_string(t) + " fixed points");
}

// Published one-period totals for the rows the source states, plus its
// vanishing ranges. Values are independent data; the engine's per-class sums
// are checked against them and divergences flagged.
namespace published {

// Alternatives (ones - 2k)Z/p + kZ/p^2 for k in [k_lo, k_hi].
inline AltSet merge_range(long p, int ones, int k_lo, int k_hi) {
    std::vector<PGroup> alts;
    for (int k = k_lo; k <= k_hi; ++k) {
        PGroup grp = PGroup::elementary(p, ones - 2 * k);
        for (int j = 0; j < k; ++j) grp = grp.direct_sum(PGroup(p, {2}));
        alts.push_back(std::move(grp));
    }
    return AltSet(std::move(alts));
}

struct Row {
    int g;
    int i;
    long p;
    PeriodicCohomology value;
};

inline const std::vector<Row>& rows() {
    static const std::vector<Row> table = [] {
        auto ones = [](long p, int k) { return AltSet(PGroup::elementary(p, k)); };
        std::vector<Row> r;
        // genus 1
        r.push_back({1, 2, 2, {merge_range(2, 2, 1, 1), ones(2, 1)}});
        r.push_back({1, 3, 2, {ones(2, 1), ones(2, 2)}});
        r.push_back({1, 4, 2, {ones(2, 1), ones(2, 2)}});
        r.push_back({1, 2, 3, {ones(3, 1), ones(3, 0)}});
        r.push_back({1, 3, 3, {ones(3, 1), ones(3, 0)}});
        // genus 2
        r.push_back({2, 1, 3, {ones(3, 2), ones(3, 1)}});
        r.push_back({2, 2, 3, {ones(3, 3), ones(3, 3)}});
        r.push_back({2, 3, 3, {ones(3, 3), ones(3, 6)}});
        r.push_back({2, 4, 3, {ones(3, 3), ones(3, 6)}});
        r.push_back({2, 1, 5, {ones(5, 2), ones(5, 0)}});
        r.push_back({2, 2, 5, {ones(5, 3), ones(5, 0)}});
        r.push_back({2, 3, 5, {ones(5, 3), ones(5, 0)}});
        // genus 3
        r.push_back({3, 1, 3, {merge_range(3, 7, 2, 2), ones(3, 2)}});
        r.push_back({3, 2, 3, {merge_range(3, 8, 1, 2), ones(3, 4)}});
        r.push_back({3, 3, 3, {merge_range(3, 19, 0, 4), ones(3, 14)}});
        r.push_back({3, 4, 3, {merge_range(3, 35, 0, 5), ones(3, 25)}});
        r.push_back({3, 5, 3, {merge_range(3, 35, 0, 5), ones(3, 25)}});
        r.push_back({3, 1, 7, {ones(7, 3), ones(7, 0)}});
        r.push_back({3, 2, 7, {ones(7, 5), ones(7, 0)}});
        r.push_back({3, 3, 7, {ones(7, 5), ones(7, 0)}});
        return r;
    }();
    return table;
}

// Primes with stated p-torsion for each low-genus puncture count; the
// published corollaries assert vanishing for every other prime.
inline std::optional<std::vector<long>> torsion_grid(int g, int i) {
    if (g == 1) {
        if (i <= 3) return std::vector<long>{2, 3};
        if (i == 4) return std::vector<long>{2};
        return std::vector<long>{};
    }
    if (g == 2) {
        if (i <= 3) return std::vector<long>{2, 3, 5};
        if (i == 4) return std::vector<long>{2, 3};
        if (i <= 6) return std::vector<long>{2};
        return std::vector<long>{};
    }
    if (g == 3) {
        if (i <= 3) return std::vector<long>{2, 3, 7};
        if (i <= 5) return std::vector<long>{2, 3};
        if (i <= 8) return std::vector<long>{2};
        return std::vector<long>{};
    }
    return std::nullopt;
}

} // namespace published

inline std::optional<PeriodicCohomology> published_total(int g, int i, long p) {
    for (const published::Row& row : published::rows())
        if (row.g == g && row.i == i && row.p == p) return row.value;
    if (const auto grid = published::torsion_grid(g, i)) {
        const auto& primes = *grid;
        if (std::find(primes.begin(), primes.end(), p) == primes.end())
            return PeriodicCohomology::zero(p);
        return std::nullopt; // torsion exists but no stated total (e.g. 2-primary, genus >= 2)
    }
    if (g > 3 && is_prime(g) && p == g)
        return i <= 2 ? PeriodicCohomology{AltSet(PGroup::elementary(p, 1)), AltSet::zero(p)}
                      : PeriodicCohomology::zero(p);
    return std::nullopt;
}

struct FarrellReport {
    int g = 0;
    int i = 0;
    long p = 0;
    std::vector<ClassReport> classes;
    PeriodicCohomology total;
    std::optional<PeriodicCohomology> published_value;
    bool discrepancy = false;

    friend bool operator==(const FarrellReport&, const FarrellReport&) = default;
};

// p-torsion of the Farrell cohomology of the genus-g pure mapping class
// group on i punctures, one period, assembled class by class. (g,i,p) with
// no admissible branching data yield zero for any prime; otherwise every
// class must fall under a curated rule.
inline FarrellReport farrell(int g, int i, long p,
                             const cohen::Tables& tables = cohen::builtin()) {
    const auto classes = fpdata::enumerate_classes(g, i, p);
    FarrellReport report;
    report.g = g;
    report.i = i;
    report.p = p;
    report.total = PeriodicCohomology::zero(p);
    if (!classes.empty() && p == 2 && g != 1)
        throw unsupported_case("2-primary contributions beyond genus 1 are not curated");
    for (const fpdata::ClassEntry& entry : classes) {
        ClassReport cr = normalizer_cohomology(entry.data, entry.cover, tables);
        report.total = report.total.combine(cr.normalizer);
        report.classes.push_back(std::move(cr));
    }
    report.published_value = published_total(g, i, p);
    report.discrepancy =
        report.published_value.has_value() && !(*report.published_value == report.total);
    return report;
}

} // namespace farrell::assembly
