// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "farrell/assembly.hpp"
#include "farrell/render.hpp"
#include "farrell/reproduce.hpp"
#include "farrell/verify.hpp"

using namespace farrell;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool passed = false;
    std::string note;
    try {
        passed = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    if (!passed) ++g_failures;
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note
              << "\n";
}

AltSet ones(long p, int k) { return AltSet(PGroup::elementary(p, k)); }

bool row_is(int g, int i, long p, const AltSet& even, const AltSet& odd) {
    const auto r = assembly::farrell(g, i, p);
    return r.total.even == even && r.total.odd == odd && !r.discrepancy;
}

bool row_is_zero(int g, int i, long p) {
    const auto r = assembly::farrell(g, i, p);
    return r.total.is_zero() && r.classes.empty() && !r.discrepancy;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(FARRELL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

} // namespace

int main() {
    criterion(1, "remark table: all 48 admissibility cells match the published ones", [] {
        const auto report = reproduce::remark_report();
        if (report.rows.size() != 12 || !report.all_match) return false;
        // Spot check the stated example row.
        const auto cell = rh::admissible_solutions(3, 1, 2);
        return cell == std::vector<rh::Solution>{{0, 8}, {1, 4}};
    });

    criterion(2, "torsion corollaries: primes and vanishing thresholds for g <= 3", [] {
        for (int g = 1; g <= 3; ++g)
            for (int i = 1; i <= 12; ++i) {
                const auto grid = assembly::published::torsion_grid(g, i);
                if (!grid || rh::torsion_primes(g, i) != *grid) return false;
            }
        return true;
    });

    criterion(3, "genus-1 table: all rows and vanishing, no discrepancies", [] {
        return row_is(1, 2, 2, AltSet(PGroup(2, {2})), ones(2, 1)) &&
               row_is(1, 2, 3, ones(3, 1), ones(3, 0)) &&
               row_is(1, 3, 2, ones(2, 1), ones(2, 2)) &&
               row_is(1, 3, 3, ones(3, 1), ones(3, 0)) &&
               row_is(1, 4, 2, ones(2, 1), ones(2, 2)) && row_is_zero(1, 4, 3) &&
               row_is_zero(1, 5, 2) && row_is_zero(1, 5, 3) && row_is_zero(1, 6, 2) &&
               row_is_zero(1, 7, 3);
    });

    criterion(4, "genus-2 table at p in {3,5}: all rows and vanishing", [] {
        return row_is(2, 1, 3, ones(3, 2), ones(3, 1)) &&
               row_is(2, 1, 5, ones(5, 2), ones(5, 0)) &&
               row_is(2, 2, 3, ones(3, 3), ones(3, 3)) &&
               row_is(2, 2, 5, ones(5, 3), ones(5, 0)) &&
               row_is(2, 3, 3, ones(3, 3), ones(3, 6)) &&
               row_is(2, 3, 5, ones(5, 3), ones(5, 0)) &&
               row_is(2, 4, 3, ones(3, 3), ones(3, 6)) && row_is_zero(2, 4, 5) &&
               row_is_zero(2, 5, 3) && row_is_zero(2, 5, 5) && row_is_zero(2, 6, 3) &&
               row_is_zero(2, 7, 3) && row_is_zero(2, 7, 5) && row_is_zero(2, 8, 3);
    });

    criterion(5, "genus-3 table at p in {3,7}: all rows, alternative counts, vanishing", [] {
        const auto r31 = assembly::farrell(3, 1, 3);
        if (r31.total.even != assembly::published::merge_range(3, 7, 2, 2) ||
            r31.total.odd != ones(3, 2) || r31.discrepancy)
            return false;
        const auto r33 = assembly::farrell(3, 3, 3);
        if (r33.total.even != assembly::published::merge_range(3, 19, 0, 4) ||
            r33.total.even.alts.size() != 5 || r33.total.odd != ones(3, 14) || r33.discrepancy)
            return false;
        for (int i : {4, 5}) {
            const auto r = assembly::farrell(3, i, 3);
            if (r.total.even != assembly::published::merge_range(3, 35, 0, 5) ||
                r.total.even.alts.size() != 6 || r.total.odd != ones(3, 25) || r.discrepancy)
                return false;
        }
        return row_is(3, 1, 7, ones(7, 3), ones(7, 0)) &&
               row_is(3, 2, 7, ones(7, 5), ones(7, 0)) &&
               row_is(3, 3, 7, ones(7, 5), ones(7, 0)) && row_is_zero(3, 9, 3) &&
               row_is_zero(3, 9, 7) && row_is_zero(3, 10, 3) && row_is_zero(3, 4, 7) &&
               row_is_zero(3, 1, 5);
    });

    criterion(6, "documented divergence at (3,2,3), and nowhere else", [] {
        const auto r = assembly::farrell(3, 2, 3);
        if (!r.discrepancy) return false;
        if (r.total.even != assembly::published::merge_range(3, 11, 2, 3) ||
            r.total.odd != ones(3, 5))
            return false;
        if (!r.published_value ||
            r.published_value->even != assembly::published::merge_range(3, 8, 1, 2) ||
            r.published_value->odd != ones(3, 4))
            return false;
        std::set<std::string> flagged;
        auto probe = [&](int g, int i, long p) {
            try {
                const auto report = assembly::farrell(g, i, p);
                if (report.discrepancy)
                    flagged.insert(std::to_string(g) + "," + std::to_string(i) + "," +
                                   std::to_string(p));
            } catch (const unsupported_case&) {
                // outside the curated rules: nothing to compare
            }
        };
        for (int g = 1; g <= 3; ++g)
            for (int i = 1; i <= 12; ++i)
                for (long p : {2L, 3L, 5L, 7L, 11L}) probe(g, i, p);
        for (long p : {5L, 7L, 11L})
            for (int i = 1; i <= 4; ++i) probe(static_cast<int>(p), i, p);
        return flagged == std::set<std::string>{"3,2,3"};
    });

    criterion(7, "one-class rule for g = p in {5,7,11}: Z/p even, zero odd, then vanishing", [] {
        for (long p : {5L, 7L, 11L}) {
            for (int i : {1, 2}) {
                const auto r = assembly::farrell(static_cast<int>(p), i, p);
                if (r.classes.size() != 1 || r.total.even != ones(p, 1) ||
                    r.total.odd != ones(p, 0) || r.discrepancy)
                    return false;
            }
            if (!row_is_zero(static_cast<int>(p), 3, p) || !row_is_zero(static_cast<int>(p), 4, p))
                return false;
        }
        return true;
    });

    criterion(8, "linear-algebra golden vectors for the curated actions", [] {
        using fplinalg::Vec;
        const auto m34_3 = cohen::action_matrix(4, cohen::Perm::s34, 3);
        if (fplinalg::invariants({m34_3}) != std::vector<Vec>{{1, 2}}) return false;

        const auto m45_3 = cohen::action_matrix(5, cohen::Perm::s45, 3);
        const auto inv45 = fplinalg::invariants({m45_3});
        const std::vector<Vec> stated{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {2, 2, 0, 0, 1}};
        if (inv45.size() != 3) return false;
        for (const Vec& v : stated)
            if (!fplinalg::in_span(inv45, v, 3)) return false;
        const auto stated_basis = fplinalg::rref_basis(stated, 3);
        for (const Vec& v : inv45)
            if (!fplinalg::in_span(stated_basis, v, 3)) return false;

        const auto n345 = fplinalg::norm_map(cohen::action_matrix(5, cohen::Perm::s345, 3), 3);
        if (n345.apply({1, 0, 0, 0, 0}) != Vec(5, 0)) return false;
        if (n345.apply({0, 1, 0, 0, 0}) != Vec{0, 1, 1, 2, 1}) return false;

        const auto m34_2 = cohen::action_matrix(4, cohen::Perm::s34, 2);
        const auto n34 = fplinalg::norm_map(m34_2, 2);
        return fplinalg::rank(n34) == 1 && fplinalg::invariants({m34_2}).size() == 1 &&
               fplinalg::coinvariant_reps({m34_2}).size() == 1;
    });

    criterion(9, "property suites pass with exactly the two allowlisted flags", [] {
        const auto report = verify::run();
        if (!report.ok) return false;
        for (const auto& c : report.checks)
            if (!c.passed) return false;
        return report.flags_raised ==
               std::vector<std::string>{verify::kFlagLiteral45, verify::kFlagPublishedDivergence};
    });

    criterion(10, "verify command: exit 0 clean, exit 3 under each single-entry mutation", [] {
        if (run_cli("verify") != 0) return false;
        if (run_cli(std::string("verify --allowlist ") + FARRELL_ALLOWLIST_PATH) != 0)
            return false;
        for (const std::string spec :
             {"k4-34:0:0:+1", "k4-34:0:1:+1", "k4-34:1:0:+1", "k5-45:2:0:+1", "k5-345:0:1:+1",
              "k5-345:4:4:+1"})
            if (run_cli("verify --mutate " + spec) != 3) return false;
        return run_cli("verify --use-literal-45") == 3 && run_cli("verify --drop-tables") == 3;
    });

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
