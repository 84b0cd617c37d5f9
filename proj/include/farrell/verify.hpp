#pragma once

#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "farrell/assembly.hpp"
#include "farrell/cohen.hpp"
#include "farrell/fplinalg.hpp"
#include "farrell/oracle.hpp"
#include "farrell/render.hpp"
#include "farrell/reproduce.hpp"

namespace farrell::verify {

// Documented anomalies: these flags are expected on a clean run and the run
// is sound exactly when the raised set equals the allowlist.
inline constexpr const char* kFlagPublishedDivergence = "published-total-divergence-3-2-3";
inline constexpr const char* kFlagLiteral45 = "literal-45-involution-failure";

struct KnownFlag {
    std::string id;
    std::string reason;
};

inline std::vector<KnownFlag> embedded_allowlist() {
    return {
        {kFlagPublishedDivergence,
         "per-class assembly for (g,i,p)=(3,2,3) sums to a larger total than the published value"},
        {kFlagLiteral45,
         "the literal (45) table variant is not an involution over F_3; the engine uses the amended table"},
    };
}

inline std::vector<KnownFlag> load_allowlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open allowlist file: " + path);
    nlohmann::json doc;
    in >> doc;
    std::vector<KnownFlag> flags;
    for (const auto& entry : doc.at("known_flags"))
        flags.push_back({entry.at("id").get<std::string>(),
                         entry.value("reason", std::string{})});
    return flags;
}

// One-unit perturbation of a curated matrix entry, for self-test of the
// verification checks.
struct Mutation {
    std::string table;
    std::size_t row = 0;
    std::size_t col = 0;
    long delta = 0;
};

inline Mutation parse_mutation(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = spec.find(':', start);
        if (pos == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, pos - start));
        start = pos + 1;
    }
    if (parts.size() != 4)
        throw std::invalid_argument("mutation spec must be table:row:col:delta");
    try {
        return {parts[0], static_cast<std::size_t>(std::stoul(parts[1])),
                static_cast<std::size_t>(std::stoul(parts[2])), std::stol(parts[3])};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed mutation spec: " + spec);
    }
}

inline void apply_mutation(cohen::Tables& tables, const Mutation& m) {
    cohen::IntMatrix* target = nullptr;
    if (m.table == "k4-34") target = &tables.k4_34;
    else if (m.table == "k5-45") target = &tables.k5_45;
    else if (m.table == "k5-45-literal") target = &tables.k5_45_literal;
    else if (m.table == "k5-345") target = &tables.k5_345;
    else throw std::invalid_argument("unknown mutation table: " + m.table);
    if (m.row >= target->size() || m.col >= (*target)[m.row].size())
        throw std::invalid_argument("mutation index out of range");
    (*target)[m.row][m.col] += m.delta;
}

struct Options {
    std::vector<Mutation> mutations;
    bool use_literal_45 = false;
    bool drop_tables = false;
    std::optional<std::string> allowlist_path;
};

struct Check {
    std::string name;
    bool passed = true;
    std::string flag;   // documented-anomaly id, raised independently of pass
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    std::vector<std::string> allowlist;
    std::vector<std::string> flags_raised;
    bool ok = false;
};

namespace detail {

inline void expect(Check& c, bool cond, const std::string& what) {
    if (cond) return;
    c.passed = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += what;
}

struct Runner {
    std::vector<Check> checks;

    void add(const std::string& name, const std::function<void(Check&)>& body) {
        Check c{name, true, "", ""};
        try {
            body(c);
        } catch (const std::exception& e) {
            c.passed = false;
            if (!c.detail.empty()) c.detail += "; ";
            c.detail += std::string("exception: ") + e.what();
        }
        checks.push_back(std::move(c));
    }
};

inline std::string tuple_name(int g, int i, long p) {
    return "(" + std::to_string(g) + "," + std::to_string(i) + "," + std::to_string(p) + ")";
}

} // namespace detail

inline Report run(const Options& opts = {}) {
    using detail::expect;
    using fplinalg::FpMatrix;
    using fplinalg::Vec;

    cohen::Tables tables; // start from pristine values
    if (opts.drop_tables) {
        tables.k4_34.clear();
        tables.k5_45.clear();
        tables.k5_45_literal.clear();
        tables.k5_345.clear();
        tables.k5_deg2_45_invariants.clear();
        tables.k5_deg2_345_invariants.clear();
        tables.k5_deg2_345_coinvariant_reps.clear();
    }
    for (const Mutation& m : opts.mutations) apply_mutation(tables, m);
    tables.use_literal_45 = opts.use_literal_45;

    detail::Runner runner;

    runner.add("tables-intact", [&](Check& c) {
        for (const std::string& violation : tables.validate())
            expect(c, false, violation);
    });

    runner.add("rh-oracle", [&](Check& c) {
        for (int g = 1; g <= 10; ++g)
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
                const auto fast = rh::solve_rh(g, p);
                expect(c, fast == oracle::brute_rh(g, p),
                       "solve_rh mismatch at g=" + std::to_string(g) + " p=" + std::to_string(p));
                for (const auto& s : fast)
                    expect(c, 2L * g - 2 == p * (2L * s.h - 2) + s.t * (p - 1),
                           "solution fails the branching equation");
                std::size_t prev = fast.size() + 1;
                for (int i = 1; i <= 6; ++i) {
                    const auto adm = rh::admissible_solutions(g, i, p);
                    expect(c, adm.size() <= prev, "admissible sets must shrink with punctures");
                    prev = adm.size();
                    for (const auto& s : adm)
                        expect(c, s.t != 1 && s.t >= i, "admissibility filter violated");
                }
            }
    });

    runner.add("generalized-rh", [&](Check& c) {
        for (int g = 1; g <= 6; ++g)
            for (long p : {2L, 3L, 5L})
                expect(c, rh::solve_generalized_rh(g, p) == oracle::brute_generalized_rh(g, p),
                       "generalized solver mismatch at g=" + std::to_string(g) +
                           " p=" + std::to_string(p));
        using G = rh::GenSolution;
        expect(c, rh::solve_generalized_rh(1, 2) == std::vector<G>{{0, 1, 2}, {0, 4, 0}, {1, 0, 0}},
               "frozen generalized solutions for (g,p)=(1,2)");
        expect(c, rh::solve_generalized_rh(1, 3) == std::vector<G>{{0, 3, 0}, {1, 0, 0}},
               "frozen generalized solutions for (g,p)=(1,3)");
        expect(c, rh::solve_generalized_rh(2, 5).empty(), "no Z/25 witness at genus 2");
        expect(c, rh::solve_rh(5, 5) == std::vector<rh::Solution>{{1, 2}},
               "frozen branching solutions for (g,p)=(5,5)");
    });

    runner.add("class-oracle", [&](Check& c) {
        for (int g = 1; g <= 3; ++g)
            for (int i = 1; i <= 9; ++i)
                for (long p : {2L, 3L, 5L, 7L}) {
                    const auto classes = fpdata::enumerate_classes(g, i, p);
                    expect(c, classes.size() == oracle::orbit_class_count(g, i, p),
                           "class count differs from orbit oracle at " + detail::tuple_name(g, i, p));
                    std::set<fpdata::FixedPointData> unique;
                    for (const auto& e : classes) {
                        unique.insert(e.data);
                        expect(c, e.data.ordered[0] == 1, "class data not canonical");
                        expect(c, e.data.t() == e.cover.t, "class size disagrees with cover");
                        expect(c, e.data.i() == i, "ordered part has wrong length");
                    }
                    expect(c, unique.size() == classes.size(), "duplicate classes enumerated");
                }
    });

    runner.add("power-laws", [&](Check& c) {
        using fpdata::FixedPointData;
        const FixedPointData a(3, {1, 2}, {});
        expect(c, fpdata::power_data(a, 2) == FixedPointData(3, {2, 1}, {}),
               "frozen power data for (1,2|) under m=2");
        const FixedPointData b(5, {1}, {1, 3});
        expect(c, fpdata::power_data(b, 2) == FixedPointData(5, {3}, {3, 4}),
               "frozen power data for (1|1,3) under m=2");
        struct T { int g, i; long p; };
        for (const T q : {T{2, 1, 5}, T{3, 1, 3}, T{3, 2, 7}, T{2, 2, 3}, T{1, 2, 2}})
            for (const auto& entry : fpdata::enumerate_classes(q.g, q.i, q.p)) {
                const auto& d = entry.data;
                for (long m = 1; m < q.p; ++m) {
                    const auto dm = fpdata::power_data(d, m);
                    expect(c, fpdata::canonicalize(dm) == d, "canonicalize must undo scaling");
                    expect(c, fpdata::is_conjugate(d, dm), "scaled data must stay conjugate");
                    for (long n = 1; n < q.p; ++n)
                        expect(c, fpdata::power_data(dm, n) ==
                                      fpdata::power_data(d, mod_reduce(m * n, q.p)),
                               "power action law fails");
                }
            }
    });

    runner.add("sym-part", [&](Check& c) {
        using fpdata::FixedPointData;
        auto mults = [](const FixedPointData& d) { return fpdata::sym_part(d).multiplicities; };
        expect(c, mults(FixedPointData(3, {1}, {1, 1, 1, 2})) == std::vector<int>{3},
               "sym of (1|1,1,1,2)");
        expect(c, mults(FixedPointData(3, {1}, {2, 2, 2, 2})) == std::vector<int>{4},
               "sym of (1|2,2,2,2)");
        expect(c, mults(FixedPointData(3, {1, 1}, {1, 1, 2})) == std::vector<int>{2},
               "sym of (1,1|1,1,2)");
        expect(c, mults(FixedPointData(3, {1, 2}, {1, 2})).empty(), "sym of (1,2|1,2)");
        for (const auto& entry : fpdata::enumerate_classes(3, 1, 3)) {
            const auto sym = fpdata::sym_part(entry.data);
            const int free = entry.data.t() - entry.data.i();
            expect(c, factorial(free) % sym.order() == 0, "sym order must divide (t-i)!");
            expect(c, sym.l() <= free, "sym moves more points than the suffix holds");
        }
    });

    runner.add("linalg-golden", [&](Check& c) {
        const auto m34_3 = cohen::action_matrix(4, cohen::Perm::s34, 3, tables);
        const auto m34_2 = cohen::action_matrix(4, cohen::Perm::s34, 2, tables);
        const auto m45_3 = cohen::action_matrix(5, cohen::Perm::s45, 3, tables);
        const auto m345_3 = cohen::action_matrix(5, cohen::Perm::s345, 3, tables);

        expect(c, fplinalg::invariants({m34_3}) == std::vector<Vec>{{1, 2}},
               "invariants of (34) over F_3 must be spanned by B42 + 2B43");
        expect(c, fplinalg::invariants({m34_2}) == std::vector<Vec>{{1, 0}},
               "invariants of (34) over F_2 must be spanned by B42");

        const auto inv45 = fplinalg::invariants({m45_3});
        expect(c, inv45.size() == 3, "invariants of (45) over F_3 must have dimension 3");
        const std::vector<Vec> golden45{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {2, 2, 0, 0, 1}};
        for (const Vec& v : golden45)
            expect(c, fplinalg::in_span(inv45, v, 3), "stated (45)-invariant not in computed span");
        for (const Vec& v : inv45)
            expect(c, fplinalg::in_span(fplinalg::rref_basis(golden45, 3), v, 3),
                   "computed (45)-invariant outside the stated span");

        expect(c, fplinalg::invariants({m345_3}) ==
                      std::vector<Vec>{{1, 0, 1, 0, 0}, {0, 1, 1, 2, 1}},
               "invariants of (345) over F_3");

        expect(c, fplinalg::coinvariant_reps({m34_2}) == std::vector<Vec>{{0, 1}},
               "coinvariants of (34) over F_2 must be represented by B43");
        expect(c, fplinalg::coinvariant_reps({m345_3}) ==
                      std::vector<Vec>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
               "coinvariants of (345) over F_3 must be represented by B42, B43");

        const auto n345 = fplinalg::norm_map(m345_3, 3);
        expect(c, n345.apply({1, 0, 0, 0, 0}) == Vec(5, 0), "norm of (345) must kill B42");
        expect(c, n345.apply({0, 1, 0, 0, 0}) == Vec{0, 1, 1, 2, 1},
               "norm of (345) must send B43 to B43 + B52 + 2B53 + B54");
        expect(c, fplinalg::rank(n345) == 1, "norm of (345) must have rank 1");

        const auto n34 = fplinalg::norm_map(m34_2, 2);
        expect(c, n34.apply({0, 1}) == Vec{1, 0}, "norm of (34) over F_2 must send B43 to B42");
        expect(c, fplinalg::rank(n34) == 1, "norm of (34) over F_2 must be an isomorphism");

        struct Case { const FpMatrix* m; long q; };
        for (const Case cs : {Case{&m34_3, 2}, Case{&m34_2, 2}, Case{&m45_3, 2}, Case{&m345_3, 3}}) {
            const auto n = fplinalg::norm_map(*cs.m, cs.q);
            const auto d = cs.m->sub_identity();
            const auto zero = FpMatrix(cs.m->p, cs.m->rows, cs.m->cols);
            expect(c, n.mul(d) == zero && d.mul(n) == zero, "norm identities N(s-1)=(s-1)N=0");
            const auto tate = fplinalg::tate_cyclic(*cs.m, cs.q);
            expect(c, tate.dim_even_pos == tate.dim_odd, "positive Tate dims must agree");
            if (cs.m->p % cs.q != 0)
                expect(c, tate.dim_even_pos == 0 && tate.dim_odd == 0,
                       "coprime order must kill positive Tate groups");
        }

        const auto t345 = fplinalg::tate_cyclic(m345_3, 3);
        expect(c, t345.dim_fixed == 2 && t345.dim_even_pos == 1 && t345.dim_odd == 1,
               "Tate dims of (345) on degree 1 over F_3");
        const auto t34 = fplinalg::tate_cyclic(m34_2, 2);
        expect(c, t34.dim_fixed == 1 && t34.dim_even_pos == 0 && t34.dim_odd == 0,
               "Tate dims of (34) on degree 1 over F_2");
        for (long p : {2L, 3L}) {
            const auto triv = fplinalg::tate_cyclic(FpMatrix::identity(p, 1), p);
            expect(c, triv.dim_fixed == 1 && triv.dim_even_pos == 1 && triv.dim_odd == 1,
                   "trivial module under full cyclic p-group");
        }

        expect(c, fplinalg::rref_basis(tables.k5_deg2_45_invariants, 3).size() == 3,
               "curated degree-2 (45)-invariants must be independent of dimension 3");
        expect(c, fplinalg::rref_basis(tables.k5_deg2_345_invariants, 3).size() == 2,
               "curated degree-2 (345)-invariants must be independent of dimension 2");
        expect(c, tables.k5_deg2_345_coinvariant_reps.size() == 2,
               "curated degree-2 (345)-coinvariants must have two representatives");
        expect(c, tables.k5_deg2_345_tate_pos == 0,
               "curated degree-2 (345) positive Tate groups must vanish");
    });

    runner.add("literal-45-diverges", [&](Check& c) {
        const auto literal = FpMatrix::from_rows(3, tables.k5_45_literal);
        if (!literal.pow(2).is_identity()) {
            c.flag = kFlagLiteral45;
            c.detail = "literal (45) table fails sigma^2 = identity over F_3 (documented)";
        } else {
            expect(c, false, "literal (45) variant unexpectedly satisfies the order-2 check");
        }
    });

    runner.add("quotient-dims", [&](Check& c) {
        const fpdata::SymPart trivial{};
        const fpdata::SymPart s2{{2}};
        for (int t : {3, 4, 5})
            expect(c, cohen::quotient_cohomology(t, 3, trivial, tables) ==
                          cohen::GradedDims{cohen::betti(t), 0},
                   "trivial symmetry must reproduce the K_t dims");
        expect(c, cohen::quotient_cohomology(4, 3, s2, tables) == cohen::GradedDims{{1, 1, 0}, 0},
               "S2 quotient dims for t=4, p=3");
        expect(c, cohen::quotient_cohomology(5, 3, s2, tables) == cohen::GradedDims{{1, 3, 3}, 0},
               "S2 quotient dims for t=5, p=3");
        expect(c, cohen::quotient_cohomology(4, 2, s2, tables) == cohen::GradedDims{{1, 2}, 1},
               "S2 quotient dims for t=4, p=2");
        expect(c, cohen::quotient_cohomology(3, 5, s2, tables) == cohen::GradedDims{{1, 0, 0}, 0},
               "S2 quotient dims for t=3, p=5");
    });

    runner.add("remark-table", [&](Check& c) {
        const auto report = reproduce::remark_report();
        for (const auto& row : report.rows)
            expect(c, row.match,
                   "admissibility cells differ for g=" + std::to_string(row.engine.g) +
                       " i=" + std::to_string(row.engine.i_lo));
        expect(c, report.all_match, "remark table must match the published cells");
    });

    runner.add("published-totals", [&](Check& c) {
        std::set<std::string> divergent;
        auto compare = [&](int g, int i, long p) {
            const auto published = assembly::published_total(g, i, p);
            if (!published) return;
            if (p == 2 && g != 1 && !rh::admissible_solutions(g, i, p).empty()) return;
            const auto report = assembly::farrell(g, i, p, tables);
            if (report.total == *published) {
                expect(c, !report.discrepancy, "discrepancy flag without divergence at " +
                                                   detail::tuple_name(g, i, p));
                return;
            }
            expect(c, report.discrepancy, "divergence without discrepancy flag at " +
                                              detail::tuple_name(g, i, p));
            divergent.insert(detail::tuple_name(g, i, p));
            if (g == 3 && i == 2 && p == 3) {
                const PeriodicCohomology engine_value{
                    assembly::published::merge_range(3, 11, 2, 3),
                    AltSet(PGroup::elementary(3, 5))};
                expect(c, report.total == engine_value,
                       "engine value at (3,2,3) differs from its frozen form");
                c.flag = kFlagPublishedDivergence;
            } else {
                expect(c, false, "undocumented divergence at " + detail::tuple_name(g, i, p));
            }
        };
        for (const auto& row : assembly::published::rows()) compare(row.g, row.i, row.p);
        for (int g = 1; g <= 3; ++g)
            for (int i = 1; i <= 12; ++i)
                for (long p : {2L, 3L, 5L, 7L, 11L}) compare(g, i, p);
        for (long p : {5L, 7L, 11L})
            for (int i = 1; i <= 4; ++i) compare(static_cast<int>(p), i, p);
        expect(c, divergent == std::set<std::string>{detail::tuple_name(3, 2, 3)},
               "the divergence set must be exactly {(3,2,3)}");
    });

    runner.add("altset-order", [&](Check& c) {
        auto check_altset = [&](const AltSet& a, const std::string& where) {
            expect(c, !a.alts.empty(), "empty alternative set at " + where);
            const int order = a.alts.front().order_exponent();
            for (const PGroup& grp : a.alts) {
                expect(c, grp.order_exponent() == order, "unequal total order at " + where);
                expect(c, std::is_sorted(grp.exps.begin(), grp.exps.end()),
                       "unsorted exponents at " + where);
            }
            for (std::size_t k = 1; k < a.alts.size(); ++k)
                expect(c, !(a.alts[k] == a.alts[k - 1]), "duplicate alternative at " + where);
        };
        struct T { int g, i; long p; };
        for (const T q : {T{3, 2, 3}, T{3, 3, 3}, T{3, 4, 3}, T{2, 2, 3}, T{1, 2, 2}, T{5, 1, 5}}) {
            const auto report = assembly::farrell(q.g, q.i, q.p, tables);
            const std::string where = detail::tuple_name(q.g, q.i, q.p);
            check_altset(report.total.even, where + " even");
            check_altset(report.total.odd, where + " odd");
            for (const auto& cls : report.classes) {
                check_altset(cls.normalizer.even, where + " class even");
                check_altset(cls.normalizer.odd, where + " class odd");
            }
        }
    });

    runner.add("json-roundtrip", [&](Check& c) {
        struct T { int g, i; long p; };
        for (const T q : {T{3, 2, 3}, T{2, 2, 3}, T{1, 2, 2}, T{5, 1, 5}, T{3, 9, 3}}) {
            const auto report = assembly::farrell(q.g, q.i, q.p, tables);
            const auto wire = render::farrell_to_json(report);
            expect(c, render::farrell_from_json(wire) == report,
                   "farrell report round trip at " + detail::tuple_name(q.g, q.i, q.p));
            expect(c, wire.dump() == render::farrell_to_json(report).dump(),
                   "farrell json must be deterministic");
            expect(c, render::farrell_text(report) == render::farrell_text(report),
                   "farrell text must be deterministic");
        }
        const auto torsion = render::torsion_report(2, 1, std::nullopt);
        expect(c, render::torsion_from_json(render::torsion_to_json(torsion)) == torsion,
               "torsion report round trip");
        const auto classes = render::class_list(3, 2, 3, tables);
        expect(c, render::classes_from_json(render::classes_to_json(classes)) == classes,
               "class list round trip");
    });

    Report report;
    report.checks = std::move(runner.checks);
    const auto known =
        opts.allowlist_path ? load_allowlist(*opts.allowlist_path) : embedded_allowlist();
    for (const KnownFlag& f : known) report.allowlist.push_back(f.id);
    std::sort(report.allowlist.begin(), report.allowlist.end());
    std::set<std::string> raised;
    bool all_passed = true;
    for (const Check& c : report.checks) {
        if (!c.flag.empty()) raised.insert(c.flag);
        all_passed = all_passed && c.passed;
    }
    report.flags_raised.assign(raised.begin(), raised.end());
    report.ok = all_passed &&
                report.flags_raised ==
                    std::vector<std::string>(report.allowlist.begin(), report.allowlist.end());
    return report;
}

inline int exit_code(const Report& r) { return r.ok ? 0 : 3; }

inline render::json report_to_json(const Report& r) {
    render::json j;
    j["checks"] = render::json::array();
    for (const Check& c : r.checks) {
        render::json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["flag"] = c.flag.empty() ? render::json(nullptr) : render::json(c.flag);
        e["detail"] = c.detail;
        j["checks"].push_back(std::move(e));
    }
    j["flags_raised"] = r.flags_raised;
    j["allowlist"] = r.allowlist;
    j["ok"] = r.ok;
    return j;
}

inline std::string report_text(const Report& r) {
    std::string out = "verification report\n";
    for (const Check& c : r.checks) {
        out += std::string("  [") + (c.passed ? "PASS" : "FAIL") + "] " + c.name;
        if (!c.flag.empty()) out += "  flag=" + c.flag;
        if (!c.detail.empty()) out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += "flags raised:";
    if (r.flags_raised.empty()) out += " (none)";
    for (const auto& f : r.flags_raised) out += " " + f;
    out += "\nallowlist:";
    if (r.allowlist.empty()) out += " (none)";
    for (const auto& f : r.allowlist) out += " " + f;
    out += "\nresult: ";
    out += r.ok ? "OK\n" : "FAILED\n";
    return out;
}

} // namespace farrell::verify
