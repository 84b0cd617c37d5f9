#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "farrell/assembly.hpp"
#include "farrell/cohen.hpp"
#include "farrell/fpdata.hpp"
#include "farrell/pgroup.hpp"
#include "farrell/rh.hpp"

namespace farrell::render {

using json = nlohmann::ordered_json;

inline std::string render_sym(const fpdata::SymPart& sym) {
    if (sym.trivial()) return "1";
    std::string out;
    for (std::size_t k = 0; k < sym.multiplicities.size(); ++k) {
        if (k) out += "x";
        out += "S" + std::to_string(sym.multiplicities[k]);
    }
    return out;
}

inline std::string render_cover(const rh::Solution& s) {
    return "(h,t)=(" + std::to_string(s.h) + "," + std::to_string(s.t) + ")";
}

// ---- JSON building blocks ----------------------------------------------

inline json altset_to_json(const AltSet& a) {
    json arr = json::array();
    for (const PGroup& g : a.alts) arr.push_back(g.exps);
    return arr;
}

inline AltSet altset_from_json(long p, const json& arr) {
    std::vector<PGroup> alts;
    for (const json& exps : arr) alts.emplace_back(p, exps.get<std::vector<int>>());
    return AltSet(std::move(alts));
}

inline json data_to_json(const fpdata::FixedPointData& d) {
    return json{{"p", d.p}, {"ordered", d.ordered}, {"suffix", d.suffix}};
}

inline fpdata::FixedPointData data_from_json(const json& j) {
    return fpdata::FixedPointData(j.at("p").get<long>(),
                                  j.at("ordered").get<std::vector<int>>(),
                                  j.at("suffix").get<std::vector<int>>());
}

inline assembly::Rule rule_from_name(const std::string& name) {
    using assembly::Rule;
    for (Rule r : {Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6, Rule::R7})
        if (assembly::rule_name(r) == name) return r;
    throw std::invalid_argument("unknown rule id: " + name);
}

inline json class_to_json(const assembly::ClassReport& c) {
    json j;
    j["data"] = data_to_json(c.data);
    j["h"] = c.cover.h;
    j["t"] = c.cover.t;
    j["sym"] = c.sym.multiplicities;
    j["rule"] = assembly::rule_name(c.rule);
    j["even"] = altset_to_json(c.normalizer.even);
    j["odd"] = altset_to_json(c.normalizer.odd);
    return j;
}

inline assembly::ClassReport class_from_json(const json& j) {
    assembly::ClassReport c{data_from_json(j.at("data")),
                            {j.at("h").get<int>(), j.at("t").get<int>()},
                            {j.at("sym").get<std::vector<int>>()},
                            rule_from_name(j.at("rule").get<std::string>()),
                            PeriodicCohomology::zero(2)};
    const long p = c.data.p;
    c.normalizer = {altset_from_json(p, j.at("even")), altset_from_json(p, j.at("odd"))};
    return c;
}

inline json farrell_to_json(const assembly::FarrellReport& r) {
    json j;
    j["g"] = r.g;
    j["i"] = r.i;
    j["p"] = r.p;
    j["classes"] = json::array();
    for (const auto& c : r.classes) j["classes"].push_back(class_to_json(c));
    j["even"] = altset_to_json(r.total.even);
    j["odd"] = altset_to_json(r.total.odd);
    if (r.published_value)
        j["paper"] = json{{"even", altset_to_json(r.published_value->even)},
                          {"odd", altset_to_json(r.published_value->odd)}};
    j["discrepancy"] = r.discrepancy;
    return j;
}

inline assembly::FarrellReport farrell_from_json(const json& j) {
    assembly::FarrellReport r;
    r.g = j.at("g").get<int>();
    r.i = j.at("i").get<int>();
    r.p = j.at("p").get<long>();
    for (const json& c : j.at("classes")) r.classes.push_back(class_from_json(c));
    r.total = {altset_from_json(r.p, j.at("even")), altset_from_json(r.p, j.at("odd"))};
    if (j.contains("paper"))
        r.published_value = PeriodicCohomology{altset_from_json(r.p, j.at("paper").at("even")),
                                               altset_from_json(r.p, j.at("paper").at("odd"))};
    r.discrepancy = j.at("discrepancy").get<bool>();
    return r;
}

// ---- text reports --------------------------------------------------------

inline std::string farrell_text(const assembly::FarrellReport& r) {
    std::string out = "Farrell cohomology (one period), g=" + std::to_string(r.g) +
                      " i=" + std::to_string(r.i) + " p=" + std::to_string(r.p) + "\n";
    if (r.classes.empty()) {
        out += "no admissible Z/" + std::to_string(r.p) + " classes\n";
    } else {
        out += "classes:\n";
        for (const auto& c : r.classes) {
            out += "  " + c.data.render() + "  " + render_cover(c.cover) +
                   "  sym=" + render_sym(c.sym) + "  rule=" + assembly::rule_name(c.rule) + "\n";
            out += "    even: " + c.normalizer.even.render() + "\n";
            out += "    odd:  " + c.normalizer.odd.render() + "\n";
        }
    }
    out += "total even: " + r.total.even.render() + "\n";
    out += "total odd:  " + r.total.odd.render() + "\n";
    if (r.published_value) {
        out += "published even: " + r.published_value->even.render() + "\n";
        out += "published odd:  " + r.published_value->odd.render() + "\n";
        out += r.discrepancy ? "status: DIVERGES from published value\n"
                             : "status: matches published value\n";
    } else {
        out += "published: (no stated value)\n";
    }
    return out;
}

// ---- torsion / classes commands ------------------------------------------

struct TorsionReport {
    int g = 0;
    int i = 0;
    std::vector<std::pair<long, std::vector<rh::Solution>>> primes;

    friend bool operator==(const TorsionReport&, const TorsionReport&) = default;
};

inline TorsionReport torsion_report(int g, int i, std::optional<long> only_prime) {
    TorsionReport r{g, i, {}};
    if (only_prime) {
        if (!is_prime(*only_prime)) throw std::invalid_argument("p must be prime");
        r.primes.emplace_back(*only_prime, rh::admissible_solutions(g, i, *only_prime));
        return r;
    }
    for (long p : rh::torsion_primes(g, i))
        r.primes.emplace_back(p, rh::admissible_solutions(g, i, p));
    return r;
}

inline std::string solutions_text(const std::vector<rh::Solution>& sols) {
    if (sols.empty()) return "-";
    std::string out;
    for (std::size_t k = 0; k < sols.size(); ++k) {
        if (k) out += ", ";
        out += "(" + std::to_string(sols[k].h) + "," + std::to_string(sols[k].t) + ")";
    }
    return out;
}

inline json solutions_to_json(const std::vector<rh::Solution>& sols) {
    json arr = json::array();
    for (const rh::Solution& s : sols) arr.push_back(json{{"h", s.h}, {"t", s.t}});
    return arr;
}

inline std::vector<rh::Solution> solutions_from_json(const json& arr) {
    std::vector<rh::Solution> out;
    for (const json& s : arr) out.push_back({s.at("h").get<int>(), s.at("t").get<int>()});
    return out;
}

inline json torsion_to_json(const TorsionReport& r) {
    json j;
    j["g"] = r.g;
    j["i"] = r.i;
    j["primes"] = json::array();
    for (const auto& [p, sols] : r.primes)
        j["primes"].push_back(json{{"p", p}, {"solutions", solutions_to_json(sols)}});
    return j;
}

inline TorsionReport torsion_from_json(const json& j) {
    TorsionReport r{j.at("g").get<int>(), j.at("i").get<int>(), {}};
    for (const json& e : j.at("primes"))
        r.primes.emplace_back(e.at("p").get<long>(), solutions_from_json(e.at("solutions")));
    return r;
}

inline std::string torsion_text(const TorsionReport& r) {
    std::string out =
        "torsion primes, g=" + std::to_string(r.g) + " i=" + std::to_string(r.i) + "\n";
    if (r.primes.empty()) out += "  (none)\n";
    for (const auto& [p, sols] : r.primes)
        out += "  p=" + std::to_string(p) + ": " + solutions_text(sols) + "\n";
    return out;
}

struct ClassListReport {
    int g = 0;
    int i = 0;
    long p = 0;
    struct Entry {
        fpdata::FixedPointData data;
        rh::Solution cover;
        fpdata::SymPart sym;
        std::optional<assembly::Rule> rule; // nullopt when outside the curated rules

        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    friend bool operator==(const ClassListReport&, const ClassListReport&) = default;
};

inline ClassListReport class_list(int g, int i, long p,
                                  const cohen::Tables& tables = cohen::builtin()) {
    ClassListReport r{g, i, p, {}};
    for (const fpdata::ClassEntry& e : fpdata::enumerate_classes(g, i, p)) {
        std::optional<assembly::Rule> rule;
        try {
            rule = assembly::normalizer_cohomology(e.data, e.cover, tables).rule;
        } catch (const unsupported_case&) {
            rule = std::nullopt;
        }
        r.entries.push_back({e.data, e.cover, fpdata::sym_part(e.data), rule});
    }
    return r;
}

inline json classes_to_json(const ClassListReport& r) {
    json j;
    j["g"] = r.g;
    j["i"] = r.i;
    j["p"] = r.p;
    j["classes"] = json::array();
    for (const auto& e : r.entries) {
        json c;
        c["data"] = data_to_json(e.data);
        c["h"] = e.cover.h;
        c["t"] = e.cover.t;
        c["sym"] = e.sym.multiplicities;
        c["rule"] = e.rule ? json(assembly::rule_name(*e.rule)) : json(nullptr);
        j["classes"].push_back(std::move(c));
    }
    return j;
}

inline ClassListReport classes_from_json(const json& j) {
    ClassListReport r{j.at("g").get<int>(), j.at("i").get<int>(), j.at("p").get<long>(), {}};
    for (const json& c : j.at("classes")) {
        ClassListReport::Entry e{data_from_json(c.at("data")),
                                 {c.at("h").get<int>(), c.at("t").get<int>()},
                                 {c.at("sym").get<std::vector<int>>()},
                                 std::nullopt};
        if (!c.at("rule").is_null())
            e.rule = rule_from_name(c.at("rule").get<std::string>());
        r.entries.push_back(std::move(e));
    }
    return r;
}

inline std::string classes_text(const ClassListReport& r) {
    std::string out = "conjugacy classes, g=" + std::to_string(r.g) +
                      " i=" + std::to_string(r.i) + " p=" + std::to_string(r.p) + "\n";
    if (r.entries.empty()) out += "  (none)\n";
    for (const auto& e : r.entries)
        out += "  " + e.data.render() + "  " + render_cover(e.cover) + "  sym=" +
               render_sym(e.sym) + "  rule=" + (e.rule ? assembly::rule_name(*e.rule) : "-") +
               "\n";
    return out;
}

} // namespace farrell::render
