#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "farrell/assembly.hpp"
#include "farrell/render.hpp"
#include "farrell/rh.hpp"

namespace farrell::reproduce {

// ---- admissibility table ---------------------------------------------------

// Published cells of the low-genus admissibility table, frozen verbatim
// (solutions listed by ascending quotient genus). Columns follow
// rh::kRemarkPrimes = {2, 3, 5, 7}.
struct RemarkGoldenRow {
    int g;
    int i_lo;
    int i_hi;
    std::array<std::vector<rh::Solution>, 4> cells;
};

inline const std::vector<RemarkGoldenRow>& remark_published() {
    static const std::vector<RemarkGoldenRow> rows = {
        {2, 1, 2, {{{{0, 6}, {1, 2}}, {{0, 4}}, {{0, 3}}, {}}}},
        {2, 3, 3, {{{{0, 6}}, {{0, 4}}, {{0, 3}}, {}}}},
        {2, 4, 4, {{{{0, 6}}, {{0, 4}}, {}, {}}}},
        {2, 5, 6, {{{{0, 6}}, {}, {}, {}}}},
        {3, 1, 2, {{{{0, 8}, {1, 4}}, {{0, 5}, {1, 2}}, {}, {{0, 3}}}}},
        {3, 3, 3, {{{{0, 8}, {1, 4}}, {{0, 5}}, {}, {{0, 3}}}}},
        {3, 4, 4, {{{{0, 8}, {1, 4}}, {{0, 5}}, {}, {}}}},
        {3, 5, 5, {{{{0, 8}}, {{0, 5}}, {}, {}}}},
        {3, 6, 8, {{{{0, 8}}, {}, {}, {}}}},
        {1, 1, 2, {{{{0, 4}}, {{0, 3}}, {}, {}}}},
        {1, 3, 3, {{{{0, 4}}, {{0, 3}}, {}, {}}}},
        {1, 4, 4, {{{{0, 4}}, {}, {}, {}}}},
    };
    return rows;
}

struct RemarkReport {
    struct Row {
        rh::RemarkRow engine;
        std::array<std::vector<rh::Solution>, 4> published;
        bool match = false;
    };
    std::vector<Row> rows;
    bool all_match = false;
};

inline RemarkReport remark_report() {
    const auto engine_rows = rh::remark_table();
    const auto& golden = remark_published();
    if (engine_rows.size() != golden.size())
        throw std::logic_error("remark table row count mismatch");
    RemarkReport report;
    report.all_match = true;
    for (std::size_t k = 0; k < engine_rows.size(); ++k) {
        if (engine_rows[k].g != golden[k].g || engine_rows[k].i_lo != golden[k].i_lo ||
            engine_rows[k].i_hi != golden[k].i_hi)
            throw std::logic_error("remark table row grouping mismatch");
        RemarkReport::Row row{engine_rows[k], golden[k].cells, true};
        for (std::size_t c = 0; c < row.published.size(); ++c)
            if (row.engine.cells[c] != row.published[c]) row.match = false;
        // every puncture count in the row group must share the cells
        for (int i = row.engine.i_lo; i <= row.engine.i_hi && row.match; ++i)
            for (std::size_t c = 0; c < rh::kRemarkPrimes.size(); ++c)
                if (rh::admissible_solutions(row.engine.g, i, rh::kRemarkPrimes[c]) !=
                    row.engine.cells[c])
                    row.match = false;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline render::json remark_to_json(const RemarkReport& r) {
    render::json j;
    j["table"] = "remark";
    j["rows"] = render::json::array();
    for (const auto& row : r.rows) {
        render::json e;
        e["g"] = row.engine.g;
        e["i_lo"] = row.engine.i_lo;
        e["i_hi"] = row.engine.i_hi;
        e["cells"] = render::json::array();
        for (std::size_t c = 0; c < rh::kRemarkPrimes.size(); ++c)
            e["cells"].push_back(
                render::json{{"p", rh::kRemarkPrimes[c]},
                             {"engine", render::solutions_to_json(row.engine.cells[c])},
                             {"published", render::solutions_to_json(row.published[c])}});
        e["match"] = row.match;
        j["rows"].push_back(std::move(e));
    }
    j["all_match"] = r.all_match;
    return j;
}

inline std::string remark_text(const RemarkReport& r) {
    std::string out = "admissible (h,t) by prime, low genus\n";
    for (const auto& row : r.rows) {
        out += "  g=" + std::to_string(row.engine.g) + " i=" + std::to_string(row.engine.i_lo);
        if (row.engine.i_hi != row.engine.i_lo) out += ".." + std::to_string(row.engine.i_hi);
        out += ":";
        for (std::size_t c = 0; c < rh::kRemarkPrimes.size(); ++c)
            out += "  p=" + std::to_string(rh::kRemarkPrimes[c]) + " " +
                   render::solutions_text(row.engine.cells[c]);
        out += row.match ? "  [match]" : "  [MISMATCH]";
        out += "\n";
    }
    out += r.all_match ? "all cells match the published table\n"
                       : "MISMATCH against the published table\n";
    return out;
}

// ---- cohomology tables -------------------------------------------------

enum class RowStatus { match, divergent, reference, unstated, unsupported };

inline std::string row_status_name(RowStatus s) {
    switch (s) {
        case RowStatus::match: return "match";
        case RowStatus::divergent: return "divergent";
        case RowStatus::reference: return "reference";
        case RowStatus::unstated: return "unstated";
        case RowStatus::unsupported: return "unsupported";
    }
    return "?";
}

struct TableRow {
    int g = 0;
    int i = 0;
    long p = 0;
    std::optional<assembly::FarrellReport> engine;
    std::string error;
    std::string note;
    RowStatus status = RowStatus::unstated;
};

struct TableReport {
    std::string name;
    std::vector<TableRow> rows;
};

inline TableRow make_row(int g, int i, long p, const cohen::Tables& tables,
                         const std::string& note = "") {
    TableRow row;
    row.g = g;
    row.i = i;
    row.p = p;
    row.note = note;
    try {
        row.engine = assembly::farrell(g, i, p, tables);
        if (!note.empty())
            row.status = RowStatus::reference;
        else if (!row.engine->published_value)
            row.status = RowStatus::unstated;
        else
            row.status = row.engine->discrepancy ? RowStatus::divergent : RowStatus::match;
    } catch (const unsupported_case& e) {
        row.error = e.what();
        row.status = note.empty() ? RowStatus::unsupported : RowStatus::reference;
    }
    return row;
}

inline TableReport genus_table(int g, const cohen::Tables& tables = cohen::builtin()) {
    TableReport report;
    report.name = "genus" + std::to_string(g);
    const char* amalgam_note = "known case: free product of Z/4 and Z/6 over Z/2";
    switch (g) {
        case 1:
            for (int i = 1; i <= 6; ++i)
                for (long p : {2L, 3L})
                    report.rows.push_back(make_row(1, i, p, tables, i == 1 ? amalgam_note : ""));
            break;
        case 2:
            for (int i = 1; i <= 8; ++i)
                for (long p : {3L, 5L}) report.rows.push_back(make_row(2, i, p, tables));
            break;
        case 3:
            for (int i = 1; i <= 10; ++i)
                for (long p : {3L, 5L, 7L}) report.rows.push_back(make_row(3, i, p, tables));
            break;
        default:
            throw std::invalid_argument("genus tables exist for g in {1,2,3}");
    }
    return report;
}

inline TableReport genus_p_table(long p, const cohen::Tables& tables = cohen::builtin()) {
    if (!is_prime(p) || p <= 3)
        throw std::invalid_argument("genus-p table needs a prime p > 3");
    TableReport report;
    report.name = "genus-p";
    for (int i = 1; i <= 4; ++i)
        report.rows.push_back(make_row(static_cast<int>(p), i, p, tables));
    return report;
}

inline TableReport build(const std::string& name, std::optional<long> prime,
                         const cohen::Tables& tables = cohen::builtin()) {
    if (name == "genus1") return genus_table(1, tables);
    if (name == "genus2") return genus_table(2, tables);
    if (name == "genus3") return genus_table(3, tables);
    if (name == "genus-p") {
        if (!prime) throw std::invalid_argument("--table genus-p requires --prime");
        return genus_p_table(*prime, tables);
    }
    throw std::invalid_argument("unknown table: " + name);
}

inline render::json table_to_json(const TableReport& r) {
    render::json j;
    j["table"] = r.name;
    j["rows"] = render::json::array();
    for (const TableRow& row : r.rows) {
        render::json e;
        e["g"] = row.g;
        e["i"] = row.i;
        e["p"] = row.p;
        if (row.engine) {
            e["even"] = render::altset_to_json(row.engine->total.even);
            e["odd"] = render::altset_to_json(row.engine->total.odd);
            if (row.engine->published_value)
                e["paper"] =
                    render::json{{"even", render::altset_to_json(row.engine->published_value->even)},
                                 {"odd", render::altset_to_json(row.engine->published_value->odd)}};
        } else {
            e["error"] = row.error;
        }
        if (!row.note.empty()) e["note"] = row.note;
        e["status"] = row_status_name(row.status);
        j["rows"].push_back(std::move(e));
    }
    return j;
}

inline std::string table_text(const TableReport& r) {
    std::string out = "table " + r.name + "\n";
    for (const TableRow& row : r.rows) {
        out += "  g=" + std::to_string(row.g) + " i=" + std::to_string(row.i) +
               " p=" + std::to_string(row.p) + ": ";
        if (row.engine) {
            out += "engine " + row.engine->total.even.render() + " / " +
                   row.engine->total.odd.render();
            if (row.engine->published_value)
                out += " ; published " + row.engine->published_value->even.render() + " / " +
                       row.engine->published_value->odd.render();
            else
                out += " ; published -";
        } else {
            out += "engine unsupported (" + row.error + ")";
        }
        out += "  [" + row_status_name(row.status) + "]";
        if (!row.note.empty()) out += "  (" + row.note + ")";
        out += "\n";
    }
    return out;
}

} // namespace farrell::reproduce
