// Command line front end: torsion primes, conjugacy class listings, Farrell
// cohomology reports, reproduction tables, and the self-verification suite.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "farrell/assembly.hpp"
#include "farrell/render.hpp"
#include "farrell/reproduce.hpp"
#include "farrell/verify.hpp"

namespace {

void emit(const std::string& format, const farrell::render::json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-torsion of Farrell cohomology for mapping class groups of punctured surfaces"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int genus = 0;
    int punctures = 0;
    long prime = 0;
    bool prime_set = false;

    auto add_common = [&](CLI::App* sub, bool need_prime) {
        sub->fallthrough();
        sub->add_option("--genus", genus, "genus g of the surface")->required();
        sub->add_option("--punctures", punctures, "number of punctures i")->required();
        auto* popt = sub->add_option("--prime", prime, "prime p");
        if (need_prime) popt->required();
        sub->parse_complete_callback([&, popt]() { prime_set = popt->count() > 0; });
    };

    auto* cmd_torsion =
        app.add_subcommand("torsion", "primes p with admissible Z/p actions, and their covers");
    add_common(cmd_torsion, false);

    auto* cmd_classes =
        app.add_subcommand("classes", "conjugacy classes of Z/p subgroups via fixed point data");
    add_common(cmd_classes, true);

    auto* cmd_farrell =
        app.add_subcommand("farrell", "one period of the p-primary Farrell cohomology");
    add_common(cmd_farrell, true);

    auto* cmd_reproduce = app.add_subcommand("reproduce", "recompute a published table");
    cmd_reproduce->fallthrough();
    std::string table;
    cmd_reproduce->add_option("--table", table, "table name")
        ->required()
        ->check(CLI::IsMember({"remark", "genus1", "genus2", "genus3", "genus-p"}));
    long reproduce_prime = 0;
    auto* rp = cmd_reproduce->add_option("--prime", reproduce_prime, "prime p (genus-p table)");

    auto* cmd_verify = app.add_subcommand("verify", "run the internal consistency checks");
    cmd_verify->fallthrough();
    farrell::verify::Options verify_opts;
    std::string allowlist_path;
    std::vector<std::string> mutation_specs;
    auto* ap = cmd_verify->add_option("--allowlist", allowlist_path,
                                      "JSON file listing the expected anomaly flags");
    cmd_verify->add_option("--mutate", mutation_specs,
                           "perturb a curated table entry (table:row:col:delta)");
    cmd_verify->add_flag("--use-literal-45", verify_opts.use_literal_45,
                         "swap in the literal (45) table variant");
    cmd_verify->add_flag("--drop-tables", verify_opts.drop_tables,
                         "clear the curated tables before checking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_torsion) {
            const std::optional<long> only = prime_set ? std::optional<long>(prime) : std::nullopt;
            const auto report = farrell::render::torsion_report(genus, punctures, only);
            emit(format, farrell::render::torsion_to_json(report),
                 farrell::render::torsion_text(report));
        } else if (*cmd_classes) {
            const auto report = farrell::render::class_list(genus, punctures, prime);
            emit(format, farrell::render::classes_to_json(report),
                 farrell::render::classes_text(report));
        } else if (*cmd_farrell) {
            const auto report = farrell::assembly::farrell(genus, punctures, prime);
            emit(format, farrell::render::farrell_to_json(report),
                 farrell::render::farrell_text(report));
        } else if (*cmd_reproduce) {
            if (table == "remark") {
                const auto report = farrell::reproduce::remark_report();
                emit(format, farrell::reproduce::remark_to_json(report),
                     farrell::reproduce::remark_text(report));
            } else {
                const std::optional<long> p =
                    rp->count() > 0 ? std::optional<long>(reproduce_prime) : std::nullopt;
                const auto report = farrell::reproduce::build(table, p);
                emit(format, farrell::reproduce::table_to_json(report),
                     farrell::reproduce::table_text(report));
            }
        } else if (*cmd_verify) {
            for (const std::string& spec : mutation_specs)
                verify_opts.mutations.push_back(farrell::verify::parse_mutation(spec));
            if (ap->count() > 0) verify_opts.allowlist_path = allowlist_path;
            const auto report = farrell::verify::run(verify_opts);
            emit(format, farrell::verify::report_to_json(report),
                 farrell::verify::report_text(report));
            return farrell::verify::exit_code(report);
        }
    } catch (const farrell::unsupported_case& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
