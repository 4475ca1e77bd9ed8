#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mvkt/catalog.hpp"
#include "mvkt/error.hpp"
#include "mvkt/report.hpp"
#include "mvkt/scenario.hpp"
#include "mvkt/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        mvkt::fail(mvkt::ErrorCode::SchemaError,
                   "cannot read scenario file '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mvkt: Cech-Mayer-Vietoris spectral sequence calculator for 2-periodic "
        "K-theory with a Z/2 twist"};

    std::string scenario_path;
    std::string catalog_name;
    std::string format;
    bool dump_pages = false;
    bool baseline_only = false;
    bool verify = false;
    bool inject = false;

    app.add_option("scenario", scenario_path, "Scenario JSON file ('-' reads stdin)");
    app.add_option("--catalog", catalog_name, "Run a built-in scenario by name");
    app.add_option("--format", format, "Output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--dump-pages", dump_pages, "Include page tables in text output");
    app.add_flag("--baseline-only", baseline_only,
                 "Replace the cocycle by the trivial one before running");
    app.add_flag("--verify", verify, "Cross-check the run with independent oracles");
    app.add_flag("--inject-corruption", inject)->group("");  // verifier self-test

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        mvkt::Scenario sc;
        if (!scenario_path.empty() && !catalog_name.empty())
            mvkt::fail(mvkt::ErrorCode::SchemaError,
                       "give either a scenario file or --catalog, not both");
        if (scenario_path.empty() && catalog_name.empty())
            mvkt::fail(mvkt::ErrorCode::SchemaError,
                       "no scenario given; pass a file or --catalog");
        sc = scenario_path.empty() ? mvkt::catalog_scenario(catalog_name)
                                   : mvkt::parse_scenario_text(read_input(scenario_path));

        const std::string effective_format =
            !format.empty() ? format
                            : (!sc.options.format.empty() ? sc.options.format : "text");
        const bool effective_dump = dump_pages || sc.options.dump_pages;

        // everything is buffered so stdout stays empty on failure
        std::string output;
        int status = 0;
        if (verify) {
            const mvkt::VerifyOutcome outcome = mvkt::verify_scenario(sc, inject);
            if (effective_format == "json") {
                mvkt::Json j;
                j["schema"] = "mvkt/1";
                j["ok"] = outcome.ok;
                j["lines"] = outcome.lines;
                output = j.dump(2) + "\n";
            } else {
                std::ostringstream buf;
                for (const std::string& line : outcome.lines) buf << line << "\n";
                buf << "verify: " << (outcome.ok ? "OK" : "DISAGREEMENT") << "\n";
                output = buf.str();
            }
            status = outcome.ok ? 0 : 1;
        } else {
            const mvkt::RunReport report = mvkt::run_scenario(sc, baseline_only);
            output = effective_format == "json"
                         ? mvkt::render_json(report)
                         : mvkt::render_text(report, effective_dump);
        }
        std::cout << output;
        return status;
    } catch (const mvkt::Error& e) {
        std::cerr << "mvkt: " << e.what() << "\n";
        return mvkt::exit_status(e.code());
    } catch (const std::exception& e) {
        std::cerr << "mvkt: internal error: " << e.what() << "\n";
        return 1;
    }
}
