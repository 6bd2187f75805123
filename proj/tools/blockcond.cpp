#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "blockcond/config_io.hpp"
#include "blockcond/errors.hpp"
#include "blockcond/fixtures.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_engine = 3;
constexpr int exit_fixture_mismatch = 4;

std::string slurp(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw blockcond::validation_error("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/* Configs come either from a file path or from a bundled fixture via
 * "fixture:NAME". */
blockcond::NewformConfig load_config(std::string const & spec)
{
    if (spec.rfind("fixture:", 0) == 0) {
        std::string const name = spec.substr(8);
        auto const * f = blockcond::find_fixture(name);
        if (!f)
            throw blockcond::validation_error("unknown fixture: " + name);
        return blockcond::parse_config(f->config_json);
    }
    return blockcond::parse_config(slurp(spec));
}

int run_fixture_batch(bool as_json, std::string const & dump_dir)
{
    using namespace blockcond;
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (auto const & f : bundled_fixtures()) {
            std::ofstream out(dump_dir + "/" + f.name + ".json", std::ios::binary);
            out << f.config_json << "\n";
        }
        std::cout << "wrote " << bundled_fixtures().size() << " fixture files to "
                  << dump_dir << "\n";
        return exit_ok;
    }

    auto const results = run_all_fixtures();
    bool all_pass = true;
    if (as_json) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < results.size(); i++) {
            auto const & r = results[i];
            os << (i ? "," : "") << "{\"name\":\"" << r.name << "\",\"pass\":"
               << (r.pass ? "true" : "false") << "}";
            all_pass = all_pass && r.pass;
        }
        os << "]\n";
        std::cout << os.str();
    } else {
        std::size_t passed = 0;
        for (auto const & r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
            for (auto const & d : r.diffs)
                std::cout << "      " << d << "\n";
            all_pass = all_pass && r.pass;
            passed += r.pass;
        }
        std::cout << passed << "/" << results.size() << " fixtures pass\n";
    }
    return all_pass ? exit_ok : exit_fixture_mismatch;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{
        "blockcond: conductors of the absolutely simple factors of modular "
        "abelian varieties, from inner-twist data"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string config_spec;
    auto * analyze_cmd = app.add_subcommand(
        "analyze", "full conductor report (norms, splitting, ideal, case)");
    analyze_cmd->add_option("config", config_spec,
                            "config file or fixture:NAME")->required();
    auto * decompose_cmd = app.add_subcommand(
        "decompose", "restriction-of-scalars decomposition into twisted factors");
    decompose_cmd->add_option("config", config_spec, "config file or fixture:NAME")
        ->required();
    auto * levels_cmd = app.add_subcommand(
        "levels", "per-character, per-prime twisted level exponents with rules");
    levels_cmd->add_option("config", config_spec, "config file or fixture:NAME")
        ->required();
    auto * check_cmd = app.add_subcommand(
        "check", "case classification, |P_2| and the residual factor");
    check_cmd->add_option("config", config_spec, "config file or fixture:NAME")
        ->required();
    auto * fixtures_cmd = app.add_subcommand(
        "fixtures", "run every bundled fixture against its published values");
    std::string dump_dir;
    fixtures_cmd->add_option("--dump", dump_dir,
                             "write the bundled fixture configs to a directory");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int const rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    using namespace blockcond;
    try {
        if (fixtures_cmd->parsed())
            return run_fixture_batch(as_json, dump_dir);

        NewformConfig const config = load_config(config_spec);
        if (analyze_cmd->parsed()) {
            ConductorReport const rep = analyze(config);
            std::cout << (as_json ? render_report_json(rep) : render_report_text(rep));
        } else if (decompose_cmd->parsed()) {
            ConductorReport const rep = analyze(config);
            if (as_json)
                std::cout << render_report_json(rep);
            else
                std::cout << render_decomposition_text(rep.decomposition);
        } else if (levels_cmd->parsed()) {
            std::cout << (as_json ? render_level_table_json(config)
                                  : render_level_table_text(config));
        } else if (check_cmd->parsed()) {
            ConductorReport const rep = analyze(config);
            if (as_json) {
                std::cout << render_report_json(rep);
            } else {
                std::cout << "case " << to_string(rep.classification.tag)
                          << ", |P2| = " << rep.classification.p2_size;
                if (rep.classification.residual)
                    std::cout << ", residual " << rep.classification.residual->str();
                if (rep.classification.closed_form_holds)
                    std::cout << (*rep.classification.closed_form_holds
                                      ? " (closed form holds)"
                                      : " (closed form FAILS)");
                std::cout << "\n";
            }
        }
        return exit_ok;
    } catch (validation_error const & e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return exit_validation;
    } catch (engine_error const & e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return exit_engine;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_engine;
    }
}
