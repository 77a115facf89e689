#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fglkit/fgl.hpp"
#include "fglkit/poincare.hpp"
#include "fglkit/report.hpp"
#include "fglkit/universal_ring.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct RunConfig {
    unsigned prime = 3;
    std::optional<int> truncation;
    int max_degree = -1;
    int cap = -1;
    std::string mode = "modp";
    std::string series_check = "v1-filtration";
    std::string input;
    std::string output;
};

void write_json(const std::string& path, const nlohmann::ordered_json& j)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

fglkit::LawFileOverrides overrides(const RunConfig& cfg, bool prime_given)
{
    fglkit::LawFileOverrides o;
    if (prime_given)
        o.prime = cfg.prime;
    else
        o.fallback_prime = cfg.prime;
    o.truncation = cfg.truncation;
    return o;
}

int cmd_check(const RunConfig& cfg, bool prime_given)
{
    const auto law = fglkit::read_law_file(cfg.input, overrides(cfg, prime_given));
    const auto report = fglkit::check_all(law);
    std::cout << fglkit::summarize(report);
    write_json(cfg.output, fglkit::to_json(report));
    return report.all_pass() ? exit_pass : exit_mismatch;
}

int cmd_pseries(const RunConfig& cfg, bool prime_given)
{
    const auto law = fglkit::read_law_file(cfg.input, overrides(cfg, prime_given));
    const auto series = fglkit::p_series(law);
    std::cout << "[" << law.prime() << "](xi) over F_" << law.prime() << '\n';
    std::cout << "p1 = " << fglkit::format_polynomial(series.odd) << '\n';
    std::cout << "p2 = " << fglkit::format_polynomial(series.even) << '\n';
    std::cout << "note: terms of degree above " << law.truncation() << " are discarded\n";
    write_json(cfg.output, fglkit::p_series_json(law, series));
    return exit_pass;
}

int cmd_lazard(const RunConfig& cfg)
{
    const auto mode = fglkit::parse_lazard_mode(cfg.mode);
    if (!mode)
        throw CLI::ValidationError("--mode", "expected modp or ordinary");
    const auto report = fglkit::run_lazard(cfg.prime, cfg.max_degree, *mode, cfg.truncation);
    std::cout << fglkit::summarize(report);
    write_json(cfg.output, fglkit::to_json(report));
    return report.all_match() ? exit_pass : exit_mismatch;
}

int cmd_series(const RunConfig& cfg)
{
    if (cfg.series_check == "v1-filtration") {
        const auto cmp = fglkit::check_v1_homology(cfg.prime, cfg.cap);
        std::cout << fglkit::summarize(cmp, "v1 filtration: tensor algebra vs sum of filtration quotients");
        write_json(cfg.output, fglkit::to_json(cmp));
        return cmp.all_equal() ? exit_pass : exit_mismatch;
    }
    const auto cmp = fglkit::check_rstar_diagnostic(cfg.prime, cfg.cap);
    std::cout << fglkit::summarize(cmp, "rstar diagnostic (report only): MU * Sym(t*BCp) vs L_p * dual Steenrod");
    const auto bad = cmp.mismatched_degrees();
    std::cout << "unequal degrees:";
    for (int d : bad)
        std::cout << ' ' << d;
    std::cout << (bad.empty() ? " none\n" : "\n");
    write_json(cfg.output, fglkit::to_json(cmp));
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Formal group laws over F_p: axiom checks, mod-p Lazard ring dimensions, series identities"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto prime_flag = [&](CLI::App* sub) {
        return sub->add_option("--prime", cfg.prime, "odd prime")->check(CLI::Range(3u, 32768u));
    };

    auto* check = app.add_subcommand("check", "run the axiom checks on a .fgl file");
    auto* check_prime = prime_flag(check);
    check->add_option("--input", cfg.input, ".fgl file")->required()->check(CLI::ExistingFile);
    check->add_option("--truncation", cfg.truncation, "override the file's truncation degree");
    check->add_option("--output", cfg.output, "JSON report path");

    auto* pseries = app.add_subcommand("pseries", "print the p-series of a .fgl law");
    auto* pseries_prime = prime_flag(pseries);
    pseries->add_option("--input", cfg.input, ".fgl file")->required()->check(CLI::ExistingFile);
    pseries->add_option("--truncation", cfg.truncation, "override the file's truncation degree");
    pseries->add_option("--output", cfg.output, "JSON report path");

    auto* lazard = app.add_subcommand("lazard", "graded dimensions of the Lazard ring");
    prime_flag(lazard);
    lazard->add_option("--max-degree", cfg.max_degree, "highest degree")->required()->check(CLI::NonNegativeNumber);
    lazard->add_option("--mode", cfg.mode, "modp or ordinary")->check(CLI::IsMember({"modp", "ordinary"}));
    lazard->add_option("--truncation", cfg.truncation, "geometric truncation degree (default max-degree + 2)");
    lazard->add_option("--output", cfg.output, "JSON report path");

    auto* series = app.add_subcommand("series", "Poincare series identities");
    prime_flag(series);
    series->add_option("--check", cfg.series_check, "v1-filtration or rstar-diagnostic")
        ->check(CLI::IsMember({"v1-filtration", "rstar-diagnostic"}));
    series->add_option("--cap", cfg.cap, "highest degree")->required()->check(CLI::PositiveNumber);
    series->add_option("--output", cfg.output, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_usage;
    }

    try {
        if (check->parsed())
            return cmd_check(cfg, check_prime->count() > 0);
        if (pseries->parsed())
            return cmd_pseries(cfg, pseries_prime->count() > 0);
        if (lazard->parsed())
            return cmd_lazard(cfg);
        return cmd_series(cfg);
    } catch (const fglkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return exit_usage;
}
