#include "octostokes/campaign.hpp"
#include "octostokes/errors.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

// Exit-code contract: 0 pass, 1 verification failure, 2 configuration error,
// 3 I/O error on field or report paths.
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

struct CliOptions {
    octostokes::RunConfig config;
    std::string mode = "exact";
    std::string format = "text";
    std::string out_path;
    bool mode_given = false;
    bool h_given = false;
    bool tol_given = false;
};

void add_common_options(CLI::App& cmd, CliOptions& opt) {
    cmd.set_help_flag("--help", "Print help and exit");
    cmd.add_option("--seed", opt.config.seed, "Campaign seed");
    cmd.add_option("--trials", opt.config.trials, "Number of random trials");
    cmd.add_option("--radius", opt.config.radius, "Support box radius");
    cmd.add_option("--coeff-bound", opt.config.coeff_bound,
                   "Coefficients are drawn from [-C, C]");
    cmd.add_option("--h", opt.config.h, "Lattice constant (exact mode requires 1)")
        ->each([&opt](const std::string&) { opt.h_given = true; });
    cmd.add_option("--mode", opt.mode, "Scalar mode: exact|float")
        ->check(CLI::IsMember({"exact", "float"}))
        ->each([&opt](const std::string&) { opt.mode_given = true; });
    cmd.add_option("--tol", opt.config.tolerance, "Residual tolerance (float mode)")
        ->each([&opt](const std::string&) { opt.tol_given = true; });
    cmd.add_option("--format", opt.format, "Output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd.add_option("--field-g", opt.config.field_g_path, "Load field g from PATH");
    cmd.add_option("--field-f", opt.config.field_f_path, "Load field f from PATH");
    cmd.add_option("--out", opt.out_path, "Write the report to PATH instead of stdout");
}

octostokes::OutputFormat parse_format(const std::string& name) {
    if (name == "json") return octostokes::OutputFormat::json;
    if (name == "csv") return octostokes::OutputFormat::csv;
    return octostokes::OutputFormat::text;
}

// Header peek so that loaded field files supply mode and h when the flags
// were not given explicitly.
void adopt_field_header(CliOptions& opt) {
    std::ifstream in(opt.config.field_g_path);
    if (!in) {
        throw octostokes::FieldIoError("cannot open field file " + opt.config.field_g_path);
    }
    std::string line;
    while (std::getline(in, line) && line.empty()) {}
    const auto header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object() || !header.contains("mode") ||
        !header.contains("h")) {
        throw octostokes::FieldIoError(opt.config.field_g_path + ": malformed header record");
    }
    if (!opt.mode_given && header["mode"].is_string()) {
        opt.mode = header["mode"].get<std::string>();
    }
    if (!opt.h_given && header["h"].is_number()) {
        opt.config.h = header["h"].get<double>();
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw octostokes::FieldIoError("cannot write report file " + out_path);
    }
    out << text;
    if (!out.good()) {
        throw octostokes::FieldIoError("write failed for report file " + out_path);
    }
}

int run(const std::string& command, CliOptions& opt) {
    opt.config.command = command;
    opt.config.format = parse_format(opt.format);

    if (command == "table") {
        emit(octostokes::render_table(opt.config.format), opt.out_path);
        return kExitPass;
    }
    if (command == "classify") {
        emit(octostokes::render_classify(opt.config.format), opt.out_path);
        return octostokes::census_block().match ? kExitPass : kExitVerificationFailed;
    }
    if (command == "fano") {
        emit(octostokes::render_fano(opt.config.format), opt.out_path);
        return octostokes::census_block().match ? kExitPass : kExitVerificationFailed;
    }

    if (!opt.config.field_g_path.empty() && !opt.config.field_f_path.empty()) {
        adopt_field_header(opt);
    }
    opt.config.mode =
        opt.mode == "float" ? octostokes::ScalarMode::floating : octostokes::ScalarMode::exact;
    if (opt.tol_given && opt.config.mode == octostokes::ScalarMode::exact) {
        throw octostokes::ConfigError("--tol only applies to float mode");
    }

    const octostokes::CampaignReport report = octostokes::run_campaign(opt.config);
    emit(octostokes::render_report(report), opt.out_path);
    return report.pass ? kExitPass : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Octonion algebra censuses and discrete Stokes identity verification"};
    app.set_help_flag("--help", "Print help and exit");
    app.require_subcommand(1);

    CliOptions opt;
    const char* names[] = {"table", "classify", "fano", "verify"};
    const char* descriptions[] = {
        "Print the 8x8 basis multiplication table",
        "Classify all 512 ordered basis triples and print the census",
        "List the seven Fano index sets",
        "Run a seeded randomized verification campaign",
    };
    for (int i = 0; i < 4; ++i) {
        CLI::App* cmd = app.add_subcommand(names[i], descriptions[i]);
        add_common_options(*cmd, opt);
    }

    try {
        app.parse(argc, argv);
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    } catch (const octostokes::FieldIoError& e) {
        std::cerr << "octo-stokes: " << e.what() << '\n';
        return kExitIoError;
    } catch (const octostokes::ConfigError& e) {
        std::cerr << "octo-stokes: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "octo-stokes: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "octo-stokes: internal error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}
