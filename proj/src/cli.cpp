#include "gravent/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gravent/errors.hpp"
#include "gravent/potential.hpp"
#include "gravent/serialize.hpp"

namespace gravent::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void warn_about_widths(const PairSystem& system, std::ostream& err) {
    const MassiveBody* bodies[] = {&system.body1, &system.body2};
    for (int i = 0; i < 2; ++i) {
        const MassiveBody& b = *bodies[i];
        if (b.radius <= 0.0) continue;
        const double width = zero_point_width(b.mass, b.omega, system.constants);
        if (width > b.radius)
            err << "warning: zero-point width of body " << i + 1 << " (" << width
                << " m) exceeds its radius r" << i + 1 << " (" << b.radius << " m)\n";
    }
}

int emit(const RunConfig& config, std::span<const SweepRow> rows, std::ostream& out, std::ostream& err) {
    std::ostringstream buf;
    if (config.output.format == OutputFormat::kCsv)
        write_csv(buf, rows, config.output.precision);
    else
        write_json(buf, rows, config.output.precision);

    if (config.output.path == "-") {
        out << buf.str();
        return kSuccess;
    }
    std::ofstream file(config.output.path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open output file '" << config.output.path << "'\n";
        return kValidationFailure;
    }
    file << buf.str();
    return file ? kSuccess : kValidationFailure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err, bool quiet) {
    std::ostringstream sink;
    std::ostream& diag = quiet ? sink : err;
    try {
        switch (config.mode) {
            case Mode::kReport: {
                const PairSystem system = config.system.to_system(config.constants);
                Diagnostics diagnostics;
                corrected_potential(system, {kDefaultSeriesOrder, config.model.regime_threshold}, &diagnostics);
                for (const auto& w : diagnostics.warnings()) diag << "warning: " << w << '\n';
                warn_about_widths(system, diag);

                const SweepRow row = evaluate_point(0, config.system, config.constants, config.model);
                if (!row.ok()) {
                    err << row.status << '\n';
                    return kNumericalFailure;
                }
                return emit(config, std::span(&row, 1), out, err);
            }
            case Mode::kSweep: {
                const auto rows = run_sweep(config.sweep_spec(), config.threads);
                std::size_t failed = 0, out_of_regime = 0;
                for (const auto& r : rows) {
                    if (!r.ok()) ++failed;
                    else if (!r.in_regime) ++out_of_regime;
                }
                if (out_of_regime)
                    diag << "warning: " << out_of_regime << " of " << rows.size()
                         << " points are outside the expansion regime (in_regime = false)\n";
                if (failed) diag << "warning: " << failed << " points failed; see the status column\n";
                return emit(config, rows, out, err);
            }
            case Mode::kTauStar: {
                const PairSystem system = config.system.to_system(config.constants);
                const double tau_star = time_to_max_entanglement(system);
                out << format_number(tau_star, config.output.precision) << '\n';
                return kSuccess;
            }
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kValidationFailure;
}

int main(int argc, char** argv) {
    CLI::App app{"Gravitationally induced two-qubit entanglement: reports, sweeps and tau*"};
    std::string config_path;
    std::string mode_text;
    std::string output_path;
    std::string format_text;
    bool quiet = false;
    app.add_option("--config", config_path, "Config document")->required();
    app.add_option("--mode", mode_text, "Override mode")->check(CLI::IsMember({"report", "sweep", "tau-star"}));
    app.add_option("--output", output_path, "Output path, '-' for standard output");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", quiet, "Suppress warnings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kSuccess : kValidationFailure;
    }

    RunConfig config;
    try {
        const std::optional<Mode> mode = mode_text.empty() ? std::nullopt : mode_from_string(mode_text);
        config = parse_config(read_file(config_path), mode);
        if (const char* env = std::getenv(kConstantsEnvVar); env && *env)
            apply_constants_document(config, read_file(env));
        if (!output_path.empty()) config.output.path = output_path;
        if (!format_text.empty()) config.output.format = *format_from_string(format_text);
        validate(config);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return run(config, std::cout, std::cerr, quiet);
}

}  // namespace gravent::cli
