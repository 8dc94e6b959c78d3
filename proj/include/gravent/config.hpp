#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "gravent/scenario.hpp"

namespace gravent {

enum class Mode { kReport, kSweep, kTauStar };
enum class OutputFormat { kCsv, kJson };

std::string_view to_string(Mode mode);
std::string_view to_string(OutputFormat format);
std::optional<Mode> mode_from_string(std::string_view text);
std::optional<OutputFormat> format_from_string(std::string_view text);

inline constexpr int kDefaultPrecision = 12;

struct OutputSpec {
    std::string path = "-"; // "-" is standard output
    OutputFormat format = OutputFormat::kCsv;
    int precision = kDefaultPrecision;
};

/// Validated run description. Document layout:
///
///   mode = report | sweep | tau-star
///   [system]     m1 m2 r1 r2 omega1 omega2 d tau
///   [constants]  G hbar
///   [model]      regime_threshold symmetrize_force max_points threads
///   [output]     path format precision
///   [sweep.<p>]  start stop count spacing   (p in m1 m2 omega1 omega2 d tau)
struct RunConfig {
    Mode mode = Mode::kReport;
    SystemParams system;
    std::array<std::optional<Axis>, kParameterCount> sweep{};
    PhysicalConstants constants{};
    OutputSpec output{};
    ModelOptions model{};
    std::size_t max_points = kDefaultMaxGridPoints;
    int threads = 0;

    SweepSpec sweep_spec() const;
};

/// Parses and validates a config document. Unknown sections or keys are rejected.
/// mode_override (from the command line) replaces the document's mode.
RunConfig parse_config(std::string_view text, std::optional<Mode> mode_override = std::nullopt);

/// Parses a document holding only a [constants] section (or bare G/hbar keys)
/// and applies it on top of config.constants.
void apply_constants_document(RunConfig& config, std::string_view text);

/// Checks cross-field invariants after command-line overrides.
void validate(const RunConfig& config);

}  // namespace gravent
