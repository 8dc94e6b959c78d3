#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gravent/scenario.hpp"

namespace gravent {

inline constexpr std::array<std::string_view, 24> kRowColumns = {
    "index", "m1", "m2", "r1", "r2", "omega1", "omega2", "d", "tau",
    "ratio_x", "in_regime", "threshold",
    "delta_phi", "purity_full", "purity_reduced", "epsilon",
    "entropy_nats", "entropy_bits",
    "separable_by_measures", "paper_condition_violated", "condition_discrepancy",
    "force_as_printed", "force_gradient", "status",
};

/// Scientific notation with `precision` significant digits; "nan"/"inf" for
/// non-finite values.
std::string format_number(double value, int precision);

void write_csv(std::ostream& out, std::span<const SweepRow> rows, int precision);
void write_json(std::ostream& out, std::span<const SweepRow> rows, int precision);

/// Readers accept LF or CRLF line endings. Throw ConfigError on malformed input.
std::vector<SweepRow> read_csv(std::string_view text);
std::vector<SweepRow> read_json(std::string_view text);

}  // namespace gravent
