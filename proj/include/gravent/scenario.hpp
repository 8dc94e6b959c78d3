#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gravent/physical_model.hpp"

namespace gravent {

/// Sweepable inputs, in grid order (first = slowest varying, tau = fastest).
enum class Parameter : int { kM1 = 0, kM2, kOmega1, kOmega2, kD, kTau };
inline constexpr std::size_t kParameterCount = 6;

std::string_view to_string(Parameter p);
std::optional<Parameter> parameter_from_string(std::string_view name);

enum class Spacing { kLinear, kLog };

struct Axis {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 1;
    Spacing spacing = Spacing::kLinear;

    /// Grid values; the endpoints are reproduced exactly.
    std::vector<double> values() const;
    void validate(std::string_view name) const;
};

struct SystemParams {
    double m1 = 0.0;
    double m2 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double d = 0.0;
    double tau = 0.0;

    double get(Parameter p) const;
    void set(Parameter p, double value);
    PairSystem to_system(const PhysicalConstants& constants) const;

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

struct ModelOptions {
    double regime_threshold = kDefaultRegimeThreshold;
    bool symmetrize_force = false;
};

inline constexpr std::size_t kDefaultMaxGridPoints = 1'000'000;

struct SweepSpec {
    SystemParams base;
    std::array<std::optional<Axis>, kParameterCount> axes{};
    PhysicalConstants constants{};
    ModelOptions options{};
    std::size_t max_points = kDefaultMaxGridPoints;

    std::size_t size() const;
    /// Throws DomainError on bad axes or a grid above max_points.
    void validate() const;
    SystemParams point(std::size_t index) const;
};

/// One flattened result row. Field names match the serialized column names.
struct SweepRow {
    std::size_t index = 0;
    SystemParams params;
    double ratio_x = 0.0;
    bool in_regime = false;
    double threshold = kDefaultRegimeThreshold;
    double delta_phi = 0.0;
    double purity_full = 0.0;
    double purity_reduced = 0.0;
    double epsilon = 0.0;
    double entropy_nats = 0.0;
    double entropy_bits = 0.0;
    bool separable_by_measures = false;
    bool paper_condition_violated = false;
    bool condition_discrepancy = false;
    double force_as_printed = 0.0;
    double force_gradient = 0.0;
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Evaluates a single grid point. Failures are captured in status and the
/// numeric fields are set to NaN; this never throws for domain problems.
SweepRow evaluate_point(std::size_t index,
                        const SystemParams& params,
                        const PhysicalConstants& constants,
                        const ModelOptions& options);

/// OpenMP evaluation; rows come back in grid order. threads <= 0 uses the
/// runtime default.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 0);

/// Single-threaded reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

/// Smallest tau > 0 with maximal entanglement: (pi/2) hbar / |delta_v_g|.
double time_to_max_entanglement(const PairSystem& system);

}  // namespace gravent
