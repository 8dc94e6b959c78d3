#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gravent/physical_model.hpp"

namespace gravent {

/// -G m1 m2 / d.
double newtonian_potential(double m1, double m2, double d, const PhysicalConstants& constants);

/// -G m1 m2 / (d + dr1 + dr2). Throws SingularityError if the denominator is not positive.
double exact_size_corrected_potential(const PairSystem& system, double dr1, double dr2);

struct SeriesTerm {
    int order = 0;
    double value = 0.0;      // J
    bool absorbable = false; // the linear displacement term
};

inline constexpr int kDefaultSeriesOrder = 2;
inline constexpr int kMaxSeriesOrder = 12;

/// Terms v0 * (-x)^n, n = 0..max_order, of the expansion of
/// -G m1 m2 / (d (1 + x)) with x = dr_sum / d. The n = 1 term is flagged absorbable
/// but kept, so partial sums converge to the exact potential.
std::vector<SeriesTerm> expand_potential(const PairSystem& system, double dr_sum, int max_order);

double partial_sum(std::span<const SeriesTerm> terms);

/// Ground-state width sqrt(hbar / (m omega)).
double zero_point_width(double mass, double omega, const PhysicalConstants& constants);

/// -(hbar G m1 m2 / d^3) (1/(m1 w1) + 1/(m2 w2) + 2/sqrt(m1 m2 w1 w2)). Never positive.
double quantum_correction(const PairSystem& system);

struct PotentialBreakdown {
    double v0 = 0.0;
    std::vector<SeriesTerm> series_terms;
    double v_truncated = 0.0; // v0 (1 + x^2), linear term dropped
    double delta_v_g = 0.0;
    double v_g_total = 0.0;   // v0 + delta_v_g
    ValidityAssessment validity;
};

struct PotentialOptions {
    int series_order = kDefaultSeriesOrder;
    double regime_threshold = kDefaultRegimeThreshold;
};

/// Out-of-regime systems are evaluated anyway; a warning goes to diagnostics.
PotentialBreakdown corrected_potential(const PairSystem& system,
                                       const PotentialOptions& options = {},
                                       Diagnostics* diagnostics = nullptr);

struct ForceEstimate {
    // Verbatim transcription of the published bracket times hbar G m1 m2 / d^3.
    // Its unit is J*s, not newtons.
    double as_printed = 0.0;
    std::string_view as_printed_unit = "J*s";
    // |d(delta_v_g)/dd| = 3 |delta_v_g| / d, in newtons.
    double gradient_based = 0.0;
};

struct ForceOptions {
    // Replace the published second term 1/(m1 w2^2) by 1/(m2 w2^2).
    bool symmetrize_force = false;
};

ForceEstimate entanglement_force(const PairSystem& system, const ForceOptions& options = {});

}  // namespace gravent
