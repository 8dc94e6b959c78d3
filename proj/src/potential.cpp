#include "gravent/potential.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gravent/errors.hpp"

namespace gravent {

double newtonian_potential(double m1, double m2, double d, const PhysicalConstants& constants) {
    if (!std::isfinite(m1) || !std::isfinite(m2) || !std::isfinite(d))
        throw DomainError("newtonian_potential: non-finite input");
    if (m1 < 0.0 || m2 < 0.0) throw DomainError("newtonian_potential: masses must be non-negative");
    if (d <= 0.0) throw DomainError("newtonian_potential: separation must be positive");
    return -constants.G * m1 * m2 / d;
}

double exact_size_corrected_potential(const PairSystem& system, double dr1, double dr2) {
    validate(system);
    if (!std::isfinite(dr1) || !std::isfinite(dr2))
        throw DomainError("exact_size_corrected_potential: non-finite displacement");
    const double denominator = system.separation + dr1 + dr2;
    if (denominator <= 0.0)
        throw SingularityError("exact_size_corrected_potential: d + dr1 + dr2 must be positive");
    return -system.constants.G * system.body1.mass * system.body2.mass / denominator;
}

std::vector<SeriesTerm> expand_potential(const PairSystem& system, double dr_sum, int max_order) {
    validate(system);
    if (!std::isfinite(dr_sum) || dr_sum < 0.0)
        throw DomainError("expand_potential: dr_sum must be finite and non-negative");
    if (max_order < 0 || max_order > kMaxSeriesOrder)
        throw DomainError("expand_potential: max_order must be in [0, " +
                          std::to_string(kMaxSeriesOrder) + "]");
    const double x = dr_sum / system.separation;
    if (x >= 1.0)
        throw ConvergenceError("expand_potential: x = " + std::to_string(x) +
                               " is outside the convergence radius");

    const double v0 = newtonian_potential(system.body1.mass, system.body2.mass,
                                          system.separation, system.constants);
    std::vector<SeriesTerm> terms;
    terms.reserve(static_cast<std::size_t>(max_order) + 1);
    double value = v0;
    for (int n = 0; n <= max_order; ++n) {
        terms.push_back({n, value, n == 1});
        value *= -x;
    }
    return terms;
}

double partial_sum(std::span<const SeriesTerm> terms) {
    // Smallest terms first.
    double sum = 0.0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += it->value;
    return sum;
}

double zero_point_width(double mass, double omega, const PhysicalConstants& constants) {
    if (!std::isfinite(mass) || !std::isfinite(omega))
        throw DomainError("zero_point_width: non-finite input");
    if (mass <= 0.0 || omega <= 0.0)
        throw DomainError("zero_point_width: mass and omega must be positive");
    return std::sqrt(constants.hbar / (mass * omega));
}

namespace {

// 1/(m1 w1) + 1/(m2 w2) + 2/sqrt(m1 m2 w1 w2)
double inverse_stiffness_sum(const MassiveBody& a, const MassiveBody& b) {
    const double p1 = a.mass * a.omega;
    const double p2 = b.mass * b.omega;
    return 1.0 / p1 + 1.0 / p2 + 2.0 / (std::sqrt(p1) * std::sqrt(p2));
}

}  // namespace

double quantum_correction(const PairSystem& system) {
    validate(system);
    const double d = system.separation;
    const double prefactor =
        system.constants.hbar * system.constants.G * system.body1.mass * system.body2.mass / (d * d * d);
    return -prefactor * inverse_stiffness_sum(system.body1, system.body2);
}

PotentialBreakdown corrected_potential(const PairSystem& system,
                                       const PotentialOptions& options,
                                       Diagnostics* diagnostics) {
    validate(system);
    PotentialBreakdown out;
    out.validity = assess_validity(system, options.regime_threshold);
    out.v0 = newtonian_potential(system.body1.mass, system.body2.mass, system.separation,
                                 system.constants);
    out.delta_v_g = quantum_correction(system);
    out.v_g_total = out.v0 + out.delta_v_g;

    const double x = out.validity.ratio_x;
    out.v_truncated = out.v0 * (1.0 + x * x);

    if (!out.validity.in_regime && diagnostics) {
        diagnostics->warn("expansion ratio x = " + std::to_string(x) + " is not below threshold " +
                          std::to_string(options.regime_threshold) + " (" +
                          std::string(to_string(out.validity.regime)) + ")");
    }
    if (out.validity.regime == Regime::kDivergent) {
        if (diagnostics) diagnostics->warn("series terms omitted: expansion diverges for x >= 1");
    } else {
        out.series_terms = expand_potential(system, x * system.separation, options.series_order);
    }
    return out;
}

ForceEstimate entanglement_force(const PairSystem& system, const ForceOptions& options) {
    validate(system);
    const auto& [m1, r1, w1] = system.body1;
    const auto& [m2, r2, w2] = system.body2;
    const double d = system.separation;
    const double prefactor = system.constants.hbar * system.constants.G * m1 * m2 / (d * d * d);

    const double second_mass = options.symmetrize_force ? m2 : m1;
    const double bracket = 1.0 / (m1 * w1 * w1) + 1.0 / (second_mass * w2 * w2) +
                           (1.0 / std::sqrt(m1 * m2)) *
                               (1.0 / (w1 * std::sqrt(w1 * w2)) + 1.0 / (w2 * std::sqrt(w1 * w2)));

    ForceEstimate out;
    out.as_printed = prefactor * bracket;
    out.gradient_based = 3.0 * std::abs(quantum_correction(system)) / d;
    return out;
}

}  // namespace gravent
