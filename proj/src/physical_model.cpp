#include "gravent/physical_model.hpp"

#include <cmath>
#include <string>

#include "gravent/errors.hpp"
#include "gravent/potential.hpp"

namespace gravent {
namespace {

void require_finite(double value, std::string_view name) {
    if (!std::isfinite(value)) throw DomainError(std::string(name) + " must be finite");
}

}  // namespace

void validate(const PhysicalConstants& constants) {
    require_finite(constants.G, "G");
    require_finite(constants.hbar, "hbar");
    if (constants.G <= 0.0) throw DomainError("G must be positive");
    if (constants.hbar < 0.0) throw DomainError("hbar must be non-negative");
}

void validate(const MassiveBody& body, std::string_view label) {
    const std::string prefix(label);
    require_finite(body.mass, prefix + ".mass");
    require_finite(body.radius, prefix + ".radius");
    require_finite(body.omega, prefix + ".omega");
    if (body.mass <= 0.0) throw DomainError(prefix + ".mass must be positive");
    if (body.radius < 0.0) throw DomainError(prefix + ".radius must be non-negative");
    if (body.omega <= 0.0) throw DomainError(prefix + ".omega must be positive");
}

void validate(const PairSystem& system) {
    validate(system.constants);
    validate(system.body1, "body1");
    validate(system.body2, "body2");
    require_finite(system.separation, "separation");
    if (system.separation <= 0.0) throw DomainError("separation must be positive");
}

ValidityAssessment assess_validity(const PairSystem& system, double threshold) {
    validate(system);
    if (!std::isfinite(threshold) || threshold <= 0.0)
        throw DomainError("regime threshold must be positive and finite");

    const double dr1 = zero_point_width(system.body1.mass, system.body1.omega, system.constants);
    const double dr2 = zero_point_width(system.body2.mass, system.body2.omega, system.constants);

    ValidityAssessment out;
    out.ratio_x = (dr1 + dr2) / system.separation;
    out.threshold = threshold;
    out.in_regime = out.ratio_x < threshold;
    if (out.in_regime)
        out.regime = Regime::kExpansionValid;
    else if (out.ratio_x < 1.0)
        out.regime = Regime::kMarginal;
    else
        out.regime = Regime::kDivergent;
    return out;
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::kExpansionValid: return "valid";
        case Regime::kMarginal: return "marginal";
        case Regime::kDivergent: return "divergent";
    }
    return "unknown";
}

}  // namespace gravent
