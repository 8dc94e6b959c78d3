#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gravent {

/// Physical constants in SI units. Both values are plain data so callers can
/// rescale them (e.g. to check that a quantity does not depend on hbar).
struct PhysicalConstants {
    double G = 6.67430e-11;        // m^3 kg^-1 s^-2 (CODATA 2018)
    double hbar = 1.054571817e-34; // J s (CODATA 2018)
};

/// One particle modelled as a one-dimensional oscillator.
struct MassiveBody {
    double mass = 0.0;   // kg
    double radius = 0.0; // m, geometric radius; informational only
    double omega = 0.0;  // rad/s
};

struct PairSystem {
    MassiveBody body1;
    MassiveBody body2;
    double separation = 0.0; // m, centre-to-centre distance d
    PhysicalConstants constants{};

    PairSystem swapped() const { return {body2, body1, separation, constants}; }
};

// hbar == 0 is accepted as the classical limit.
void validate(const PhysicalConstants& constants);
void validate(const MassiveBody& body, std::string_view label);
void validate(const PairSystem& system);

inline constexpr double kDefaultRegimeThreshold = 0.1;

enum class Regime {
    kExpansionValid, // x < threshold
    kMarginal,       // threshold <= x < 1: series converges but "<<" is doubtful
    kDivergent,      // x >= 1: geometric series does not converge
};

struct ValidityAssessment {
    double ratio_x = 0.0; // (dr1 + dr2) / d
    bool in_regime = true;
    double threshold = kDefaultRegimeThreshold;
    Regime regime = Regime::kExpansionValid;
};

ValidityAssessment assess_validity(const PairSystem& system,
                                   double threshold = kDefaultRegimeThreshold);

std::string_view to_string(Regime regime);

/// Collects non-fatal warnings raised while evaluating the model.
class Diagnostics {
public:
    void warn(std::string message) { warnings_.push_back(std::move(message)); }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    bool empty() const noexcept { return warnings_.empty(); }

private:
    std::vector<std::string> warnings_;
};

}  // namespace gravent
