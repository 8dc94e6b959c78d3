#pragma once

#include <array>
#include <complex>

#include "gravent/physical_model.hpp"

namespace gravent {

using Complex = std::complex<double>;

/// Basis order used by every vector, matrix and serialization in the library.
enum class BasisIndex : int {
    kPlusPlus = 0,   // |r1+ r2+>
    kPlusMinus = 1,  // |r1+ r2->
    kMinusPlus = 2,  // |r1- r2+>
    kMinusMinus = 3, // |r1- r2->
};

struct TwoQubitState {
    std::array<Complex, 4> amplitudes{};

    Complex& operator[](BasisIndex i) { return amplitudes[static_cast<int>(i)]; }
    const Complex& operator[](BasisIndex i) const { return amplitudes[static_cast<int>(i)]; }

    double norm_squared() const;
    TwoQubitState with_global_phase(double theta) const;

    static TwoQubitState product(const std::array<Complex, 2>& first,
                                 const std::array<Complex, 2>& second);
};

/// (|r+> + |r->)/sqrt(2) for both particles: all four amplitudes 1/2.
TwoQubitState initial_product_state();

/// Determinant of the 2x2 amplitude matrix [[a++, a+-], [a-+, a--]].
/// It vanishes exactly when the state factorizes.
Complex amplitude_determinant(const TwoQubitState& state);

bool is_product_state(const TwoQubitState& state, double tolerance = 1e-12);

enum class OperatorForm {
    // (V_g - dV_g, V_g, V_g, V_g - dV_g): reproduces the phases phi and phi'.
    kPhaseConsistent,
    // (V_g - dV_g, dV_g, dV_g, V_g - dV_g) exactly as published.
    kAsPrinted,
};

/// Diagonal potential operator. Entries are stored as a reference energy plus
/// offsets: the quantum correction is ~x^2 smaller than the classical energy and
/// would otherwise be lost to cancellation.
struct PotentialOperator {
    double reference_energy = 0.0;  // J
    std::array<double, 4> offsets{}; // J
    double hbar = PhysicalConstants{}.hbar;

    std::array<double, 4> diagonal() const;
};

PotentialOperator build_operator(const PairSystem& system,
                                 OperatorForm form = OperatorForm::kPhaseConsistent);

/// Accumulated phases. phi = phi(++) = phi(--), phi_prime = phi(+-) = phi(-+).
/// delta_phi is the non-negative magnitude; the signed relative phase
/// phi_prime - phi equals -delta_phi because the correction is attractive.
struct PhaseSet {
    double phi = 0.0;
    double phi_prime = 0.0;
    double delta_phi = 0.0;

    double signed_delta_phi() const { return -delta_phi; }

    /// Phases with phi = 0 and the given relative magnitude.
    static PhaseSet relative(double delta_phi);
};

PhaseSet accumulated_phase(const PairSystem& system, double tau);

/// Applies diag(e^{-i phi}, e^{-i phi'}, e^{-i phi'}, e^{-i phi}) to psi0.
/// The global phase e^{-i phi} is kept.
TwoQubitState evolve_closed_form(const TwoQubitState& psi0, const PhaseSet& phases);

enum class Propagator {
    kRungeKutta4,
    kExactDiagonal,
};

inline constexpr int kDefaultPropagatorSteps = 1024;

/// Integrates i hbar d/dt psi = V psi over [0, tau]. The reference energy is
/// factored out as an exact global phase; the offsets are integrated with
/// fixed-step RK4 (or exponentiated exactly).
TwoQubitState evolve_numeric(const TwoQubitState& psi0,
                             const PotentialOperator& op,
                             double tau,
                             int steps = kDefaultPropagatorSteps,
                             Propagator method = Propagator::kRungeKutta4,
                             Diagnostics* diagnostics = nullptr);

}  // namespace gravent
