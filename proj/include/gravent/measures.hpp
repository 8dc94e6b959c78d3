#pragma once

#include <Eigen/Dense>

#include "gravent/dynamics.hpp"

namespace gravent {

inline constexpr double kDensityTolerance = 1e-12;
// Negative eigenvalues down to this floor are treated as round-off and clamped.
inline constexpr double kPositivityFloor = 1e-9;
inline constexpr double kSeparabilityTolerance = 1e-12;
inline constexpr double kPhaseConditionTolerance = 1e-12;

template <int N>
using ComplexMatrix = Eigen::Matrix<Complex, N, N>;

struct DensityDefects {
    double hermiticity = 0.0;    // max |rho - rho^dagger|
    double trace = 0.0;          // |Tr rho - 1|
    double min_eigenvalue = 0.0;
    double purity = 0.0;
};

template <int N>
DensityDefects inspect(const ComplexMatrix<N>& m) {
    DensityDefects d;
    d.hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();
    d.trace = std::abs(m.trace() - Complex{1.0, 0.0});
    const ComplexMatrix<N> herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<N>> solver(herm, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    d.purity = (m * m).trace().real();
    return d;
}

/// Hermitian, unit-trace, positive semidefinite N x N matrix. Construction
/// through checked() enforces the invariants at kDensityTolerance.
template <int N>
class DensityMatrix {
public:
    using Matrix = ComplexMatrix<N>;

    static DensityMatrix checked(const Matrix& entries, double tolerance = kDensityTolerance);

    const Matrix& entries() const noexcept { return entries_; }
    Complex operator()(int row, int col) const { return entries_(row, col); }

private:
    explicit DensityMatrix(const Matrix& entries) : entries_(entries) {}
    Matrix entries_;
};

using DensityMatrix4 = DensityMatrix<4>;
using DensityMatrix2 = DensityMatrix<2>;

DensityMatrix4 density_from_state(const TwoQubitState& psi);

enum class Subsystem { kFirst = 1, kSecond = 2 };

/// Reduced state of the kept subsystem (the other one is traced out).
DensityMatrix2 partial_trace(const DensityMatrix4& rho, Subsystem keep);

template <int N>
double purity(const DensityMatrix<N>& rho) {
    return (rho.entries() * rho.entries()).trace().real();
}

/// 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix2& rho_reduced);

struct Entropy {
    double nats = 0.0;
    double bits = 0.0;
};

/// -Tr(rho ln rho) from the spectral decomposition, with 0 ln 0 = 0.
Entropy von_neumann_entropy(const DensityMatrix2& rho_reduced);

struct EntanglementReport {
    double delta_phi = 0.0;
    double purity_full = 0.0;
    double purity_reduced = 0.0;
    double epsilon = 0.0;
    double entropy_nats = 0.0;
    double entropy_bits = 0.0;
    bool separable_by_measures = false;   // epsilon < kSeparabilityTolerance
    bool paper_condition_violated = false; // delta_phi within tolerance of 2 pi n
    // True when the measures say "separable" although delta_phi != 2 pi n,
    // which happens at odd multiples of pi.
    bool condition_discrepancy = false;
    bool amplitude_rank_one = false;
    ComplexMatrix<4> rho = ComplexMatrix<4>::Zero();
    ComplexMatrix<2> rho1 = ComplexMatrix<2>::Zero();
    ComplexMatrix<2> rho2 = ComplexMatrix<2>::Zero();
};

/// Distance from delta_phi to the nearest multiple of 2 pi.
double distance_to_full_turn(double delta_phi);

/// Measures of an already evolved state; delta_phi is only recorded and used
/// for the 2 pi n condition.
EntanglementReport report_from_state(const TwoQubitState& evolved, double delta_phi);

/// Full pipeline: phases -> closed-form evolution -> rho -> reductions -> measures.
EntanglementReport report(const PairSystem& system, double tau);

}  // namespace gravent
