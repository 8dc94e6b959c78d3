#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gravent/errors.hpp"
#include "gravent/potential.hpp"
#include "oracle.hpp"

using namespace gravent;

TEST_CASE("newtonian_potential") {
    const PhysicalConstants c;
    CHECK(newtonian_potential(1.0, 1.0, 1.0, c) == -6.67430e-11);
    CHECK(newtonian_potential(0.0, 5.0, 2.0, c) == 0.0);
    CHECK(newtonian_potential(5.972e24, 1.989e30, 1.496e11, c) ==
          doctest::Approx(oracle::frozen::kEarthSunV0).epsilon(1e-14));
    CHECK_THROWS_AS(newtonian_potential(1.0, 1.0, 0.0, c), DomainError);
    CHECK_THROWS_AS(newtonian_potential(-1.0, 1.0, 1.0, c), DomainError);
}

TEST_CASE("exact_size_corrected_potential") {
    const auto sys = oracle::reference_system();
    const double v0 = newtonian_potential(1e-14, 1e-14, 1e-6, sys.constants);
    CHECK(exact_size_corrected_potential(sys, 0.0, 0.0) == v0);
    CHECK(exact_size_corrected_potential(sys, 0.4e-6, 0.6e-6) == doctest::Approx(v0 / 2).epsilon(1e-15));
    CHECK(exact_size_corrected_potential(sys, 3.25e-13, 3.25e-13) ==
          doctest::Approx(oracle::frozen::kExactCorrected).epsilon(1e-14));
    CHECK_THROWS_AS(exact_size_corrected_potential(sys, -1e-6, 0.0), SingularityError);
    CHECK_THROWS_AS(exact_size_corrected_potential(sys, -2e-6, 0.0), SingularityError);
}

TEST_CASE("expand_potential terms and flags") {
    const auto sys = oracle::reference_system();
    const double v0 = newtonian_potential(1e-14, 1e-14, 1e-6, sys.constants);

    SUBCASE("x = 0") {
        const auto terms = expand_potential(sys, 0.0, 4);
        REQUIRE(terms.size() == 5);
        CHECK(terms[0].value == v0);
        for (std::size_t n = 1; n < terms.size(); ++n) CHECK(terms[n].value == 0.0);
    }
    SUBCASE("sign pattern 1 - x + x^2") {
        const double x = 0.01;
        const auto terms = expand_potential(sys, x * sys.separation, 3);
        REQUIRE(terms.size() == 4);
        CHECK(terms[0].order == 0);
        CHECK(terms[1].value / terms[0].value == doctest::Approx(-x).epsilon(1e-14));
        CHECK(terms[2].value / terms[0].value == doctest::Approx(x * x).epsilon(1e-14));
        CHECK(terms[3].value / terms[0].value == doctest::Approx(-x * x * x).epsilon(1e-14));
        CHECK(terms[1].absorbable);
        CHECK_FALSE(terms[0].absorbable);
        CHECK_FALSE(terms[2].absorbable);
    }
    SUBCASE("partial sums converge to the exact potential") {
        const double x = 0.01;
        const double exact = exact_size_corrected_potential(sys, x * sys.separation, 0.0);
        const auto terms = expand_potential(sys, x * sys.separation, 3);
        double previous = INFINITY;
        for (std::size_t k = 1; k <= terms.size(); ++k) {
            const double residual = std::abs(partial_sum(std::span(terms).first(k)) - exact);
            const double expected = std::abs(exact) * std::pow(x, static_cast<double>(k));
            CHECK(residual == doctest::Approx(expected).epsilon(1e-6));
            CHECK(residual < previous);
            previous = residual;
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(expand_potential(sys, sys.separation, 2), ConvergenceError);
        CHECK_THROWS_AS(expand_potential(sys, 0.0, -1), DomainError);
        CHECK_THROWS_AS(expand_potential(sys, 0.0, kMaxSeriesOrder + 1), DomainError);
        CHECK_NOTHROW(expand_potential(sys, 0.0, kMaxSeriesOrder));
    }
}

TEST_CASE("zero_point_width") {
    const PhysicalConstants c;
    CHECK(zero_point_width(c.hbar, 1.0, c) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(zero_point_width(1e-14, 1e5, c) == doctest::Approx(oracle::frozen::kZeroPointWidth).epsilon(1e-14));
    CHECK(zero_point_width(4e-14, 1e5, c) ==
          doctest::Approx(zero_point_width(1e-14, 1e5, c) / 2).epsilon(1e-15));
    CHECK_THROWS_AS(zero_point_width(0.0, 1.0, c), DomainError);
    CHECK_THROWS_AS(zero_point_width(1.0, -1.0, c), DomainError);
}

TEST_CASE("quantum_correction") {
    const auto ref = oracle::reference_system();
    CHECK(quantum_correction(ref) == doctest::Approx(oracle::frozen::kDeltaVg).epsilon(1e-13));

    auto stiff = ref;
    stiff.body1.omega = stiff.body2.omega = 1e200;
    CHECK(std::abs(quantum_correction(stiff)) < 1e-200);

    oracle::SystemSampler sample(21);
    for (int i = 0; i < 100; ++i) {
        const auto sys = sample();
        const double dv = quantum_correction(sys);
        CHECK(dv <= 0.0);
        CHECK(dv == doctest::Approx(static_cast<double>(oracle::correction_from_widths(sys))).epsilon(1e-12));
    }
}

TEST_CASE("quantum_correction monotonicity and symmetry") {
    oracle::SystemSampler sample(22);
    for (int i = 0; i < 50; ++i) {
        const auto sys = sample();
        const double dv = std::abs(quantum_correction(sys));
        auto farther = sys;
        farther.separation *= 1.01;
        CHECK(std::abs(quantum_correction(farther)) < dv);
        auto stiffer = sys;
        stiffer.body1.omega *= 1.01;
        CHECK(std::abs(quantum_correction(stiffer)) < dv);
        stiffer = sys;
        stiffer.body2.omega *= 1.01;
        CHECK(std::abs(quantum_correction(stiffer)) < dv);

        const auto swapped = sys.swapped();
        CHECK(quantum_correction(swapped) == doctest::Approx(quantum_correction(sys)).epsilon(1e-15));
        CHECK(newtonian_potential(sys.body2.mass, sys.body1.mass, sys.separation, sys.constants) ==
              doctest::Approx(newtonian_potential(sys.body1.mass, sys.body2.mass, sys.separation,
                                                  sys.constants)).epsilon(1e-15));
        CHECK(entanglement_force(swapped).gradient_based ==
              doctest::Approx(entanglement_force(sys).gradient_based).epsilon(1e-15));
    }
}

TEST_CASE("corrected_potential breakdown") {
    const auto ref = oracle::reference_system();
    Diagnostics diag;
    const auto b = corrected_potential(ref, {}, &diag);
    CHECK(diag.empty());
    CHECK(b.v0 == doctest::Approx(oracle::frozen::kV0).epsilon(1e-15));
    CHECK(b.v0 < 0.0);
    CHECK(b.delta_v_g == quantum_correction(ref));
    CHECK(b.v_g_total == b.v0 + b.delta_v_g);
    REQUIRE(b.series_terms.size() == kDefaultSeriesOrder + 1);
    CHECK(b.series_terms[0].value == b.v0);
    CHECK(std::abs(b.delta_v_g / b.v0) ==
          doctest::Approx(b.validity.ratio_x * b.validity.ratio_x).epsilon(1e-12));
    CHECK(b.v_truncated == doctest::Approx(b.v_g_total).epsilon(1e-15));

    auto classical = ref;
    classical.constants.hbar = 0.0;
    const auto c = corrected_potential(classical);
    CHECK(c.v_g_total == c.v0);
    CHECK(c.delta_v_g == 0.0);

    const auto deep = corrected_potential(ref, {kMaxSeriesOrder, 0.1});
    CHECK(deep.series_terms.size() == kMaxSeriesOrder + 1);
}

TEST_CASE("corrected_potential warns out of regime") {
    const double hbar = PhysicalConstants{}.hbar;
    PairSystem sys{{1.0, 0.0, hbar}, {1.0, 0.0, hbar}, 4.0, {}}; // x = 0.5
    Diagnostics diag;
    const auto b = corrected_potential(sys, {}, &diag);
    CHECK_FALSE(b.validity.in_regime);
    CHECK(diag.warnings().size() == 1);
    CHECK(b.series_terms.size() == 3);

    sys.separation = 1.0; // x = 2
    Diagnostics diverging;
    const auto d = corrected_potential(sys, {}, &diverging);
    CHECK(d.series_terms.empty());
    CHECK(diverging.warnings().size() == 2);
}

TEST_CASE("entanglement_force") {
    const auto ref = oracle::reference_system();
    const auto f = entanglement_force(ref);
    CHECK(f.gradient_based == doctest::Approx(oracle::frozen::kGradientForce).epsilon(1e-13));
    CHECK(f.as_printed == doctest::Approx(oracle::frozen::kPrintedForce).epsilon(1e-13));
    CHECK(f.as_printed_unit == "J*s");

    // Symmetric bodies: bracket is 4/(m w^2).
    const double m = 1e-14, w = 1e5;
    const double prefactor = ref.constants.hbar * ref.constants.G * m * m / 1e-18;
    CHECK(f.as_printed / prefactor == doctest::Approx(4.0 / (m * w * w)).epsilon(1e-14));

    auto stiff = ref;
    stiff.body1.omega = stiff.body2.omega = 1e200;
    const auto fs = entanglement_force(stiff);
    CHECK(fs.as_printed < 1e-300);
    CHECK(fs.gradient_based < 1e-200);
}

TEST_CASE("printed force keeps the m1 in its second term unless symmetrized") {
    PairSystem sys{{2.0, 0.0, 3.0}, {5.0, 0.0, 7.0}, 1.0, {1.0, 1.0}};
    const double tail = (1.0 / std::sqrt(10.0)) * (1.0 / std::sqrt(27.0 * 7.0) + 1.0 / std::sqrt(3.0 * 343.0));
    const double printed = 10.0 * (1.0 / (2.0 * 9.0) + 1.0 / (2.0 * 49.0) + tail);
    const double symmetric = 10.0 * (1.0 / (2.0 * 9.0) + 1.0 / (5.0 * 49.0) + tail);
    CHECK(entanglement_force(sys).as_printed == doctest::Approx(printed).epsilon(1e-14));
    CHECK(entanglement_force(sys, {true}).as_printed == doctest::Approx(symmetric).epsilon(1e-14));
}

TEST_CASE("gradient force matches a central difference of the correction") {
    oracle::SystemSampler sample(23);
    for (int i = 0; i < 50; ++i) {
        const auto sys = sample();
        const double d = sys.separation;
        const double h = 1e-6 * d;
        auto plus = sys, minus = sys;
        plus.separation = d + h;
        minus.separation = d - h;
        const double fd = -(quantum_correction(plus) - quantum_correction(minus)) / (2 * h);
        CHECK(entanglement_force(sys).gradient_based == doctest::Approx(std::abs(fd)).epsilon(1e-6));
    }
}
