#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ngas/susy.hpp"

using namespace ngas;
using namespace ngas::susy;

TEST_CASE("parameter map lambda = beta^2/2, g = 3 beta") {
    const SusyPair pair = make_pair(2.0);
    CHECK(pair.aho_spec.lambda == 2.0);
    CHECK(pair.aho_spec.g == 6.0);
    CHECK(pair.dwo_spec.lambda == 2.0);
    CHECK(pair.dwo_spec.g == 6.0);
    CHECK(pair.aho_spec.kind == OscillatorKind::SexticAho);
    CHECK(pair.dwo_spec.kind == OscillatorKind::SexticDwo);
    CHECK_THROWS_AS(make_pair(0.0), std::invalid_argument);
}

TEST_CASE("partner-level table at beta = 1 matches the published rows") {
    const auto rows = ispp_table(1.0, 10);
    CHECK(rows[0].e_aho == Catch::Approx(1.95608).epsilon(1e-5));
    CHECK(rows[0].e_dwo_next == Catch::Approx(2.38721).epsilon(1e-5));
    CHECK(rows[0].relative_gap == Catch::Approx(0.22).margin(0.01));
    CHECK(rows[10].e_aho == Catch::Approx(81.0680).epsilon(1e-5));
    CHECK(rows[10].e_dwo_next == Catch::Approx(80.0462).epsilon(1e-5));
    CHECK(rows[10].relative_gap == Catch::Approx(0.0126).margin(0.0004));
}

TEST_CASE("partner gap shrinks with n and the sqrt(beta) scaling holds") {
    const auto base = ispp_table(1.0, 14);
    // The gap dips at n = 1 (2.01%) before rising to 3.14% at n = 2 and then
    // decays monotonically; the published level values show the same shape.
    CHECK(base[1].relative_gap == Catch::Approx(0.0201).margin(3e-4));
    CHECK(base[2].relative_gap == Catch::Approx(0.0314).margin(3e-4));
    CHECK(base[1].relative_gap < base[2].relative_gap);
    for (size_t i = 3; i < base.size(); ++i)
        REQUIRE(base[i].relative_gap < base[i - 1].relative_gap);
    for (size_t i = 8; i < base.size(); ++i)
        REQUIRE(base[i].relative_gap <= 0.02);

    for (double beta : {0.5, 9.0}) {
        const auto scaled = ispp_table(beta, 14);
        for (size_t i = 0; i < base.size(); ++i) {
            REQUIRE(scaled[i].e_aho ==
                    Catch::Approx(std::sqrt(beta) * base[i].e_aho).epsilon(1e-9));
            REQUIRE(scaled[i].e_dwo_next ==
                    Catch::Approx(std::sqrt(beta) * base[i].e_dwo_next).epsilon(1e-9));
        }
    }
}

TEST_CASE("double-well energies stay positive for all levels") {
    for (double beta : {0.1, 1.0, 25.0}) {
        const SusyPair pair = make_pair(beta);
        for (int n = 0; n <= 20; ++n)
            REQUIRE(partner_energy_lo(pair.dwo_spec, n) > 0.0);
    }
}

TEST_CASE("oracle confirms the exact partner statements at beta = 1") {
    const ExactCheckReport report = susy_exact_checks(1.0, 6, 1e-9);
    CHECK(report.dwo_ground >= -1e-6);
    CHECK(report.dwo_ground <= 1e-4);
    CHECK(report.aho_levels[0] == Catch::Approx(1.93548).epsilon(2e-5));
    CHECK(report.dwo_levels[0] == Catch::Approx(1.93548).epsilon(2e-5));
    CHECK(report.max_pair_mismatch <= 1e-6);
}

TEST_CASE("oracle pair energies scale as sqrt(beta)") {
    const ExactCheckReport one = susy_exact_checks(1.0, 2, 1e-9);
    const ExactCheckReport four = susy_exact_checks(4.0, 2, 1e-8);
    for (size_t i = 0; i < one.aho_levels.size(); ++i)
        REQUIRE(four.aho_levels[i] == Catch::Approx(2.0 * one.aho_levels[i]).epsilon(1e-6));
}

TEST_CASE("ground-state wave functions: amplitudes and overlap") {
    SECTION("superpotential state amplitude coefficient 0.68108") {
        CHECK(susy_groundstate_amplitude(1.0) == Catch::Approx(0.68108).margin(5e-6));
        // beta^{1/8} scaling of the amplitude
        CHECK(susy_groundstate_amplitude(16.0) ==
              Catch::Approx(std::pow(16.0, 0.125) * susy_groundstate_amplitude(1.0)).epsilon(1e-12));
    }
    SECTION("gap-frequency Gaussian amplitude coefficient 0.828") {
        const GaussianState state = ngas_groundstate(1.0);
        CHECK(state.amplitude == Catch::Approx(0.828).margin(5e-4));
        // omega(1): [-3 + sqrt(9 + 45)]/2
        CHECK(2.0 * state.width_exponent == Catch::Approx(1.47453).margin(5e-6));
        // unit norm: amplitude^2 sqrt(pi / (2 w)) = 1
        const double norm = state.amplitude * state.amplitude
                            * std::sqrt(std::numbers::pi / (2.0 * state.width_exponent));
        CHECK(norm == Catch::Approx(1.0).epsilon(1e-10));
    }
    SECTION("overlap near 0.984, independent of beta") {
        const GroundstateComparison at_one = groundstate_comparison(1.0);
        CHECK(at_one.overlap == Catch::Approx(0.984).margin(2e-3));
        const GroundstateComparison at_sixteen = groundstate_comparison(16.0);
        CHECK(std::abs(at_one.overlap - at_sixteen.overlap) <= 1e-9);
    }
}
