#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlrsa/wifi.hpp"

using namespace mlrsa;

TEST_SUITE("wifi") {

TEST_CASE("inhibition_distance: power law in the threshold ratio") {
    RadioParams r;  // P_t = 1, I_th = 1e-8, alpha = 4
    CHECK(inhibition_distance(r) == doctest::Approx(100.0).epsilon(1e-12));
    RadioParams unit;
    unit.sensing_threshold = 1.0;
    for (double a : {2.0, 3.5, 6.0}) {
        unit.path_loss_exponent = a;
        CHECK(inhibition_distance(unit) == doctest::Approx(1.0).epsilon(1e-13));
    }
    RadioParams strict = r;
    strict.sensing_threshold = 1e-10;
    CHECK(inhibition_distance(strict) > inhibition_distance(r));
    RadioParams loud = r;
    loud.transmit_power = 16.0;
    CHECK(inhibition_distance(loud) == doctest::Approx(200.0).epsilon(1e-12));

    RadioParams bad = r;
    bad.transmit_power = 0;
    CHECK_THROWS_AS(inhibition_distance(bad), std::invalid_argument);
    bad = r;
    bad.sensing_threshold = -1;
    CHECK_THROWS_AS(inhibition_distance(bad), std::invalid_argument);
    bad = r;
    bad.path_loss_exponent = 0;
    CHECK_THROWS_AS(inhibition_distance(bad), std::invalid_argument);
}

TEST_CASE("bands and constants") {
    CHECK(band_channels(Band::ghz_2_4) == 11);
    CHECK(band_channels(Band::ghz_5) == 23);
    CHECK(kDefaultTargetFraction == 0.7);
    CHECK(path_loss_exponent_typical(2.0));
    CHECK(path_loss_exponent_typical(4.0));
    CHECK(path_loss_exponent_typical(6.0));
    CHECK(!path_loss_exponent_typical(1.9));
    CHECK(!path_loss_exponent_typical(6.1));
}

TEST_CASE("coverage_at: limits and monotonicity") {
    CHECK(coverage_at(0.0, 1.0, 11) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(coverage_at(1.0, 0.0, 11) == doctest::Approx(0.0).epsilon(1e-12));
    double prev = 0;
    for (double d : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double c = coverage_at(d, 1.0, 11);
        CHECK(c > prev);
        CHECK(c < 0.5474);
        prev = c;
    }
    // More channels split the same chances: per-channel coverage drops.
    CHECK(coverage_at(2.0, 1.0, 23) < coverage_at(2.0, 1.0, 11));
    // Only d^2 * lambda matters.
    CHECK(coverage_at(2.0, 1.0, 11) ==
          doctest::Approx(coverage_at(1.0, 4.0, 11)).epsilon(1e-12));
    CHECK_THROWS_AS(coverage_at(-1.0, 1.0, 11), std::invalid_argument);
    CHECK_THROWS_AS(coverage_at(1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("plan_dinh: frozen design points for both bands") {
    PlanQuery q;
    q.ap_density = 1.0;
    q.num_channels = 11;
    q.target_fraction = 0.7;
    double d11 = plan_dinh(q);
    CHECK(d11 * d11 == doctest::Approx(5.683808446).epsilon(1e-6));
    q.num_channels = 23;
    double d23 = plan_dinh(q);
    CHECK(d23 * d23 == doctest::Approx(11.222844601).epsilon(1e-6));
    CHECK(d23 > d11);  // more channels need a wider quiet zone
}

TEST_CASE("plan_dinh: self-consistency at the target") {
    for (int K : {1, 11, 23}) {
        PlanQuery q;
        q.ap_density = 3.0;
        q.num_channels = K;
        q.target_fraction = 0.7;
        double d = plan_dinh(q);
        CHECK(std::fabs(coverage_at(d, q.ap_density, K) - 0.7 * 0.5474) <= 1e-6);
    }
}

TEST_CASE("plan_dinh: exact density scaling") {
    PlanQuery q;
    q.num_channels = 11;
    q.ap_density = 1.0;
    double d1 = plan_dinh(q);
    q.ap_density = 2.0;
    double d2 = plan_dinh(q);
    // The solve happens in u = d^2 lambda, so doubling the density divides
    // the planned distance by exactly sqrt(2).
    CHECK(std::fabs(d1 / d2 - std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("plan_dinh: rejects unattainable targets") {
    PlanQuery q;
    q.num_channels = 11;
    q.target_fraction = 0.0;
    CHECK_THROWS_AS(plan_dinh(q), std::invalid_argument);
    q.target_fraction = 1.0;
    CHECK_THROWS_AS(plan_dinh(q), std::invalid_argument);
    q.target_fraction = -0.2;
    CHECK_THROWS_AS(plan_dinh(q), std::invalid_argument);
    q.target_fraction = 0.9999;  // above the curve's reachable plateau
    CHECK_THROWS_AS(plan_dinh(q), std::runtime_error);
    try {
        plan_dinh(q);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("attainable") != std::string::npos);
    }
}

TEST_CASE("plan_curve: shape and invariants") {
    std::vector<double> lambdas = {0.5, 1.0, 2.0, 4.0, 8.0};
    auto curve = plan_curve(lambdas, 11, 0.7);
    REQUIRE(curve.size() == lambdas.size());
    double u_ref = curve[0].ap_density * curve[0].d_inh * curve[0].d_inh;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].ap_density == lambdas[i]);
        if (i > 0) CHECK(curve[i].d_inh < curve[i - 1].d_inh);
        double u = curve[i].ap_density * curve[i].d_inh * curve[i].d_inh;
        CHECK(u == doctest::Approx(u_ref).epsilon(1e-12));
    }
    CHECK_THROWS_AS(plan_curve({2.0, 1.0}, 11, 0.7), std::invalid_argument);
}

}  // TEST_SUITE
