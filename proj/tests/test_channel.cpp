#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "icrates/channel.hpp"
#include "test_support.hpp"

using namespace icrates;
namespace ts = testsupport;

namespace {

// Analytic binary entropy, the independent check for the BSC rate.
double binary_entropy(double p) {
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

TEST_CASE("gaussian primitives: zero interference") {
    const RatePrimitives p = gaussian_primitives(ts::zero_interference());
    CHECK(p.if_rate(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.ian_rate(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.if_rate(1, 2) == 0.0);
    CHECK(p.ian_rate(1, 2) == 0.0);
    CHECK(p.mac_sum(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.if_rate(2, 2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gaussian primitives: strong symmetric channel") {
    const RatePrimitives p = gaussian_primitives(ts::strong_symmetric());
    CHECK(p.if_rate(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.if_rate(1, 2) == doctest::Approx(ts::log2_10).epsilon(1e-12));
    CHECK(p.ian_rate(1, 2) == doctest::Approx(ts::log2_5_5).epsilon(1e-12));
    CHECK(p.ian_rate(1, 1) == doctest::Approx(ts::log2_1_1).epsilon(1e-12));
    CHECK(p.mac_sum(1) == doctest::Approx(ts::log2_11).epsilon(1e-12));
    // chain rule at receiver 1, both orderings
    CHECK(p.if_rate(1, 1) + p.ian_rate(1, 2) == doctest::Approx(p.mac_sum(1)).epsilon(1e-12));
    CHECK(p.if_rate(1, 2) + p.ian_rate(1, 1) == doctest::Approx(p.mac_sum(1)).epsilon(1e-12));
}

TEST_CASE("gaussian primitives: zero power") {
    const RatePrimitives p = gaussian_primitives(ts::gaussian(1, 3, 3, 1, 0));
    for (int rx : {1, 2}) {
        CHECK(p.mac_sum(rx) == 0.0);
        for (int tx : {1, 2}) {
            CHECK(p.if_rate(rx, tx) == 0.0);
            CHECK(p.ian_rate(rx, tx) == 0.0);
        }
    }
}

TEST_CASE("validate_channel: gaussian") {
    CHECK(validate_channel(ts::strong_symmetric()).empty());

    GaussianIcChannel bad = ts::strong_symmetric();
    bad.power = -1.0;
    const auto violations = validate_channel(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("power") != std::string::npos);

    bad = ts::strong_symmetric();
    bad.h12 = {std::nan(""), 0.0};
    CHECK(validate_channel(bad).size() == 1);
    CHECK(validate_channel(bad)[0].find("h12") != std::string::npos);

    CHECK_THROWS_AS(gaussian_primitives(bad), std::invalid_argument);
}

TEST_CASE("validate_channel: dmc slice sum names the slice") {
    DmcIcChannel ch = ts::orthogonal_binary_links();
    CHECK(validate_channel(ch).empty());

    ch.transition[((0 * 2 + 1) * 2 + 0) * 2 + 1] -= 0.02;  // slice (x1=0,x2=1) sums to 0.98
    const auto violations = validate_channel(ch);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("x1=0") != std::string::npos);
    CHECK(violations[0].find("x2=1") != std::string::npos);
    CHECK_THROWS_AS(dmc_primitives(ch), std::invalid_argument);
}

TEST_CASE("dmc primitives: orthogonal noiseless binary links are exact") {
    const RatePrimitives p = dmc_primitives(ts::orthogonal_binary_links());
    CHECK(p.if_rate(1, 1) == 1.0);
    CHECK(p.ian_rate(1, 1) == 1.0);
    CHECK(p.if_rate(1, 2) == 0.0);
    CHECK(p.ian_rate(1, 2) == 0.0);
    CHECK(p.if_rate(2, 2) == 1.0);
    CHECK(p.mac_sum(1) == 1.0);
}

TEST_CASE("dmc primitives: BSC(0.11) matches the analytic rate") {
    const RatePrimitives p = dmc_primitives(ts::bsc_channel(0.11));
    const double expected = 1.0 - binary_entropy(0.11);
    CHECK(std::fabs(p.ian_rate(1, 1) - expected) <= 1e-12);
    CHECK(std::fabs(p.ian_rate(1, 1) - ts::bsc011_rate) <= 1e-12);
    CHECK(std::fabs(p.if_rate(1, 1) - expected) <= 1e-12);
    // receiver 2 sees nothing
    CHECK(p.mac_sum(2) == 0.0);
}

TEST_CASE("dmc primitives: XOR channel") {
    const RatePrimitives p = dmc_primitives(ts::xor_channel());
    CHECK(std::fabs(p.ian_rate(1, 1) - 0.0) <= 1e-12);
    CHECK(std::fabs(p.if_rate(1, 1) - 1.0) <= 1e-12);
    CHECK(std::fabs(p.mac_sum(1) - 1.0) <= 1e-12);
}

TEST_CASE("dmc primitives: alphabet cap is enforced before anything else") {
    DmcIcChannel ch;
    ch.input_sizes = {4096, 4096};
    ch.output_sizes = {4096, 4096};
    CHECK_THROWS_AS(dmc_primitives(ch), AlphabetCapacityError);
}

TEST_CASE("random gaussian ensemble: chain rule and ordering invariants") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 1000; ++n) {
        const GaussianIcChannel ch = ts::random_gaussian(rng, 2.0, 0.0, 20.0);
        const RatePrimitives p = gaussian_primitives(ch);
        for (int rx : {1, 2}) {
            const double mac = p.mac_sum(rx);
            CHECK(std::fabs(p.if_rate(rx, 1) + p.ian_rate(rx, 2) - mac) <= 1e-9);
            CHECK(std::fabs(p.if_rate(rx, 2) + p.ian_rate(rx, 1) - mac) <= 1e-9);
            CHECK(mac <= p.if_rate(rx, 1) + p.if_rate(rx, 2) + 1e-9);
            for (int tx : {1, 2}) {
                CHECK(p.ian_rate(rx, tx) <= p.if_rate(rx, tx) + 1e-9);
                CHECK(p.ian_rate(rx, tx) >= 0.0);
            }
        }
    }
}

TEST_CASE("random binary dmc ensemble: invariants and range") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 200; ++n) {
        const DmcIcChannel ch = ts::random_binary_dmc(rng);
        const RatePrimitives p = dmc_primitives(ch);
        for (int rx : {1, 2}) {
            const double mac = p.mac_sum(rx);
            CHECK(std::fabs(p.if_rate(rx, 1) + p.ian_rate(rx, 2) - mac) <= 1e-9);
            CHECK(std::fabs(p.if_rate(rx, 2) + p.ian_rate(rx, 1) - mac) <= 1e-9);
            CHECK(mac <= p.if_rate(rx, 1) + p.if_rate(rx, 2) + 1e-9);
            CHECK(mac >= 0.0);
            CHECK(mac <= 1.0 + 1e-9);
            for (int tx : {1, 2}) {
                CHECK(p.ian_rate(rx, tx) <= p.if_rate(rx, tx) + 1e-9);
                CHECK(p.ian_rate(rx, tx) >= 0.0);
                CHECK(p.if_rate(rx, tx) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("gaussian primitives are monotone in power") {
    const std::array<double, 6> grid{0.0, 0.5, 1.0, 2.0, 5.0, 20.0};
    RatePrimitives prev = gaussian_primitives(ts::gaussian(1.2, 0.7, 0.4, 0.9, grid[0]));
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const RatePrimitives cur =
            gaussian_primitives(ts::gaussian(1.2, 0.7, 0.4, 0.9, grid[k]));
        for (int rx : {1, 2}) {
            CHECK(cur.mac_sum(rx) >= prev.mac_sum(rx));
            for (int tx : {1, 2}) {
                CHECK(cur.if_rate(rx, tx) >= prev.if_rate(rx, tx));
                CHECK(cur.ian_rate(rx, tx) >= prev.ian_rate(rx, tx));
            }
        }
        prev = cur;
    }
}

TEST_CASE("transmitter and receiver relabeling") {
    const RatePrimitives p = gaussian_primitives(ts::asymmetric());
    const RatePrimitives s = swap_transmitters(p);
    CHECK(s.if_rate(1, 1) == p.if_rate(1, 2));
    CHECK(s.if_rate(2, 1) == p.if_rate(2, 2));
    CHECK(s.ian_rate(1, 2) == p.ian_rate(1, 1));
    CHECK(s.mac_sum(1) == p.mac_sum(1));

    const GaussianIcChannel mirrored = swap_receivers(ts::asymmetric());
    const RatePrimitives m = gaussian_primitives(mirrored);
    CHECK(m.if_rate(1, 1) == p.if_rate(2, 1));
    CHECK(m.ian_rate(2, 2) == p.ian_rate(1, 2));
    CHECK(m.mac_sum(1) == p.mac_sum(2));
}
