// Shared fixtures for the test and acceptance suites: the named example
// channels, frozen expected values, random channel generators, and the
// independent membership oracle used to cross-check the region geometry.
//
// The frozen constants were evaluated with 40-digit arithmetic and rounded
// to the nearest double; tests assert against them rather than recomputing
// through the library path they certify.

#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "icrates/channel.hpp"
#include "icrates/rate_region.hpp"
#include "icrates/sum_rate.hpp"

namespace testsupport {

// -- frozen expected values ------------------------------------------------

constexpr double log2_10 = 3.321928094887362;
constexpr double log2_11 = 3.4594316186372973;
constexpr double log2_5_5 = 2.4594316186372973;       // strong-channel cross IAN rate
constexpr double two_log2_5_5 = 4.918863237274595;    // strong-channel crossed-pair sum
constexpr double log2_1_1 = 0.1375035237499349;       // strong-channel own IAN rate
constexpr double weak_own_ian = 3.334984247712809;    // log2(111/11)
constexpr double weak_sum = 6.669968495425618;        // 2*log2(111/11)
constexpr double weak_cross_ian = 0.013056152825446359;  // log2(111/110)
constexpr double log2_11_1 = 3.4724877714627436;      // weak-channel MAC sum
constexpr double log2_6 = 2.584962500721156;          // asymmetric-channel max sum
constexpr double log2_5 = 2.321928094887362;
constexpr double log2_3 = 1.584962500721156;
constexpr double log2_1_2 = 0.26303440583379384;
constexpr double log2_1_125 = 0.16992500144231237;
constexpr double log2_2_25 = 1.1699250014423124;
constexpr double log2_1_8 = 0.84799690655495;
constexpr double log2_1_25 = 0.32192809488736235;
constexpr double bsc011_rate = 0.5000840418354721;    // 1 - H2(0.11)
constexpr double strong_alg1_sum = 1.137503523749935; // 1 + log2(1.1)

// -- example channels --------------------------------------------------------

inline icrates::GaussianIcChannel gaussian(double h11, double h12, double h21,
                                           double h22, double power) {
    return {{h11, 0.0}, {h12, 0.0}, {h21, 0.0}, {h22, 0.0}, power};
}

inline icrates::GaussianIcChannel strong_symmetric() { return gaussian(1, 3, 3, 1, 1); }
inline icrates::GaussianIcChannel weak_symmetric() { return gaussian(1, 0.1, 0.1, 1, 10); }
inline icrates::GaussianIcChannel zero_interference() { return gaussian(1, 0, 0, 1, 3); }
inline icrates::GaussianIcChannel asymmetric() { return gaussian(2, 1, 0.5, 1, 1); }
inline icrates::GaussianIcChannel cross_dominant() { return gaussian(0.1, 1, 1, 0.1, 10); }

// Binary symmetric channel X1 -> Y1 with flip probability `flip`; Y2 is a
// constant (independent of both inputs); uniform inputs.
inline icrates::DmcIcChannel bsc_channel(double flip) {
    icrates::DmcIcChannel ch;
    ch.input_sizes = {2, 2};
    ch.output_sizes = {2, 1};
    ch.input1 = {0.5, 0.5};
    ch.input2 = {0.5, 0.5};
    ch.transition.assign(2 * 2 * 2 * 1, 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int y1 = 0; y1 < 2; ++y1)
                ch.transition[((x1 * 2 + x2) * 2 + y1) * 1 + 0] =
                    y1 == x1 ? 1.0 - flip : flip;
    return ch;
}

// Two orthogonal noiseless binary links: Y1 = X1, Y2 = X2, uniform inputs.
inline icrates::DmcIcChannel orthogonal_binary_links() {
    icrates::DmcIcChannel ch;
    ch.input_sizes = {2, 2};
    ch.output_sizes = {2, 2};
    ch.input1 = {0.5, 0.5};
    ch.input2 = {0.5, 0.5};
    ch.transition.assign(16, 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            ch.transition[((x1 * 2 + x2) * 2 + x1) * 2 + x2] = 1.0;
    return ch;
}

// Y1 = X1 xor X2 (noiseless), Y2 = X2, uniform inputs.
inline icrates::DmcIcChannel xor_channel() {
    icrates::DmcIcChannel ch;
    ch.input_sizes = {2, 2};
    ch.output_sizes = {2, 2};
    ch.input1 = {0.5, 0.5};
    ch.input2 = {0.5, 0.5};
    ch.transition.assign(16, 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            ch.transition[((x1 * 2 + x2) * 2 + (x1 ^ x2)) * 2 + x2] = 1.0;
    return ch;
}

// -- random ensembles --------------------------------------------------------

inline icrates::GaussianIcChannel random_gaussian(std::mt19937_64& rng,
                                                  double gain_span = 3.0,
                                                  double p_min = 0.1,
                                                  double p_max = 100.0) {
    std::uniform_real_distribution<double> g(-gain_span, gain_span);
    std::uniform_real_distribution<double> p(p_min, p_max);
    icrates::GaussianIcChannel ch;
    ch.h11 = {g(rng), g(rng)};
    ch.h12 = {g(rng), g(rng)};
    ch.h21 = {g(rng), g(rng)};
    ch.h22 = {g(rng), g(rng)};
    ch.power = p(rng);
    return ch;
}

// True when any comparison governing the two classifications sits within
// `tol` of equality; ensembles resample such channels.
inline bool near_condition_boundary(const icrates::RatePrimitives& p, double tol) {
    const std::array<std::array<double, 2>, 7> pairs{{
        {p.ian_rate(1, 2), p.if_rate(2, 2)},
        {p.ian_rate(2, 1), p.if_rate(1, 1)},
        {p.ian_rate(2, 2), p.if_rate(1, 2)},
        {p.ian_rate(1, 1), p.if_rate(2, 1)},
        {p.mac_sum(1), p.mac_sum(2)},
        {p.if_rate(1, 1), p.if_rate(2, 1)},
        {p.if_rate(2, 2), p.if_rate(1, 2)},
    }};
    for (const auto& [lhs, rhs] : pairs)
        if (std::fabs(lhs - rhs) <= tol) return true;
    return false;
}

inline icrates::GaussianIcChannel random_gaussian_off_boundary(std::mt19937_64& rng,
                                                               double tol = 1e-6) {
    for (;;) {
        const icrates::GaussianIcChannel ch = random_gaussian(rng);
        if (!near_condition_boundary(icrates::gaussian_primitives(ch), tol)) return ch;
    }
}

// Random binary-alphabet DMC: transition slices drawn from normalized
// exponentials, input pmfs likewise.
inline icrates::DmcIcChannel random_binary_dmc(std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    auto pmf = [&](int n) {
        std::vector<double> v(n);
        double total = 0.0;
        for (double& x : v) {
            x = e(rng) + 1e-6;
            total += x;
        }
        for (double& x : v) x /= total;
        return v;
    };

    icrates::DmcIcChannel ch;
    ch.input_sizes = {2, 2};
    ch.output_sizes = {2, 2};
    ch.input1 = pmf(2);
    ch.input2 = pmf(2);
    ch.transition.resize(16);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) {
            const std::vector<double> slice = pmf(4);
            for (int k = 0; k < 4; ++k)
                ch.transition[(x1 * 2 + x2) * 4 + k] = slice[k];
        }
    return ch;
}

// Equal-MAC construction: both receivers see the same total gain power, so
// mac_sum(1) == mac_sum(2) exactly. Channels in the crossed-IAN regime
// (where the two classifications legitimately differ) are resampled.
inline icrates::GaussianIcChannel random_equal_mac(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> g(0.05, 3.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> p(0.1, 100.0);
    for (;;) {
        const double a = g(rng), b = g(rng);
        const double total = a * a + b * b;
        const double split = u(rng) * total;
        icrates::GaussianIcChannel ch;
        ch.h11 = {a, 0.0};
        ch.h12 = {b, 0.0};
        ch.h21 = {std::sqrt(split), 0.0};
        ch.h22 = {std::sqrt(total - split), 0.0};
        ch.power = p(rng);
        const icrates::RatePrimitives prims = icrates::gaussian_primitives(ch);
        const bool crossed_regime = prims.ian_rate(2, 1) > prims.if_rate(1, 1) - 1e-6 &&
                                    prims.ian_rate(1, 2) > prims.if_rate(2, 2) - 1e-6;
        if (!crossed_regime) return ch;
    }
}

// Direct evaluation of the union-of-intersections membership, written
// against the primitives rather than the region geometry. The test-side
// oracle for `contains`.
inline bool membership_oracle(const icrates::RatePrimitives& p, double r1, double r2) {
    const double tol = 1e-9;
    auto ian = [&](int i) {
        return (i == 1 ? r1 : r2) <= p.ian_rate(i, i) + tol;
    };
    auto sd = [&](int i) {
        const double own = i == 1 ? r1 : r2;
        const double other = i == 1 ? r2 : r1;
        return own <= p.if_rate(i, i) + tol &&
               other <= p.if_rate(i, i == 1 ? 2 : 1) + tol &&
               r1 + r2 <= p.mac_sum(i) + tol;
    };
    if (r1 < -tol || r2 < -tol) return false;
    return (ian(1) && ian(2)) || (sd(1) && ian(2)) || (ian(1) && sd(2)) || (sd(1) && sd(2));
}

}  // namespace testsupport
