// Channel models for the two-user interference network and the
// mutual-information rate primitives everything downstream consumes.
//
// Two channel types are supported:
//   - GaussianIcChannel: SISO complex-Gaussian interference channel with
//     unit-variance noise and equal per-transmitter power P. All rate
//     primitives have closed forms.
//   - DmcIcChannel: finite-alphabet discrete memoryless channel
//     p(y1,y2|x1,x2) with fixed, independent input pmfs. Rate primitives
//     are computed by exhaustive summation over the joint support.
//
// All rates are in bits per channel use (base-2 logarithms).

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace icrates {

// SISO Gaussian interference channel,
//   y1 = h11 x1 + h12 x2 + z1
//   y2 = h21 x1 + h22 x2 + z2,
// with z_i ~ CN(0,1) and transmit power P at each transmitter. Noise
// variance is not a parameter: a different variance is expressed by
// rescaling the gains.
struct GaussianIcChannel {
    std::complex<double> h11{};  // gain from transmitter 1 to receiver 1
    std::complex<double> h12{};  // gain from transmitter 2 to receiver 1
    std::complex<double> h21{};  // gain from transmitter 1 to receiver 2
    std::complex<double> h22{};  // gain from transmitter 2 to receiver 2
    double power = 0.0;          // linear transmit power P, same at both transmitters

    // Gain from transmitter `tx` to receiver `rx`, indices in {1,2}.
    std::complex<double> gain(int rx, int tx) const;
};

// Discrete memoryless interference channel p(y1,y2|x1,x2) with fixed
// product input distribution p(x1)p(x2). The transition pmf is stored
// flat, row-major over (x1, x2, y1, y2).
struct DmcIcChannel {
    std::array<int, 2> input_sizes{0, 0};   // |X1|, |X2|
    std::array<int, 2> output_sizes{0, 0};  // |Y1|, |Y2|
    std::vector<double> transition;         // p(y1,y2|x1,x2), size nx1*nx2*ny1*ny2
    std::vector<double> input1;             // p(x1), size nx1
    std::vector<double> input2;             // p(x2), size nx2

    double transition_at(int x1, int x2, int y1, int y2) const;
    std::size_t joint_support_size() const;
};

using IcChannel = std::variant<GaussianIcChannel, DmcIcChannel>;

// The twelve scalar information quantities of the two-user network:
//   if_rate(i,j)  = I(Xj; Yi | X_other)  -- "interference free": max decodable
//                   rate of message j at receiver i with the other message known
//   ian_rate(i,j) = I(Xj; Yi)            -- "interference as noise"
//   mac_sum(i)    = I(X1, X2; Yi)        -- receiver i's MAC sum bound
// Chain rule ties them together: mac_sum(i) = if_rate(i,j) + ian_rate(i,other).
struct RatePrimitives {
    std::array<std::array<double, 2>, 2> interference_free{};   // [rx-1][tx-1]
    std::array<std::array<double, 2>, 2> interference_as_noise{};
    std::array<double, 2> mac{};                                 // [rx-1]

    double if_rate(int rx, int tx) const { return interference_free[rx - 1][tx - 1]; }
    double ian_rate(int rx, int tx) const { return interference_as_noise[rx - 1][tx - 1]; }
    double mac_sum(int rx) const { return mac[rx - 1]; }

    double& if_rate(int rx, int tx) { return interference_free[rx - 1][tx - 1]; }
    double& ian_rate(int rx, int tx) { return interference_as_noise[rx - 1][tx - 1]; }
    double& mac_sum(int rx) { return mac[rx - 1]; }
};

// Largest joint support size nx1*nx2*ny1*ny2 accepted by dmc_primitives.
// Direct summation over 2^24 doubles is well under a second; anything
// bigger deserves a smarter algorithm than this module provides.
inline constexpr std::size_t dmc_joint_support_cap = std::size_t{1} << 24;

// Thrown by dmc_primitives when the declared alphabets exceed the cap.
class AlphabetCapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

// Validate type invariants. Returns an empty list iff the channel is
// admissible; each entry names the offending field and the failed
// predicate. Total functions, never throw.
std::vector<std::string> validate_channel(const GaussianIcChannel& ch);
std::vector<std::string> validate_channel(const DmcIcChannel& ch);
std::vector<std::string> validate_channel(const IcChannel& ch);

// Closed-form rate primitives of the Gaussian channel:
//   if_rate(i,j)  = log2(1 + |h_ij|^2 P)
//   ian_rate(i,j) = log2(1 + |h_ij|^2 P / (1 + |h_i,other|^2 P))
//   mac_sum(i)    = log2(1 + P (|h_i1|^2 + |h_i2|^2))
// Throws std::invalid_argument when validate_channel(ch) is nonempty.
RatePrimitives gaussian_primitives(const GaussianIcChannel& ch);

// Rate primitives of a DMC by marginalization and entropy sums, with
// 0*log(0) := 0 and extended-precision accumulation. Throws
// AlphabetCapacityError when joint_support_size() > dmc_joint_support_cap
// and std::invalid_argument on any other invariant violation.
RatePrimitives dmc_primitives(const DmcIcChannel& ch);

// Dispatch on the variant.
RatePrimitives primitives_of(const IcChannel& ch);

// Relabel the transmitters (tx1 <-> tx2). Maps the (2,1) message
// assignment onto the (1,2) machinery.
RatePrimitives swap_transmitters(const RatePrimitives& p);

// Relabel the receivers (rx1 <-> rx2). Maps the mirrored protocol
// placement (advanced receiver at side 2) onto the canonical one.
GaussianIcChannel swap_receivers(const GaussianIcChannel& ch);

}  // namespace icrates
