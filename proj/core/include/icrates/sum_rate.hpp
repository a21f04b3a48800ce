// Maximum sum rates for every message assignment, closed-form regime
// classification of the traditional and generalized interference channel,
// and brute-force oracles that certify the classifiers.
//
// Message assignment (a1,a2): intended receiver of each transmitter,
// 0 = silent. The traditional interference channel allows (1,0), (0,2),
// (1,2); the generalized channel allows all eight nonzero assignments.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icrates/channel.hpp"
#include "icrates/rate_region.hpp"

namespace icrates {

struct Assignment {
    int a1 = 1;
    int a2 = 2;

    bool operator==(const Assignment&) const = default;
};

// The eight admissible assignments; (0,0) is rejected everywhere.
bool is_valid(Assignment a);

// Named regimes for the classifiers' anonymous cases.
//   IF_IF              both receivers decode interference; interference-free sum
//   IAN_IAN            neither decodes; sum of own IAN rates
//   RX1_DECODES        only receiver 1 decodes interference
//   RX2_DECODES        only receiver 2 decodes interference
//   BOTH_DECODE_MINMAC both decode, min of the two MAC sums
//   CROSS_IAN          crossed assignment (2,1), both treat as noise
//   JOINT_MAC_RX1      joint transmission to receiver 1
//   JOINT_MAC_RX2      joint transmission to receiver 2
enum class Regime {
    IF_IF,
    IAN_IAN,
    RX1_DECODES,
    RX2_DECODES,
    BOTH_DECODE_MINMAC,
    CROSS_IAN,
    JOINT_MAC_RX1,
    JOINT_MAC_RX2,
};

std::string to_string(Regime regime);
Regime regime_from_string(const std::string& name);

// Raised (as a value, not an exception) when a classifier condition sits
// within tolerance of equality: the case split is ambiguous, the value is
// taken from the matching brute-force oracle, and both candidate regimes
// are reported.
struct BoundaryTie {
    std::string comparison;  // the tied comparison, e.g. "R12_IAN vs R22_IF"
    Regime primary;          // regime with the tie resolved in favor of the case
    Regime alternate;        // regime with the tie resolved against it
};

struct SumRateResult {
    double value = 0.0;
    Assignment assignment{};
    std::optional<DecodeConfig> config;  // engaged only for (1,2) and (2,1)
    Regime regime = Regime::IAN_IAN;
    std::optional<BoundaryTie> tie;
};

// Sum rate of one assignment. `config` is required for (1,2) and (2,1) and
// must be absent otherwise; violations throw std::invalid_argument.
// For (1,2):
//   (o,o): min{ mac1, mac2, R11_IF + R22_IF }
//   (o,x): R11_IF + min{ R12_IAN, R22_IAN }
//   (x,o): R22_IF + min{ R11_IAN, R21_IAN }
//   (x,x): R11_IAN + R22_IAN
// (2,1) is the transmitter-relabeled mirror of (1,2).
double sumrate_assignment(const RatePrimitives& prims, Assignment a,
                          std::optional<DecodeConfig> config = std::nullopt);

// Max over the four decode configs of the (1,2) assignment. Config
// tie-break priority: (x,x) > (o,x) > (x,o) > (o,o).
SumRateResult sumrate_12_minmax(const RatePrimitives& prims);

// Closed-form classification of the (1,2) maximum sum rate, cases evaluated
// top-down:
//   (a) R12_IAN > R22_IF and R21_IAN > R11_IF          -> IF_IF
//   (b) R12_IF < R22_IAN and R21_IF < R11_IAN          -> IAN_IAN
//   (c) mac1 > mac2 and R11_IF > R21_IF                -> RX1_DECODES
//   (d) mac1 < mac2 and R12_IF < R22_IF                -> RX2_DECODES
//   otherwise                                          -> BOTH_DECODE_MINMAC
// Any governing comparison within 1e-9 of equality yields a BoundaryTie and
// the value is taken from sumrate_12_minmax.
SumRateResult classify_12(const RatePrimitives& prims);

// Closed-form classification of the generalized channel:
//   R12_IF < R22_IAN and R21_IF < R11_IAN              -> IAN_IAN
//   R11_IF < R21_IAN and R22_IF < R12_IAN              -> CROSS_IAN
//   otherwise                                          -> max MAC sum
// Tolerance handling as in classify_12, deferring to oracle_generalized.
SumRateResult classify_generalized(const RatePrimitives& prims);

// Exhaustive maximum over all eight assignments (all four configs for (1,2)
// and (2,1)). Assignment tie-break order: (1,1), (2,2), (1,2), (2,1),
// (1,0), (0,2), (2,0), (0,1); config priority as in sumrate_12_minmax.
SumRateResult oracle_generalized(const RatePrimitives& prims);

enum class ClassifyMode { TRADITIONAL, GENERALIZED };

// Sweep axis of a regime map. H_PAIR locks |h12| = |h21| to the grid value.
enum class SweepAxis { H11, H12, H21, H22, H_PAIR, POWER };

SweepAxis sweep_axis_from_string(const std::string& name);
std::string to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::H_PAIR;
    double min = 0.0;
    double max = 0.0;
    int steps = 0;
    bool log_spacing = false;
};

// The grid points of a sweep. Requires steps >= 2, min < max, finite
// endpoints, and min > 0 for log spacing; violations throw
// std::invalid_argument.
std::vector<double> sweep_grid(const SweepSpec& spec);

struct ClassifyMapRow {
    double grid_x = 0.0;  // |h12| after applying the grid point (or the swept value)
    double grid_y = 0.0;  // |h21| after applying the grid point (or the swept value)
    SumRateResult result;
    std::string error;  // nonempty when classification failed at this point

    bool tie() const { return result.tie.has_value(); }
};

// Apply one grid value to the template channel: gain magnitudes are set to
// the grid value with the template's phase preserved (real-axis gain when
// the template entry is zero); POWER replaces the power.
GaussianIcChannel apply_sweep_value(const GaussianIcChannel& channel_template,
                                    SweepAxis axis, double value);

// Classify over a sweep grid. Per-point failures are captured in the row's
// error field; the sweep itself never aborts. Row order follows the grid.
std::vector<ClassifyMapRow> classify_map(const GaussianIcChannel& channel_template,
                                         const SweepSpec& spec, ClassifyMode mode);

}  // namespace icrates
