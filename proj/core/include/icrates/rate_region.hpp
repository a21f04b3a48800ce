// Geometry of the achievable-rate region with point-to-point codes.
//
// The region is the union of four intersections of per-receiver component
// regions: each receiver either treats interference as noise (IAN, a single
// rate bound) or decodes it simultaneously (SD, the three MAC bounds). The
// union is kept as four explicit convex pieces; no convex hull is taken.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "icrates/channel.hpp"

namespace icrates {

// What a receiver does with the interfering signal.
enum class RxAction {
    DECODE,  // decode the interference jointly with the desired message
    IAN,     // treat the interference as noise
};

// Per-receiver actions under the (1,2) or (2,1) assignment. The canonical
// short labels are b1 then b2 with 'o' = DECODE, 'x' = IAN: "xx", "ox",
// "xo", "oo".
struct DecodeConfig {
    RxAction b1 = RxAction::IAN;
    RxAction b2 = RxAction::IAN;

    bool operator==(const DecodeConfig&) const = default;
    std::string label() const;
};

inline constexpr DecodeConfig config_xx{RxAction::IAN, RxAction::IAN};
inline constexpr DecodeConfig config_ox{RxAction::DECODE, RxAction::IAN};
inline constexpr DecodeConfig config_xo{RxAction::IAN, RxAction::DECODE};
inline constexpr DecodeConfig config_oo{RxAction::DECODE, RxAction::DECODE};

// All four configs in tie-break priority order: (x,x), (o,x), (x,o), (o,o).
inline constexpr std::array<DecodeConfig, 4> all_decode_configs{config_xx, config_ox,
                                                                config_xo, config_oo};

DecodeConfig config_from_label(const std::string& label);

// A half-plane constraint r1_coef*R1 + r2_coef*R2 <= limit.
struct RateBound {
    double r1_coef = 0.0;
    double r2_coef = 0.0;
    double limit = 0.0;
};

// Component kind of one receiver's region.
enum class ComponentKind { IAN, SD };

std::string to_string(ComponentKind kind);

// One receiver's rate region: a single bound for IAN, the three MAC bounds
// for SD.
struct ComponentRegion {
    int receiver = 1;
    ComponentKind kind = ComponentKind::IAN;
    std::vector<RateBound> bounds;
};

ComponentRegion component_region(const RatePrimitives& prims, int receiver,
                                 ComponentKind kind);

// One convex piece of the union: the intersection of the two component
// regions with the first quadrant, canonicalized to at most three upper
// bounds (duplicate directions merged by min). sum_limit is +infinity when
// neither component contributes a sum bound. Vertices are counterclockwise,
// starting at the lexicographically smallest; degenerate pieces carry one
// or two vertices.
struct RegionPiece {
    ComponentKind rx1_kind = ComponentKind::IAN;
    ComponentKind rx2_kind = ComponentKind::IAN;
    double r1_limit = 0.0;
    double r2_limit = 0.0;
    double sum_limit = 0.0;  // may be +infinity
    std::vector<std::array<double, 2>> vertices;

    std::string label() const;  // e.g. "SD-IAN"
    bool contains(double r1, double r2) const;
};

// The full region: the union of the four pieces, in the fixed order
// IAN-IAN, SD-IAN, IAN-SD, SD-SD.
struct RegionPolygon {
    std::array<RegionPiece, 4> pieces;
};

RegionPolygon capacity_region(const RatePrimitives& prims);

// Membership in the union, with +1e-9 absolute slack on every constraint.
bool contains(const RegionPolygon& region, double r1, double r2);

struct WeightedSumResult {
    double value = 0.0;
    std::array<double, 2> argmax{0.0, 0.0};
};

// Maximum of w1*R1 + w2*R2 over the union; attained at a piece vertex.
// Requires w1, w2 >= 0 and (w1,w2) != (0,0). Ties between vertices are
// broken toward the lexicographically largest (R1,R2).
WeightedSumResult max_weighted_sum(const RegionPolygon& region, double w1, double w2);

}  // namespace icrates
