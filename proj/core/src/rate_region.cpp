#include "icrates/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icrates {
namespace {

constexpr double membership_tol = 1e-9;
constexpr double inf = std::numeric_limits<double>::infinity();

// Counterclockwise convex hull (monotone chain), collinear points dropped.
// Returns the input point for singleton/degenerate sets.
std::vector<std::array<double, 2>> convex_hull(std::vector<std::array<double, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) {
                              return std::fabs(a[0] - b[0]) <= 1e-12 &&
                                     std::fabs(a[1] - b[1]) <= 1e-12;
                          }),
              pts.end());
    if (pts.size() <= 2) return pts;

    auto cross = [](const std::array<double, 2>& o, const std::array<double, 2>& a,
                    const std::array<double, 2>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };

    std::vector<std::array<double, 2>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.empty()) hull.push_back(pts.front());  // all points collinear-degenerate
    return hull;
}

std::vector<std::array<double, 2>> enumerate_vertices(double r1_limit, double r2_limit,
                                                      double sum_limit) {
    std::vector<std::array<double, 2>> cand{{0.0, 0.0},
                                            {r1_limit, 0.0},
                                            {0.0, r2_limit},
                                            {r1_limit, r2_limit}};
    if (std::isfinite(sum_limit)) {
        cand.push_back({sum_limit, 0.0});
        cand.push_back({0.0, sum_limit});
        cand.push_back({r1_limit, sum_limit - r1_limit});
        cand.push_back({sum_limit - r2_limit, r2_limit});
    }

    std::vector<std::array<double, 2>> feasible;
    for (auto [x, y] : cand) {
        if (x < -membership_tol || y < -membership_tol) continue;
        if (x > r1_limit + membership_tol || y > r2_limit + membership_tol) continue;
        if (x + y > sum_limit + membership_tol) continue;
        feasible.push_back({std::max(0.0, x), std::max(0.0, y)});
    }
    return convex_hull(std::move(feasible));
}

}  // namespace

std::string DecodeConfig::label() const {
    std::string s;
    s += b1 == RxAction::DECODE ? 'o' : 'x';
    s += b2 == RxAction::DECODE ? 'o' : 'x';
    return s;
}

DecodeConfig config_from_label(const std::string& label) {
    for (const DecodeConfig& cfg : all_decode_configs)
        if (cfg.label() == label) return cfg;
    throw std::invalid_argument("unknown decode config label: \"" + label + "\"");
}

std::string to_string(ComponentKind kind) {
    return kind == ComponentKind::IAN ? "IAN" : "SD";
}

ComponentRegion component_region(const RatePrimitives& prims, int receiver,
                                 ComponentKind kind) {
    if (receiver != 1 && receiver != 2)
        throw std::invalid_argument("component_region: receiver must be 1 or 2");

    ComponentRegion out;
    out.receiver = receiver;
    out.kind = kind;
    const int i = receiver, j = receiver == 1 ? 2 : 1;
    const double own_coef1 = i == 1 ? 1.0 : 0.0;
    const double own_coef2 = 1.0 - own_coef1;
    if (kind == ComponentKind::IAN) {
        out.bounds.push_back({own_coef1, own_coef2, prims.ian_rate(i, i)});
    } else {
        out.bounds.push_back({own_coef1, own_coef2, prims.if_rate(i, i)});
        out.bounds.push_back({own_coef2, own_coef1, prims.if_rate(i, j)});
        out.bounds.push_back({1.0, 1.0, prims.mac_sum(i)});
    }
    return out;
}

std::string RegionPiece::label() const {
    return to_string(rx1_kind) + "-" + to_string(rx2_kind);
}

bool RegionPiece::contains(double r1, double r2) const {
    return r1 >= -membership_tol && r2 >= -membership_tol &&
           r1 <= r1_limit + membership_tol && r2 <= r2_limit + membership_tol &&
           r1 + r2 <= sum_limit + membership_tol;
}

RegionPolygon capacity_region(const RatePrimitives& prims) {
    RegionPolygon region;
    const std::array<std::pair<ComponentKind, ComponentKind>, 4> kinds{{
        {ComponentKind::IAN, ComponentKind::IAN},
        {ComponentKind::SD, ComponentKind::IAN},
        {ComponentKind::IAN, ComponentKind::SD},
        {ComponentKind::SD, ComponentKind::SD},
    }};

    for (std::size_t k = 0; k < kinds.size(); ++k) {
        RegionPiece piece;
        piece.rx1_kind = kinds[k].first;
        piece.rx2_kind = kinds[k].second;
        piece.r1_limit = inf;
        piece.r2_limit = inf;
        piece.sum_limit = inf;
        for (int receiver : {1, 2}) {
            const ComponentKind kind = receiver == 1 ? piece.rx1_kind : piece.rx2_kind;
            for (const RateBound& b : component_region(prims, receiver, kind).bounds) {
                if (b.r1_coef == 1.0 && b.r2_coef == 1.0)
                    piece.sum_limit = std::min(piece.sum_limit, b.limit);
                else if (b.r1_coef == 1.0)
                    piece.r1_limit = std::min(piece.r1_limit, b.limit);
                else
                    piece.r2_limit = std::min(piece.r2_limit, b.limit);
            }
        }
        piece.vertices = enumerate_vertices(piece.r1_limit, piece.r2_limit, piece.sum_limit);
        region.pieces[k] = piece;
    }
    return region;
}

bool contains(const RegionPolygon& region, double r1, double r2) {
    if (!std::isfinite(r1) || !std::isfinite(r2))
        throw std::invalid_argument("contains: point must be finite");
    for (const RegionPiece& piece : region.pieces)
        if (piece.contains(r1, r2)) return true;
    return false;
}

WeightedSumResult max_weighted_sum(const RegionPolygon& region, double w1, double w2) {
    if (!(w1 >= 0.0) || !(w2 >= 0.0) || (w1 == 0.0 && w2 == 0.0))
        throw std::invalid_argument("max_weighted_sum: weights must be nonnegative and not both zero");

    WeightedSumResult best;
    best.value = -inf;
    for (const RegionPiece& piece : region.pieces) {
        for (const auto& v : piece.vertices) {
            const double value = w1 * v[0] + w2 * v[1];
            if (value > best.value ||
                (value == best.value && v > best.argmax)) {
                best.value = value;
                best.argmax = v;
            }
        }
    }
    return best;
}

}  // namespace icrates
