#include "icrates/sum_rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icrates {
namespace {

constexpr double tie_tol = 1e-9;

enum class Tri { LT, TIE, GT };

Tri compare(double lhs, double rhs) {
    if (std::fabs(lhs - rhs) <= tie_tol) return Tri::TIE;
    return lhs > rhs ? Tri::GT : Tri::LT;
}

struct Comparison {
    const char* name;  // "lhs vs rhs" rendered with the primitives' names
    double lhs = 0.0;
    double rhs = 0.0;
};

// One case of a closed-form classification: selected when every comparison
// is strictly ">".
struct CaseSpec {
    Regime regime = Regime::IAN_IAN;
    double value = 0.0;
    Assignment assignment{};
    std::optional<DecodeConfig> config;
    std::vector<Comparison> condition;  // empty = unconditional fallback
};

enum class CaseState { REFUTED, SATISFIED, AMBIGUOUS };

CaseState evaluate_case(const CaseSpec& c, const Comparison** first_tie) {
    bool tie = false;
    for (const Comparison& cmp : c.condition) {
        switch (compare(cmp.lhs, cmp.rhs)) {
            case Tri::LT:
                return CaseState::REFUTED;
            case Tri::TIE:
                if (!tie && first_tie) *first_tie = &cmp;
                tie = true;
                break;
            case Tri::GT:
                break;
        }
    }
    return tie ? CaseState::AMBIGUOUS : CaseState::SATISFIED;
}

// Top-down case selection. A tie in a governing comparison reports the
// regime with the tie resolved in favor of the tying case as primary, and
// the first case selectable once it is refuted as alternate; the value is
// replaced by the oracle value supplied by the caller.
SumRateResult classify_cases(const std::vector<CaseSpec>& cases, double oracle_value) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const Comparison* first_tie = nullptr;
        const CaseState state = evaluate_case(cases[i], &first_tie);
        if (state == CaseState::REFUTED) continue;

        SumRateResult result;
        result.assignment = cases[i].assignment;
        result.config = cases[i].config;
        result.regime = cases[i].regime;
        if (state == CaseState::SATISFIED) {
            result.value = cases[i].value;
            return result;
        }

        // Ambiguous: find the alternate by walking on as if this case failed.
        Regime alternate = cases.back().regime;
        for (std::size_t j = i + 1; j < cases.size(); ++j) {
            if (evaluate_case(cases[j], nullptr) != CaseState::REFUTED) {
                alternate = cases[j].regime;
                break;
            }
        }
        result.value = oracle_value;
        result.tie = BoundaryTie{first_tie->name, cases[i].regime, alternate};
        return result;
    }
    throw std::logic_error("classify_cases: case list must end with a fallback");
}

Regime oo_regime(const RatePrimitives& p) {
    const double if_sum = p.if_rate(1, 1) + p.if_rate(2, 2);
    return if_sum <= std::min(p.mac_sum(1), p.mac_sum(2)) ? Regime::IF_IF
                                                          : Regime::BOTH_DECODE_MINMAC;
}

// Regime label of an oracle winner. Single-transmitter assignments are
// dominated by an earlier candidate in the tie-break order and cannot win.
Regime winner_regime(Assignment a, std::optional<DecodeConfig> config,
                     const RatePrimitives& prims) {
    if (a == Assignment{1, 1}) return Regime::JOINT_MAC_RX1;
    if (a == Assignment{2, 2}) return Regime::JOINT_MAC_RX2;
    const bool crossed = a == Assignment{2, 1};
    if (!crossed && a != Assignment{1, 2})
        throw std::logic_error("winner_regime: unexpected winning assignment");
    const DecodeConfig cfg = *config;
    if (cfg == config_xx) return crossed ? Regime::CROSS_IAN : Regime::IAN_IAN;
    if (cfg == config_ox) return Regime::RX1_DECODES;
    if (cfg == config_xo) return Regime::RX2_DECODES;
    return oo_regime(crossed ? swap_transmitters(prims) : prims);
}

}  // namespace

bool is_valid(Assignment a) {
    const bool in_range = a.a1 >= 0 && a.a1 <= 2 && a.a2 >= 0 && a.a2 <= 2;
    return in_range && !(a.a1 == 0 && a.a2 == 0);
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::IF_IF: return "IF_IF";
        case Regime::IAN_IAN: return "IAN_IAN";
        case Regime::RX1_DECODES: return "RX1_DECODES";
        case Regime::RX2_DECODES: return "RX2_DECODES";
        case Regime::BOTH_DECODE_MINMAC: return "BOTH_DECODE_MINMAC";
        case Regime::CROSS_IAN: return "CROSS_IAN";
        case Regime::JOINT_MAC_RX1: return "JOINT_MAC_RX1";
        case Regime::JOINT_MAC_RX2: return "JOINT_MAC_RX2";
    }
    throw std::logic_error("to_string(Regime): invalid value");
}

Regime regime_from_string(const std::string& name) {
    for (Regime r : {Regime::IF_IF, Regime::IAN_IAN, Regime::RX1_DECODES,
                     Regime::RX2_DECODES, Regime::BOTH_DECODE_MINMAC, Regime::CROSS_IAN,
                     Regime::JOINT_MAC_RX1, Regime::JOINT_MAC_RX2}) {
        if (to_string(r) == name) return r;
    }
    throw std::invalid_argument("unknown regime name: \"" + name + "\"");
}

double sumrate_assignment(const RatePrimitives& prims, Assignment a,
                          std::optional<DecodeConfig> config) {
    if (!is_valid(a))
        throw std::invalid_argument("sumrate_assignment: assignment (" +
                                    std::to_string(a.a1) + "," + std::to_string(a.a2) +
                                    ") is not admissible");
    const bool needs_config = a == Assignment{1, 2} || a == Assignment{2, 1};
    if (needs_config && !config)
        throw std::invalid_argument(
            "sumrate_assignment: (1,2) and (2,1) require a decode config");
    if (!needs_config && config)
        throw std::invalid_argument(
            "sumrate_assignment: decode config only applies to (1,2) and (2,1)");

    if (a == Assignment{1, 0}) return prims.if_rate(1, 1);
    if (a == Assignment{0, 2}) return prims.if_rate(2, 2);
    if (a == Assignment{2, 0}) return prims.if_rate(2, 1);
    if (a == Assignment{0, 1}) return prims.if_rate(1, 2);
    if (a == Assignment{1, 1}) return prims.mac_sum(1);
    if (a == Assignment{2, 2}) return prims.mac_sum(2);

    const RatePrimitives p =
        a == Assignment{2, 1} ? swap_transmitters(prims) : prims;
    const DecodeConfig cfg = *config;
    if (cfg == config_oo)
        return std::min({p.mac_sum(1), p.mac_sum(2), p.if_rate(1, 1) + p.if_rate(2, 2)});
    if (cfg == config_ox)
        return p.if_rate(1, 1) + std::min(p.ian_rate(1, 2), p.ian_rate(2, 2));
    if (cfg == config_xo)
        return p.if_rate(2, 2) + std::min(p.ian_rate(1, 1), p.ian_rate(2, 1));
    return p.ian_rate(1, 1) + p.ian_rate(2, 2);
}

SumRateResult sumrate_12_minmax(const RatePrimitives& prims) {
    SumRateResult best;
    best.assignment = {1, 2};
    bool first = true;
    for (const DecodeConfig& cfg : all_decode_configs) {
        const double value = sumrate_assignment(prims, {1, 2}, cfg);
        if (first || value > best.value) {
            best.value = value;
            best.config = cfg;
            first = false;
        }
    }
    best.regime = winner_regime(best.assignment, best.config, prims);
    return best;
}

SumRateResult classify_12(const RatePrimitives& prims) {
    const double rif11 = prims.if_rate(1, 1), rif12 = prims.if_rate(1, 2);
    const double rif21 = prims.if_rate(2, 1), rif22 = prims.if_rate(2, 2);
    const double rian11 = prims.ian_rate(1, 1), rian12 = prims.ian_rate(1, 2);
    const double rian21 = prims.ian_rate(2, 1), rian22 = prims.ian_rate(2, 2);
    const double mac1 = prims.mac_sum(1), mac2 = prims.mac_sum(2);

    std::vector<CaseSpec> cases;
    cases.push_back({Regime::IF_IF, rif11 + rif22, {1, 2}, config_oo,
                     {{"R12_IAN vs R22_IF", rian12, rif22},
                      {"R21_IAN vs R11_IF", rian21, rif11}}});
    cases.push_back({Regime::IAN_IAN, rian11 + rian22, {1, 2}, config_xx,
                     {{"R22_IAN vs R12_IF", rian22, rif12},
                      {"R11_IAN vs R21_IF", rian11, rif21}}});
    cases.push_back({Regime::RX1_DECODES, rif11 + std::min(rian12, rian22), {1, 2},
                     config_ox,
                     {{"mac_sum1 vs mac_sum2", mac1, mac2},
                      {"R11_IF vs R21_IF", rif11, rif21}}});
    cases.push_back({Regime::RX2_DECODES, rif22 + std::min(rian11, rian21), {1, 2},
                     config_xo,
                     {{"mac_sum2 vs mac_sum1", mac2, mac1},
                      {"R22_IF vs R12_IF", rif22, rif12}}});
    cases.push_back({Regime::BOTH_DECODE_MINMAC, std::min(mac1, mac2), {1, 2}, config_oo, {}});

    return classify_cases(cases, sumrate_12_minmax(prims).value);
}

SumRateResult classify_generalized(const RatePrimitives& prims) {
    const double rif11 = prims.if_rate(1, 1), rif12 = prims.if_rate(1, 2);
    const double rif21 = prims.if_rate(2, 1), rif22 = prims.if_rate(2, 2);
    const double rian11 = prims.ian_rate(1, 1), rian12 = prims.ian_rate(1, 2);
    const double rian21 = prims.ian_rate(2, 1), rian22 = prims.ian_rate(2, 2);
    const double mac1 = prims.mac_sum(1), mac2 = prims.mac_sum(2);

    std::vector<CaseSpec> cases;
    cases.push_back({Regime::IAN_IAN, rian11 + rian22, {1, 2}, config_xx,
                     {{"R22_IAN vs R12_IF", rian22, rif12},
                      {"R11_IAN vs R21_IF", rian11, rif21}}});
    cases.push_back({Regime::CROSS_IAN, rian12 + rian21, {2, 1}, config_xx,
                     {{"R21_IAN vs R11_IF", rian21, rif11},
                      {"R12_IAN vs R22_IF", rian12, rif22}}});
    if (mac1 >= mac2)
        cases.push_back({Regime::JOINT_MAC_RX1, mac1, {1, 1}, std::nullopt, {}});
    else
        cases.push_back({Regime::JOINT_MAC_RX2, mac2, {2, 2}, std::nullopt, {}});

    return classify_cases(cases, oracle_generalized(prims).value);
}

SumRateResult oracle_generalized(const RatePrimitives& prims) {
    static constexpr std::array<Assignment, 8> order{{
        {1, 1}, {2, 2}, {1, 2}, {2, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 1}}};

    SumRateResult best;
    bool first = true;
    for (const Assignment& a : order) {
        const bool with_config = a == Assignment{1, 2} || a == Assignment{2, 1};
        if (with_config) {
            for (const DecodeConfig& cfg : all_decode_configs) {
                const double value = sumrate_assignment(prims, a, cfg);
                if (first || value > best.value) {
                    best.value = value;
                    best.assignment = a;
                    best.config = cfg;
                    first = false;
                }
            }
        } else {
            const double value = sumrate_assignment(prims, a);
            if (first || value > best.value) {
                best.value = value;
                best.assignment = a;
                best.config.reset();
                first = false;
            }
        }
    }
    best.regime = winner_regime(best.assignment, best.config, prims);
    return best;
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "h12") return SweepAxis::H12;
    if (name == "h21") return SweepAxis::H21;
    if (name == "hpair") return SweepAxis::H_PAIR;
    if (name == "power") return SweepAxis::POWER;
    throw std::invalid_argument("unknown sweep axis \"" + name +
                                "\" (expected h12, h21, hpair or power)");
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::H11: return "h11";
        case SweepAxis::H12: return "h12";
        case SweepAxis::H21: return "h21";
        case SweepAxis::H22: return "h22";
        case SweepAxis::H_PAIR: return "hpair";
        case SweepAxis::POWER: return "power";
    }
    throw std::logic_error("to_string(SweepAxis): invalid value");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!std::isfinite(spec.min) || !std::isfinite(spec.max))
        throw std::invalid_argument("sweep: endpoints must be finite");
    if (!(spec.min < spec.max)) throw std::invalid_argument("sweep: min must be < max");
    if (spec.log_spacing && !(spec.min > 0.0))
        throw std::invalid_argument("sweep: log spacing requires min > 0");

    std::vector<double> grid(spec.steps);
    const double lo = spec.log_spacing ? std::log(spec.min) : spec.min;
    const double hi = spec.log_spacing ? std::log(spec.max) : spec.max;
    for (int k = 0; k < spec.steps; ++k) {
        const double t = static_cast<double>(k) / (spec.steps - 1);
        const double v = lo + t * (hi - lo);
        grid[k] = spec.log_spacing ? std::exp(v) : v;
    }
    grid.front() = spec.min;
    grid.back() = spec.max;
    return grid;
}

namespace {

std::complex<double> with_magnitude(std::complex<double> gain, double magnitude) {
    const double a = std::abs(gain);
    if (a == 0.0) return {magnitude, 0.0};
    return gain * (magnitude / a);
}

}  // namespace

GaussianIcChannel apply_sweep_value(const GaussianIcChannel& channel_template,
                                    SweepAxis axis, double value) {
    GaussianIcChannel out = channel_template;
    switch (axis) {
        case SweepAxis::H11: out.h11 = with_magnitude(out.h11, value); break;
        case SweepAxis::H12: out.h12 = with_magnitude(out.h12, value); break;
        case SweepAxis::H21: out.h21 = with_magnitude(out.h21, value); break;
        case SweepAxis::H22: out.h22 = with_magnitude(out.h22, value); break;
        case SweepAxis::H_PAIR:
            out.h12 = with_magnitude(out.h12, value);
            out.h21 = with_magnitude(out.h21, value);
            break;
        case SweepAxis::POWER: out.power = value; break;
    }
    return out;
}

std::vector<ClassifyMapRow> classify_map(const GaussianIcChannel& channel_template,
                                         const SweepSpec& spec, ClassifyMode mode) {
    const std::vector<double> grid = sweep_grid(spec);
    std::vector<ClassifyMapRow> rows;
    rows.reserve(grid.size());
    for (double v : grid) {
        const GaussianIcChannel ch = apply_sweep_value(channel_template, spec.axis, v);
        ClassifyMapRow row;
        switch (spec.axis) {
            case SweepAxis::H12: row.grid_x = v; row.grid_y = std::abs(ch.h21); break;
            case SweepAxis::H21: row.grid_x = std::abs(ch.h12); row.grid_y = v; break;
            default: row.grid_x = v; row.grid_y = v; break;
        }
        try {
            const RatePrimitives prims = gaussian_primitives(ch);
            row.result = mode == ClassifyMode::TRADITIONAL ? classify_12(prims)
                                                           : classify_generalized(prims);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace icrates
