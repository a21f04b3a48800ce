#include "icrates/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace icrates {
namespace {

constexpr double pmf_tol = 1e-12;

double log2_1p(double x) {
    return std::log1p(x) / std::numbers::ln2;
}

bool finite(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_pmf(const std::vector<double>& p, double& sum_out) {
    long double s = 0.0L;
    bool nonneg = true;
    for (double v : p) {
        if (!(v >= 0.0)) nonneg = false;  // also catches NaN
        s += v;
    }
    sum_out = static_cast<double>(s);
    return nonneg && std::fabs(sum_out - 1.0) <= pmf_tol;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// Clamp the tiny negative values cancellation can produce in quantities
// that are nonnegative by theory. Genuinely negative results are kept so
// the invariant tests can catch real bugs.
double clamp_rate(double v) {
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

}  // namespace

std::complex<double> GaussianIcChannel::gain(int rx, int tx) const {
    if (rx == 1) return tx == 1 ? h11 : h12;
    return tx == 1 ? h21 : h22;
}

double DmcIcChannel::transition_at(int x1, int x2, int y1, int y2) const {
    const std::size_t ny1 = static_cast<std::size_t>(output_sizes[0]);
    const std::size_t ny2 = static_cast<std::size_t>(output_sizes[1]);
    const std::size_t nx2 = static_cast<std::size_t>(input_sizes[1]);
    std::size_t idx = ((static_cast<std::size_t>(x1) * nx2 + x2) * ny1 + y1) * ny2 + y2;
    return transition[idx];
}

std::size_t DmcIcChannel::joint_support_size() const {
    // Overflow-safe product of the four alphabet sizes.
    std::size_t n = 1;
    for (int s : {input_sizes[0], input_sizes[1], output_sizes[0], output_sizes[1]}) {
        if (s <= 0) return 0;
        if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(s))
            return std::numeric_limits<std::size_t>::max();
        n *= static_cast<std::size_t>(s);
    }
    return n;
}

std::vector<std::string> validate_channel(const GaussianIcChannel& ch) {
    std::vector<std::string> violations;
    if (!finite(ch.h11)) violations.push_back("h11: gain must be finite (no NaN/Inf components)");
    if (!finite(ch.h12)) violations.push_back("h12: gain must be finite (no NaN/Inf components)");
    if (!finite(ch.h21)) violations.push_back("h21: gain must be finite (no NaN/Inf components)");
    if (!finite(ch.h22)) violations.push_back("h22: gain must be finite (no NaN/Inf components)");
    if (!(ch.power >= 0.0) || !std::isfinite(ch.power))
        violations.push_back("power: must satisfy power >= 0 (got " + fmt(ch.power) + ")");
    return violations;
}

std::vector<std::string> validate_channel(const DmcIcChannel& ch) {
    std::vector<std::string> violations;
    const int nx1 = ch.input_sizes[0], nx2 = ch.input_sizes[1];
    const int ny1 = ch.output_sizes[0], ny2 = ch.output_sizes[1];
    if (nx1 <= 0 || nx2 <= 0)
        violations.push_back("input_sizes: alphabet sizes must be positive");
    if (ny1 <= 0 || ny2 <= 0)
        violations.push_back("output_sizes: alphabet sizes must be positive");
    if (!violations.empty()) return violations;

    if (ch.input1.size() != static_cast<std::size_t>(nx1))
        violations.push_back("input1: expected " + std::to_string(nx1) + " entries, got " +
                             std::to_string(ch.input1.size()));
    if (ch.input2.size() != static_cast<std::size_t>(nx2))
        violations.push_back("input2: expected " + std::to_string(nx2) + " entries, got " +
                             std::to_string(ch.input2.size()));
    const std::size_t want = ch.joint_support_size();
    if (ch.transition.size() != want)
        violations.push_back("transition: expected " + std::to_string(want) + " entries, got " +
                             std::to_string(ch.transition.size()));
    if (!violations.empty()) return violations;

    double sum = 0.0;
    if (!is_pmf(ch.input1, sum))
        violations.push_back("input1: must be a pmf, nonnegative and summing to 1 within 1e-12 (sum=" +
                             fmt(sum) + ")");
    if (!is_pmf(ch.input2, sum))
        violations.push_back("input2: must be a pmf, nonnegative and summing to 1 within 1e-12 (sum=" +
                             fmt(sum) + ")");

    for (int x1 = 0; x1 < nx1; ++x1) {
        for (int x2 = 0; x2 < nx2; ++x2) {
            long double s = 0.0L;
            bool nonneg = true;
            for (int y1 = 0; y1 < ny1; ++y1)
                for (int y2 = 0; y2 < ny2; ++y2) {
                    double v = ch.transition_at(x1, x2, y1, y2);
                    if (!(v >= 0.0)) nonneg = false;
                    s += v;
                }
            const double total = static_cast<double>(s);
            if (!nonneg || std::fabs(total - 1.0) > pmf_tol)
                violations.push_back("transition: slice (x1=" + std::to_string(x1) + ",x2=" +
                                     std::to_string(x2) + ") must sum to 1 within 1e-12 (sum=" +
                                     fmt(total) + ")");
        }
    }
    return violations;
}

std::vector<std::string> validate_channel(const IcChannel& ch) {
    return std::visit([](const auto& c) { return validate_channel(c); }, ch);
}

namespace {

void require_valid(const std::vector<std::string>& violations, const char* what) {
    if (violations.empty()) return;
    std::string msg = std::string(what) + ":";
    for (const auto& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

}  // namespace

RatePrimitives gaussian_primitives(const GaussianIcChannel& ch) {
    require_valid(validate_channel(ch), "invalid Gaussian channel");

    const double p = ch.power;
    RatePrimitives out;
    for (int rx = 1; rx <= 2; ++rx) {
        const double g1 = std::norm(ch.gain(rx, 1));  // |h_{rx,1}|^2
        const double g2 = std::norm(ch.gain(rx, 2));  // |h_{rx,2}|^2
        out.if_rate(rx, 1) = log2_1p(g1 * p);
        out.if_rate(rx, 2) = log2_1p(g2 * p);
        out.ian_rate(rx, 1) = log2_1p(g1 * p / (1.0 + g2 * p));
        out.ian_rate(rx, 2) = log2_1p(g2 * p / (1.0 + g1 * p));
        out.mac_sum(rx) = log2_1p(p * (g1 + g2));
    }
    return out;
}

namespace {

// Entropy in bits of an unnormalized weight table; the table must sum to 1.
double entropy_bits(const std::vector<long double>& table) {
    long double h = 0.0L;
    for (long double v : table) {
        if (v > 0.0L) h -= v * std::log(v);
    }
    return static_cast<double>(h / std::numbers::ln2_v<long double>);
}

}  // namespace

RatePrimitives dmc_primitives(const DmcIcChannel& ch) {
    const std::size_t support = ch.joint_support_size();
    if (support == 0 || support > dmc_joint_support_cap)
        throw AlphabetCapacityError(
            "dmc_primitives: joint support size " + std::to_string(support) +
            " exceeds the documented cap of " + std::to_string(dmc_joint_support_cap) +
            " (= nx1*nx2*ny1*ny2 entries)");
    require_valid(validate_channel(ch), "invalid DMC channel");

    const int nx1 = ch.input_sizes[0], nx2 = ch.input_sizes[1];
    const int ny1 = ch.output_sizes[0], ny2 = ch.output_sizes[1];

    RatePrimitives out;
    for (int rx = 1; rx <= 2; ++rx) {
        const int ny = rx == 1 ? ny1 : ny2;

        // p(x1, x2, y_rx), flattened; inputs are independent by construction.
        std::vector<long double> joint(static_cast<std::size_t>(nx1) * nx2 * ny, 0.0L);
        for (int x1 = 0; x1 < nx1; ++x1) {
            for (int x2 = 0; x2 < nx2; ++x2) {
                const long double w =
                    static_cast<long double>(ch.input1[x1]) * ch.input2[x2];
                if (w == 0.0L) continue;
                for (int y1 = 0; y1 < ny1; ++y1)
                    for (int y2 = 0; y2 < ny2; ++y2) {
                        const int y = rx == 1 ? y1 : y2;
                        joint[(static_cast<std::size_t>(x1) * nx2 + x2) * ny + y] +=
                            w * ch.transition_at(x1, x2, y1, y2);
                    }
            }
        }

        std::vector<long double> p_y(ny, 0.0L);
        std::vector<long double> p_x1y(static_cast<std::size_t>(nx1) * ny, 0.0L);
        std::vector<long double> p_x2y(static_cast<std::size_t>(nx2) * ny, 0.0L);
        for (int x1 = 0; x1 < nx1; ++x1)
            for (int x2 = 0; x2 < nx2; ++x2)
                for (int y = 0; y < ny; ++y) {
                    const long double v =
                        joint[(static_cast<std::size_t>(x1) * nx2 + x2) * ny + y];
                    p_y[y] += v;
                    p_x1y[static_cast<std::size_t>(x1) * ny + y] += v;
                    p_x2y[static_cast<std::size_t>(x2) * ny + y] += v;
                }

        const double h_y = entropy_bits(p_y);
        // H(Y|X) = H(X,Y) - H(X); inputs enter as exact marginals.
        std::vector<long double> px1(ch.input1.begin(), ch.input1.end());
        std::vector<long double> px2(ch.input2.begin(), ch.input2.end());
        std::vector<long double> px1x2;
        px1x2.reserve(static_cast<std::size_t>(nx1) * nx2);
        for (int x1 = 0; x1 < nx1; ++x1)
            for (int x2 = 0; x2 < nx2; ++x2)
                px1x2.push_back(static_cast<long double>(ch.input1[x1]) * ch.input2[x2]);

        const double h_y_given_x1 = entropy_bits(p_x1y) - entropy_bits(px1);
        const double h_y_given_x2 = entropy_bits(p_x2y) - entropy_bits(px2);
        const double h_y_given_both = entropy_bits(joint) - entropy_bits(px1x2);

        out.if_rate(rx, 1) = clamp_rate(h_y_given_x2 - h_y_given_both);
        out.if_rate(rx, 2) = clamp_rate(h_y_given_x1 - h_y_given_both);
        out.ian_rate(rx, 1) = clamp_rate(h_y - h_y_given_x1);
        out.ian_rate(rx, 2) = clamp_rate(h_y - h_y_given_x2);
        out.mac_sum(rx) = clamp_rate(h_y - h_y_given_both);
    }
    return out;
}

RatePrimitives primitives_of(const IcChannel& ch) {
    if (std::holds_alternative<GaussianIcChannel>(ch))
        return gaussian_primitives(std::get<GaussianIcChannel>(ch));
    return dmc_primitives(std::get<DmcIcChannel>(ch));
}

RatePrimitives swap_transmitters(const RatePrimitives& p) {
    RatePrimitives out = p;
    for (int rx = 1; rx <= 2; ++rx) {
        out.if_rate(rx, 1) = p.if_rate(rx, 2);
        out.if_rate(rx, 2) = p.if_rate(rx, 1);
        out.ian_rate(rx, 1) = p.ian_rate(rx, 2);
        out.ian_rate(rx, 2) = p.ian_rate(rx, 1);
    }
    return out;
}

GaussianIcChannel swap_receivers(const GaussianIcChannel& ch) {
    GaussianIcChannel out = ch;
    out.h11 = ch.h21;
    out.h12 = ch.h22;
    out.h21 = ch.h11;
    out.h22 = ch.h12;
    return out;
}

}  // namespace icrates
