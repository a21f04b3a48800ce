// ic-rates: command-line front end for two-user interference-network rate
// analysis. Subcommands: region, sumrate, classify, sweep, protocol.
//
// Exit codes: 0 success, 1 audit/property failure, 2 usage/input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "icrates/channel.hpp"
#include "icrates/json_io.hpp"
#include "icrates/protocol.hpp"
#include "icrates/rate_region.hpp"
#include "icrates/sum_rate.hpp"

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t default_seed = 1729;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string channel = "-";
    std::string format = "json";
    std::string out = "-";
    std::string sweep;
    int algorithm = 1;
    std::string mode = "traditional";
    std::optional<std::uint64_t> seed;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open channel file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

icrates::IcChannel load_channel(const Options& opt) {
    return icrates::channel_from_json(read_input(opt.channel));
}

icrates::ClassifyMode mode_of(const Options& opt) {
    if (opt.mode == "traditional") return icrates::ClassifyMode::TRADITIONAL;
    if (opt.mode == "generalized") return icrates::ClassifyMode::GENERALIZED;
    throw UsageError("--mode must be traditional or generalized");
}

icrates::SweepSpec parse_sweep(const std::string& text) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ':')) parts.push_back(token);
    if (parts.size() < 4 || parts.size() > 5)
        throw UsageError("--sweep must look like <var>:<min>:<max>:<steps>[:log]");

    icrates::SweepSpec spec;
    spec.axis = icrates::sweep_axis_from_string(parts[0]);
    try {
        std::size_t pos = 0;
        spec.min = std::stod(parts[1], &pos);
        if (pos != parts[1].size()) throw std::invalid_argument("");
        spec.max = std::stod(parts[2], &pos);
        if (pos != parts[2].size()) throw std::invalid_argument("");
        spec.steps = std::stoi(parts[3], &pos);
        if (pos != parts[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw UsageError("--sweep min/max/steps must be numeric");
    }
    if (parts.size() == 5) {
        if (parts[4] == "log")
            spec.log_spacing = true;
        else if (parts[4] != "linear")
            throw UsageError("--sweep spacing must be \"log\" or \"linear\"");
    }
    return spec;
}

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed) return *opt.seed;
    if (const char* env = std::getenv("IC_RATES_SEED")) {
        try {
            std::size_t pos = 0;
            const unsigned long long v = std::stoull(env, &pos);
            if (pos != std::string(env).size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw UsageError("IC_RATES_SEED must be an unsigned integer");
        }
    }
    return default_seed;
}

int cmd_region(const Options& opt) {
    const icrates::RatePrimitives prims = icrates::primitives_of(load_channel(opt));
    const icrates::RegionPolygon region = icrates::capacity_region(prims);
    write_output(opt.out, opt.format == "csv" ? icrates::region_to_csv(region)
                                              : icrates::region_to_json(region) + "\n");
    return 0;
}

struct Candidate {
    icrates::Assignment assignment;
    std::optional<icrates::DecodeConfig> config;
    double value = 0.0;
};

std::vector<Candidate> collect_candidates(const icrates::RatePrimitives& prims,
                                          icrates::ClassifyMode mode) {
    std::vector<icrates::Assignment> order;
    if (mode == icrates::ClassifyMode::TRADITIONAL)
        order = {{1, 0}, {0, 2}, {1, 2}};
    else
        order = {{1, 1}, {2, 2}, {1, 2}, {2, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 1}};

    std::vector<Candidate> out;
    for (const icrates::Assignment& a : order) {
        if (a == icrates::Assignment{1, 2} || a == icrates::Assignment{2, 1}) {
            for (const icrates::DecodeConfig& cfg : icrates::all_decode_configs)
                out.push_back({a, cfg, icrates::sumrate_assignment(prims, a, cfg)});
        } else {
            out.push_back({a, std::nullopt, icrates::sumrate_assignment(prims, a)});
        }
    }
    return out;
}

int cmd_sumrate(const Options& opt) {
    const icrates::RatePrimitives prims = icrates::primitives_of(load_channel(opt));
    const icrates::ClassifyMode mode = mode_of(opt);
    const icrates::SumRateResult best = mode == icrates::ClassifyMode::TRADITIONAL
                                            ? icrates::sumrate_12_minmax(prims)
                                            : icrates::oracle_generalized(prims);
    const std::vector<Candidate> candidates = collect_candidates(prims, mode);

    auto is_best = [&best](const Candidate& c) {
        return c.assignment == best.assignment && c.config == best.config;
    };

    if (opt.format == "csv") {
        std::ostringstream os;
        os << "a1,a2,config,value,best\n";
        for (const Candidate& c : candidates)
            os << c.assignment.a1 << ',' << c.assignment.a2 << ','
               << (c.config ? c.config->label() : "none") << ','
               << icrates::format_csv_number(c.value) << ',' << (is_best(c) ? 1 : 0) << '\n';
        write_output(opt.out, os.str());
        return 0;
    }

    ordered_json candidates_json = ordered_json::array();
    for (const Candidate& c : candidates)
        candidates_json.push_back(
            ordered_json{{"assignment", {c.assignment.a1, c.assignment.a2}},
                         {"config", c.config ? c.config->label() : "none"},
                         {"value", c.value}});
    ordered_json doc;
    doc["mode"] = opt.mode;
    doc["best"] = ordered_json::parse(icrates::sum_rate_result_to_json(best));
    doc["candidates"] = std::move(candidates_json);
    write_output(opt.out, doc.dump() + "\n");
    return 0;
}

int cmd_classify(const Options& opt) {
    const icrates::RatePrimitives prims = icrates::primitives_of(load_channel(opt));
    const icrates::SumRateResult result = mode_of(opt) == icrates::ClassifyMode::TRADITIONAL
                                              ? icrates::classify_12(prims)
                                              : icrates::classify_generalized(prims);
    if (opt.format == "csv") {
        std::ostringstream os;
        os << "regime,value,a1,a2,config,tie_flag\n"
           << icrates::to_string(result.regime) << ','
           << icrates::format_csv_number(result.value) << ',' << result.assignment.a1 << ','
           << result.assignment.a2 << ','
           << (result.config ? result.config->label() : "none") << ','
           << (result.tie ? 1 : 0) << '\n';
        write_output(opt.out, os.str());
        return 0;
    }
    write_output(opt.out, icrates::sum_rate_result_to_json(result) + "\n");
    return 0;
}

int cmd_sweep(const Options& opt) {
    if (opt.sweep.empty()) throw UsageError("sweep requires --sweep <var>:<min>:<max>:<steps>[:log]");
    const icrates::IcChannel channel = load_channel(opt);
    const auto* gaussian = std::get_if<icrates::GaussianIcChannel>(&channel);
    if (!gaussian) throw UsageError("sweep requires a gaussian channel template");
    const icrates::SweepSpec spec = parse_sweep(opt.sweep);

    std::vector<icrates::ClassifyMapRow> rows;
    try {
        rows = icrates::classify_map(*gaussian, spec, mode_of(opt));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_output(opt.out, opt.format == "csv" ? icrates::classify_map_to_csv(rows)
                                              : icrates::classify_map_to_json(rows) + "\n");
    return 0;
}

int cmd_protocol(const Options& opt) {
    if (opt.format != "json")
        throw UsageError("protocol emits JSON lines; --format csv is not supported");
    if (opt.algorithm != 1 && opt.algorithm != 2)
        throw UsageError("--algorithm must be 1 or 2");
    const icrates::IcChannel channel = load_channel(opt);
    const icrates::RatePrimitives prims = icrates::primitives_of(channel);
    const icrates::ProtocolOutcome outcome = opt.algorithm == 1
                                                 ? icrates::run_algorithm1(channel)
                                                 : icrates::run_algorithm2(channel);
    const icrates::AuditReport report = icrates::audit(outcome, prims, opt.algorithm);

    std::string text = icrates::trace_to_jsonl(outcome.trace);
    ordered_json summary = ordered_json::parse(icrates::audit_report_to_json(report));
    summary["r1"] = outcome.r1;
    summary["r2"] = outcome.r2;
    summary["b_d"] = outcome.decision_bit;
    text += summary.dump() + "\n";
    write_output(opt.out, text);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Achievable-rate analysis for two-user interference networks "
                 "with point-to-point codes"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--channel", opt.channel,
                        "channel JSON document, a file path or - for stdin")
            ->required();
        if (with_format)
            cmd->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"csv", "json"}))
                ->capture_default_str();
        cmd->add_option("--out", opt.out, "output path or - for stdout")
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed,
                        "seed for randomized property workflows (reserved; the "
                        "subcommands here are deterministic); IC_RATES_SEED is "
                        "honored when absent, default 1729");
    };

    CLI::App* region = app.add_subcommand("region", "emit the achievable-rate region pieces");
    add_common(region);

    CLI::App* sumrate = app.add_subcommand(
        "sumrate", "per-assignment sum rates and the maximum for one channel");
    add_common(sumrate);
    sumrate->add_option("--mode", opt.mode, "traditional or generalized assignment set")
        ->check(CLI::IsMember({"traditional", "generalized"}))
        ->capture_default_str();

    CLI::App* classify = app.add_subcommand(
        "classify", "closed-form regime classification for one channel");
    add_common(classify);
    classify->add_option("--mode", opt.mode, "traditional or generalized assignment set")
        ->check(CLI::IsMember({"traditional", "generalized"}))
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand("sweep", "regime map over a parameter sweep");
    add_common(sweep);
    sweep->add_option("--sweep", opt.sweep, "<var>:<min>:<max>:<steps>[:log], "
                      "var one of h12, h21, hpair, power")
        ->required();
    sweep->add_option("--mode", opt.mode, "traditional or generalized assignment set")
        ->check(CLI::IsMember({"traditional", "generalized"}))
        ->capture_default_str();

    CLI::App* protocol = app.add_subcommand(
        "protocol", "run a distributed rate-determination algorithm and audit it");
    add_common(protocol, false);
    protocol->add_option("--format", opt.format, "output format (json only)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    protocol->add_option("--algorithm", opt.algorithm, "1 (traditional) or 2 (generalized)")
        ->check(CLI::IsMember({"1", "2"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        resolve_seed(opt);  // validated even though the subcommands are deterministic
        if (region->parsed()) return cmd_region(opt);
        if (sumrate->parsed()) return cmd_sumrate(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (protocol->parsed()) return cmd_protocol(opt);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const icrates::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
