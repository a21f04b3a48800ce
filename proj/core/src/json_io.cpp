#include "icrates/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace icrates {
namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("document is not valid JSON");
    return doc;
}

const json& field(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing required key \"") + key + "\"");
    return *it;
}

double number(const json& doc, const char* key) {
    const json& v = field(doc, key);
    if (!v.is_number()) throw ParseError(std::string("key \"") + key + "\" must be a number");
    return v.get<double>();
}

std::vector<double> number_array(const json& v, const char* key) {
    if (!v.is_array()) throw ParseError(std::string("key \"") + key + "\" must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number())
            throw ParseError(std::string("key \"") + key + "\" must contain numbers only");
        out.push_back(e.get<double>());
    }
    return out;
}

std::complex<double> complex_from(const json& v, const char* key) {
    const std::vector<double> pair = number_array(v, key);
    if (pair.size() != 2)
        throw ParseError(std::string("key \"") + key + "\" entries must be [re,im] pairs");
    return {pair[0], pair[1]};
}

json complex_to(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

GaussianIcChannel gaussian_from(const json& doc) {
    const json& h = field(doc, "h");
    if (!h.is_array() || h.size() != 4)
        throw ParseError("key \"h\" must be an array of four [re,im] pairs "
                         "(h11, h12, h21, h22)");
    GaussianIcChannel ch;
    ch.h11 = complex_from(h[0], "h");
    ch.h12 = complex_from(h[1], "h");
    ch.h21 = complex_from(h[2], "h");
    ch.h22 = complex_from(h[3], "h");
    ch.power = number(doc, "power");
    return ch;
}

DmcIcChannel dmc_from(const json& doc) {
    DmcIcChannel ch;
    const std::vector<double> nx = number_array(field(doc, "nx"), "nx");
    const std::vector<double> ny = number_array(field(doc, "ny"), "ny");
    if (nx.size() != 2 || ny.size() != 2)
        throw ParseError("keys \"nx\" and \"ny\" must each hold two alphabet sizes");
    for (double v : nx)
        if (v < 1 || v != std::floor(v)) throw ParseError("key \"nx\" entries must be positive integers");
    for (double v : ny)
        if (v < 1 || v != std::floor(v)) throw ParseError("key \"ny\" entries must be positive integers");
    ch.input_sizes = {static_cast<int>(nx[0]), static_cast<int>(nx[1])};
    ch.output_sizes = {static_cast<int>(ny[0]), static_cast<int>(ny[1])};
    ch.transition = number_array(field(doc, "p"), "p");
    ch.input1 = number_array(field(doc, "px1"), "px1");
    ch.input2 = number_array(field(doc, "px2"), "px2");
    return ch;
}

void require_valid_or_parse_error(const IcChannel& ch) {
    const std::vector<std::string> violations = validate_channel(ch);
    if (violations.empty()) return;
    std::string msg = "channel violates invariants:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ParseError(msg);
}

}  // namespace

std::string format_csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

IcChannel channel_from_json(const std::string& text) {
    const json doc = parse(text);
    const json& type = field(doc, "type");
    if (!type.is_string()) throw ParseError("key \"type\" must be a string");

    IcChannel ch;
    if (type == "gaussian")
        ch = gaussian_from(doc);
    else if (type == "dmc")
        ch = dmc_from(doc);
    else
        throw ParseError("key \"type\" must be \"gaussian\" or \"dmc\"");
    require_valid_or_parse_error(ch);
    return ch;
}

std::string channel_to_json(const IcChannel& ch) {
    json doc;
    if (const auto* g = std::get_if<GaussianIcChannel>(&ch)) {
        doc["type"] = "gaussian";
        doc["h"] = json::array(
            {complex_to(g->h11), complex_to(g->h12), complex_to(g->h21), complex_to(g->h22)});
        doc["power"] = g->power;
    } else {
        const auto& d = std::get<DmcIcChannel>(ch);
        doc["type"] = "dmc";
        doc["nx"] = json::array({d.input_sizes[0], d.input_sizes[1]});
        doc["ny"] = json::array({d.output_sizes[0], d.output_sizes[1]});
        doc["p"] = d.transition;
        doc["px1"] = d.input1;
        doc["px2"] = d.input2;
    }
    return doc.dump();
}

std::string region_to_json(const RegionPolygon& region) {
    json pieces = json::array();
    for (const RegionPiece& piece : region.pieces) {
        json vertices = json::array();
        for (const auto& v : piece.vertices) vertices.push_back(json::array({v[0], v[1]}));
        pieces.push_back(json{{"config", piece.label()}, {"vertices", std::move(vertices)}});
    }
    return json{{"pieces", std::move(pieces)}}.dump();
}

std::string region_to_csv(const RegionPolygon& region) {
    std::ostringstream os;
    os << "piece,vertex,R1,R2\n";
    for (const RegionPiece& piece : region.pieces) {
        for (std::size_t i = 0; i < piece.vertices.size(); ++i)
            os << piece.label() << ',' << i << ',' << format_csv_number(piece.vertices[i][0])
               << ',' << format_csv_number(piece.vertices[i][1]) << '\n';
    }
    return os.str();
}

RegionPolygon region_from_json(const std::string& text) {
    const json doc = parse(text);
    const json& pieces = field(doc, "pieces");
    if (!pieces.is_array() || pieces.size() != 4)
        throw ParseError("key \"pieces\" must be an array of the four region pieces");

    RegionPolygon region;
    for (std::size_t k = 0; k < 4; ++k) {
        const json& p = pieces[k];
        const json& config = field(p, "config");
        if (!config.is_string()) throw ParseError("key \"config\" must be a string");
        const std::string label = config.get<std::string>();
        const auto dash = label.find('-');
        if (dash == std::string::npos)
            throw ParseError("key \"config\" must look like \"SD-IAN\"");
        auto kind = [](const std::string& s) {
            if (s == "IAN") return ComponentKind::IAN;
            if (s == "SD") return ComponentKind::SD;
            throw ParseError("key \"config\" component must be \"IAN\" or \"SD\"");
        };
        RegionPiece piece;
        piece.rx1_kind = kind(label.substr(0, dash));
        piece.rx2_kind = kind(label.substr(dash + 1));

        const json& vertices = field(p, "vertices");
        if (!vertices.is_array()) throw ParseError("key \"vertices\" must be an array");
        piece.r1_limit = 0.0;
        piece.r2_limit = 0.0;
        piece.sum_limit = 0.0;
        for (const auto& v : vertices) {
            const std::vector<double> pt = number_array(v, "vertices");
            if (pt.size() != 2) throw ParseError("key \"vertices\" entries must be [R1,R2] pairs");
            piece.vertices.push_back({pt[0], pt[1]});
            piece.r1_limit = std::max(piece.r1_limit, pt[0]);
            piece.r2_limit = std::max(piece.r2_limit, pt[1]);
            piece.sum_limit = std::max(piece.sum_limit, pt[0] + pt[1]);
        }
        region.pieces[k] = std::move(piece);
    }
    return region;
}

namespace {

std::string config_label(const std::optional<DecodeConfig>& config) {
    return config ? config->label() : "none";
}

json result_to_json_obj(const SumRateResult& result) {
    json doc;
    doc["value"] = result.value;
    doc["assignment"] = json::array({result.assignment.a1, result.assignment.a2});
    doc["config"] = config_label(result.config);
    doc["regime"] = to_string(result.regime);
    if (result.tie) {
        doc["boundary_tie"] = json{{"comparison", result.tie->comparison},
                                   {"primary", to_string(result.tie->primary)},
                                   {"alternate", to_string(result.tie->alternate)}};
    }
    return doc;
}

SumRateResult result_from_json_obj(const json& doc) {
    SumRateResult result;
    result.value = number(doc, "value");
    const std::vector<double> a = number_array(field(doc, "assignment"), "assignment");
    if (a.size() != 2) throw ParseError("key \"assignment\" must be [a1,a2]");
    result.assignment = {static_cast<int>(a[0]), static_cast<int>(a[1])};
    const json& config = field(doc, "config");
    if (!config.is_string()) throw ParseError("key \"config\" must be a string");
    if (config != "none") result.config = config_from_label(config.get<std::string>());
    const json& regime = field(doc, "regime");
    if (!regime.is_string()) throw ParseError("key \"regime\" must be a string");
    result.regime = regime_from_string(regime.get<std::string>());
    if (doc.contains("boundary_tie")) {
        const json& tie = doc["boundary_tie"];
        result.tie = BoundaryTie{field(tie, "comparison").get<std::string>(),
                                 regime_from_string(field(tie, "primary").get<std::string>()),
                                 regime_from_string(field(tie, "alternate").get<std::string>())};
    }
    return result;
}

}  // namespace

std::string sum_rate_result_to_json(const SumRateResult& result) {
    return result_to_json_obj(result).dump();
}

SumRateResult sum_rate_result_from_json(const std::string& text) {
    return result_from_json_obj(parse(text));
}

std::string classify_map_to_csv(const std::vector<ClassifyMapRow>& rows) {
    std::ostringstream os;
    os << "grid_x,grid_y,regime,value,tie_flag\n";
    for (const ClassifyMapRow& row : rows) {
        os << format_csv_number(row.grid_x) << ',' << format_csv_number(row.grid_y) << ',';
        if (!row.error.empty())
            os << "ERROR,nan,0\n";
        else
            os << to_string(row.result.regime) << ',' << format_csv_number(row.result.value)
               << ',' << (row.tie() ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string classify_map_to_json(const std::vector<ClassifyMapRow>& rows) {
    json arr = json::array();
    for (const ClassifyMapRow& row : rows) {
        json r;
        r["grid_x"] = row.grid_x;
        r["grid_y"] = row.grid_y;
        if (!row.error.empty()) {
            r["regime"] = nullptr;
            r["value"] = nullptr;
            r["tie_flag"] = false;
            r["error"] = row.error;
        } else {
            r["regime"] = to_string(row.result.regime);
            r["value"] = row.result.value;
            r["tie_flag"] = row.tie();
            r["result"] = result_to_json_obj(row.result);
        }
        arr.push_back(std::move(r));
    }
    return json{{"rows", std::move(arr)}}.dump();
}

std::vector<ClassifyMapRow> classify_map_from_json(const std::string& text) {
    const json doc = parse(text);
    const json& arr = field(doc, "rows");
    if (!arr.is_array()) throw ParseError("key \"rows\" must be an array");
    std::vector<ClassifyMapRow> rows;
    for (const auto& r : arr) {
        ClassifyMapRow row;
        row.grid_x = number(r, "grid_x");
        row.grid_y = number(r, "grid_y");
        if (r.contains("error") && r["error"].is_string())
            row.error = r["error"].get<std::string>();
        else
            row.result = result_from_json_obj(field(r, "result"));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

json message_to_json(int seq, const ProtocolMessage& m) {
    json doc;
    doc["seq"] = seq;
    doc["from"] = to_string(m.from);
    doc["to"] = to_string(m.to);
    if (const auto* cap = std::get_if<CapabilityBroadcast>(&m.payload)) {
        doc["type"] = "capability";
        doc["value"] = to_string(cap->capability);
    } else if (const auto* fb = std::get_if<RateFeedback>(&m.payload)) {
        doc["type"] = "rate_feedback";
        doc["name"] = to_string(fb->name);
        doc["value"] = fb->bits_per_use;
    } else {
        doc["type"] = "decision_bit";
        doc["value"] = std::get<DecisionBit>(m.payload).bit;
    }
    return doc;
}

}  // namespace

std::string trace_to_jsonl(const std::vector<ProtocolMessage>& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.size(); ++i)
        os << message_to_json(static_cast<int>(i), trace[i]).dump() << '\n';
    return os.str();
}

std::vector<ProtocolMessage> trace_from_jsonl(const std::string& text) {
    std::vector<ProtocolMessage> trace;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const json doc = parse(line);
        ProtocolMessage m;
        m.from = node_kind_from_string(field(doc, "from").get<std::string>());
        m.to = node_kind_from_string(field(doc, "to").get<std::string>());
        const std::string type = field(doc, "type").get<std::string>();
        if (type == "capability")
            m.payload =
                CapabilityBroadcast{capability_from_string(field(doc, "value").get<std::string>())};
        else if (type == "rate_feedback")
            m.payload = RateFeedback{feedback_name_from_string(field(doc, "name").get<std::string>()),
                                     number(doc, "value")};
        else if (type == "decision_bit")
            m.payload = DecisionBit{field(doc, "value").get<int>()};
        else
            throw ParseError("unknown message type \"" + type + "\"");
        trace.push_back(std::move(m));
    }
    return trace;
}

std::string audit_report_to_json(const AuditReport& report) {
    json checks = json::array();
    for (const AuditCheck& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"delta", c.delta}, {"pass", c.pass}});
    json doc;
    doc["algorithm"] = report.algorithm;
    doc["pass"] = report.pass;
    doc["outcome_sum"] = report.outcome_sum;
    doc["reference_value"] = report.reference_value;
    doc["gap"] = report.gap;
    doc["realized"] = report.realized;
    doc["checks"] = std::move(checks);
    return doc.dump();
}

AuditReport audit_report_from_json(const std::string& text) {
    const json doc = parse(text);
    AuditReport report;
    report.algorithm = field(doc, "algorithm").get<int>();
    report.pass = field(doc, "pass").get<bool>();
    report.outcome_sum = number(doc, "outcome_sum");
    report.reference_value = number(doc, "reference_value");
    report.gap = number(doc, "gap");
    report.realized = field(doc, "realized").get<std::string>();
    const json& checks = field(doc, "checks");
    if (!checks.is_array()) throw ParseError("key \"checks\" must be an array");
    for (const auto& c : checks)
        report.checks.push_back({field(c, "name").get<std::string>(), number(c, "delta"),
                                 field(c, "pass").get<bool>()});
    return report;
}

}  // namespace icrates
