// JSON and CSV wire formats. All functions speak std::string so the JSON
// library stays an implementation detail of this module.
//
// Channel documents:
//   {"type":"gaussian","h":[[re,im],[re,im],[re,im],[re,im]],"power":P}
//     with h row-major over (receiver, transmitter): h11, h12, h21, h22
//   {"type":"dmc","nx":[|X1|,|X2|],"ny":[|Y1|,|Y2|],
//    "p":[... row-major over (x1,x2,y1,y2) ...],"px1":[...],"px2":[...]}
//
// Region document: {"pieces":[{"config":"SD-IAN","vertices":[[r1,r2],...]},...]}
// Sum-rate result: {"value":V,"assignment":[a1,a2],"config":"xx|ox|xo|oo|none",
//                   "regime":"..."}
// Protocol trace:  JSON lines, one message per line,
//   {"seq":n,"from":"TX2","to":"TX1","type":"decision_bit","value":1}
//
// CSV uses '.' decimals, no locale, 12 significant digits.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "icrates/channel.hpp"
#include "icrates/protocol.hpp"
#include "icrates/rate_region.hpp"
#include "icrates/sum_rate.hpp"

namespace icrates {

// Malformed or invalid input document; the message names the offending field.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string format_csv_number(double v);  // 12 significant digits

IcChannel channel_from_json(const std::string& text);
std::string channel_to_json(const IcChannel& ch);

std::string region_to_json(const RegionPolygon& region);
std::string region_to_csv(const RegionPolygon& region);
// Reconstructs each piece from its label and vertices; the canonical bounds
// are recovered as the vertex maxima of R1, R2 and R1+R2, which describe
// the same polygon for this constraint family.
RegionPolygon region_from_json(const std::string& text);

std::string sum_rate_result_to_json(const SumRateResult& result);
SumRateResult sum_rate_result_from_json(const std::string& text);

std::string classify_map_to_csv(const std::vector<ClassifyMapRow>& rows);
std::string classify_map_to_json(const std::vector<ClassifyMapRow>& rows);
std::vector<ClassifyMapRow> classify_map_from_json(const std::string& text);

std::string trace_to_jsonl(const std::vector<ProtocolMessage>& trace);
std::vector<ProtocolMessage> trace_from_jsonl(const std::string& text);

std::string audit_report_to_json(const AuditReport& report);
AuditReport audit_report_from_json(const std::string& text);

}  // namespace icrates
