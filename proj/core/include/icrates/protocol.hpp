// Distributed rate-determination protocols for one advanced and one legacy
// receiver, simulated as deterministic message-passing node procedures.
//
// Canonical placement: receiver 1 is advanced (can decode interference),
// receiver 2 is legacy. The mirrored placement is obtained by relabeling
// the channel (swap_receivers) before the run. Delivery is reliable,
// in-order, lossless, in the logical rounds the procedures prescribe:
// capability broadcasts, advanced-receiver feedback, legacy-receiver
// feedback, transmitter-2 decision, the single notification bit to
// transmitter 1, transmitter-1 decision.
//
// Feedback carries exact real-valued rates. Quantized feedback, as a real
// deployment would use, is an extension point of RateFeedback and is not
// modeled here.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "icrates/channel.hpp"

namespace icrates {

enum class NodeKind { TX1, TX2, RX1, RX2 };

enum class RxCapability { LEGACY, ADVANCED };

std::string to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& name);
std::string to_string(RxCapability capability);
RxCapability capability_from_string(const std::string& name);

// The rate quantities the algorithms' feedback lines carry.
enum class FeedbackName { R11_IF, R11_IAN, R12_IF, R12_IAN, R21_IAN, R22_IAN };

std::string to_string(FeedbackName name);
FeedbackName feedback_name_from_string(const std::string& name);

struct CapabilityBroadcast {
    RxCapability capability = RxCapability::LEGACY;
};

struct RateFeedback {
    FeedbackName name = FeedbackName::R11_IF;
    double bits_per_use = 0.0;
};

struct DecisionBit {
    int bit = 0;
};

using ProtocolPayload = std::variant<CapabilityBroadcast, RateFeedback, DecisionBit>;

struct ProtocolMessage {
    NodeKind from = NodeKind::RX1;
    NodeKind to = NodeKind::TX1;
    ProtocolPayload payload;
};

struct ProtocolOutcome {
    double r1 = 0.0;  // transmission rate chosen by transmitter 1, bits/use
    double r2 = 0.0;  // transmission rate chosen by transmitter 2, bits/use
    int decision_bit = 0;
    std::vector<ProtocolMessage> trace;  // every delivered message, in order
    int messages_to_tx1_from_tx2 = 0;    // must be exactly 1 (the decision bit)
};

// A receiver's entire visible behavior: its capability broadcast followed by
// its rate feedback. Built from the receiver's own identity and its locally
// measurable rates only, so it cannot depend on the peer receiver's
// capability. Supports the canonical placement (RX1 advanced, RX2 legacy);
// anything else throws std::invalid_argument.
std::vector<ProtocolMessage> receiver_capability_broadcast(NodeKind receiver,
                                                           RxCapability capability);
std::vector<ProtocolMessage> receiver_rate_feedback(NodeKind receiver,
                                                    RxCapability capability,
                                                    const RatePrimitives& prims,
                                                    int algorithm);

// Rate determination for the traditional interference channel.
// Tx 2: R22_IAN > R12_IF -> b_d = 0, R2 = R22_IAN;
//       else b_d = 1, R2 = min{R12_IAN, R22_IAN}.
// Tx 1: b_d = 0 -> R1 = R11_IAN; b_d = 1 -> R1 = R11_IF.
ProtocolOutcome run_algorithm1(const GaussianIcChannel& ch);
ProtocolOutcome run_algorithm1(const DmcIcChannel& ch);
ProtocolOutcome run_algorithm1(const IcChannel& ch);

// Rate determination for the generalized interference channel.
// Tx 2 as in algorithm 1 except b_d = 1 sets R2 = R12_IAN.
// Tx 1: b_d = 0 -> R1 = R11_IAN;
//       b_d = 1 -> R1 = R21_IAN if R21_IAN > R11_IF, else R1 = R11_IF.
ProtocolOutcome run_algorithm2(const GaussianIcChannel& ch);
ProtocolOutcome run_algorithm2(const DmcIcChannel& ch);
ProtocolOutcome run_algorithm2(const IcChannel& ch);

struct AuditCheck {
    std::string name;
    double delta = 0.0;
    bool pass = true;
};

// Cross-check of a protocol outcome against centralized computation.
// Algorithm 1: the outcome sum must equal the best of the (o,x) and (x,x)
// sum rates of (1,2), the only configurations reachable with a legacy
// receiver 2. Algorithm 2: reports the gap to the generalized maximum sum
// rate and hard-fails only if a chosen rate is not decodable at its
// decoding receiver under the realized configuration.
struct AuditReport {
    int algorithm = 1;
    bool pass = true;
    double outcome_sum = 0.0;
    double reference_value = 0.0;  // alg 1: best reachable config; alg 2: generalized max
    double gap = 0.0;              // reference_value - outcome_sum
    std::string realized;          // realized assignment/config, e.g. "(2,1) crossed IAN"
    std::vector<AuditCheck> checks;
};

AuditReport audit(const ProtocolOutcome& outcome, const RatePrimitives& prims,
                  int algorithm);

}  // namespace icrates
