#include "icrates/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "icrates/sum_rate.hpp"

namespace icrates {
namespace {

constexpr double audit_tol = 1e-9;

void require_algorithm(int algorithm) {
    if (algorithm != 1 && algorithm != 2)
        throw std::invalid_argument("algorithm must be 1 or 2");
}

// Rates a transmitter has collected from feedback messages.
using Inbox = std::map<FeedbackName, double>;

double fetch(const Inbox& inbox, FeedbackName name) {
    const auto it = inbox.find(name);
    if (it == inbox.end())
        throw std::logic_error("transmitter procedure is missing feedback " + to_string(name));
    return it->second;
}

struct Tx2Decision {
    int bit = 0;
    double r2 = 0.0;
};

Tx2Decision tx2_procedure(const Inbox& inbox, int algorithm) {
    const double r22_ian = fetch(inbox, FeedbackName::R22_IAN);
    const double r12_if = fetch(inbox, FeedbackName::R12_IF);
    const double r12_ian = fetch(inbox, FeedbackName::R12_IAN);
    if (r22_ian > r12_if) return {0, r22_ian};
    if (algorithm == 1) return {1, std::min(r12_ian, r22_ian)};
    return {1, r12_ian};
}

double tx1_procedure(const Inbox& inbox, int decision_bit, int algorithm) {
    const double r11_ian = fetch(inbox, FeedbackName::R11_IAN);
    const double r11_if = fetch(inbox, FeedbackName::R11_IF);
    if (decision_bit == 0) return r11_ian;
    if (algorithm == 1) return r11_if;
    const double r21_ian = fetch(inbox, FeedbackName::R21_IAN);
    return r21_ian > r11_if ? r21_ian : r11_if;
}

ProtocolOutcome run_protocol(const RatePrimitives& prims, int algorithm) {
    require_algorithm(algorithm);

    ProtocolOutcome outcome;
    auto deliver = [&outcome](std::vector<ProtocolMessage> msgs) {
        for (ProtocolMessage& m : msgs) outcome.trace.push_back(std::move(m));
    };

    // Round 1: capability broadcasts, receiver 1 first.
    deliver(receiver_capability_broadcast(NodeKind::RX1, RxCapability::ADVANCED));
    deliver(receiver_capability_broadcast(NodeKind::RX2, RxCapability::LEGACY));

    // Round 2: rate feedback, advanced receiver first.
    deliver(receiver_rate_feedback(NodeKind::RX1, RxCapability::ADVANCED, prims, algorithm));
    deliver(receiver_rate_feedback(NodeKind::RX2, RxCapability::LEGACY, prims, algorithm));

    Inbox tx1_inbox, tx2_inbox;
    for (const ProtocolMessage& m : outcome.trace) {
        if (const auto* fb = std::get_if<RateFeedback>(&m.payload)) {
            (m.to == NodeKind::TX1 ? tx1_inbox : tx2_inbox)[fb->name] = fb->bits_per_use;
        }
    }

    // Round 3: transmitter 2 decides and notifies transmitter 1.
    const Tx2Decision decision = tx2_procedure(tx2_inbox, algorithm);
    outcome.decision_bit = decision.bit;
    outcome.r2 = decision.r2;
    outcome.trace.push_back(
        {NodeKind::TX2, NodeKind::TX1, DecisionBit{decision.bit}});

    // Round 4: transmitter 1 decides.
    outcome.r1 = tx1_procedure(tx1_inbox, decision.bit, algorithm);

    outcome.messages_to_tx1_from_tx2 = static_cast<int>(
        std::count_if(outcome.trace.begin(), outcome.trace.end(),
                      [](const ProtocolMessage& m) {
                          return m.from == NodeKind::TX2 && m.to == NodeKind::TX1;
                      }));
    return outcome;
}

}  // namespace

std::string to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::TX1: return "TX1";
        case NodeKind::TX2: return "TX2";
        case NodeKind::RX1: return "RX1";
        case NodeKind::RX2: return "RX2";
    }
    throw std::logic_error("to_string(NodeKind): invalid value");
}

NodeKind node_kind_from_string(const std::string& name) {
    for (NodeKind k : {NodeKind::TX1, NodeKind::TX2, NodeKind::RX1, NodeKind::RX2})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown node kind: \"" + name + "\"");
}

std::string to_string(RxCapability capability) {
    return capability == RxCapability::ADVANCED ? "advanced" : "legacy";
}

RxCapability capability_from_string(const std::string& name) {
    if (name == "advanced") return RxCapability::ADVANCED;
    if (name == "legacy") return RxCapability::LEGACY;
    throw std::invalid_argument("unknown receiver capability: \"" + name + "\"");
}

std::string to_string(FeedbackName name) {
    switch (name) {
        case FeedbackName::R11_IF: return "R11_IF";
        case FeedbackName::R11_IAN: return "R11_IAN";
        case FeedbackName::R12_IF: return "R12_IF";
        case FeedbackName::R12_IAN: return "R12_IAN";
        case FeedbackName::R21_IAN: return "R21_IAN";
        case FeedbackName::R22_IAN: return "R22_IAN";
    }
    throw std::logic_error("to_string(FeedbackName): invalid value");
}

FeedbackName feedback_name_from_string(const std::string& name) {
    for (FeedbackName f : {FeedbackName::R11_IF, FeedbackName::R11_IAN,
                           FeedbackName::R12_IF, FeedbackName::R12_IAN,
                           FeedbackName::R21_IAN, FeedbackName::R22_IAN})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown feedback name: \"" + name + "\"");
}

std::vector<ProtocolMessage> receiver_capability_broadcast(NodeKind receiver,
                                                           RxCapability capability) {
    if (receiver != NodeKind::RX1 && receiver != NodeKind::RX2)
        throw std::invalid_argument("capability broadcast: node is not a receiver");
    return {{receiver, NodeKind::TX1, CapabilityBroadcast{capability}},
            {receiver, NodeKind::TX2, CapabilityBroadcast{capability}}};
}

std::vector<ProtocolMessage> receiver_rate_feedback(NodeKind receiver,
                                                    RxCapability capability,
                                                    const RatePrimitives& prims,
                                                    int algorithm) {
    require_algorithm(algorithm);
    if (receiver == NodeKind::RX1 && capability == RxCapability::ADVANCED) {
        // Identical for both algorithms; measures rates at its own antenna only.
        return {{NodeKind::RX1, NodeKind::TX1,
                 RateFeedback{FeedbackName::R11_IF, prims.if_rate(1, 1)}},
                {NodeKind::RX1, NodeKind::TX1,
                 RateFeedback{FeedbackName::R11_IAN, prims.ian_rate(1, 1)}},
                {NodeKind::RX1, NodeKind::TX2,
                 RateFeedback{FeedbackName::R12_IF, prims.if_rate(1, 2)}},
                {NodeKind::RX1, NodeKind::TX2,
                 RateFeedback{FeedbackName::R12_IAN, prims.ian_rate(1, 2)}}};
    }
    if (receiver == NodeKind::RX2 && capability == RxCapability::LEGACY) {
        std::vector<ProtocolMessage> msgs;
        if (algorithm == 2)
            msgs.push_back({NodeKind::RX2, NodeKind::TX1,
                            RateFeedback{FeedbackName::R21_IAN, prims.ian_rate(2, 1)}});
        msgs.push_back({NodeKind::RX2, NodeKind::TX2,
                        RateFeedback{FeedbackName::R22_IAN, prims.ian_rate(2, 2)}});
        return msgs;
    }
    throw std::invalid_argument(
        "rate feedback: canonical placement requires RX1 advanced and RX2 legacy; "
        "relabel the channel for the mirrored placement");
}

ProtocolOutcome run_algorithm1(const GaussianIcChannel& ch) {
    return run_protocol(gaussian_primitives(ch), 1);
}
ProtocolOutcome run_algorithm1(const DmcIcChannel& ch) {
    return run_protocol(dmc_primitives(ch), 1);
}
ProtocolOutcome run_algorithm1(const IcChannel& ch) {
    return run_protocol(primitives_of(ch), 1);
}

ProtocolOutcome run_algorithm2(const GaussianIcChannel& ch) {
    return run_protocol(gaussian_primitives(ch), 2);
}
ProtocolOutcome run_algorithm2(const DmcIcChannel& ch) {
    return run_protocol(dmc_primitives(ch), 2);
}
ProtocolOutcome run_algorithm2(const IcChannel& ch) {
    return run_protocol(primitives_of(ch), 2);
}

namespace {

void push_check(AuditReport& report, const std::string& name, double delta, bool pass) {
    report.checks.push_back({name, delta, pass});
    report.pass = report.pass && pass;
}

// Realized operating point of algorithm 1: (1,2) with config (o,x) when the
// decision bit is set, (x,x) otherwise.
void audit_algorithm1(AuditReport& report, const ProtocolOutcome& outcome,
                      const RatePrimitives& prims) {
    const double best_ox = sumrate_assignment(prims, {1, 2}, config_ox);
    const double best_xx = sumrate_assignment(prims, {1, 2}, config_xx);
    report.reference_value = std::max(best_ox, best_xx);
    report.gap = report.reference_value - report.outcome_sum;
    report.realized = outcome.decision_bit == 1 ? "(1,2) config ox" : "(1,2) config xx";
    push_check(report, "sum equals best reachable config {ox,xx}", report.gap,
               std::fabs(report.gap) <= audit_tol);
}

// Realized operating point of algorithm 2, by decision branch:
//   b_d = 0                      -> (1,2), both IAN
//   b_d = 1, R1 from R21_IAN     -> (2,1), both IAN (crossed delivery)
//   b_d = 1, R1 from R11_IF      -> (1,1), receiver 1 decodes both (MAC corner)
void audit_algorithm2(AuditReport& report, const ProtocolOutcome& outcome,
                      const RatePrimitives& prims) {
    report.reference_value = oracle_generalized(prims).value;
    report.gap = report.reference_value - report.outcome_sum;

    auto decodable = [&](const std::string& name, double rate, double limit) {
        push_check(report, name, rate - limit, rate <= limit + audit_tol);
    };
    if (outcome.decision_bit == 0) {
        report.realized = "(1,2) config xx";
        decodable("R1 <= R11_IAN at receiver 1", outcome.r1, prims.ian_rate(1, 1));
        decodable("R2 <= R22_IAN at receiver 2", outcome.r2, prims.ian_rate(2, 2));
    } else if (outcome.r1 > prims.if_rate(1, 1)) {
        // Tx1's branch picked R21_IAN: message 1 is decoded at receiver 2.
        report.realized = "(2,1) config xx";
        decodable("R1 <= R21_IAN at receiver 2", outcome.r1, prims.ian_rate(2, 1));
        decodable("R2 <= R12_IAN at receiver 1", outcome.r2, prims.ian_rate(1, 2));
    } else {
        report.realized = "(1,1) joint MAC at receiver 1";
        decodable("R1 <= R11_IF at receiver 1", outcome.r1, prims.if_rate(1, 1));
        decodable("R2 <= R12_IF at receiver 1", outcome.r2, prims.if_rate(1, 2));
        decodable("R1+R2 <= mac_sum1 at receiver 1", outcome.r1 + outcome.r2,
                  prims.mac_sum(1));
    }
}

}  // namespace

AuditReport audit(const ProtocolOutcome& outcome, const RatePrimitives& prims,
                  int algorithm) {
    require_algorithm(algorithm);

    AuditReport report;
    report.algorithm = algorithm;
    report.outcome_sum = outcome.r1 + outcome.r2;

    push_check(report, "exactly one Tx2->Tx1 message",
               outcome.messages_to_tx1_from_tx2 - 1.0,
               outcome.messages_to_tx1_from_tx2 == 1);

    if (algorithm == 1)
        audit_algorithm1(report, outcome, prims);
    else
        audit_algorithm2(report, outcome, prims);
    return report;
}

}  // namespace icrates
