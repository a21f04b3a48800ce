#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "icrates/json_io.hpp"
#include "icrates/protocol.hpp"
#include "icrates/sum_rate.hpp"
#include "test_support.hpp"

using namespace icrates;
namespace ts = testsupport;

namespace {

int count_from_to(const std::vector<ProtocolMessage>& trace, NodeKind from, NodeKind to) {
    int n = 0;
    for (const ProtocolMessage& m : trace)
        if (m.from == from && m.to == to) ++n;
    return n;
}

bool has_feedback(const std::vector<ProtocolMessage>& trace, FeedbackName name) {
    for (const ProtocolMessage& m : trace)
        if (const auto* fb = std::get_if<RateFeedback>(&m.payload))
            if (fb->name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("algorithm 1: strong symmetric channel") {
    const ProtocolOutcome out = run_algorithm1(ts::strong_symmetric());
    CHECK(out.decision_bit == 1);
    CHECK(out.r2 == doctest::Approx(ts::log2_1_1).epsilon(1e-12));
    CHECK(out.r1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(out.r1 + out.r2 == doctest::Approx(ts::strong_alg1_sum).epsilon(1e-12));
    CHECK(out.trace.size() == 10);
}

TEST_CASE("algorithm 1: weak symmetric channel") {
    const ProtocolOutcome out = run_algorithm1(ts::weak_symmetric());
    CHECK(out.decision_bit == 0);
    CHECK(out.r2 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
    CHECK(out.r1 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
}

TEST_CASE("algorithm 1: zero interference") {
    const ProtocolOutcome out = run_algorithm1(ts::zero_interference());
    CHECK(out.decision_bit == 0);
    CHECK(out.r1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(out.r2 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("algorithm 2: cross-dominant channel crosses the messages") {
    const ProtocolOutcome out = run_algorithm2(ts::cross_dominant());
    CHECK(out.decision_bit == 1);
    CHECK(out.r2 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
    CHECK(out.r1 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
    CHECK(out.r1 + out.r2 == doctest::Approx(ts::weak_sum).epsilon(1e-12));
}

TEST_CASE("algorithm 2: weak symmetric keeps the direct links") {
    const ProtocolOutcome out = run_algorithm2(ts::weak_symmetric());
    CHECK(out.decision_bit == 0);
    CHECK(out.r1 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
    CHECK(out.r2 == doctest::Approx(ts::weak_own_ian).epsilon(1e-12));
}

TEST_CASE("algorithm 2: strong symmetric runs the crossed pair") {
    const ProtocolOutcome out = run_algorithm2(ts::strong_symmetric());
    CHECK(out.decision_bit == 1);
    CHECK(out.r2 == doctest::Approx(ts::log2_5_5).epsilon(1e-12));
    CHECK(out.r1 == doctest::Approx(ts::log2_5_5).epsilon(1e-12));
    CHECK(out.r1 + out.r2 == doctest::Approx(ts::two_log2_5_5).epsilon(1e-12));
    CHECK(out.trace.size() == 11);
}

TEST_CASE("trace structure and ordering") {
    const ProtocolOutcome a1 = run_algorithm1(ts::strong_symmetric());
    const ProtocolOutcome a2 = run_algorithm2(ts::strong_symmetric());

    // exactly one Tx2 -> Tx1 message, and it is the decision bit
    for (const ProtocolOutcome* out : {&a1, &a2}) {
        CHECK(out->messages_to_tx1_from_tx2 == 1);
        CHECK(count_from_to(out->trace, NodeKind::TX2, NodeKind::TX1) == 1);
        CHECK(std::holds_alternative<DecisionBit>(out->trace.back().payload));
    }

    // the legacy receiver's crossed-rate feedback exists only in algorithm 2
    CHECK_FALSE(has_feedback(a1.trace, FeedbackName::R21_IAN));
    CHECK(has_feedback(a2.trace, FeedbackName::R21_IAN));

    // capability broadcasts come first, receiver 1 before receiver 2
    for (int i : {0, 1})
        CHECK(std::holds_alternative<CapabilityBroadcast>(a1.trace[i].payload));
    CHECK(a1.trace[0].from == NodeKind::RX1);
    CHECK(a1.trace[2].from == NodeKind::RX2);
}

TEST_CASE("determinism: identical channel gives a byte-identical trace") {
    const ProtocolOutcome a = run_algorithm2(ts::asymmetric());
    const ProtocolOutcome b = run_algorithm2(ts::asymmetric());
    CHECK(trace_to_jsonl(a.trace) == trace_to_jsonl(b.trace));
}

TEST_CASE("receiver procedure depends only on its own identity") {
    const RatePrimitives p = gaussian_primitives(ts::asymmetric());

    // the advanced receiver's feedback is the same under both algorithms
    const auto rx1_alg1 = receiver_rate_feedback(NodeKind::RX1, RxCapability::ADVANCED, p, 1);
    const auto rx1_alg2 = receiver_rate_feedback(NodeKind::RX1, RxCapability::ADVANCED, p, 2);
    REQUIRE(rx1_alg1.size() == rx1_alg2.size());
    CHECK(trace_to_jsonl(rx1_alg1) == trace_to_jsonl(rx1_alg2));

    // and equals its portion of the assembled run, message for message
    const ProtocolOutcome run = run_algorithm1(ts::asymmetric());
    std::vector<ProtocolMessage> from_rx1;
    for (const ProtocolMessage& m : run.trace)
        if (m.from == NodeKind::RX1 && std::holds_alternative<RateFeedback>(m.payload))
            from_rx1.push_back(m);
    CHECK(trace_to_jsonl(from_rx1) == trace_to_jsonl(rx1_alg1));

    // non-canonical placements are rejected, not silently reinterpreted
    CHECK_THROWS_AS(receiver_rate_feedback(NodeKind::RX1, RxCapability::LEGACY, p, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(receiver_rate_feedback(NodeKind::TX1, RxCapability::ADVANCED, p, 1),
                    std::invalid_argument);
}

TEST_CASE("audit: algorithm 1 reaches the best legacy-compatible config") {
    const RatePrimitives strong = gaussian_primitives(ts::strong_symmetric());
    const AuditReport rep = audit(run_algorithm1(ts::strong_symmetric()), strong, 1);
    CHECK(rep.pass);
    CHECK(rep.outcome_sum == doctest::Approx(ts::strong_alg1_sum).epsilon(1e-12));
    CHECK(rep.reference_value == doctest::Approx(ts::strong_alg1_sum).epsilon(1e-12));

    const RatePrimitives weak = gaussian_primitives(ts::weak_symmetric());
    const AuditReport rep2 = audit(run_algorithm1(ts::weak_symmetric()), weak, 1);
    CHECK(rep2.pass);
    CHECK(rep2.outcome_sum == doctest::Approx(ts::weak_sum).epsilon(1e-12));
}

TEST_CASE("audit: algorithm 2 decodability and gap reporting") {
    const RatePrimitives cross = gaussian_primitives(ts::cross_dominant());
    const AuditReport rep = audit(run_algorithm2(ts::cross_dominant()), cross, 2);
    CHECK(rep.pass);
    CHECK(std::fabs(rep.gap) <= 1e-9);
    CHECK(rep.realized == "(2,1) config xx");

    const RatePrimitives strong = gaussian_primitives(ts::strong_symmetric());
    const AuditReport rep2 = audit(run_algorithm2(ts::strong_symmetric()), strong, 2);
    CHECK(rep2.pass);
    CHECK(std::fabs(rep2.gap) <= 1e-9);

    // a channel where the optimum needs joint decoding at the legacy side:
    // the protocol stays decodable but leaves a reported gap
    const GaussianIcChannel gapped = ts::gaussian(0.3, 0.1, 2.0, 1.0, 10);
    const RatePrimitives gp = gaussian_primitives(gapped);
    const AuditReport rep3 = audit(run_algorithm2(gapped), gp, 2);
    CHECK(rep3.pass);
    CHECK(rep3.gap > 1.0);
    CHECK(rep3.realized == "(1,2) config xx");
}

TEST_CASE("audit: rejects unknown algorithm ids") {
    const RatePrimitives p = gaussian_primitives(ts::asymmetric());
    CHECK_THROWS_AS(audit(run_algorithm1(ts::asymmetric()), p, 3), std::invalid_argument);
}

TEST_CASE("protocols accept DMC channels") {
    const ProtocolOutcome out = run_algorithm1(ts::orthogonal_binary_links());
    CHECK(out.decision_bit == 0);
    CHECK(out.r1 == 1.0);
    CHECK(out.r2 == 1.0);
}

TEST_CASE("random channels: algorithm 1 always matches its reachable optimum") {
    std::mt19937_64 rng(41);
    for (int n = 0; n < 2000; ++n) {
        const GaussianIcChannel ch = ts::random_gaussian(rng);
        const RatePrimitives p = gaussian_primitives(ch);
        const ProtocolOutcome out = run_algorithm1(ch);
        const double best = std::max(sumrate_assignment(p, {1, 2}, config_ox),
                                     sumrate_assignment(p, {1, 2}, config_xx));
        CHECK(std::fabs(out.r1 + out.r2 - best) <= 1e-9);
        CHECK(out.messages_to_tx1_from_tx2 == 1);
    }
}

TEST_CASE("random channels: algorithm 2 outcomes are always decodable") {
    std::mt19937_64 rng(42);
    for (int n = 0; n < 2000; ++n) {
        const GaussianIcChannel ch = ts::random_gaussian(rng);
        const RatePrimitives p = gaussian_primitives(ch);
        const AuditReport rep = audit(run_algorithm2(ch), p, 2);
        CHECK(rep.pass);
        CHECK(rep.gap >= -1e-9);
    }
}
