#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pp/bb.hpp"

using namespace pp;

TEST_CASE("classifying the flocks") {
    ClassifyResult r = classify_protocol(flock_binary(2));
    CHECK(r.verdict == ProtocolClass::ComputesThreshold);
    CHECK(r.eta == 4);
    CHECK(r.bound_a > 0);
    // the certified bound is astronomically beyond the exact scan
    CHECK(!r.fully_certified);

    ClassifyResult r1 = classify_protocol(flock_binary(1));
    CHECK(r1.verdict == ProtocolClass::ComputesThreshold);
    CHECK(r1.eta == 2);
}

TEST_CASE("trivial verdicts") {
    Protocol yes;
    yes.states = {"q"};
    yes.input_state = 0;
    yes.leaders = Config(1);
    yes.output = {1};
    yes.transitions = {Transition(0, 0, 0, 0)};
    ClassifyResult r = classify_protocol(yes);
    CHECK(r.verdict == ProtocolClass::ComputesThreshold);
    CHECK(r.eta == 2);  // constant true on the whole domain
    CHECK(r.fully_certified);

    Protocol no = yes;
    no.output = {0};
    ClassifyResult r0 = classify_protocol(no);
    CHECK(r0.verdict == ProtocolClass::NonThreshold);
}

TEST_CASE("undecided protocols never converge") {
    // 0 <-> 1 forever: no input ever stabilises its output
    Protocol p;
    p.states = {"a", "b"};
    p.input_state = 0;
    p.leaders = Config(2);
    p.output = {0, 1};
    p.transitions = {Transition(0, 0, 1, 1), Transition(0, 1, 0, 0), Transition(1, 1, 0, 0)};
    ClassifyResult r = classify_protocol(p);
    CHECK(r.verdict == ProtocolClass::DoesNotCompute);
}

TEST_CASE("one-state busy beaver") {
    BBReport rep = busy_beaver_search(1);
    CHECK(rep.n == 1);
    CHECK(rep.table.size() == 2);
    REQUIRE(rep.best.has_value());
    CHECK(rep.best->second == 2);
    CHECK(rep.computes == 1);
    CHECK(rep.non_threshold == 1);
    CHECK(rep.undecided == 0);
}

TEST_CASE("two-state busy beaver is exhaustive and certified") {
    BBReport rep = busy_beaver_search(2);
    CHECK(rep.table.size() == 108);
    CHECK(rep.computes + rep.non_threshold + rep.does_not_compute + rep.undecided ==
          rep.table.size());
    REQUIRE(rep.best.has_value());
    CHECK(rep.best->second >= 2);
    for (const auto& entry : rep.table)
        if (entry.result.verdict == ProtocolClass::ComputesThreshold)
            CHECK(entry.result.fully_certified);
}
