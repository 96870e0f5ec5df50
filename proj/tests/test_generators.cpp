#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pp/generators.hpp"
#include "pp/reach.hpp"

using namespace pp;

TEST_CASE("unary flock tables") {
    Protocol p = flock_unary(1);
    CHECK(p.state_count() == 3);
    CHECK(p.states == std::vector<std::string>{"0", "1", "2"});
    CHECK(p.input_state == 1);
    CHECK(p.pair_complete());
    // sums below the threshold accumulate, at or above they lock to the top
    CHECK(p.transition_index(Transition(1, 1, 2, 2)) >= 0);
    CHECK(p.transition_index(Transition(0, 1, 0, 1)) >= 0);
    CHECK(p.transition_index(Transition(2, 2, 2, 2)) >= 0);

    Protocol p3 = flock_unary(3);
    CHECK(p3.state_count() == 9);
    CHECK(p3.transition_index(Transition(3, 4, 0, 7)) >= 0);
    CHECK(p3.transition_index(Transition(4, 5, 8, 8)) >= 0);
    CHECK(p3.output[8] == 1);
    for (int q = 0; q < 8; ++q) CHECK(p3.output[static_cast<std::size_t>(q)] == 0);
}

TEST_CASE("binary flock tables") {
    Protocol p = flock_binary(2);
    CHECK(p.state_count() == 4);
    CHECK(p.states == std::vector<std::string>{"0", "1", "2", "4"});
    CHECK(p.input_state == 1);
    CHECK(!p.pair_complete());  // raw table, no identities
    CHECK(p.transitions.size() == 6);
    CHECK(p.transition_index(Transition(1, 1, 0, 2)) >= 0);
    CHECK(p.transition_index(Transition(2, 2, 0, 3)) >= 0);  // doubling to the top
    for (int a = 0; a <= 3; ++a) CHECK(p.transition_index(Transition(a, 3, 3, 3)) >= 0);
    CHECK(p.output == std::vector<int>{0, 0, 0, 1});
    CHECK(p.leaderless());
}

TEST_CASE("both families decide the same small threshold") {
    CHECK(verify_threshold(flock_unary(1), 2, 6).accept);
    CHECK(verify_threshold(flock_binary(1), 2, 6).accept);
    CHECK(!verify_threshold(flock_unary(1), 3, 6).accept);
    CHECK(!verify_threshold(flock_binary(1), 3, 6).accept);
}

TEST_CASE("enumeration at one state") {
    std::vector<Protocol> all;
    enumerate_protocols(1, {}, [&](const Protocol& p) {
        all.push_back(p);
        return true;
    });
    CHECK(all.size() == 2);  // output bit is the only degree of freedom
    CHECK(all[0].transitions.size() == 1);
    CHECK(all[0].transitions[0].is_identity());
}

TEST_CASE("enumeration at two states, deterministic") {
    std::set<std::vector<int>> seen;
    std::size_t count = 0;
    enumerate_protocols(2, {}, [&](const Protocol& p) {
        ++count;
        CHECK(p.input_state == 0);
        CHECK(p.pair_complete());
        std::vector<int> code;
        for (const auto& t : p.transitions) {
            code.push_back(t.p); code.push_back(t.q);
            code.push_back(t.r); code.push_back(t.s);
        }
        for (int o : p.output) code.push_back(o);
        seen.insert(code);
        return true;
    });
    // 3 pair targets ^ 3 pairs * 4 output masks, no symmetry to quotient when
    // only the non-input state could be permuted
    CHECK(count == 108);
    CHECK(seen.size() == count);
}

TEST_CASE("enumeration honors early stop and the state guard") {
    std::size_t count = 0;
    enumerate_protocols(2, {}, [&](const Protocol&) { return ++count < 5; });
    CHECK(count == 5);
    CHECK_THROWS_AS(enumerate_protocols(9, {}, [](const Protocol&) { return true; }), Error);
}

TEST_CASE("canonical filter removes relabelings at three states") {
    // protocols whose encodings differ only by swapping the non-input states
    // must show up once
    std::size_t count = 0;
    EnumOptions opts;
    opts.max_states = 3;
    enumerate_protocols(3, opts, [&](const Protocol& p) {
        CHECK(p.state_count() == 3);
        return ++count < 2000;
    });
    CHECK(count >= 1000);  // plenty of canonical survivors
}
