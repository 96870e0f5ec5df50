#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace pp;

namespace {

DiophSystem sys_of(std::vector<std::vector<int>> rows, std::size_t vars) {
    DiophSystem s;
    s.vars = vars;
    for (const auto& r : rows) s.rows.emplace_back(r.begin(), r.end());
    return s;
}

std::vector<Nat> vec(std::vector<long> v) { return {v.begin(), v.end()}; }

Protocol fb1() { return normalize_protocol(flock_binary(1)).protocol; }

}  // namespace

TEST_CASE("basis of tiny systems") {
    HilbertBasis b = hilbert_basis(sys_of({{1, -1}}, 2));
    CHECK(b.elements == std::vector<std::vector<Nat>>{vec({1, 0}), vec({1, 1})});

    b = hilbert_basis(sys_of({{1, 1}}, 2));
    CHECK(b.elements == std::vector<std::vector<Nat>>{vec({0, 1}), vec({1, 0})});

    b = hilbert_basis(sys_of({{-1, 0}}, 2));
    CHECK(b.elements == std::vector<std::vector<Nat>>{vec({0, 1})});

    // no rows: everything solves, units generate
    b = hilbert_basis(sys_of({}, 3));
    CHECK(b.elements.size() == 3);
}

TEST_CASE("pottier bound values") {
    CHECK(pottier_bound(sys_of({{1, -1}}, 2)) == 3);
    CHECK(pottier_bound(sys_of({{1, 1}, {-1, 2}}, 2)) == 16);
    CHECK(pottier_bound(sys_of({}, 2)) == 1);
}

TEST_CASE("basis against the brute-force oracle") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 25; ++iter) {
        DiophSystem sys = testsupport::random_system(rng);
        Nat bound = pottier_bound(sys);
        HilbertBasis basis = hilbert_basis(sys);
        auto oracle = testsupport::hilbert_oracle(sys, bound.convert_to<long>());
        CHECK(basis.elements == oracle);
        for (const auto& m : basis.elements) {
            Nat norm = 0;
            for (const auto& x : m) norm += x;
            CHECK(norm <= bound);
        }
    }
}

TEST_CASE("the flock system") {
    Protocol p = fb1();
    DiophSystem sys = realisable_system(p);
    CHECK(sys.vars == 6);
    CHECK(sys.rows.size() == 2);  // states 0 and 2
    int t11 = p.transition_index(Transition(1, 1, 0, 2));
    REQUIRE(t11 >= 0);
    CHECK(sys.rows[0][static_cast<std::size_t>(t11)] == 1);
    CHECK(sys.rows[1][static_cast<std::size_t>(t11)] == 1);
    for (const auto& row : sys.rows)
        for (const auto& a : row) {
            CHECK(a >= -2);
            CHECK(a <= 2);
        }

    Protocol idle;
    idle.states = {"a", "b"};
    idle.input_state = 0;
    idle.leaders = Config(2);
    idle.output = {0, 0};
    idle.transitions = {Transition(0, 0, 0, 0), Transition(0, 1, 0, 1), Transition(1, 1, 1, 1)};
    DiophSystem zero = realisable_system(idle);
    for (const auto& row : zero.rows)
        for (const auto& a : row) CHECK(a == 0);
}

TEST_CASE("pottier constant") {
    Protocol p = fb1();
    CHECK(pottier_constant(p) == 4394);  // 2 * 13^3
    CHECK(pottier_constant(p, true) == 250);  // 2 * 5^3
}

TEST_CASE("realisable basis") {
    Protocol p = fb1();
    const Nat xi = pottier_constant(p);
    auto basis = realisable_basis(p);
    CHECK(!basis.empty());

    int t11 = p.transition_index(Transition(1, 1, 0, 2));
    int t02 = p.transition_index(Transition(0, 2, 2, 2));
    TransitionMultiset wanted(p.transitions.size());
    wanted.mult[static_cast<std::size_t>(t11)] = 1;
    wanted.mult[static_cast<std::size_t>(t02)] = 1;
    bool found = false;
    for (const auto& el : basis) {
        if (el.pi == wanted) {
            found = true;
            CHECK(el.input_size == 2);
            CHECK(el.result == unit_config(3, 2, 2));
        }
        CHECK(2 * el.pi.size() <= xi);
        CHECK(el.input_size <= xi);
        CHECK(el.result.size() <= xi);
        // the enrichments describe a genuine potential step
        Config ic = unit_config(3, p.input_state, el.input_size);
        CHECK(apply_parikh(p, ic, el.pi) == el.result);
    }
    CHECK(found);

    // identity transitions alone displace nothing and need a bare pair
    int t01 = p.transition_index(Transition(0, 1, 0, 1));
    TransitionMultiset ident(p.transitions.size());
    ident.mult[static_cast<std::size_t>(t01)] = 1;
    for (const auto& el : basis)
        if (el.pi == ident) {
            CHECK(el.input_size == 2);
            CHECK(el.result == unit_config(3, 1, 2));
        }
}

TEST_CASE("decomposing solutions") {
    DiophSystem sys = sys_of({{1, -1}}, 2);
    HilbertBasis basis = hilbert_basis(sys);
    std::vector<Nat> m = vec({2, 1});
    std::vector<Nat> mult = decompose_solution(m, sys, basis);
    REQUIRE(mult.size() == basis.elements.size());
    std::vector<Nat> back(2, 0);
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) back[j] += mult[i] * basis.elements[i][j];
    CHECK(back == m);
    CHECK(mult == std::vector<Nat>{vec({1, 1})[0], 1});

    CHECK(decompose_solution(basis.elements[1], sys, basis) == std::vector<Nat>{0, 1});
    CHECK(decompose_solution(vec({0, 0}), sys, basis) == std::vector<Nat>{0, 0});
    CHECK_THROWS_AS(decompose_solution(vec({0, 1}), sys, basis), Error);
}

TEST_CASE("extraction of a small potential step") {
    Protocol p = fb1();
    int t11 = p.transition_index(Transition(1, 1, 0, 2));
    int t02 = p.transition_index(Transition(0, 2, 2, 2));
    TransitionMultiset pi(p.transitions.size());
    pi.mult[static_cast<std::size_t>(t11)] = 1;
    pi.mult[static_cast<std::size_t>(t02)] = 1;

    std::vector<char> S{0, 0, 1};
    AllEmptyResult r = allempty_extract(p, 2, pi, S);
    CHECK(r.input_size == 2);
    CHECK(r.theta == pi);
    CHECK(r.reached == unit_config(3, 2, 2));
    CHECK(apply_parikh(p, unit_config(3, p.input_state, r.input_size), r.theta) == r.reached);

    // concentration violated: nothing ends up inside an empty S
    CHECK_THROWS_AS(allempty_extract(p, 2, pi, std::vector<char>{0, 0, 0}), Error);

    // pure-identity step reduces away entirely
    int t01 = p.transition_index(Transition(0, 1, 0, 1));
    TransitionMultiset ident(p.transitions.size());
    ident.mult[static_cast<std::size_t>(t01)] = 1;
    AllEmptyResult triv = allempty_extract(p, 2, ident, std::vector<char>{0, 1, 0});
    CHECK(triv.input_size == 0);
    CHECK(triv.theta.empty());
    CHECK(triv.reached.is_zero());
}
