#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pp/bb.hpp"
#include "pp/io.hpp"

using namespace pp;

namespace {

Protocol fb1() { return normalize_protocol(flock_binary(1)).protocol; }

}  // namespace

TEST_CASE("protocol round trips") {
    Protocol p = flock_unary(2);
    p.leaders = unit_config(p.state_count(), 0, 1);  // exercise the leader map
    std::string text = protocol_to_json(p);
    Protocol back = protocol_from_json(text);
    CHECK(back.states == p.states);
    CHECK(back.input_state == p.input_state);
    CHECK(back.leaders == p.leaders);
    CHECK(back.output == p.output);
    CHECK(back.transitions == p.transitions);
    CHECK(protocol_to_json(back) == text);  // byte-stable re-dump
}

TEST_CASE("matrix round trips") {
    DiophSystem sys;
    sys.vars = 3;
    sys.rows = {{1, -2, 0}, {0, 1, 1}};
    std::string text = matrix_to_json(sys);
    DiophSystem back = matrix_from_json(text);
    CHECK(back.vars == sys.vars);
    CHECK(back.rows == sys.rows);
    CHECK(matrix_to_json(back) == text);
}

TEST_CASE("certificate round trips") {
    Protocol p = fb1();
    Certificate cert = build_leaderless_certificate(p);
    REQUIRE(check_certificate(p, cert).accepted);
    std::string text = certificate_to_json(p, cert);
    Certificate back = certificate_from_json(p, text);
    CHECK(back.a == cert.a);
    CHECK(back.b == cert.b);
    CHECK(back.S == cert.S);
    CHECK(back.E == cert.E);
    CHECK(back.D == cert.D);
    CHECK(back.D_b == cert.D_b);
    CHECK(back.pi == cert.pi);
    CHECK(certificate_to_json(p, back) == text);
    CHECK(check_certificate(p, back).accepted);
}

TEST_CASE("parse errors carry the right code") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    CHECK(code_of([] { protocol_from_json("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { protocol_from_json("{\"states\": []}"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { matrix_from_json("[1, 2]"); }) == ErrorCode::ParseError);
    Protocol p = fb1();
    CHECK(code_of([&] { certificate_from_json(p, "{\"variant\": \"nope\"}"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { read_file("/nonexistent/definitely/missing.json"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("decomposition dump mentions every ideal") {
    Protocol p = fb1();
    IdealDecomposition d = stable_set_ideals(p, '1');
    std::string text = decomposition_to_json(p, d);
    CHECK(text.find("free") != std::string::npos);
    CHECK(text.find("bound") != std::string::npos);
    CHECK(text.find("\"2\"") != std::string::npos);  // the free top state by name
}
