#include "critlab/graph6.hpp"

#include <random>

#include "critlab/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlab;

TEST_CASE("decode small examples")
{
    const Graph k1 = graph6_decode("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph k4 = graph6_decode("C~");
    CHECK(k4 == complete_graph(4));

    const Graph e4 = graph6_decode("C?");
    CHECK(e4.order() == 4);
    CHECK(e4.edge_count() == 0);

    CHECK(graph6_decode("?").order() == 0);
}

TEST_CASE("encode small examples")
{
    CHECK(graph6_encode(complete_graph(4)) == "C~");
    CHECK(graph6_encode(complete_graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(construct_W({5, 1})) == "E|fG"); // hand-encoded: hub 0, rim 1-2-3-4-5
}

TEST_CASE("round trip over every labeled graph on 5 vertices")
{
    for (std::uint64_t m = 0; m < (1U << 10); ++m) {
        const Graph g = oracle::from_mask(5, m);
        const std::string s = graph6_encode(g);
        CHECK(graph6_decode(s) == g);
        CHECK(graph6_encode(graph6_decode(s)) == s);
    }
}

TEST_CASE("round trip across header lengths")
{
    std::mt19937_64 rng(7);
    for (int n : {0, 1, 2, 30, 62, 63, 64}) {
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const std::string s = graph6_encode(g);
        CHECK((s[0] == '~') == (n >= 63));
        CHECK(graph6_decode(s) == g);
    }
}

namespace {

std::size_t offset_of(std::string_view s)
{
    try {
        graph6_decode(s);
    } catch (const DecodeError& e) {
        return e.offset();
    }
    FAIL("no decode error for " << s);
    return 0;
}

} // namespace

TEST_CASE("malformed input reports the byte offset")
{
    CHECK(offset_of("") == 0);
    CHECK(offset_of(">>graph6<<C~") == 0);
    CHECK(offset_of("C~~") == 2);  // trailing byte
    CHECK(offset_of("C") == 1);    // truncated payload
    CHECK(offset_of("B~") == 1);   // nonzero padding bits
    CHECK(offset_of("C\x7f") == 1);
    CHECK(offset_of("C ") == 1);
    CHECK(offset_of("C \n") == 2);
    CHECK(offset_of("~~??????") == 1); // n > 64 needs the 8-byte header
    CHECK(offset_of("~?A?") == 0);     // n = 65
    CHECK(offset_of("~??^") == 0);     // n = 31 in a long header
    CHECK(offset_of("~?@?") == 4);     // n = 64 with no payload
}
