#include "critlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "critlab/errors.hpp"
#include "critlab/graph6.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critlab;

TEST_CASE("every labeling of C5 has one canonical form")
{
    const Graph c5 = cycle_graph(5);
    const Graph reference = canonical_form(c5);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
        CHECK(canonical_form(c5.permuted(perm)) == reference);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 120);
}

TEST_CASE("canonical labeling relabels into the form")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const auto lab = canonical_labeling(g);
        CHECK(g.permuted(lab.label) == lab.form);
        std::vector<int> sorted = lab.label;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);
        CHECK(canonical_form(lab.form) == lab.form); // idempotent
    }
}

TEST_CASE("canonical form is invariant under random relabeling")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(rng, n, p);
        const auto pi = oracle::random_permutation(rng, n);
        REQUIRE(canonical_form(g.permuted(pi)) == canonical_form(g));
    }
}

TEST_CASE("canonical form separates classes exactly as the brute-force oracle")
{
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::set<std::string> forms;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) forms.insert(graph6_encode(canonical_form(oracle::from_mask(n, m))));
        CHECK(forms.size() == oracle::brute_class_count(n));
    }
}

TEST_CASE("highly symmetric graphs")
{
    std::mt19937_64 rng(5);
    const Graph petersen = [] {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }();
    for (const Graph& g : {petersen, complete_graph(16), Graph(16), cycle_graph(16), oracle::octahedron()}) {
        for (int t = 0; t < 20; ++t) CHECK(canonical_form(g.permuted(oracle::random_permutation(rng, g.order()))) == canonical_form(g));
    }
}

TEST_CASE("isomorphism examples")
{
    const Graph c5 = cycle_graph(5);
    CHECK(is_isomorphic(c5, c5.permuted({2, 4, 1, 0, 3})));
    CHECK_FALSE(is_isomorphic(c5, path_graph(5)));
    CHECK(is_isomorphic(construct_W({3, 2}), complete_graph(5)));
    CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("find_isomorphism returns a witness map")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n);
        const Graph h = g.permuted(oracle::random_permutation(rng, n));
        const auto map = find_isomorphism(g, h);
        REQUIRE(map.has_value());
        CHECK(g.permuted(*map) == h);
    }
    CHECK_FALSE(find_isomorphism(cycle_graph(6), path_graph(6)).has_value());
}

TEST_CASE("more than 16 vertices is unsupported")
{
    CHECK_THROWS_AS(canonical_form(Graph(17)), UnsupportedSize);
    CHECK_THROWS_AS(is_isomorphic(cycle_graph(17), cycle_graph(17)), UnsupportedSize);
}
