#include <sigfix/kernels.hpp>

#include <doctest.h>

#include <algorithm>

using namespace sigfix;

namespace {

using Sets = std::vector<std::vector<Vertex>>;

Digraph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t v = 1; v <= n; ++v) arcs.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v % n + 1));
    return Digraph(n, arcs);
}

Sets decoded(const Digraph& d) {
    Sets out;
    for (const auto& x : fixed_points(to_network(d))) out.push_back(support(x));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("digraph validation") {
    CHECK_THROWS(Digraph(2, {{1, 3}}));
    CHECK_THROWS(Digraph(2, {{1, 2}, {1, 2}}));
    Digraph d(3, {{2, 1}, {1, 3}, {1, 2}});
    CHECK(d.out_neighbors(1) == std::vector<Vertex>{2, 3});
    CHECK(d.in_neighbors(1) == std::vector<Vertex>{2});
    CHECK(transpose(transpose(d)) == d);
}

TEST_CASE("kernels by subset scan") {
    CHECK(kernels(Digraph(1, {})) == Sets{{1}});
    CHECK(kernels(cycle(2)) == Sets{{1}, {2}});
    CHECK(kernels(cycle(3)).empty());
    CHECK(kernels(cycle(4)) == Sets{{1, 3}, {2, 4}});
    // a vertex with a loop never belongs to a kernel
    CHECK(kernels(Digraph(1, {{1, 1}})).empty());
    // the sink of a single arc absorbs the source
    CHECK(kernels(Digraph(2, {{1, 2}})) == Sets{{2}});
}

TEST_CASE("kernel conditions") {
    Digraph path(3, {{1, 2}, {2, 3}});
    CHECK(richardson_condition(path));
    CHECK(generalized_condition(path));
    CHECK(!richardson_condition(cycle(3)));
    CHECK(!generalized_condition(cycle(3)));
    CHECK(richardson_condition(cycle(2)));
    CHECK(generalized_condition(cycle(2)));

    // an odd loop pointing into an even cycle: 1 <-> 2 and 3 -> 3, 3 -> 2
    Digraph tail(3, {{1, 2}, {2, 1}, {3, 2}, {3, 3}});
    CHECK(!richardson_condition(tail));
    CHECK(kernels(tail) == Sets{{2}});
}

TEST_CASE("the arc rule read on D itself does not guarantee a kernel") {
    Digraph d(3, {{1, 2}, {1, 3}, {2, 1}, {2, 2}});
    CHECK(generalized_condition_on_d(d));
    CHECK(!generalized_condition(d));
    CHECK(kernels(d).empty());
}

TEST_CASE("kernel network") {
    CHECK(decoded(cycle(2)) == Sets{{1}, {2}});
    CHECK(decoded(Digraph(1, {})) == Sets{{1}});
    CHECK(decoded(cycle(3)).empty());
    Digraph d(3, {{1, 2}, {2, 3}});
    CHECK(interaction_graph(to_network(d)) == network_graph(d));
    CHECK(network_graph(d) == SignedDigraph(3, {{2, 1, Sign::negative}, {3, 2, Sign::negative}}));
    CHECK(to_signed(d) == SignedDigraph(3, {{1, 2, Sign::negative}, {2, 3, Sign::negative}}));
}

TEST_CASE("kernels match the network on every digraph with n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint32_t mask = 0; mask < (1U << (n * n)); ++mask) {
            std::vector<std::pair<Vertex, Vertex>> arcs;
            for (std::size_t p = 0; p < n * n; ++p) {
                if ((mask >> p) & 1U) arcs.emplace_back(static_cast<Vertex>(p / n + 1), static_cast<Vertex>(p % n + 1));
            }
            Digraph d(n, arcs);
            auto ks = kernels(d);
            CHECK(decoded(d) == ks);
            if (generalized_condition(d)) CHECK(!ks.empty());
        }
    }
}

TEST_CASE("support") {
    CHECK(support(BitState::from_string("1010")) == std::vector<Vertex>{1, 3});
    CHECK(support(BitState::from_string("000")).empty());
}
