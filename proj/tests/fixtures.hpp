#ifndef SIGFIX_TEST_FIXTURES_HPP
#define SIGFIX_TEST_FIXTURES_HPP

#include <sigfix/sgraph.hpp>

#include <vector>

namespace fx {

using sigfix::Arc;
using sigfix::SignedDigraph;
using sigfix::Vertex;

constexpr auto pos = sigfix::Sign::positive;
constexpr auto neg = sigfix::Sign::negative;

inline SignedDigraph graph(std::size_t n, std::vector<Arc> arcs) { return SignedDigraph(n, std::move(arcs)); }

inline SignedDigraph positive_loop() { return graph(1, {{1, 1, pos}}); }
inline SignedDigraph negative_loop() { return graph(1, {{1, 1, neg}}); }
inline SignedDigraph positive_two_cycle() { return graph(2, {{1, 2, pos}, {2, 1, pos}}); }
inline SignedDigraph single_arc(sigfix::Sign s = pos) { return graph(2, {{1, 2, s}}); }

}  // namespace fx

#endif
