#ifndef SIGFIX_GENERATE_HPP
#define SIGFIX_GENERATE_HPP

#include <sigfix/sgraph.hpp>

#include <cstdint>
#include <functional>

namespace sigfix {

/// Chain of positive triangles sharing a vertex with the next one, plus a
/// negative loop on every odd vertex from 3 on. n odd, n >= 3.
SignedDigraph figure1(std::size_t n);

/// Two cycles sharing exactly vertex 1: 1 -> 2 -> ... -> len1 -> 1 and
/// 1 -> len1+1 -> ... -> len1+len2-1 -> 1. All arcs are positive except the
/// closing arc of each cycle, which carries that cycle's sign.
SignedDigraph double_cycle(std::size_t len1, Sign sign1, std::size_t len2, Sign sign2);

/// Each ordered pair (u, v), loops included, independently gets a positive
/// arc with probability 2p(1-q) and a negative arc with probability 2pq.
/// Requires p <= 1/2 and q in [0, 1]. Reproducible from the seed.
SignedDigraph random_graph(std::size_t n, double p, double q, std::uint64_t seed);

/// Simple signed digraphs on 1..n: at most one arc per ordered pair.
/// Graph number `index` (< 3^(n*n)) reads the pairs (1,1), (1,2), ..., (n,n)
/// as base-3 digits, least significant first: 0 none, 1 positive, 2 negative.
std::uint64_t simple_graph_count(std::size_t n);
SignedDigraph simple_graph(std::size_t n, std::uint64_t index);
/// Visits all simple graphs in index order; the visitor returns false to stop.
bool for_each_simple_graph(std::size_t n, const std::function<bool(std::uint64_t, const SignedDigraph&)>& visit);

/// SplitMix64 step, used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace sigfix

#endif
