#ifndef SIGFIX_KERNELS_HPP
#define SIGFIX_KERNELS_HPP

#include <sigfix/boolnet.hpp>

#include <utility>
#include <vector>

namespace sigfix {

/// Unsigned digraph on 1..n; loops allowed, duplicate arcs rejected.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs);

    std::size_t order() const { return n_; }
    /// Arcs in construction order.
    const std::vector<std::pair<Vertex, Vertex>>& arcs() const { return arcs_; }
    bool has_arc(Vertex u, Vertex v) const;
    /// Distinct in-neighbours of v, ascending.
    std::vector<Vertex> in_neighbors(Vertex v) const;
    /// Distinct out-neighbours of v, ascending.
    std::vector<Vertex> out_neighbors(Vertex v) const;

    bool operator==(const Digraph& other) const;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs_;
    std::vector<std::pair<Vertex, Vertex>> sorted_;
};

inline constexpr std::size_t max_kernel_scan = 24;

/// Independent sets K such that every vertex outside K has an arc into K,
/// each sorted, in lexicographic order.
std::vector<std::vector<Vertex>> kernels(const Digraph& d);

/// Every arc reversed.
Digraph transpose(const Digraph& d);

/// Every arc made negative, so that odd cycles become negative cycles.
SignedDigraph to_signed(const Digraph& d);
/// Interaction graph of to_network(d): the transpose of d, all negative.
SignedDigraph network_graph(const Digraph& d);

/// No odd cycle (then a kernel exists).
bool richardson_condition(const Digraph& d);
/// Every odd cycle has an arc (u, v) such that D minus (u, v) has a
/// non-trivial terminal strong component containing u with only even
/// cycles. This is the negative-cycle arc rule on network_graph(d), so it
/// guarantees a kernel.
bool generalized_condition(const Digraph& d, const Limits& limits = {});

/// The same rule read on D itself: an initial component containing v.
/// Not sufficient for a kernel: 1->2, 1->3, 2->1, 2->2 satisfies it (arc
/// 2->2, component {1,2}) and has none.
bool generalized_condition_on_d(const Digraph& d, const Limits& limits = {});

/// f_v = 1 iff x_w = 0 for every out-neighbour w (constant 1 without
/// out-neighbours). Its fixed points are the indicator vectors of kernels.
BooleanNetwork to_network(const Digraph& d);

/// Sorted vertex set read off a state's 1 bits.
std::vector<Vertex> support(const BitState& x);

}  // namespace sigfix

#endif
