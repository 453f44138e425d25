#include <sigfix/kernels.hpp>

#include <algorithm>

namespace sigfix {

Digraph::Digraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs)
    : n_(n), arcs_(std::move(arcs)), sorted_(arcs_) {
    for (auto [u, v] : arcs_) {
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n) {
            throw std::invalid_argument("arc " + std::to_string(u) + "->" + std::to_string(v) + " outside 1.." +
                                        std::to_string(n));
        }
    }
    std::sort(sorted_.begin(), sorted_.end());
    auto dup = std::adjacent_find(sorted_.begin(), sorted_.end());
    if (dup != sorted_.end()) {
        throw std::invalid_argument("duplicate arc " + std::to_string(dup->first) + "->" + std::to_string(dup->second));
    }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), std::make_pair(u, v));
}

std::vector<Vertex> Digraph::in_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto [a, b] : sorted_) {
        if (b == v) out.push_back(a);
    }
    return out;
}

std::vector<Vertex> Digraph::out_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto [a, b] : sorted_) {
        if (a == v) out.push_back(b);
    }
    return out;
}

bool Digraph::operator==(const Digraph& other) const { return n_ == other.n_ && sorted_ == other.sorted_; }

std::vector<std::vector<Vertex>> kernels(const Digraph& d) {
    const std::size_t n = d.order();
    if (n > max_kernel_scan) {
        throw LimitExceeded("kernels: " + std::to_string(n) + " vertices exceeds " + std::to_string(max_kernel_scan));
    }
    // bit v-1 stands for vertex v
    std::vector<std::uint32_t> out_mask(n, 0);
    for (auto [u, v] : d.arcs()) out_mask[static_cast<std::size_t>(u - 1)] |= std::uint32_t{1} << (v - 1);
    std::vector<std::vector<Vertex>> found;
    for (std::uint32_t k = 0; k < (std::uint32_t{1} << n); ++k) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            bool inside = (k >> v) & 1U;
            ok = inside ? (out_mask[v] & k) == 0 : (out_mask[v] & k) != 0;
        }
        if (!ok) continue;
        std::vector<Vertex> set;
        for (std::size_t v = 0; v < n; ++v) {
            if ((k >> v) & 1U) set.push_back(static_cast<Vertex>(v + 1));
        }
        found.push_back(std::move(set));
    }
    std::sort(found.begin(), found.end());
    return found;
}

SignedDigraph to_signed(const Digraph& d) {
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v, Sign::negative});
    return SignedDigraph(d.order(), std::move(arcs));
}

Digraph transpose(const Digraph& d) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (auto [u, v] : d.arcs()) arcs.emplace_back(v, u);
    return Digraph(d.order(), std::move(arcs));
}

SignedDigraph network_graph(const Digraph& d) { return to_signed(transpose(d)); }

bool richardson_condition(const Digraph& d) { return !has_negative_cycle(to_signed(d)); }

bool generalized_condition(const Digraph& d, const Limits& limits) {
    return negative_cycles_isolated_by_arc(network_graph(d), limits).holds;
}

bool generalized_condition_on_d(const Digraph& d, const Limits& limits) {
    return negative_cycles_isolated_by_arc(to_signed(d), limits).holds;
}

BooleanNetwork to_network(const Digraph& d) {
    std::vector<LocalFunction> locals;
    for (std::size_t v = 1; v <= d.order(); ++v) {
        auto succs = d.out_neighbors(static_cast<Vertex>(v));
        std::vector<bool> table(std::size_t{1} << succs.size(), false);
        table[0] = true;
        locals.emplace_back(std::move(succs), table);
    }
    return BooleanNetwork(std::move(locals));
}

std::vector<Vertex> support(const BitState& x) {
    std::vector<Vertex> out;
    for (std::size_t v = 1; v <= x.size(); ++v) {
        if (x[static_cast<Vertex>(v)]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace sigfix
