#include <sigfix/generate.hpp>

#include <random>

namespace sigfix {

SignedDigraph figure1(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("figure1 needs an odd n >= 3");
    const auto P = Sign::positive;
    std::vector<Arc> arcs{{1, 2, P}, {2, 3, P}, {3, 1, P}};
    for (std::size_t t = 2; t <= (n - 1) / 2; ++t) {
        auto a = static_cast<Vertex>(2 * (t - 1)), b = static_cast<Vertex>(2 * t), c = static_cast<Vertex>(2 * t + 1);
        arcs.push_back({a, b, P});
        arcs.push_back({b, c, P});
        arcs.push_back({c, a, P});
    }
    for (std::size_t v = 3; v <= n; v += 2) {
        arcs.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v), Sign::negative});
    }
    return SignedDigraph(n, std::move(arcs));
}

SignedDigraph double_cycle(std::size_t len1, Sign sign1, std::size_t len2, Sign sign2) {
    if (len1 < 1 || len2 < 1) throw std::invalid_argument("double_cycle: lengths must be at least 1");
    if (len1 == 1 && len2 == 1 && sign1 == sign2) {
        throw std::invalid_argument("double_cycle: two loops of the same sign would be the same arc");
    }
    const std::size_t n = len1 + len2 - 1;
    std::vector<Arc> arcs;
    auto add_cycle = [&](const std::vector<Vertex>& cycle, Sign s) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            bool closing = i + 1 == cycle.size();
            arcs.push_back({cycle[i], cycle[(i + 1) % cycle.size()], closing ? s : Sign::positive});
        }
    };
    std::vector<Vertex> first{1}, second{1};
    for (std::size_t i = 2; i <= len1; ++i) first.push_back(static_cast<Vertex>(i));
    for (std::size_t i = 0; i + 1 < len2; ++i) second.push_back(static_cast<Vertex>(len1 + 1 + i));
    add_cycle(first, sign1);
    add_cycle(second, sign2);
    return SignedDigraph(n, std::move(arcs));
}

SignedDigraph random_graph(std::size_t n, double p, double q, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 0.5)) throw std::invalid_argument("random_graph: p must lie in [0, 1/2]");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("random_graph: q must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution positive(2 * p * (1 - q)), negative(2 * p * q);
    std::vector<Arc> arcs;
    for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = 1; v <= n; ++v) {
            if (positive(rng)) arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), Sign::positive});
            if (negative(rng)) arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), Sign::negative});
        }
    }
    return SignedDigraph(n, std::move(arcs));
}

std::uint64_t simple_graph_count(std::size_t n) {
    if (n > 5) throw LimitExceeded("simple graph enumeration is limited to n <= 5");
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n * n; ++i) c *= 3;
    return c;
}

SignedDigraph simple_graph(std::size_t n, std::uint64_t index) {
    if (index >= simple_graph_count(n)) throw std::out_of_range("simple graph index out of range");
    std::vector<Arc> arcs;
    for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = 1; v <= n; ++v) {
            auto digit = index % 3;
            index /= 3;
            if (digit == 0) continue;
            arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), digit == 1 ? Sign::positive : Sign::negative});
        }
    }
    return SignedDigraph(n, std::move(arcs));
}

bool for_each_simple_graph(std::size_t n, const std::function<bool(std::uint64_t, const SignedDigraph&)>& visit) {
    const std::uint64_t total = simple_graph_count(n);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (!visit(i, simple_graph(n, i))) return false;
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ index);
}

}  // namespace sigfix
