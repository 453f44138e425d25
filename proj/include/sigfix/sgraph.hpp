#ifndef SIGFIX_SGRAPH_HPP
#define SIGFIX_SGRAPH_HPP

#include <sigfix/common.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigfix {

enum class Sign : std::uint8_t { positive = 0, negative = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return (a == b) ? Sign::positive : Sign::negative;
}
constexpr Sign opposite(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr char to_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct Arc {
    Vertex source = 0;
    Vertex target = 0;
    Sign sign = Sign::positive;

    bool is_loop() const { return source == target; }
    auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& arc);

/// Assignment of a bit to each of the vertices 1..n.
class BitState {
public:
    BitState() = default;
    explicit BitState(std::size_t n, bool value = false) : bits_(n, value) {}

    /// "0110" -> x_1 = 0, x_2 = 1, ...
    static BitState from_string(std::string_view bits);
    /// Decodes a state code in which x_1 is the most significant bit.
    static BitState from_code(std::uint64_t code, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool operator[](Vertex v) const { return bits_[static_cast<std::size_t>(v - 1)]; }
    bool at(Vertex v) const;

    void set(Vertex v, bool value);
    BitState flipped(Vertex v) const;
    BitState complement() const;

    /// Inverse of from_code; requires size() <= 64.
    std::uint64_t code() const;
    std::string to_string() const;

    auto operator<=>(const BitState&) const = default;

private:
    std::vector<bool> bits_;
};

std::size_t hamming_distance(const BitState& x, const BitState& y);

/// Directed simple cycle given as its arc sequence. Canonical cycles start
/// at their smallest vertex.
class SignedCycle {
public:
    explicit SignedCycle(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t length() const { return arcs_.size(); }
    Sign sign() const { return sign_; }
    bool is_positive() const { return sign_ == Sign::positive; }

    /// Vertices in traversal order, starting at the first arc's source.
    std::vector<Vertex> vertices() const;
    bool contains(Vertex v) const;
    bool contains(const Arc& arc) const;

    std::string to_string() const;
    auto operator<=>(const SignedCycle& other) const { return arcs_ <=> other.arcs_; }
    bool operator==(const SignedCycle& other) const { return arcs_ == other.arcs_; }

private:
    std::vector<Arc> arcs_;
    Sign sign_ = Sign::positive;
};

/// Directed simple path; may be trivial (a single vertex, no arcs).
class SignedPath {
public:
    explicit SignedPath(Vertex start);
    explicit SignedPath(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    Vertex front() const { return start_; }
    Vertex back() const { return arcs_.empty() ? start_ : arcs_.back().target; }
    std::size_t length() const { return arcs_.size(); }
    Sign sign() const { return sign_; }
    std::vector<Vertex> vertices() const;

private:
    Vertex start_ = 0;
    std::vector<Arc> arcs_;
    Sign sign_ = Sign::positive;
};

/// Immutable signed digraph on a subset of the ids 1..order(). Parallel arcs
/// of opposite signs and loops are allowed; duplicate arcs are not.
class SignedDigraph {
public:
    SignedDigraph() = default;
    /// Graph on all vertices 1..n.
    SignedDigraph(std::size_t n, std::vector<Arc> arcs);
    /// Graph on an explicit vertex subset of 1..n.
    SignedDigraph(std::size_t n, std::vector<Vertex> vertices, std::vector<Arc> arcs);

    std::size_t order() const { return n_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool has_vertex(Vertex v) const;
    bool is_full() const { return vertices_.size() == n_; }

    /// Arcs in construction order.
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(const Arc& arc) const;

    /// Out-arcs sorted by (target, sign).
    std::span<const Arc> out_arcs(Vertex v) const;
    /// In-arcs sorted by (source, sign).
    std::span<const Arc> in_arcs(Vertex v) const;
    std::size_t in_degree(Vertex v) const { return in_arcs(v).size(); }

    /// Distinct in-neighbours, ascending.
    std::vector<Vertex> in_neighbors(Vertex v) const;
    std::vector<Vertex> in_neighbors(Vertex v, Sign sign) const;
    std::vector<Vertex> sources() const;

    /// Same order, vertex set and arc set (arc order is irrelevant).
    bool operator==(const SignedDigraph& other) const;

private:
    void build();
    std::size_t slot(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<char> present_;
    std::vector<Arc> arcs_;
    std::vector<Arc> out_;
    std::vector<std::size_t> out_begin_;
    std::vector<Arc> in_;
    std::vector<std::size_t> in_begin_;
};

struct Component {
    std::vector<Vertex> vertices;
    bool initial = false;
    bool terminal = false;
    /// The induced subgraph has at least one arc (a loop counts).
    bool nontrivial = false;
};

struct ComponentDecomposition {
    /// Topological order: no arc goes from a later to an earlier component.
    std::vector<Component> components;
    /// component_of[v] is the index of v's component, -1 for absent ids.
    std::vector<int> component_of;

    int index_of(Vertex v) const { return component_of.at(static_cast<std::size_t>(v)); }
};

ComponentDecomposition strong_components(const SignedDigraph& g);
bool is_strongly_connected(const SignedDigraph& g);

/// G[I], keeping the original vertex ids.
SignedDigraph induced(const SignedDigraph& g, std::span<const Vertex> keep);
/// G^I: drops every arc whose target is in I.
SignedDigraph remove_incoming(const SignedDigraph& g, std::span<const Vertex> targets);
SignedDigraph without_arc(const SignedDigraph& g, const Arc& arc);
SignedDigraph without_vertex(const SignedDigraph& g, Vertex v);
SignedDigraph without_vertices(const SignedDigraph& g, std::span<const Vertex> removed);
/// G*: adds the reverse of every arc with the same sign.
SignedDigraph symmetrize(const SignedDigraph& g);
/// G(x): positive arcs between equal bits and negative arcs between distinct bits.
SignedDigraph consistent_subgraph(const SignedDigraph& g, const BitState& x);
/// Same vertices, every arc sign reversed.
SignedDigraph flip_signs(const SignedDigraph& g);

/// Visits every simple cycle once, in canonical rotation and lexicographic
/// order of (vertex sequence, sign sequence). The visitor returns false to
/// stop; the function returns false if it was stopped.
bool for_each_cycle(const SignedDigraph& g, const std::function<bool(const SignedCycle&)>& visit);

/// All simple cycles (loops included). Throws CycleCapExceeded past `cap`.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::size_t cap = default_cycle_cap);

/// Polynomial: a strong component has a negative cycle iff it admits no
/// sign-consistent two-colouring.
bool has_negative_cycle(const SignedDigraph& g);
/// A negative cycle of g, if any (located with the polynomial test, then
/// extracted by search inside the offending component).
std::optional<SignedCycle> find_negative_cycle(const SignedDigraph& g);

bool has_positive_cycle(const SignedDigraph& g);
std::vector<Vertex> vertices_on_positive_cycles(const SignedDigraph& g, std::size_t cap = default_cycle_cap);

/// Path from some vertex of `from` to `to` avoiding `forbidden` entirely.
/// A trivial path counts when `to` is in `from`.
std::optional<SignedPath> find_path(const SignedDigraph& g, std::span<const Vertex> from,
                                    std::span<const Vertex> forbidden, Vertex to);
bool reachable(const SignedDigraph& g, std::span<const Vertex> from,
               std::span<const Vertex> forbidden, Vertex to);

}  // namespace sigfix

#endif
