#ifndef SIGFIX_BOOLNET_HPP
#define SIGFIX_BOOLNET_HPP

#include <sigfix/structure.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace sigfix {

/// f_v as a truth table over an ordered input list. Index j of the table
/// encodes the inputs with the first input as the most significant bit.
class LocalFunction {
public:
    static constexpr std::size_t max_arity = 20;

    LocalFunction() : LocalFunction(false) {}
    explicit LocalFunction(bool constant);
    LocalFunction(std::vector<Vertex> inputs, const std::vector<bool>& table);
    /// Table given as bits of an integer (bit j = output at index j); arity <= 6.
    static LocalFunction from_bits(std::vector<Vertex> inputs, std::uint64_t bits);

    const std::vector<Vertex>& inputs() const { return inputs_; }
    std::size_t arity() const { return inputs_.size(); }
    std::size_t table_size() const { return std::size_t{1} << inputs_.size(); }
    bool value(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }
    /// "0110"-style table string.
    std::string table_string() const;

    bool operator==(const LocalFunction&) const = default;

private:
    std::vector<Vertex> inputs_;
    std::vector<std::uint64_t> words_;
};

class BooleanNetwork {
public:
    BooleanNetwork() = default;
    /// locals[v - 1] is f_v; every input id must lie in 1..locals.size().
    explicit BooleanNetwork(std::vector<LocalFunction> locals);

    std::size_t size() const { return locals_.size(); }
    const LocalFunction& local(Vertex v) const;

    /// f_v on the state with the given code (x_1 most significant), n <= 64.
    bool component(Vertex v, std::uint64_t code) const {
        const auto& lf = locals_[static_cast<std::size_t>(v - 1)];
        std::size_t index = 0;
        for (Vertex u : lf.inputs()) index = (index << 1) | ((code >> (size() - static_cast<std::size_t>(u))) & 1U);
        return lf.value(index);
    }
    std::uint64_t apply(std::uint64_t code) const;

    bool operator==(const BooleanNetwork&) const = default;

private:
    friend class ConsistentNetworks;
    std::vector<LocalFunction> locals_;
};

/// Largest n accepted by the full state-space scans.
inline constexpr std::size_t max_scan_size = 24;
inline constexpr std::size_t max_attractor_size = 20;

BitState eval(const BooleanNetwork& f, const BitState& x);
/// f_v(x with x_u = 1) - f_v(x with x_u = 0), in {-1, 0, 1}.
int derivative(const BooleanNetwork& f, Vertex v, Vertex u, const BitState& x);
SignedDigraph interaction_graph(const BooleanNetwork& f);
/// Fixed points in increasing binary order.
std::vector<BitState> fixed_points(const BooleanNetwork& f);
std::vector<std::uint64_t> fixed_point_codes(const BooleanNetwork& f);

/// x <=_v y: x <= y on the positive in-neighbours of v and x >= y on the negative ones.
bool leq_v(const SignedDigraph& g, Vertex v, const BitState& x, const BitState& y);

/// Whether f canalizes the arc a of its interaction graph.
bool is_canalized(const BooleanNetwork& f, const Arc& a);

/// f_v replaced by the constant values[v] for v in `pinned`.
BooleanNetwork pin(const BooleanNetwork& f, std::span<const Vertex> pinned, const BitState& values);

struct Attractor {
    std::vector<BitState> states;  // increasing order
    bool is_fixed_point() const { return states.size() == 1; }
};

/// Terminal strong components of the asynchronous state graph, ordered by
/// their smallest state.
std::vector<Attractor> attractors(const BooleanNetwork& f);

/// Thrown when no local function realises the signed in-arcs of some vertex.
class UnrealizableGraph : public std::invalid_argument {
public:
    UnrealizableGraph(Vertex v, const std::string& why);
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

/// The networks whose interaction graph is exactly g. For each vertex the
/// inputs are its distinct in-neighbours (ascending) and the candidates are
/// the truth tables with exactly the required signed dependencies.
class ConsistentNetworks {
public:
    static constexpr std::size_t max_indegree_limit = 4;

    explicit ConsistentNetworks(const SignedDigraph& g, std::size_t max_indegree = max_indegree_limit);

    const SignedDigraph& graph() const { return graph_; }
    std::size_t size() const { return graph_.order(); }
    const std::vector<Vertex>& inputs(Vertex v) const { return inputs_[slot(v)]; }
    /// Candidate tables for v (bit j = output at index j), in increasing order.
    const std::vector<std::uint16_t>& candidates(Vertex v) const { return *candidates_[slot(v)]; }
    bool realizable() const;
    /// First vertex without candidates, if any.
    std::optional<Vertex> unrealizable_vertex() const;

    /// Product of the candidate counts; throws LimitExceeded past 2^64 - 1.
    std::uint64_t count() const;
    /// Network number `index`; vertex 1 varies slowest.
    BooleanNetwork at(std::uint64_t index) const;
    BooleanNetwork from_choice(std::span<const std::uint16_t> tables) const;
    /// Visits every network in index order; the visitor returns false to stop.
    bool for_each(const std::function<bool(const BooleanNetwork&)>& visit) const;
    /// Independent uniform choice per vertex; throws UnrealizableGraph.
    BooleanNetwork sample(std::uint64_t seed) const;

private:
    std::size_t slot(Vertex v) const { return static_cast<std::size_t>(v - 1); }

    SignedDigraph graph_;
    std::vector<std::vector<Vertex>> inputs_;
    std::vector<const std::vector<std::uint16_t>*> candidates_;
};

/// Truth tables of arity k (k <= 4) grouped by signature. The signature
/// has one base-4 digit per input, first input most significant:
/// 0 no dependence, 1 positive only, 2 negative only, 3 both.
const std::vector<std::uint16_t>& tables_with_signature(std::size_t k, std::size_t signature);
std::size_t table_signature(std::uint16_t table, std::size_t k);
/// Whether the table canalizes its input i taken with the given sign.
bool table_canalizes(std::uint16_t table, std::size_t k, std::size_t i, Sign s);

std::vector<BooleanNetwork> enumerate_consistent(const SignedDigraph& g,
                                                 std::size_t max_indegree = ConsistentNetworks::max_indegree_limit);
BooleanNetwork sample_consistent(const SignedDigraph& g, std::uint64_t seed,
                                 std::size_t max_indegree = ConsistentNetworks::max_indegree_limit);
std::size_t max_fixed_points(const SignedDigraph& g,
                             std::size_t max_indegree = ConsistentNetworks::max_indegree_limit);

enum class InstanceVerdict { not_applicable, holds, counterexample };
const char* to_string(InstanceVerdict v);

/// Strong graph with exactly one negative cycle and a positive cycle, f
/// canalizing no arc of the negative cycle: then some x has both x and its
/// complement as fixed points.
struct AntipodalCheck {
    InstanceVerdict verdict = InstanceVerdict::not_applicable;
    std::optional<BitState> witness;  // x with f(x) = x and f(~x) = ~x
};
AntipodalCheck check_antipodal_fixed_points(const SignedDigraph& g, const BooleanNetwork& f,
                                            const Limits& limits = {});
/// Same, with the catalog of interaction_graph(f) supplied by the caller
/// (not re-checked).
AntipodalCheck check_antipodal_fixed_points(const CycleCatalog& catalog, const BooleanNetwork& f);

struct PairSeparation {
    BitState x;
    BitState y;
    /// A positive cycle on whose vertices x and y all differ.
    std::optional<SignedCycle> cycle;
};

struct SeparationReport {
    bool holds = true;
    std::vector<PairSeparation> pairs;
};

/// For every pair of distinct fixed points, a positive cycle of the
/// interaction graph on which they disagree everywhere. With
/// `without_special_arc`, the cycle must also have no special arc.
/// The catalog must be built on interaction_graph(f).
SeparationReport separate_fixed_points(const BooleanNetwork& f, const CycleCatalog& catalog,
                                       bool without_special_arc);
SeparationReport separate_fixed_points(const BooleanNetwork& f, bool without_special_arc, const Limits& limits = {});

}  // namespace sigfix

#endif
