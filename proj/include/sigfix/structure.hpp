#ifndef SIGFIX_STRUCTURE_HPP
#define SIGFIX_STRUCTURE_HPP

#include <sigfix/sgraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sigfix {

struct Limits {
    std::size_t cycle_cap = default_cycle_cap;
    /// Largest vertex count accepted by the exponential subset searches.
    std::size_t max_search_vertices = 15;
};

/// All simple cycles of a graph, enumerated once. Cycles of the subgraphs
/// the structural tests look at (G minus an arc, G^I, induced subgraphs)
/// are exactly the catalogued cycles avoiding the removed arc/vertices, so
/// those tests filter this list instead of enumerating again.
class CycleCatalog {
public:
    CycleCatalog(const SignedDigraph& g, std::size_t cap = default_cycle_cap);

    const SignedDigraph& graph() const { return graph_; }
    const std::vector<SignedCycle>& cycles() const { return cycles_; }
    /// Indices of cycles of the given sign, in enumeration order.
    std::vector<std::size_t> of_sign(Sign s) const;
    bool visits(std::size_t cycle, Vertex v) const;
    /// Index of c in the catalog; throws if c is not a cycle of the graph.
    std::size_t index_of(const SignedCycle& c) const;

private:
    SignedDigraph graph_;
    std::vector<SignedCycle> cycles_;
    std::vector<std::vector<char>> visits_;
};

enum class SpecialArcFailure {
    none,
    target_is_source,       // (i): the target has no other in-arc
    target_on_positive,     // (ii): the target lies on a positive cycle of G minus a
    not_shielded,           // (iii): a source or positive cycle reaches the target around C
};

const char* to_string(SpecialArcFailure f);

struct SpecialArcVerdict {
    Arc arc;
    bool holds = false;
    SpecialArcFailure failed = SpecialArcFailure::none;
};

/// Evaluates whether `a` (u -> v) is a special arc of the positive cycle `c`
/// in g, testing conditions in G minus a in the order i, ii, iii.
SpecialArcVerdict is_special_arc(const SignedDigraph& g, const SignedCycle& c, const Arc& a,
                                 const Limits& limits = {});
SpecialArcVerdict is_special_arc(const CycleCatalog& catalog, const SignedCycle& c, const Arc& a);

/// First special arc of c in cycle order, if any.
std::optional<Arc> find_special_arc(const CycleCatalog& catalog, const SignedCycle& c);

/// Positive cycles of g having no special arc, in enumeration order.
std::vector<SignedCycle> positive_cycles_without_special_arc(const CycleCatalog& catalog);

struct RuleWitness {
    SignedCycle cycle;
    Arc arc;        // chosen arc (arc rules) or the in-arc of `vertex` on the cycle
    Vertex vertex;  // target of `arc`
};

struct RuleVerdict {
    bool holds = false;
    /// One witness per cycle of the tested sign when the rule holds.
    std::vector<RuleWitness> witnesses;
    /// First cycle without a witness when the rule fails.
    std::optional<SignedCycle> violated_by;
};

/// Every cycle of sign `s` has an arc a = (u -> v) such that G minus a has a
/// non-trivial initial strong component containing v whose induced subgraph
/// has no cycle of sign `s`. For s = positive this bounds the number of
/// fixed points by one; for s = negative it guarantees a fixed point.
RuleVerdict initial_component_rule(const CycleCatalog& catalog, Sign s);
RuleVerdict initial_component_rule(const SignedDigraph& g, Sign s, const Limits& limits = {});

/// Uniqueness by arc: initial_component_rule(g, positive).
RuleVerdict positive_cycles_isolated_by_arc(const SignedDigraph& g, const Limits& limits = {});
/// Existence by arc: initial_component_rule(g, negative).
RuleVerdict negative_cycles_isolated_by_arc(const SignedDigraph& g, const Limits& limits = {});
/// Every positive cycle C has a vertex v of in-degree >= 2 lying on no other
/// positive cycle and whose in-neighbours all belong to C.
RuleVerdict positive_cycles_isolated_by_vertex(const SignedDigraph& g, const Limits& limits = {});
RuleVerdict positive_cycles_isolated_by_vertex(const CycleCatalog& catalog);

/// Minimum number of vertices whose deletion leaves no positive cycle.
std::size_t tau_plus(const SignedDigraph& g, const Limits& limits = {});
/// Shortest positive cycle; infinite without positive cycles.
Length g_plus(const SignedDigraph& g, const Limits& limits = {});
/// Minimum |I| such that every positive cycle of G^I has a special arc.
std::size_t tau_tilde_plus(const SignedDigraph& g, const Limits& limits = {});
/// Shortest positive cycle without special arc; infinite if none.
Length g_tilde_plus(const SignedDigraph& g, const Limits& limits = {});

/// The same quantities from a shared catalog.
std::size_t tau_plus(const CycleCatalog& catalog, const Limits& limits = {});
std::size_t tau_tilde_plus(const CycleCatalog& catalog, const Limits& limits = {});
/// Lexicographically first minimum vertex set realising tau_tilde_plus.
std::vector<Vertex> tau_tilde_plus_set(const CycleCatalog& catalog, const Limits& limits = {});

struct TwoColoringResult {
    /// x with G(x) = G; the smallest vertex of each connected component of G* gets 0.
    std::optional<BitState> coloring;
    /// Otherwise a negative cycle of G* certifying that none exists.
    std::optional<SignedCycle> obstruction;
};

TwoColoringResult two_coloring(const SignedDigraph& g);

/// A non-trivial initial strong component whose induced subgraph has no
/// positive cycle: then no network on g has a fixed point.
bool no_fixed_point_condition(const SignedDigraph& g, const Limits& limits = {});
/// No negative cycle and a non-trivial initial component: at least two fixed points.
bool two_fixed_points_condition(const SignedDigraph& g);

/// For a graph with exactly one negative cycle, an arc of that cycle lying
/// on no positive cycle (nullopt would contradict the structure theory).
/// Throws std::invalid_argument when g has zero or several negative cycles.
std::optional<Arc> unique_negative_cycle_arc(const SignedDigraph& g, const Limits& limits = {});

struct AnalysisReport {
    std::size_t n = 0;
    std::size_t tau_plus = 0;
    std::size_t tau_tilde_plus = 0;
    Length g_plus;
    Length g_tilde_plus;
    RuleVerdict thm3;  // positive cycles isolated by an arc
    RuleVerdict thm4;  // positive cycles isolated by a vertex
    RuleVerdict thm5;  // negative cycles isolated by an arc
    bool nofp_condition = false;
    bool twofp_condition = false;
    /// Strong, exactly one positive cycle, at least one negative cycle.
    bool unique_positive_strong = false;
    /// Strong, exactly one negative cycle, at least one positive cycle.
    bool unique_negative_strong = false;
    std::vector<Vertex> tau_tilde_set;
    std::uint64_t fp_upper_bound = 0;
};

AnalysisReport analyze(const SignedDigraph& g, const Limits& limits = {});

/// `key = value` lines for the ten report keys, in fixed order.
std::string to_key_value(const AnalysisReport& report);

}  // namespace sigfix

#endif
