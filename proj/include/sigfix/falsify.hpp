#ifndef SIGFIX_FALSIFY_HPP
#define SIGFIX_FALSIFY_HPP

#include <sigfix/boolnet.hpp>
#include <sigfix/kernels.hpp>
#include <sigfix/structure.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sigfix {

/// Lazily computed facts about one graph, shared by every network tested on it.
class GraphContext {
public:
    GraphContext(SignedDigraph g, Limits limits);

    const SignedDigraph& graph() const { return graph_; }
    const Limits& limits() const { return limits_; }
    const CycleCatalog& catalog();
    const AnalysisReport& analysis();
    bool rule_holds(Sign s);
    bool isolated_by_vertex();
    bool has_negative_cycle();

private:
    SignedDigraph graph_;
    Limits limits_;
    std::optional<CycleCatalog> catalog_;
    std::optional<AnalysisReport> analysis_;
    std::optional<bool> rule_[2];
    std::optional<bool> by_vertex_;
    std::optional<bool> negative_;
};

/// One test case: a signed graph with an optional consistent network, or
/// an unsigned digraph (whose context holds its all-negative encoding).
class Instance {
public:
    Instance(GraphContext& context, const BooleanNetwork* network, const Digraph* digraph = nullptr)
        : context_(context), network_(network), digraph_(digraph) {}

    GraphContext& context() { return context_; }
    const SignedDigraph& graph() const { return context_.graph(); }
    const BooleanNetwork& network() const;
    const Digraph& digraph() const;
    const std::vector<std::uint64_t>& fixed_points();

private:
    GraphContext& context_;
    const BooleanNetwork* network_;
    const Digraph* digraph_;
    std::optional<std::vector<std::uint64_t>> fixed_points_;
};

enum class Domain { network, graph, digraph };

struct Property {
    std::string id;
    std::string statement;
    Domain domain = Domain::network;
    std::function<bool(Instance&)> hypothesis;
    std::function<bool(Instance&)> conclusion;
};

/// thm1..thm7, cor8, lemma9, harary, richardson, richardson-gen, kernel-corr.
const std::vector<Property>& property_registry();
/// Throws std::invalid_argument for an unknown id.
const Property& find_property(const std::string& id);

/// thm5 with its hypothesis read for positive instead of negative cycles;
/// a sound harness must find counterexamples to it.
Property sign_flipped_thm5();

struct FalsifyConfig {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 5;
    std::size_t max_indegree = ConsistentNetworks::max_indegree_limit;
    /// Sweep every graph (and every consistent network) with n <= max_n
    /// instead of sampling; `trials` is then ignored.
    bool exhaustive = false;
    std::size_t threads = 1;
    std::size_t max_counterexamples = 10;
    /// Arc probability passed to random_graph; 0 picks min(1/2, 1/n).
    double arc_probability = 0.0;
    Limits limits;
};

struct Counterexample {
    std::uint64_t trial = 0;
    std::string graph;    // sdigraph or digraph text
    std::string network;  // boolnet text, empty for graph properties
};

struct FalsifyReport {
    std::string property;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::size_t max_n = 0;
    std::uint64_t trials = 0;
    /// Trials whose hypothesis held.
    std::uint64_t applicable = 0;
    std::uint64_t violations = 0;
    /// The first few violations, by trial index.
    std::vector<Counterexample> counterexamples;
    double wall_seconds = 0.0;
};

FalsifyReport falsify(const Property& property, const FalsifyConfig& config);
FalsifyReport falsify(const std::string& id, const FalsifyConfig& config);

/// Re-parses a recorded counterexample and checks that it still violates
/// the property.
bool reverify(const Property& property, const Counterexample& c, const Limits& limits = {});

/// Structured form; wall time is left out so equal configs give equal text.
std::string to_json(const FalsifyReport& report);
FalsifyReport report_from_json(const std::string& text);

/// Exact count of the consistent networks of g satisfying the two-antipodal
/// -fixed-points premises, and of those among them without such a pair.
/// Counts per-vertex table choices with a product over antipodal pairs
/// instead of visiting every network.
struct AntipodalCensus {
    bool applicable = false;  // strong, one negative cycle, a positive cycle
    std::uint64_t networks = 0;
    std::uint64_t counterexamples = 0;
};
AntipodalCensus antipodal_census(const SignedDigraph& g, const Limits& limits = {});

}  // namespace sigfix

#endif
