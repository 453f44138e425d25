#include <sigfix/falsify.hpp>

#include <sigfix/generate.hpp>
#include <sigfix/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <thread>

namespace sigfix {

GraphContext::GraphContext(SignedDigraph g, Limits limits) : graph_(std::move(g)), limits_(limits) {}

const CycleCatalog& GraphContext::catalog() {
    if (!catalog_) catalog_.emplace(graph_, limits_.cycle_cap);
    return *catalog_;
}

const AnalysisReport& GraphContext::analysis() {
    if (!analysis_) analysis_ = analyze(graph_, limits_);
    return *analysis_;
}

bool GraphContext::rule_holds(Sign s) {
    auto& slot = rule_[s == Sign::positive ? 0 : 1];
    if (!slot) slot = initial_component_rule(catalog(), s).holds;
    return *slot;
}

bool GraphContext::isolated_by_vertex() {
    if (!by_vertex_) by_vertex_ = positive_cycles_isolated_by_vertex(catalog()).holds;
    return *by_vertex_;
}

bool GraphContext::has_negative_cycle() {
    if (!negative_) negative_ = sigfix::has_negative_cycle(graph_);
    return *negative_;
}

const BooleanNetwork& Instance::network() const {
    if (!network_) throw std::logic_error("instance has no network");
    return *network_;
}

const Digraph& Instance::digraph() const {
    if (!digraph_) throw std::logic_error("instance has no digraph");
    return *digraph_;
}

const std::vector<std::uint64_t>& Instance::fixed_points() {
    if (!fixed_points_) fixed_points_ = fixed_point_codes(network());
    return *fixed_points_;
}

namespace {

bool always(Instance&) { return true; }

bool at_most_one_fixed_point(Instance& in) { return in.fixed_points().size() <= 1; }
bool some_fixed_point(Instance& in) { return !in.fixed_points().empty(); }

std::vector<Property> make_registry() {
    std::vector<Property> r;
    r.push_back({"thm1", "two distinct fixed points differ on every vertex of some positive cycle", Domain::network,
                 [](Instance& in) { return in.fixed_points().size() >= 2; },
                 [](Instance& in) {
                     return separate_fixed_points(in.network(), in.context().catalog(), false).holds;
                 }});
    r.push_back({"thm2", "without negative cycles there is a fixed point", Domain::network,
                 [](Instance& in) { return !in.context().has_negative_cycle(); }, some_fixed_point});
    r.push_back({"thm3", "positive cycles isolated by an arc: at most one fixed point", Domain::network,
                 [](Instance& in) { return in.context().rule_holds(Sign::positive); }, at_most_one_fixed_point});
    r.push_back({"thm4", "positive cycles isolated by a vertex: at most one fixed point", Domain::network,
                 [](Instance& in) { return in.context().isolated_by_vertex(); }, at_most_one_fixed_point});
    r.push_back({"thm5", "negative cycles isolated by an arc: at least one fixed point", Domain::network,
                 [](Instance& in) { return in.context().rule_holds(Sign::negative); }, some_fixed_point});
    r.push_back({"thm6",
                 "strong, one negative cycle, a positive cycle, no canalized arc on the negative cycle: "
                 "fixed points x and its complement",
                 Domain::network,
                 [](Instance& in) {
                     return check_antipodal_fixed_points(in.graph(), in.network(), in.context().limits()).verdict !=
                            InstanceVerdict::not_applicable;
                 },
                 [](Instance& in) {
                     return check_antipodal_fixed_points(in.graph(), in.network(), in.context().limits()).verdict ==
                            InstanceVerdict::holds;
                 }});
    r.push_back({"thm7", "two distinct fixed points differ on every vertex of a positive cycle without special arc",
                 Domain::network, [](Instance& in) { return in.fixed_points().size() >= 2; },
                 [](Instance& in) {
                     return separate_fixed_points(in.network(), in.context().catalog(), true).holds;
                 }});
    r.push_back({"cor8", "number of fixed points at most min(2^tau_tilde_plus, A(n, g_tilde_plus))", Domain::network,
                 always,
                 [](Instance& in) { return in.fixed_points().size() <= in.context().analysis().fp_upper_bound; }});
    r.push_back({"lemma9", "a unique negative cycle has an arc on no positive cycle", Domain::graph,
                 [](Instance& in) { return in.context().catalog().of_sign(Sign::negative).size() == 1; },
                 [](Instance& in) {
                     return unique_negative_cycle_arc(in.graph(), in.context().limits()).has_value();
                 }});
    r.push_back({"harary", "a two-colouring exists iff the symmetrized graph has no negative cycle", Domain::graph,
                 always, [](Instance& in) {
                     const auto& g = in.graph();
                     auto cycles = enumerate_cycles(symmetrize(g), in.context().limits().cycle_cap);
                     bool negative = std::any_of(cycles.begin(), cycles.end(),
                                                 [](const SignedCycle& c) { return !c.is_positive(); });
                     auto result = two_coloring(g);
                     if (result.coloring) {
                         return !negative && consistent_subgraph(g, *result.coloring) == g &&
                                consistent_subgraph(g, result.coloring->complement()) == g;
                     }
                     return negative && result.obstruction && !result.obstruction->is_positive();
                 }});
    r.push_back({"richardson", "a digraph without odd cycle has a kernel", Domain::digraph,
                 [](Instance& in) { return !in.context().has_negative_cycle(); },
                 [](Instance& in) { return !kernels(in.digraph()).empty(); }});
    r.push_back({"richardson-gen",
                 "odd cycles isolated by an arc (initial component with only even cycles): a kernel exists",
                 Domain::digraph, [](Instance& in) { return in.context().rule_holds(Sign::negative); },
                 [](Instance& in) { return !kernels(in.digraph()).empty(); }});
    r.push_back({"kernel-corr", "kernels are exactly the fixed points of the negated-conjunction network",
                 Domain::digraph, always, [](Instance& in) {
                     std::vector<std::vector<Vertex>> from_fixed;
                     for (const auto& x : fixed_points(to_network(in.digraph()))) from_fixed.push_back(support(x));
                     std::sort(from_fixed.begin(), from_fixed.end());
                     return from_fixed == kernels(in.digraph());
                 }});
    return r;
}

}  // namespace

const std::vector<Property>& property_registry() {
    static const std::vector<Property> registry = make_registry();
    return registry;
}

const Property& find_property(const std::string& id) {
    for (const auto& p : property_registry()) {
        if (p.id == id) return p;
    }
    std::string known;
    for (const auto& p : property_registry()) known += (known.empty() ? "" : ", ") + p.id;
    throw std::invalid_argument("unknown property '" + id + "' (known: " + known + ")");
}

Property sign_flipped_thm5() {
    Property p = find_property("thm5");
    p.id = "thm5-sign-flipped";
    p.statement = "thm5 with the cycle sign of its hypothesis reversed";
    p.hypothesis = [](Instance& in) { return in.context().rule_holds(Sign::positive); };
    return p;
}

namespace {

struct Tally {
    std::uint64_t trials = 0;
    std::uint64_t applicable = 0;
    std::uint64_t violations = 0;
    std::vector<Counterexample> found;
};

void record(const Property& p, Instance& in, std::uint64_t unit, std::size_t keep, Tally& t) {
    ++t.trials;
    if (!p.hypothesis(in)) return;
    ++t.applicable;
    if (p.conclusion(in)) return;
    ++t.violations;
    if (t.found.size() >= keep) return;
    Counterexample c;
    c.trial = unit;
    if (p.domain == Domain::digraph) {
        c.graph = format_digraph(in.digraph());
    } else {
        c.graph = format_graph(in.graph());
        if (p.domain == Domain::network) c.network = format_network(in.network());
    }
    t.found.push_back(std::move(c));
}

double default_probability(const FalsifyConfig& cfg, std::size_t n) {
    if (cfg.arc_probability > 0.0) return cfg.arc_probability;
    return std::min(0.5, 1.0 / static_cast<double>(n));
}

bool within_indegree(const SignedDigraph& g, std::size_t limit) {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [&](Vertex v) { return g.in_neighbors(v).size() <= limit; });
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(std::min(1.0, 2 * p));
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = 1; v <= n; ++v) {
            if (coin(rng)) arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph digraph_from_index(std::size_t n, std::uint64_t index) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = 1; v <= n; ++v) {
            if (index & 1U) arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            index >>= 1;
        }
    }
    return Digraph(n, std::move(arcs));
}

void random_trial(const Property& p, const FalsifyConfig& cfg, std::uint64_t trial, Tally& t) {
    const std::uint64_t seed = derive_seed(cfg.seed, trial);
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, cfg.max_n)(rng);
    const double prob = default_probability(cfg, n);
    if (p.domain == Domain::digraph) {
        Digraph d = random_digraph(n, prob, derive_seed(seed, 0));
        GraphContext ctx(network_graph(d), cfg.limits);
        Instance in(ctx, nullptr, &d);
        record(p, in, trial, cfg.max_counterexamples, t);
        return;
    }
    for (std::uint64_t attempt = 0; attempt < 10'000; ++attempt) {
        SignedDigraph g = random_graph(n, prob, 0.5, derive_seed(seed, attempt));
        if (p.domain == Domain::graph) {
            GraphContext ctx(std::move(g), cfg.limits);
            Instance in(ctx, nullptr);
            record(p, in, trial, cfg.max_counterexamples, t);
            return;
        }
        if (!within_indegree(g, cfg.max_indegree)) continue;
        ConsistentNetworks cn(g, cfg.max_indegree);
        if (!cn.realizable()) continue;
        BooleanNetwork f = cn.sample(splitmix64(derive_seed(seed, attempt)));
        GraphContext ctx(std::move(g), cfg.limits);
        Instance in(ctx, &f);
        record(p, in, trial, cfg.max_counterexamples, t);
        return;
    }
    throw std::runtime_error("could not draw a realizable graph for trial " + std::to_string(trial));
}

struct Unit {
    std::size_t n;
    std::uint64_t index;
};

std::vector<Unit> exhaustive_units(const Property& p, const FalsifyConfig& cfg) {
    const std::size_t cap = p.domain == Domain::network ? 3 : 4;
    if (cfg.max_n > cap) {
        throw LimitExceeded("exhaustive sweeps for this property are limited to n <= " + std::to_string(cap));
    }
    std::vector<Unit> units;
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
        std::uint64_t count = p.domain == Domain::digraph ? (std::uint64_t{1} << (n * n)) : simple_graph_count(n);
        for (std::uint64_t i = 0; i < count; ++i) units.push_back({n, i});
    }
    return units;
}

void exhaustive_unit(const Property& p, const FalsifyConfig& cfg, const Unit& u, std::uint64_t number, Tally& t) {
    if (p.domain == Domain::digraph) {
        Digraph d = digraph_from_index(u.n, u.index);
        GraphContext ctx(network_graph(d), cfg.limits);
        Instance in(ctx, nullptr, &d);
        record(p, in, number, cfg.max_counterexamples, t);
        return;
    }
    GraphContext ctx(simple_graph(u.n, u.index), cfg.limits);
    if (p.domain == Domain::graph) {
        Instance in(ctx, nullptr);
        record(p, in, number, cfg.max_counterexamples, t);
        return;
    }
    ConsistentNetworks cn(ctx.graph(), cfg.max_indegree);
    cn.for_each([&](const BooleanNetwork& f) {
        Instance in(ctx, &f);
        record(p, in, number, cfg.max_counterexamples, t);
        return true;
    });
}

}  // namespace

FalsifyReport falsify(const Property& property, const FalsifyConfig& config) {
    if (config.max_n < 1) throw std::invalid_argument("falsify: max_n must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    std::vector<Unit> units;
    if (config.exhaustive) units = exhaustive_units(property, config);
    const std::uint64_t total = config.exhaustive ? units.size() : config.trials;
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::uint64_t>(config.threads, std::max<std::uint64_t>(total, 1)));

    std::vector<Tally> tallies(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
        try {
            for (std::uint64_t i = w; i < total; i += workers) {
                if (config.exhaustive) {
                    exhaustive_unit(property, config, units[i], i, tallies[w]);
                } else {
                    random_trial(property, config, i, tallies[w]);
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    FalsifyReport report;
    report.property = property.id;
    report.exhaustive = config.exhaustive;
    report.seed = config.seed;
    report.max_n = config.max_n;
    for (auto& t : tallies) {
        report.trials += t.trials;
        report.applicable += t.applicable;
        report.violations += t.violations;
        for (auto& c : t.found) report.counterexamples.push_back(std::move(c));
    }
    std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                     [](const Counterexample& a, const Counterexample& b) { return a.trial < b.trial; });
    if (report.counterexamples.size() > config.max_counterexamples) {
        report.counterexamples.resize(config.max_counterexamples);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

FalsifyReport falsify(const std::string& id, const FalsifyConfig& config) { return falsify(find_property(id), config); }

bool reverify(const Property& property, const Counterexample& c, const Limits& limits) {
    if (property.domain == Domain::digraph) {
        Digraph d = parse_digraph(c.graph);
        GraphContext ctx(network_graph(d), limits);
        Instance in(ctx, nullptr, &d);
        return property.hypothesis(in) && !property.conclusion(in);
    }
    GraphContext ctx(parse_graph(c.graph), limits);
    if (property.domain == Domain::graph) {
        Instance in(ctx, nullptr);
        return property.hypothesis(in) && !property.conclusion(in);
    }
    BooleanNetwork f = parse_network(c.network);
    if (!(interaction_graph(f) == ctx.graph())) return false;
    Instance in(ctx, &f);
    return property.hypothesis(in) && !property.conclusion(in);
}

std::string to_json(const FalsifyReport& r) {
    nlohmann::ordered_json j;
    j["format"] = "sigfix-falsify";
    j["version"] = 1;
    j["property"] = r.property;
    j["mode"] = r.exhaustive ? "exhaustive" : "random";
    j["seed"] = r.seed;
    j["max_n"] = r.max_n;
    j["trials"] = r.trials;
    j["applicable"] = r.applicable;
    j["violations"] = r.violations;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::ordered_json e;
        e["trial"] = c.trial;
        e["graph"] = c.graph;
        if (!c.network.empty()) e["network"] = c.network;
        j["counterexamples"].push_back(e);
    }
    return j.dump(2) + "\n";
}

FalsifyReport report_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.value("format", "") != "sigfix-falsify") throw std::invalid_argument("not a falsify report");
    FalsifyReport r;
    r.property = j.at("property").get<std::string>();
    r.exhaustive = j.at("mode").get<std::string>() == "exhaustive";
    r.seed = j.at("seed").get<std::uint64_t>();
    r.max_n = j.at("max_n").get<std::size_t>();
    r.trials = j.at("trials").get<std::uint64_t>();
    r.applicable = j.at("applicable").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::uint64_t>();
    for (const auto& e : j.at("counterexamples")) {
        r.counterexamples.push_back({e.at("trial").get<std::uint64_t>(), e.at("graph").get<std::string>(),
                                     e.value("network", std::string())});
    }
    return r;
}

AntipodalCensus antipodal_census(const SignedDigraph& g, const Limits& limits) {
    AntipodalCensus census;
    const std::size_t n = g.order();
    if (n == 0 || !g.is_full() || !is_strongly_connected(g)) return census;
    if (n > 6) throw LimitExceeded("antipodal_census is limited to n <= 6");
    CycleCatalog catalog(g, limits.cycle_cap);
    auto negatives = catalog.of_sign(Sign::negative);
    if (negatives.size() != 1 || catalog.of_sign(Sign::positive).empty()) return census;
    census.applicable = true;

    ConsistentNetworks cn(g);
    const auto& cycle = catalog.cycles()[negatives.front()];
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    const std::size_t pairs = std::size_t{1} << (n - 1);  // x with x_1 = 0 stands for {x, ~x}

    std::map<std::uint64_t, std::uint64_t> counts{{(std::uint64_t{1} << pairs) - 1, 1}};
    for (std::size_t v = 1; v <= n; ++v) {
        const auto& inputs = cn.inputs(static_cast<Vertex>(v));
        const std::size_t k = inputs.size();
        std::optional<std::size_t> guarded;
        Sign guard_sign = Sign::positive;
        for (const auto& a : cycle.arcs()) {
            if (a.target != static_cast<Vertex>(v)) continue;
            guarded = static_cast<std::size_t>(std::find(inputs.begin(), inputs.end(), a.source) - inputs.begin());
            guard_sign = a.sign;
        }
        auto value = [&](std::uint16_t table, std::uint64_t x) {
            std::size_t index = 0;
            for (Vertex u : inputs) index = (index << 1) | ((x >> (n - static_cast<std::size_t>(u))) & 1U);
            return static_cast<bool>((table >> index) & 1U);
        };
        std::map<std::uint64_t, std::uint64_t> masks;  // pair mask -> number of tables
        for (std::uint16_t table : cn.candidates(static_cast<Vertex>(v))) {
            if (guarded && table_canalizes(table, k, *guarded, guard_sign)) continue;
            std::uint64_t mask = 0;
            for (std::uint64_t x = 0; x < pairs; ++x) {
                const std::uint64_t y = x ^ all;
                const bool xv = (x >> (n - v)) & 1U, yv = (y >> (n - v)) & 1U;
                if (value(table, x) == xv && value(table, y) == yv) mask |= std::uint64_t{1} << x;
            }
            ++masks[mask];
        }
        std::map<std::uint64_t, std::uint64_t> next;
        for (auto [state, c] : counts) {
            for (auto [mask, m] : masks) {
                std::uint64_t add = 0;
                if (__builtin_mul_overflow(c, m, &add) || __builtin_add_overflow(next[state & mask], add, &next[state & mask])) {
                    throw LimitExceeded("antipodal_census: network count overflows 64 bits");
                }
            }
        }
        counts = std::move(next);
    }
    for (auto [state, c] : counts) {
        census.networks += c;
        if (state == 0) census.counterexamples += c;
    }
    return census;
}

}  // namespace sigfix
