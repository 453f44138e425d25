#include <sigfix/structure.hpp>

#include <sigfix/bounds.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace sigfix {

CycleCatalog::CycleCatalog(const SignedDigraph& g, std::size_t cap)
    : graph_(g), cycles_(enumerate_cycles(g, cap)) {
    visits_.reserve(cycles_.size());
    for (const auto& c : cycles_) {
        std::vector<char> mask(g.order() + 1, 0);
        for (const auto& a : c.arcs()) mask[static_cast<std::size_t>(a.source)] = 1;
        visits_.push_back(std::move(mask));
    }
}

std::vector<std::size_t> CycleCatalog::of_sign(Sign s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cycles_.size(); ++i) {
        if (cycles_[i].sign() == s) out.push_back(i);
    }
    return out;
}

bool CycleCatalog::visits(std::size_t cycle, Vertex v) const {
    const auto& mask = visits_.at(cycle);
    if (v < 0 || static_cast<std::size_t>(v) >= mask.size()) return false;
    return mask[static_cast<std::size_t>(v)] != 0;
}

std::size_t CycleCatalog::index_of(const SignedCycle& c) const {
    // canonical rotation first, so that any rotation of c is accepted
    const auto& arcs = c.arcs();
    std::size_t start = 0;
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i].source < arcs[start].source) start = i;
    }
    std::vector<Arc> rotated(arcs.begin() + static_cast<std::ptrdiff_t>(start), arcs.end());
    rotated.insert(rotated.end(), arcs.begin(), arcs.begin() + static_cast<std::ptrdiff_t>(start));
    SignedCycle canon(std::move(rotated));
    auto it = std::lower_bound(cycles_.begin(), cycles_.end(), canon);
    if (it == cycles_.end() || !(*it == canon)) {
        throw std::invalid_argument("cycle " + c.to_string() + " is not a cycle of the graph");
    }
    return static_cast<std::size_t>(it - cycles_.begin());
}

const char* to_string(SpecialArcFailure f) {
    switch (f) {
    case SpecialArcFailure::none: return "none";
    case SpecialArcFailure::target_is_source: return "target_is_source";
    case SpecialArcFailure::target_on_positive: return "target_on_positive";
    case SpecialArcFailure::not_shielded: return "not_shielded";
    }
    return "?";
}

namespace {

using Mask = std::vector<char>;

bool avoids(const CycleCatalog& cat, std::size_t i, const Mask& pinned) {
    for (const auto& a : cat.cycles()[i].arcs()) {
        if (pinned[static_cast<std::size_t>(a.source)]) return false;
    }
    return true;
}

// Special-arc test for c in G^I, where I is given by `pinned` (c avoids I).
// Everything is evaluated in H = G^I minus a.
SpecialArcFailure special_failure(const CycleCatalog& cat, const Mask& pinned, const SignedCycle& c, const Arc& a) {
    const auto& g = cat.graph();
    const Vertex v = a.target;
    const auto idx = [](Vertex w) { return static_cast<std::size_t>(w); };

    if (g.in_degree(v) < 2) return SpecialArcFailure::target_is_source;

    Mask start(g.order() + 1, 0);
    for (std::size_t i = 0; i < cat.cycles().size(); ++i) {
        const auto& cyc = cat.cycles()[i];
        if (!cyc.is_positive() || cyc.contains(a) || !avoids(cat, i, pinned)) continue;
        if (cat.visits(i, v)) return SpecialArcFailure::target_on_positive;
        for (const auto& b : cyc.arcs()) start[idx(b.source)] = 1;
    }
    for (Vertex w : g.vertices()) {
        std::size_t deg = pinned[idx(w)] ? 0 : g.in_degree(w) - (w == v ? 1 : 0);
        if (deg == 0) start[idx(w)] = 1;
    }

    Mask blocked(g.order() + 1, 0);
    for (const auto& b : c.arcs()) {
        if (b.source != v) blocked[idx(b.source)] = 1;
    }
    Mask seen(g.order() + 1, 0);
    std::deque<Vertex> queue;
    for (Vertex w : g.vertices()) {
        if (start[idx(w)] && !blocked[idx(w)]) {
            seen[idx(w)] = 1;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        if (w == v) return SpecialArcFailure::not_shielded;
        for (const auto& b : g.out_arcs(w)) {
            if (b == a || pinned[idx(b.target)] || blocked[idx(b.target)] || seen[idx(b.target)]) continue;
            seen[idx(b.target)] = 1;
            queue.push_back(b.target);
        }
    }
    return SpecialArcFailure::none;
}

std::optional<Arc> special_arc_in(const CycleCatalog& cat, const Mask& pinned, const SignedCycle& c) {
    for (const auto& a : c.arcs()) {
        if (special_failure(cat, pinned, c, a) == SpecialArcFailure::none) return a;
    }
    return std::nullopt;
}

void check_positive_arc_of(const SignedCycle& c, const Arc& a) {
    if (!c.is_positive()) throw std::invalid_argument("special arcs are defined for positive cycles only");
    if (!c.contains(a)) throw std::invalid_argument("arc " + to_string(a) + " is not on cycle " + c.to_string());
}

void check_search_size(const SignedDigraph& g, const Limits& limits, const char* op) {
    if (g.vertex_count() > limits.max_search_vertices) {
        throw LimitExceeded(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the subset-search limit of " +
                            std::to_string(limits.max_search_vertices));
    }
}

// Visits the k-subsets of `items` in lexicographic order until `visit` returns true.
template <typename F>
bool first_subset(const std::vector<Vertex>& items, std::size_t k, F&& visit) {
    const std::size_t n = items.size();
    if (k > n) return false;
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    std::vector<Vertex> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = items[pos[i]];
        if (visit(subset)) return true;
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

Mask mask_of(const SignedDigraph& g, const std::vector<Vertex>& vs) {
    Mask m(g.order() + 1, 0);
    for (Vertex v : vs) m[static_cast<std::size_t>(v)] = 1;
    return m;
}

}  // namespace

SpecialArcVerdict is_special_arc(const CycleCatalog& catalog, const SignedCycle& c, const Arc& a) {
    check_positive_arc_of(c, a);
    Mask none(catalog.graph().order() + 1, 0);
    SpecialArcVerdict verdict{a, false, special_failure(catalog, none, c, a)};
    verdict.holds = verdict.failed == SpecialArcFailure::none;
    return verdict;
}

SpecialArcVerdict is_special_arc(const SignedDigraph& g, const SignedCycle& c, const Arc& a, const Limits& limits) {
    return is_special_arc(CycleCatalog(g, limits.cycle_cap), c, a);
}

std::optional<Arc> find_special_arc(const CycleCatalog& catalog, const SignedCycle& c) {
    if (!c.is_positive()) throw std::invalid_argument("special arcs are defined for positive cycles only");
    return special_arc_in(catalog, Mask(catalog.graph().order() + 1, 0), c);
}

std::vector<SignedCycle> positive_cycles_without_special_arc(const CycleCatalog& catalog) {
    std::vector<SignedCycle> out;
    for (std::size_t i : catalog.of_sign(Sign::positive)) {
        const auto& c = catalog.cycles()[i];
        if (!find_special_arc(catalog, c)) out.push_back(c);
    }
    return out;
}

RuleVerdict initial_component_rule(const CycleCatalog& catalog, Sign s) {
    const auto& g = catalog.graph();
    RuleVerdict verdict;
    for (std::size_t i : catalog.of_sign(s)) {
        const auto& c = catalog.cycles()[i];
        std::optional<RuleWitness> found;
        for (const auto& a : c.arcs()) {
            auto dec = strong_components(without_arc(g, a));
            const auto& comp = dec.components[static_cast<std::size_t>(dec.index_of(a.target))];
            if (!comp.initial || !comp.nontrivial) continue;
            // a cycle of G minus a lies inside comp iff it meets comp
            bool clean = true;
            for (std::size_t j : catalog.of_sign(s)) {
                const auto& other = catalog.cycles()[j];
                if (other.contains(a)) continue;
                if (dec.index_of(other.arcs().front().source) == dec.index_of(a.target)) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                found = RuleWitness{c, a, a.target};
                break;
            }
        }
        if (!found) {
            verdict.holds = false;
            verdict.witnesses.clear();
            verdict.violated_by = c;
            return verdict;
        }
        verdict.witnesses.push_back(*found);
    }
    verdict.holds = true;
    return verdict;
}

RuleVerdict initial_component_rule(const SignedDigraph& g, Sign s, const Limits& limits) {
    return initial_component_rule(CycleCatalog(g, limits.cycle_cap), s);
}

RuleVerdict positive_cycles_isolated_by_arc(const SignedDigraph& g, const Limits& limits) {
    return initial_component_rule(g, Sign::positive, limits);
}

RuleVerdict negative_cycles_isolated_by_arc(const SignedDigraph& g, const Limits& limits) {
    return initial_component_rule(g, Sign::negative, limits);
}

RuleVerdict positive_cycles_isolated_by_vertex(const CycleCatalog& catalog) {
    const auto& g = catalog.graph();
    const auto positives = catalog.of_sign(Sign::positive);
    std::vector<std::size_t> on_positive(g.order() + 1, 0);
    for (std::size_t i : positives) {
        for (const auto& a : catalog.cycles()[i].arcs()) ++on_positive[static_cast<std::size_t>(a.source)];
    }
    RuleVerdict verdict;
    for (std::size_t i : positives) {
        const auto& c = catalog.cycles()[i];
        const auto& arcs = c.arcs();
        std::optional<RuleWitness> found;
        for (std::size_t k = 0; k < arcs.size() && !found; ++k) {
            const Arc& into = arcs[(k + arcs.size() - 1) % arcs.size()];
            const Vertex v = arcs[k].source;
            if (g.in_degree(v) < 2 || on_positive[static_cast<std::size_t>(v)] != 1) continue;
            auto preds = g.in_neighbors(v);
            bool inside = std::all_of(preds.begin(), preds.end(), [&](Vertex u) { return catalog.visits(i, u); });
            if (inside) found = RuleWitness{c, into, v};
        }
        if (!found) {
            verdict.witnesses.clear();
            verdict.violated_by = c;
            return verdict;
        }
        verdict.witnesses.push_back(*found);
    }
    verdict.holds = true;
    return verdict;
}

RuleVerdict positive_cycles_isolated_by_vertex(const SignedDigraph& g, const Limits& limits) {
    return positive_cycles_isolated_by_vertex(CycleCatalog(g, limits.cycle_cap));
}

std::size_t tau_plus(const CycleCatalog& catalog, const Limits& limits) {
    const auto& g = catalog.graph();
    const auto positives = catalog.of_sign(Sign::positive);
    if (positives.empty()) return 0;
    check_search_size(g, limits, "tau_plus");
    for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
        bool hit = first_subset(g.vertices(), k, [&](const std::vector<Vertex>& s) {
            Mask m = mask_of(g, s);
            return std::all_of(positives.begin(), positives.end(),
                               [&](std::size_t i) { return !avoids(catalog, i, m); });
        });
        if (hit) return k;
    }
    return g.vertex_count();
}

std::vector<Vertex> tau_tilde_plus_set(const CycleCatalog& catalog, const Limits& limits) {
    const auto& g = catalog.graph();
    const auto positives = catalog.of_sign(Sign::positive);
    auto all_special = [&](const std::vector<Vertex>& s) {
        Mask m = mask_of(g, s);
        for (std::size_t i : positives) {
            if (!avoids(catalog, i, m)) continue;
            if (!special_arc_in(catalog, m, catalog.cycles()[i])) return false;
        }
        return true;
    };
    if (all_special({})) return {};
    check_search_size(g, limits, "tau_tilde_plus");
    std::vector<Vertex> result;
    for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
        bool hit = first_subset(g.vertices(), k, [&](const std::vector<Vertex>& s) {
            if (!all_special(s)) return false;
            result = s;
            return true;
        });
        if (hit) return result;
    }
    return g.vertices();
}

std::size_t tau_tilde_plus(const CycleCatalog& catalog, const Limits& limits) {
    return tau_tilde_plus_set(catalog, limits).size();
}

std::size_t tau_plus(const SignedDigraph& g, const Limits& limits) {
    return tau_plus(CycleCatalog(g, limits.cycle_cap), limits);
}

std::size_t tau_tilde_plus(const SignedDigraph& g, const Limits& limits) {
    return tau_tilde_plus(CycleCatalog(g, limits.cycle_cap), limits);
}

Length g_plus(const SignedDigraph& g, const Limits& limits) {
    Length best = Length::infinity();
    for (const auto& c : enumerate_cycles(g, limits.cycle_cap)) {
        if (c.is_positive()) best = std::min(best, Length(c.length()));
    }
    return best;
}

Length g_tilde_plus(const SignedDigraph& g, const Limits& limits) {
    Length best = Length::infinity();
    for (const auto& c : positive_cycles_without_special_arc(CycleCatalog(g, limits.cycle_cap))) {
        best = std::min(best, Length(c.length()));
    }
    return best;
}

TwoColoringResult two_coloring(const SignedDigraph& g) {
    const std::size_t n = g.order();
    const auto idx = [](Vertex w) { return static_cast<std::size_t>(w); };
    std::vector<int> colour(n + 1, -1);
    std::vector<std::optional<Arc>> parent(n + 1);
    std::vector<std::size_t> depth(n + 1, 0);

    auto conflict = [&](Vertex v, Vertex w, Sign s) {
        if (v == w) return SignedCycle({Arc{v, v, s}});
        // climb to the lowest common ancestor
        std::vector<Arc> down_v, up_w;
        Vertex a = v, b = w;
        while (depth[idx(a)] > depth[idx(b)]) {
            down_v.push_back(*parent[idx(a)]);
            a = parent[idx(a)]->source;
        }
        while (depth[idx(b)] > depth[idx(a)]) {
            up_w.push_back(*parent[idx(b)]);
            b = parent[idx(b)]->source;
        }
        while (a != b) {
            down_v.push_back(*parent[idx(a)]);
            a = parent[idx(a)]->source;
            up_w.push_back(*parent[idx(b)]);
            b = parent[idx(b)]->source;
        }
        std::vector<Arc> arcs(down_v.rbegin(), down_v.rend());
        arcs.push_back(Arc{v, w, s});
        for (const auto& t : up_w) arcs.push_back(Arc{t.target, t.source, t.sign});
        auto start = std::min_element(arcs.begin(), arcs.end(),
                                      [](const Arc& x, const Arc& y) { return x.source < y.source; });
        std::rotate(arcs.begin(), start, arcs.end());
        return SignedCycle(std::move(arcs));
    };

    for (Vertex root : g.vertices()) {
        if (colour[idx(root)] >= 0) continue;
        colour[idx(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            std::vector<std::pair<Vertex, Sign>> nbrs;
            for (const auto& a : g.out_arcs(v)) nbrs.emplace_back(a.target, a.sign);
            for (const auto& a : g.in_arcs(v)) nbrs.emplace_back(a.source, a.sign);
            for (auto [w, s] : nbrs) {
                int want = colour[idx(v)] ^ (s == Sign::negative ? 1 : 0);
                if (colour[idx(w)] < 0) {
                    colour[idx(w)] = want;
                    parent[idx(w)] = Arc{v, w, s};
                    depth[idx(w)] = depth[idx(v)] + 1;
                    queue.push_back(w);
                } else if (colour[idx(w)] != want) {
                    return TwoColoringResult{std::nullopt, conflict(v, w, s)};
                }
            }
        }
    }
    BitState x(n);
    for (Vertex v : g.vertices()) x.set(v, colour[idx(v)] == 1);
    return TwoColoringResult{x, std::nullopt};
}

bool no_fixed_point_condition(const SignedDigraph& g, const Limits& limits) {
    (void)limits;
    auto dec = strong_components(g);
    for (const auto& comp : dec.components) {
        if (comp.initial && comp.nontrivial && !has_positive_cycle(induced(g, comp.vertices))) return true;
    }
    return false;
}

bool two_fixed_points_condition(const SignedDigraph& g) {
    if (has_negative_cycle(g)) return false;
    auto dec = strong_components(g);
    return std::any_of(dec.components.begin(), dec.components.end(),
                       [](const Component& c) { return c.initial && c.nontrivial; });
}

std::optional<Arc> unique_negative_cycle_arc(const SignedDigraph& g, const Limits& limits) {
    CycleCatalog catalog(g, limits.cycle_cap);
    auto negatives = catalog.of_sign(Sign::negative);
    if (negatives.size() != 1) {
        throw std::invalid_argument("expected exactly one negative cycle, found " + std::to_string(negatives.size()));
    }
    auto positives = catalog.of_sign(Sign::positive);
    for (const auto& a : catalog.cycles()[negatives.front()].arcs()) {
        bool shared = std::any_of(positives.begin(), positives.end(),
                                  [&](std::size_t i) { return catalog.cycles()[i].contains(a); });
        if (!shared) return a;
    }
    return std::nullopt;
}

AnalysisReport analyze(const SignedDigraph& g, const Limits& limits) {
    CycleCatalog catalog(g, limits.cycle_cap);
    AnalysisReport r;
    r.n = g.order();
    r.tau_plus = tau_plus(catalog, limits);
    r.tau_tilde_set = tau_tilde_plus_set(catalog, limits);
    r.tau_tilde_plus = r.tau_tilde_set.size();
    r.g_plus = Length::infinity();
    r.g_tilde_plus = Length::infinity();
    std::size_t positives = 0, negatives = 0;
    Mask none(g.order() + 1, 0);
    for (const auto& c : catalog.cycles()) {
        if (!c.is_positive()) {
            ++negatives;
            continue;
        }
        ++positives;
        r.g_plus = std::min(r.g_plus, Length(c.length()));
        if (!special_arc_in(catalog, none, c)) r.g_tilde_plus = std::min(r.g_tilde_plus, Length(c.length()));
    }
    r.thm3 = initial_component_rule(catalog, Sign::positive);
    r.thm4 = positive_cycles_isolated_by_vertex(catalog);
    r.thm5 = initial_component_rule(catalog, Sign::negative);
    r.nofp_condition = no_fixed_point_condition(g, limits);
    r.twofp_condition = two_fixed_points_condition(g);
    bool strong = g.vertex_count() > 0 && is_strongly_connected(g);
    r.unique_positive_strong = strong && positives == 1 && negatives >= 1;
    r.unique_negative_strong = strong && negatives == 1 && positives >= 1;
    r.fp_upper_bound = fp_bound(r.n, r.tau_tilde_plus, r.g_tilde_plus);
    return r;
}

std::string to_key_value(const AnalysisReport& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << "tau_plus = " << r.tau_plus << '\n'
        << "tau_tilde_plus = " << r.tau_tilde_plus << '\n'
        << "g_plus = " << r.g_plus.to_string() << '\n'
        << "g_tilde_plus = " << r.g_tilde_plus.to_string() << '\n'
        << "thm3 = " << b(r.thm3.holds) << '\n'
        << "thm4 = " << b(r.thm4.holds) << '\n'
        << "thm5 = " << b(r.thm5.holds) << '\n'
        << "nofp_condition = " << b(r.nofp_condition) << '\n'
        << "twofp_condition = " << b(r.twofp_condition) << '\n'
        << "fp_upper_bound = " << r.fp_upper_bound << '\n';
    return out.str();
}

}  // namespace sigfix
