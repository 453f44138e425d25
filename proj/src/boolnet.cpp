#include <sigfix/boolnet.hpp>

#include <algorithm>
#include <array>
#include <mutex>
#include <random>

namespace sigfix {

namespace {

std::size_t bit_of(Vertex v, std::size_t n) { return n - static_cast<std::size_t>(v); }

void check_vertex(Vertex v, std::size_t n, const char* op) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
    }
}

void check_state(const BitState& x, std::size_t n, const char* op) {
    if (x.size() != n) {
        throw std::invalid_argument(std::string(op) + ": state has length " + std::to_string(x.size()) +
                                    ", expected " + std::to_string(n));
    }
}

void check_scan(std::size_t n, std::size_t limit, const char* op) {
    if (n > limit) {
        throw LimitExceeded(std::string(op) + ": " + std::to_string(n) + " components exceeds " +
                            std::to_string(limit));
    }
}

}  // namespace

LocalFunction::LocalFunction(bool constant) : words_{constant ? 1U : 0U} {}

LocalFunction::LocalFunction(std::vector<Vertex> inputs, const std::vector<bool>& table)
    : inputs_(std::move(inputs)) {
    if (inputs_.size() > max_arity) {
        throw LimitExceeded("local function arity " + std::to_string(inputs_.size()) + " exceeds " +
                            std::to_string(max_arity));
    }
    auto sorted = inputs_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("local function has a repeated input");
    }
    if (table.size() != table_size()) {
        throw std::invalid_argument("truth table has length " + std::to_string(table.size()) + ", expected " +
                                    std::to_string(table_size()));
    }
    words_.assign((table.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < table.size(); ++j) {
        if (table[j]) words_[j / 64] |= std::uint64_t{1} << (j % 64);
    }
}

LocalFunction LocalFunction::from_bits(std::vector<Vertex> inputs, std::uint64_t bits) {
    if (inputs.size() > 6) throw std::invalid_argument("from_bits: arity above 6");
    std::vector<bool> table(std::size_t{1} << inputs.size());
    for (std::size_t j = 0; j < table.size(); ++j) table[j] = (bits >> j) & 1U;
    return LocalFunction(std::move(inputs), table);
}

std::string LocalFunction::table_string() const {
    std::string s;
    for (std::size_t j = 0; j < table_size(); ++j) s += value(j) ? '1' : '0';
    return s;
}

BooleanNetwork::BooleanNetwork(std::vector<LocalFunction> locals) : locals_(std::move(locals)) {
    for (const auto& lf : locals_) {
        for (Vertex u : lf.inputs()) check_vertex(u, locals_.size(), "BooleanNetwork");
    }
}

const LocalFunction& BooleanNetwork::local(Vertex v) const {
    check_vertex(v, size(), "local");
    return locals_[static_cast<std::size_t>(v - 1)];
}

std::uint64_t BooleanNetwork::apply(std::uint64_t code) const {
    std::uint64_t out = 0;
    for (std::size_t v = 1; v <= size(); ++v) {
        if (component(static_cast<Vertex>(v), code)) out |= std::uint64_t{1} << (size() - v);
    }
    return out;
}

BitState eval(const BooleanNetwork& f, const BitState& x) {
    check_state(x, f.size(), "eval");
    BitState y(f.size());
    for (std::size_t v = 1; v <= f.size(); ++v) {
        const auto& lf = f.local(static_cast<Vertex>(v));
        std::size_t index = 0;
        for (Vertex u : lf.inputs()) index = (index << 1) | (x[u] ? 1U : 0U);
        y.set(static_cast<Vertex>(v), lf.value(index));
    }
    return y;
}

int derivative(const BooleanNetwork& f, Vertex v, Vertex u, const BitState& x) {
    check_vertex(v, f.size(), "derivative");
    check_vertex(u, f.size(), "derivative");
    check_state(x, f.size(), "derivative");
    BitState hi = x, lo = x;
    hi.set(u, true);
    lo.set(u, false);
    return static_cast<int>(eval(f, hi)[v]) - static_cast<int>(eval(f, lo)[v]);
}

SignedDigraph interaction_graph(const BooleanNetwork& f) {
    std::vector<Arc> arcs;
    for (std::size_t v = 1; v <= f.size(); ++v) {
        const auto& lf = f.local(static_cast<Vertex>(v));
        const std::size_t k = lf.arity();
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t bit = std::size_t{1} << (k - 1 - i);
            bool pos = false, neg = false;
            for (std::size_t j = 0; j < lf.table_size() && !(pos && neg); ++j) {
                if (j & bit) continue;
                bool lo = lf.value(j), hi = lf.value(j | bit);
                pos |= hi && !lo;
                neg |= lo && !hi;
            }
            Vertex u = lf.inputs()[i];
            if (pos) arcs.push_back({u, static_cast<Vertex>(v), Sign::positive});
            if (neg) arcs.push_back({u, static_cast<Vertex>(v), Sign::negative});
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return SignedDigraph(f.size(), std::move(arcs));
}

std::vector<std::uint64_t> fixed_point_codes(const BooleanNetwork& f) {
    check_scan(f.size(), max_scan_size, "fixed_points");
    std::vector<std::uint64_t> out;
    const std::uint64_t states = std::uint64_t{1} << f.size();
    for (std::uint64_t x = 0; x < states; ++x) {
        bool fixed = true;
        for (std::size_t v = 1; v <= f.size() && fixed; ++v) {
            fixed = f.component(static_cast<Vertex>(v), x) == static_cast<bool>((x >> (f.size() - v)) & 1U);
        }
        if (fixed) out.push_back(x);
    }
    return out;
}

std::vector<BitState> fixed_points(const BooleanNetwork& f) {
    std::vector<BitState> out;
    for (auto code : fixed_point_codes(f)) out.push_back(BitState::from_code(code, f.size()));
    return out;
}

bool leq_v(const SignedDigraph& g, Vertex v, const BitState& x, const BitState& y) {
    check_vertex(v, g.order(), "leq_v");
    check_state(x, g.order(), "leq_v");
    check_state(y, g.order(), "leq_v");
    for (const auto& a : g.in_arcs(v)) {
        bool ok = a.sign == Sign::positive ? x[a.source] <= y[a.source] : x[a.source] >= y[a.source];
        if (!ok) return false;
    }
    return true;
}

namespace {

// Position of u among the inputs of lf, or arity() when absent.
std::size_t input_position(const LocalFunction& lf, Vertex u) {
    const auto& in = lf.inputs();
    return static_cast<std::size_t>(std::find(in.begin(), in.end(), u) - in.begin());
}

bool local_has_arc(const LocalFunction& lf, std::size_t i, Sign s) {
    const std::size_t bit = std::size_t{1} << (lf.arity() - 1 - i);
    for (std::size_t j = 0; j < lf.table_size(); ++j) {
        if (j & bit) continue;
        const int d = int(lf.value(j | bit)) - int(lf.value(j));
        if ((s == Sign::positive && d > 0) || (s == Sign::negative && d < 0)) return true;
    }
    return false;
}

bool local_canalizes(const LocalFunction& lf, std::size_t i, Sign s) {
    const std::size_t bit = std::size_t{1} << (lf.arity() - 1 - i);
    for (int c = 0; c <= 1; ++c) {
        // the value of x_u that forces f_v = c
        const bool forcing = s == Sign::positive ? c == 1 : c == 0;
        bool all = true;
        for (std::size_t j = 0; j < lf.table_size() && all; ++j) {
            if (static_cast<bool>(j & bit) != forcing) continue;
            all = lf.value(j) == static_cast<bool>(c);
        }
        if (all) return true;
    }
    return false;
}

}  // namespace

bool is_canalized(const BooleanNetwork& f, const Arc& a) {
    check_vertex(a.source, f.size(), "is_canalized");
    check_vertex(a.target, f.size(), "is_canalized");
    const auto& lf = f.local(a.target);
    const std::size_t i = input_position(lf, a.source);
    if (i == lf.arity() || !local_has_arc(lf, i, a.sign)) {
        throw std::invalid_argument("arc " + to_string(a) + " is not in the interaction graph");
    }
    return local_canalizes(lf, i, a.sign);
}

BooleanNetwork pin(const BooleanNetwork& f, std::span<const Vertex> pinned, const BitState& values) {
    check_state(values, f.size(), "pin");
    std::vector<LocalFunction> locals;
    for (std::size_t v = 1; v <= f.size(); ++v) locals.push_back(f.local(static_cast<Vertex>(v)));
    for (Vertex v : pinned) {
        check_vertex(v, f.size(), "pin");
        locals[static_cast<std::size_t>(v - 1)] = LocalFunction(values[v]);
    }
    return BooleanNetwork(std::move(locals));
}

std::vector<Attractor> attractors(const BooleanNetwork& f) {
    const std::size_t n = f.size();
    check_scan(n, max_attractor_size, "attractors");
    const std::uint32_t states = std::uint32_t{1} << n;
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> index(states, unvisited), low(states), comp(states, unvisited);
    std::vector<char> on_stack(states, 0);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t state;
        std::size_t next;
    };
    std::vector<Frame> frames;
    std::uint32_t counter = 0, comps = 0;
    std::vector<Attractor> out;

    auto successor = [&](std::uint32_t x, std::size_t v) -> std::optional<std::uint32_t> {
        const std::uint32_t bit = std::uint32_t{1} << (n - v);
        if (f.component(static_cast<Vertex>(v), x) == static_cast<bool>(x & bit)) return std::nullopt;
        return x ^ bit;
    };

    for (std::uint32_t root = 0; root < states; ++root) {
        if (index[root] != unvisited) continue;
        frames.push_back({root, 1});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            const std::uint32_t x = fr.state;
            if (fr.next <= n) {
                auto y = successor(x, fr.next++);
                if (!y) continue;
                if (index[*y] == unvisited) {
                    index[*y] = low[*y] = counter++;
                    stack.push_back(*y);
                    on_stack[*y] = 1;
                    frames.push_back({*y, 1});
                } else if (on_stack[*y]) {
                    low[x] = std::min(low[x], index[*y]);
                }
                continue;
            }
            frames.pop_back();
            if (!frames.empty()) low[frames.back().state] = std::min(low[frames.back().state], low[x]);
            if (low[x] != index[x]) continue;
            std::vector<std::uint32_t> members;
            std::uint32_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w] = comps;
                members.push_back(w);
            } while (w != x);
            bool terminal = true;
            for (std::uint32_t m : members) {
                for (std::size_t v = 1; v <= n && terminal; ++v) {
                    if (auto y = successor(m, v)) terminal = comp[*y] == comps;
                }
            }
            ++comps;
            if (!terminal) continue;
            std::sort(members.begin(), members.end());
            Attractor a;
            for (auto m : members) a.states.push_back(BitState::from_code(m, n));
            out.push_back(std::move(a));
        }
    }
    std::sort(out.begin(), out.end(), [](const Attractor& a, const Attractor& b) { return a.states[0] < b.states[0]; });
    return out;
}

UnrealizableGraph::UnrealizableGraph(Vertex v, const std::string& why)
    : std::invalid_argument("no local function realises the in-arcs of vertex " + std::to_string(v) + ": " + why),
      vertex_(v) {}

std::size_t table_signature(std::uint16_t table, std::size_t k) {
    std::size_t sig = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t bit = std::size_t{1} << (k - 1 - i);
        bool pos = false, neg = false;
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            if (j & bit) continue;
            bool lo = (table >> j) & 1U, hi = (table >> (j | bit)) & 1U;
            pos |= hi && !lo;
            neg |= lo && !hi;
        }
        sig = sig * 4 + (pos ? 1 : 0) + (neg ? 2 : 0);
    }
    return sig;
}

const std::vector<std::uint16_t>& tables_with_signature(std::size_t k, std::size_t signature) {
    static std::array<std::vector<std::vector<std::uint16_t>>, 5> groups;
    static std::once_flag once;
    std::call_once(once, [] {
        for (std::size_t a = 0; a <= 4; ++a) {
            groups[a].resize(std::size_t{1} << (2 * a));
            const std::size_t tables = std::size_t{1} << (std::size_t{1} << a);
            for (std::size_t t = 0; t < tables; ++t) {
                auto table = static_cast<std::uint16_t>(t);
                groups[a][table_signature(table, a)].push_back(table);
            }
        }
    });
    if (k > 4) throw LimitExceeded("signature tables are available up to arity 4");
    return groups[k].at(signature);
}

bool table_canalizes(std::uint16_t table, std::size_t k, std::size_t i, Sign s) {
    const std::size_t bit = std::size_t{1} << (k - 1 - i);
    for (int c = 0; c <= 1; ++c) {
        const bool forcing = s == Sign::positive ? c == 1 : c == 0;
        bool all = true;
        for (std::size_t j = 0; j < (std::size_t{1} << k) && all; ++j) {
            if (static_cast<bool>(j & bit) != forcing) continue;
            all = static_cast<bool>((table >> j) & 1U) == static_cast<bool>(c);
        }
        if (all) return true;
    }
    return false;
}

ConsistentNetworks::ConsistentNetworks(const SignedDigraph& g, std::size_t max_indegree) : graph_(g) {
    if (!g.is_full()) throw std::invalid_argument("consistent networks need a graph on all of 1..n");
    max_indegree = std::min(max_indegree, max_indegree_limit);
    for (std::size_t v = 1; v <= g.order(); ++v) {
        auto preds = g.in_neighbors(static_cast<Vertex>(v));
        if (preds.size() > max_indegree) {
            throw LimitExceeded("vertex " + std::to_string(v) + " has " + std::to_string(preds.size()) +
                                " in-neighbours, limit is " + std::to_string(max_indegree));
        }
        std::size_t sig = 0;
        for (Vertex u : preds) {
            std::size_t digit = 0;
            if (g.has_arc({u, static_cast<Vertex>(v), Sign::positive})) digit |= 1;
            if (g.has_arc({u, static_cast<Vertex>(v), Sign::negative})) digit |= 2;
            sig = sig * 4 + digit;
        }
        candidates_.push_back(&tables_with_signature(preds.size(), sig));
        inputs_.push_back(std::move(preds));
    }
}

bool ConsistentNetworks::realizable() const { return !unrealizable_vertex(); }

std::optional<Vertex> ConsistentNetworks::unrealizable_vertex() const {
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
        if (candidates_[i]->empty()) return static_cast<Vertex>(i + 1);
    }
    return std::nullopt;
}

std::uint64_t ConsistentNetworks::count() const {
    std::uint64_t total = 1;
    for (const auto* c : candidates_) {
        if (__builtin_mul_overflow(total, c->size(), &total)) {
            throw LimitExceeded("number of consistent networks exceeds 2^64");
        }
    }
    return total;
}

BooleanNetwork ConsistentNetworks::from_choice(std::span<const std::uint16_t> tables) const {
    if (tables.size() != size()) throw std::invalid_argument("from_choice: one table per vertex expected");
    std::vector<LocalFunction> locals;
    for (std::size_t i = 0; i < size(); ++i) locals.push_back(LocalFunction::from_bits(inputs_[i], tables[i]));
    return BooleanNetwork(std::move(locals));
}

BooleanNetwork ConsistentNetworks::at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("consistent network index out of range");
    std::vector<std::uint16_t> tables(size());
    for (std::size_t i = size(); i-- > 0;) {
        const auto& c = *candidates_[i];
        tables[i] = c[index % c.size()];
        index /= c.size();
    }
    return from_choice(tables);
}

bool ConsistentNetworks::for_each(const std::function<bool(const BooleanNetwork&)>& visit) const {
    if (!realizable()) return true;
    const std::size_t n = size();
    std::vector<std::size_t> pick(n, 0);
    std::vector<std::uint16_t> first(n);
    for (std::size_t i = 0; i < n; ++i) first[i] = (*candidates_[i])[0];
    BooleanNetwork f = from_choice(first);
    while (true) {
        if (!visit(f)) return false;
        std::size_t i = n;
        while (i > 0) {
            --i;
            const auto& c = *candidates_[i];
            if (++pick[i] < c.size()) {
                f.locals_[i] = LocalFunction::from_bits(inputs_[i], c[pick[i]]);
                break;
            }
            pick[i] = 0;
            f.locals_[i] = LocalFunction::from_bits(inputs_[i], c[0]);
            if (i == 0) return true;
        }
        if (n == 0) return true;
    }
}

BooleanNetwork ConsistentNetworks::sample(std::uint64_t seed) const {
    if (auto v = unrealizable_vertex()) throw UnrealizableGraph(*v, "no truth table has exactly these signed inputs");
    std::mt19937_64 rng(seed);
    std::vector<std::uint16_t> tables(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& c = *candidates_[i];
        tables[i] = c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
    }
    return from_choice(tables);
}

std::vector<BooleanNetwork> enumerate_consistent(const SignedDigraph& g, std::size_t max_indegree) {
    std::vector<BooleanNetwork> out;
    ConsistentNetworks(g, max_indegree).for_each([&](const BooleanNetwork& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

BooleanNetwork sample_consistent(const SignedDigraph& g, std::uint64_t seed, std::size_t max_indegree) {
    return ConsistentNetworks(g, max_indegree).sample(seed);
}

std::size_t max_fixed_points(const SignedDigraph& g, std::size_t max_indegree) {
    std::size_t best = 0;
    ConsistentNetworks(g, max_indegree).for_each([&](const BooleanNetwork& f) {
        best = std::max(best, fixed_point_codes(f).size());
        return true;
    });
    return best;
}

const char* to_string(InstanceVerdict v) {
    switch (v) {
    case InstanceVerdict::not_applicable: return "not-applicable";
    case InstanceVerdict::holds: return "holds";
    case InstanceVerdict::counterexample: return "COUNTEREXAMPLE";
    }
    return "?";
}

AntipodalCheck check_antipodal_fixed_points(const SignedDigraph& g, const BooleanNetwork& f, const Limits& limits) {
    if (!(interaction_graph(f) == g)) throw std::invalid_argument("network does not have the given interaction graph");
    if (g.vertex_count() == 0 || !is_strongly_connected(g)) return {};
    return check_antipodal_fixed_points(CycleCatalog(g, limits.cycle_cap), f);
}

AntipodalCheck check_antipodal_fixed_points(const CycleCatalog& catalog, const BooleanNetwork& f) {
    AntipodalCheck out;
    const auto& g = catalog.graph();
    if (g.vertex_count() == 0 || !is_strongly_connected(g)) return out;
    auto negatives = catalog.of_sign(Sign::negative);
    if (negatives.size() != 1 || catalog.of_sign(Sign::positive).empty()) return out;
    for (const auto& a : catalog.cycles()[negatives.front()].arcs()) {
        const auto& lf = f.local(a.target);
        if (local_canalizes(lf, input_position(lf, a.source), a.sign)) return out;
    }
    const std::size_t n = f.size();
    check_scan(n, max_scan_size, "check_antipodal_fixed_points");
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    out.verdict = InstanceVerdict::counterexample;
    for (std::uint64_t x = 0; x <= all; ++x) {
        if (f.apply(x) == x && f.apply(x ^ all) == (x ^ all)) {
            out.verdict = InstanceVerdict::holds;
            out.witness = BitState::from_code(x, n);
            break;
        }
    }
    return out;
}

SeparationReport separate_fixed_points(const BooleanNetwork& f, const CycleCatalog& catalog, bool without_special_arc) {
    const std::size_t n = f.size();
    std::vector<std::size_t> eligible;
    std::vector<std::uint64_t> support;
    for (std::size_t i : catalog.of_sign(Sign::positive)) {
        const auto& c = catalog.cycles()[i];
        if (without_special_arc && find_special_arc(catalog, c)) continue;
        std::uint64_t mask = 0;
        for (const auto& a : c.arcs()) mask |= std::uint64_t{1} << bit_of(a.source, n);
        eligible.push_back(i);
        support.push_back(mask);
    }
    SeparationReport report;
    auto fps = fixed_point_codes(f);
    for (std::size_t i = 0; i < fps.size(); ++i) {
        for (std::size_t j = i + 1; j < fps.size(); ++j) {
            const std::uint64_t diff = fps[i] ^ fps[j];
            PairSeparation pair{BitState::from_code(fps[i], n), BitState::from_code(fps[j], n), std::nullopt};
            for (std::size_t e = 0; e < eligible.size(); ++e) {
                if ((support[e] & diff) == support[e]) {
                    pair.cycle = catalog.cycles()[eligible[e]];
                    break;
                }
            }
            if (!pair.cycle) report.holds = false;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

SeparationReport separate_fixed_points(const BooleanNetwork& f, bool without_special_arc, const Limits& limits) {
    return separate_fixed_points(f, CycleCatalog(interaction_graph(f), limits.cycle_cap), without_special_arc);
}

}  // namespace sigfix
